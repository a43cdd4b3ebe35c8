#include "unicrit/jsonio.hpp"

namespace unicrit {

Json to_json(const Integer& n) { return to_string(n); }

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const CPoly& p) {
    Json arr = Json::array();
    for (int i = 0; i <= p.degree(); ++i) arr.push_back(to_json(p.coeff(i)));
    if (p.is_zero()) arr.push_back(to_json(Rational(0)));
    return arr;
}

Json nested_poly_json(const XPoly& p) {
    Json arr = Json::array();
    for (int i = 0; i <= p.degree(); ++i) arr.push_back(to_json(p.coeff(i)));
    if (p.is_zero()) arr.push_back(to_json(CPoly()));
    return arr;
}

namespace {

const char* status_name(OrbitStatus s) {
    return s == OrbitStatus::Preperiodic ? "preperiodic" : "escaped";
}

const char* escape_name(EscapeReason r) {
    switch (r) {
        case EscapeReason::None: return "none";
        case EscapeReason::Radius: return "radius";
        case EscapeReason::Denominator: return "denominator";
        case EscapeReason::IterationCap: return "iteration-cap";
    }
    return "none";
}

}  // namespace

Json orbit_json(const PowerMap& f, const OrbitReport& r) {
    Json j;
    j["d"] = f.d;
    j["c"] = to_json(f.c);
    j["start"] = to_json(r.start);
    j["status"] = status_name(r.status);
    if (r.status == OrbitStatus::Preperiodic) {
        j["exact_period"] = r.exact_period;
        j["tail_length"] = r.tail_length;
    }
    j["escape_reason"] = escape_name(r.escape_reason);
    Json orbit = Json::array();
    for (const auto& x : r.orbit) orbit.push_back(to_json(x));
    j["orbit"] = orbit;
    return j;
}

Json graph_node_json(const PreperNode& n) {
    Json j;
    j["x"] = to_json(n.x);
    j["exact_period"] = n.exact_period;
    j["tail_length"] = n.tail_length;
    j["next"] = to_json(n.next);
    return j;
}

Json graph_summary_json(const PreperGraph& g) {
    Json j;
    j["d"] = g.d;
    j["c"] = to_json(g.c);
    j["affine_count"] = g.nodes.size();
    j["p1_count"] = g.p1_count();
    j["max_exact_period"] = g.max_exact_period();
    j["includes_infinity"] = true;
    return j;
}

Json cycle_json(const CycleCertificate& cert) {
    Json j;
    j["d"] = cert.d;
    j["n"] = cert.n;
    j["Z"] = to_json(cert.Z);
    Json xs = Json::array();
    for (const auto& x : cert.X) xs.push_back(to_json(x));
    j["X"] = xs;
    j["C"] = to_json(cert.C);
    j["c"] = to_json(cert.c);
    j["trivial"] = cert.trivial();
    return j;
}

Json fixed_pair_json(int d, const FixedPairHit& h) {
    Json j;
    j["d"] = d;
    j["X1"] = to_json(h.X1);
    j["X2"] = to_json(h.X2);
    j["Z"] = to_json(h.Z);
    j["c"] = to_json(h.c);
    return j;
}

Json type12_json(int d, const Type12Hit& h) {
    Json j;
    j["d"] = d;
    j["X0"] = to_json(h.X0);
    j["R"] = to_json(h.R);
    j["Z"] = to_json(h.Z);
    j["degenerate"] = h.degenerate;
    return j;
}

Json sweep_row_json(const SweepRow& r) {
    Json j;
    j["d"] = r.d;
    j["C"] = to_json(r.C);
    j["Z"] = to_json(r.Z);
    j["c"] = to_json(r.c);
    j["max_exact_period"] = r.max_exact_period;
    j["affine_count"] = r.affine_count;
    j["p1_count"] = r.p1_count;
    return j;
}

Json decomposition_json(const FCDecomposition& fc) {
    Json j;
    j["k"] = fc.k;
    j["X1"] = to_json(fc.X1);
    j["X2"] = to_json(fc.X2);
    j["S"] = to_json(fc.S);
    j["D"] = to_json(fc.D);
    j["delta"] = fc.delta;
    j["Z1"] = to_json(fc.Z1);
    j["Z"] = to_json(fc.Z);
    j["Z2"] = fc.Z2 ? Json(to_json(*fc.Z2)) : Json(nullptr);
    return j;
}

Json signature_json(unsigned long k, int delta, const SignatureHit& h) {
    Json j;
    j["k"] = k;
    j["delta"] = delta;
    j["x"] = to_json(h.x);
    j["y"] = to_json(h.y);
    j["z"] = to_json(h.z);
    j["trivial"] = h.trivial;
    return j;
}

Json nonexistence_json(const NonexistenceVerdict& v) {
    Json j;
    j["k"] = v.k;
    j["three_divides_2k_minus_1"] = v.three_divides;
    j["witness_prime"] =
        v.witness_prime ? Json(to_json(*v.witness_prime)) : Json(nullptr);
    j["applies"] = v.applies;
    return j;
}

Json quartic_json(const QuarticPoint& p) {
    Json j;
    j["t"] = to_json(p.t);
    j["y"] = to_json(p.y);
    return j;
}

Json weighted_json(const WeightedPoint& p) {
    Json j;
    j["X"] = to_json(p.X);
    j["Y"] = to_json(p.Y);
    j["Z"] = to_json(p.Z);
    j["x"] = to_json(reduce(p.X, p.Z * p.Z));
    j["y"] = to_json(reduce(p.Y, int_pow(p.Z, 5)));
    return j;
}

Json family_json(const Rational& t, const Rational& y, const FamilyPoint& fp) {
    Json j;
    j["t"] = to_json(t);
    j["y"] = to_json(y);
    j["c"] = to_json(fp.c);
    j["x1"] = to_json(fp.x1);
    j["x2"] = to_json(fp.x2);
    return j;
}

Json system_check_json(const SystemCheckResult& r) {
    Json j;
    j["eq_holds"] = r.eq_holds;
    j["eq_nonzero"] = r.eq_nonzero;
    j["coprime"] = r.coprime;
    j["max_is_x2"] = r.max_is_x2;
    j["nontrivial"] = r.nontrivial;
    j["ok"] = r.ok();
    j["diagnosis"] = r.diagnosis();
    return j;
}

Json bound_check_json(const AbcTriple& t, const ExplicitBoundCheck& r) {
    Json j;
    j["a"] = to_json(t.a);
    j["b"] = to_json(t.b);
    j["c"] = to_json(t.c);
    j["lhs"] = r.lhs;
    j["bound_172"] = r.bound_172;
    j["bound_1629"] = r.bound_1629;
    j["bound_16"] = r.bound_16;
    j["holds"] = r.holds;
    j["margin"] = r.margin();
    return j;
}

Json margin_json(const FixedpointMargin& m) {
    Json j;
    j["exponent"] = m.exponent;
    j["lhs"] = m.lhs;
    j["rhs"] = m.rhs;
    j["contradiction"] = m.contradiction;
    return j;
}

Json wrap_certificate(const std::string& kind, Json payload,
                      const std::string& subcommand, Json params) {
    Json j;
    j["kind"] = kind;
    j["payload"] = std::move(payload);
    Json prov;
    prov["subcommand"] = subcommand;
    prov["params"] = std::move(params);
    prov["version"] = kArtifactVersion;
    j["provenance"] = std::move(prov);
    return j;
}

Integer integer_from_json(const Json& j) {
    return parse_integer(j.get<std::string>());
}

Rational rational_from_json(const Json& j) {
    return parse_rational(j.get<std::string>());
}

CycleCertificate cycle_from_json(const Json& payload) {
    const int d = payload.at("d").get<int>();
    const Integer Z = integer_from_json(payload.at("Z"));
    std::vector<Integer> X;
    for (const auto& x : payload.at("X")) X.push_back(integer_from_json(x));
    CycleCertificate cert = make_cycle_certificate(d, X, Z);
    if (cert.n != payload.at("n").get<int>())
        throw InvalidInput("cycle payload: exact period mismatch");
    if (cert.C != integer_from_json(payload.at("C")))
        throw InvalidInput("cycle payload: C mismatch");
    if (cert.c != rational_from_json(payload.at("c")))
        throw InvalidInput("cycle payload: c mismatch");
    return cert;
}

}  // namespace unicrit
