#include "unicrit/dynamics.hpp"

#include <map>

namespace unicrit {

namespace {

// Moebius mu for the small n the dynatomic construction accepts.
int moebius(int n) {
    int mu = 1;
    for (const auto& pp : factorize(n)) {
        if (pp.exponent > 1) return 0;
        mu = -mu;
    }
    return mu;
}

}  // namespace

Rational eval(const PowerMap& f, const Rational& x) {
    return rat_pow(x, static_cast<unsigned long>(f.d)) + f.c;
}

std::optional<Integer> forced_denominator(const PowerMap& f) {
    return kth_root_exact(f.c.get_den(), static_cast<unsigned long>(f.d));
}

OrbitReport orbit_classify(const PowerMap& f, const Rational& start) {
    OrbitReport rep;
    rep.start = start;

    const Rational radius = rat_abs(f.c) + 2;
    const std::optional<Integer> z = forced_denominator(f);

    // 4x the size of the candidate set {X/Z : |X/Z| <= |c| + 2}; pigeonhole
    // repeats far sooner, this is a pure backstop.
    Integer cap = 64;
    if (z) cap += 4 * (2 * floor_to_integer(*z * radius) + 1);

    std::map<Rational, int> seen;
    Rational x = start;
    for (Integer step = 0;; ++step) {
        if (rat_abs(x) > radius) {
            rep.orbit.push_back(x);
            rep.status = OrbitStatus::Escaped;
            rep.escape_reason = EscapeReason::Radius;
            return rep;
        }
        if (!z || x.get_den() != *z) {
            rep.orbit.push_back(x);
            rep.status = OrbitStatus::Escaped;
            rep.escape_reason = EscapeReason::Denominator;
            return rep;
        }
        if (const auto it = seen.find(x); it != seen.end()) {
            rep.status = OrbitStatus::Preperiodic;
            rep.tail_length = it->second;
            rep.exact_period = static_cast<int>(rep.orbit.size()) - it->second;
            rep.escape_reason = EscapeReason::None;
            return rep;
        }
        if (step > cap) {
            rep.orbit.push_back(x);
            rep.status = OrbitStatus::Escaped;
            rep.escape_reason = EscapeReason::IterationCap;
            return rep;
        }
        seen.emplace(x, static_cast<int>(rep.orbit.size()));
        rep.orbit.push_back(x);
        x = eval(f, x);
    }
}

std::optional<std::pair<int, int>> preperiodic_type(const PowerMap& f,
                                                   const Rational& x) {
    const OrbitReport rep = orbit_classify(f, x);
    if (rep.status != OrbitStatus::Preperiodic) return std::nullopt;
    return std::make_pair(rep.exact_period, rep.tail_length);
}

XPoly power_map_poly(int d) {
    if (d < 2) throw InvalidInput("power_map_poly: degree must be >= 2");
    std::vector<CPoly> coeffs(static_cast<size_t>(d) + 1);
    coeffs[0] = CPoly::variable();            // constant term c
    coeffs[static_cast<size_t>(d)] = RingTraits<CPoly>::one();
    return XPoly::from_coeffs(std::move(coeffs));
}

XPoly iterate_poly(int d, int n) {
    if (d < 2) throw InvalidInput("iterate_poly: degree must be >= 2");
    if (n < 0) throw InvalidInput("iterate_poly: n must be >= 0");
    const XPoly c_const(CPoly::variable());
    XPoly g = XPoly::variable();
    for (int i = 0; i < n; ++i)
        g = pow(g, static_cast<unsigned long>(d)) + c_const;
    return g;
}

XPoly dynatomic_poly(int d, int n) {
    if (d < 2) throw InvalidInput("dynatomic_poly: degree must be >= 2");
    if (n < 1 || n > 6)
        throw InvalidInput("dynatomic_poly: period must be between 1 and 6");

    const XPoly x = XPoly::variable();
    XPoly num = RingTraits<XPoly>::one();
    std::vector<XPoly> dens;
    for (int e = 1; e <= n; ++e) {
        if (n % e != 0) continue;
        switch (moebius(n / e)) {
            case 1:
                num = num * (iterate_poly(d, e) - x);
                break;
            case -1:
                dens.push_back(iterate_poly(d, e) - x);
                break;
            default:
                break;
        }
    }
    // Each division is exact: for e | n the factor f^e - x divides f^n - x,
    // and the +1 part always retains enough of that multiplicity.
    for (const XPoly& den : dens) num = exact_div(num, den);
    return num;
}

Poly<CPoly> trace_resultant(int d) {
    if (d < 2) throw InvalidInput("trace_resultant: degree must be >= 2");

    using TC  = Poly<CPoly>;  // polynomials in t over Q[c]
    using XTC = Poly<TC>;

    // Phi_2 lifted to x-polynomials with Q[c][t] coefficients
    const XPoly phi2 = dynatomic_poly(d, 2);
    const XTC lifted = map_coeffs(phi2, [](const CPoly& a) { return TC(a); });

    // t - (x + x^d + c): constant term (in x) is t - c
    std::vector<TC> tc(static_cast<size_t>(d) + 1);
    tc[0] = TC::from_coeffs({-CPoly::variable(), RingTraits<CPoly>::one()});
    tc[1] = TC(CPoly(Rational(-1)));
    tc[static_cast<size_t>(d)] = TC(CPoly(Rational(-1)));
    const XTC trace = XTC::from_coeffs(std::move(tc));

    return sylvester_resultant(lifted, trace);
}

TwoCycle fixed_pair_to_two_cycle(int d, const Rational& x1, const Rational& x2) {
    if (d < 2 || d % 2 != 0)
        throw InvalidInput("fixed_pair_to_two_cycle: degree must be even");
    if (x1 == x2) throw InvalidInput("fixed_pair_to_two_cycle: points must differ");
    const unsigned long ud = static_cast<unsigned long>(d);
    const Rational c1 = x1 - rat_pow(x1, ud);
    if (c1 != x2 - rat_pow(x2, ud))
        throw InvalidInput("fixed_pair_to_two_cycle: not fixed points of one map");

    TwoCycle out;
    out.c = -x1 - rat_pow(x2, ud);
    out.y1 = -x1;
    out.y2 = -x2;

    const PowerMap g(d, out.c);
    if (eval(g, out.y1) != out.y2 || eval(g, out.y2) != out.y1 || out.y1 == out.y2)
        throw InternalError("fixed_pair_to_two_cycle: produced orbit failed to verify");
    return out;
}

FixedPair two_cycle_to_fixed_pair(int d, const Rational& y1, const Rational& y2) {
    if (d < 2 || d % 2 != 0)
        throw InvalidInput("two_cycle_to_fixed_pair: degree must be even");
    if (y1 == y2) throw InvalidInput("two_cycle_to_fixed_pair: points must differ");
    const unsigned long ud = static_cast<unsigned long>(d);
    const Rational cprime = y2 - rat_pow(y1, ud);
    if (rat_pow(y2, ud) + cprime != y1)
        throw InvalidInput("two_cycle_to_fixed_pair: points are not a 2-cycle");

    FixedPair out;
    out.x1 = -y1;
    out.x2 = -y2;
    out.c = out.x1 - rat_pow(out.x1, ud);

    const PowerMap g(d, out.c);
    if (eval(g, out.x1) != out.x1 || eval(g, out.x2) != out.x2)
        throw InternalError("two_cycle_to_fixed_pair: fixed points failed to verify");
    return out;
}

}  // namespace unicrit
