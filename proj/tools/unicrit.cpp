#include <CLI11.hpp>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "unicrit/jsonio.hpp"
#include "unicrit/polyring.hpp"

using namespace unicrit;

namespace {

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

struct CommonOpts {
    bool json = false;
    int threads = 1;
};

void add_common(CLI::App* sub, CommonOpts& c) {
    sub->add_flag("--json", c.json, "machine-readable JSON, one object per line");
    sub->add_option("--threads", c.threads, "worker threads for partitioned searches")
        ->check(CLI::PositiveNumber);
}

std::string type_str(int n, int m) {
    std::ostringstream os;
    os << "(n=" << n << ", m=" << m << ")";
    return os.str();
}

void print_cycle_human(const CycleCertificate& cert) {
    std::cout << "Z=" << to_string(cert.Z) << " X=[";
    for (size_t i = 0; i < cert.X.size(); ++i)
        std::cout << (i ? "," : "") << to_string(cert.X[i]);
    std::cout << "] C=" << to_string(cert.C) << " c=" << to_string(cert.c)
              << " n=" << cert.n << (cert.trivial() ? " trivial" : "") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rational periodic/preperiodic point toolkit for x^d + c"};
    app.require_subcommand(1);

    std::function<void()> run;

    // ---- orbit ----
    struct {
        CommonOpts co;
        int d = 2;
        std::string c, x;
    } orbit_o;
    {
        auto* sub = app.add_subcommand("orbit", "classify the forward orbit of x");
        add_common(sub, orbit_o.co);
        sub->add_option("--d", orbit_o.d, "degree")->required();
        sub->add_option("--c", orbit_o.c, "parameter c as p/q")->required();
        sub->add_option("--x", orbit_o.x, "starting point as p/q")->required();
        sub->callback([&] {
            run = [&] {
                const PowerMap f(orbit_o.d, parse_rational(orbit_o.c));
                const OrbitReport r = orbit_classify(f, parse_rational(orbit_o.x));
                if (orbit_o.co.json) {
                    emit(wrap_certificate(
                        "orbit", orbit_json(f, r), "orbit",
                        {{"d", orbit_o.d}, {"c", orbit_o.c}, {"x", orbit_o.x}}));
                    return;
                }
                std::cout << "d=" << orbit_o.d << " c=" << to_string(f.c)
                          << " start=" << to_string(r.start) << "\n";
                if (r.status == OrbitStatus::Preperiodic)
                    std::cout << "status: preperiodic type "
                              << type_str(r.exact_period, r.tail_length) << "\n";
                else
                    std::cout << "status: escaped\n";
                std::cout << "orbit: ";
                for (size_t i = 0; i < r.orbit.size(); ++i)
                    std::cout << (i ? " -> " : "") << to_string(r.orbit[i]);
                std::cout << "\n";
            };
        });
    }

    // ---- dynatomic ----
    struct {
        CommonOpts co;
        int d = 2, n = 1;
    } dyn_o;
    {
        auto* sub = app.add_subcommand("dynatomic", "exact-period-n polynomial in x");
        add_common(sub, dyn_o.co);
        sub->add_option("--d", dyn_o.d, "degree")->required();
        sub->add_option("--n", dyn_o.n, "exact period (1..6)")->required();
        sub->callback([&] {
            run = [&] {
                const XPoly p = dynatomic_poly(dyn_o.d, dyn_o.n);
                if (dyn_o.co.json) {
                    emit(wrap_certificate("polynomial",
                                          {{"variable", "x"},
                                           {"coefficient_variable", "c"},
                                           {"coeffs", nested_poly_json(p)}},
                                          "dynatomic",
                                          {{"d", dyn_o.d}, {"n", dyn_o.n}}));
                    return;
                }
                std::cout << poly_to_string(p, "x", "c") << "\n";
            };
        });
    }

    // ---- trace-resultant ----
    struct {
        CommonOpts co;
        int d = 2;
    } tr_o;
    {
        auto* sub = app.add_subcommand(
            "trace-resultant", "resultant eliminating x from the 2-cycle system");
        add_common(sub, tr_o.co);
        sub->add_option("--d", tr_o.d, "degree")->required();
        sub->callback([&] {
            run = [&] {
                const Poly<CPoly> r = trace_resultant(tr_o.d);
                if (tr_o.co.json) {
                    emit(wrap_certificate("polynomial",
                                          {{"variable", "t"},
                                           {"coefficient_variable", "c"},
                                           {"coeffs", nested_poly_json(r)}},
                                          "trace-resultant", {{"d", tr_o.d}}));
                    return;
                }
                std::cout << poly_to_string(r, "t", "c") << "\n";
            };
        });
    }

    // ---- search-2cycles ----
    struct {
        CommonOpts co;
        int d = 2;
        long bound = 1;
    } s2_o;
    {
        auto* sub = app.add_subcommand("search-2cycles",
                                       "all 2-cycles with numerator data <= bound");
        add_common(sub, s2_o.co);
        sub->add_option("--d", s2_o.d, "even degree")->required();
        sub->add_option("--bound", s2_o.bound, "box bound W")->required();
        sub->callback([&] {
            run = [&] {
                const auto certs = two_cycle_search(s2_o.d, s2_o.bound, s2_o.co.threads);
                for (const auto& cert : certs) {
                    if (s2_o.co.json)
                        emit(wrap_certificate("cycle", cycle_json(cert),
                                              "search-2cycles",
                                              {{"d", s2_o.d},
                                               {"bound", s2_o.bound}}));
                    else
                        print_cycle_human(cert);
                }
                if (!s2_o.co.json)
                    std::cout << "total: " << certs.size() << " certificate(s)\n";
            };
        });
    }

    // ---- search-preper ----
    struct {
        CommonOpts co;
        int d = 2;
        std::string c;
    } sp_o;
    {
        auto* sub = app.add_subcommand("search-preper",
                                       "all rational preperiodic points of one map");
        add_common(sub, sp_o.co);
        sub->add_option("--d", sp_o.d, "degree")->required();
        sub->add_option("--c", sp_o.c, "parameter c as p/q")->required();
        sub->callback([&] {
            run = [&] {
                const PreperGraph g =
                    preperiodic_points(PowerMap(sp_o.d, parse_rational(sp_o.c)));
                const Json params = {{"d", sp_o.d}, {"c", sp_o.c}};
                if (sp_o.co.json) {
                    for (const auto& n : g.nodes)
                        emit(wrap_certificate("orbit", graph_node_json(n),
                                              "search-preper", params));
                    emit(wrap_certificate("orbit", graph_summary_json(g),
                                          "search-preper", params));
                    return;
                }
                for (const auto& n : g.nodes)
                    std::cout << "x=" << to_string(n.x) << " type "
                              << type_str(n.exact_period, n.tail_length)
                              << " next=" << to_string(n.next) << "\n";
                std::cout << "infinity: fixed point\n";
                std::cout << "total over P^1: " << g.p1_count()
                          << " (max exact period " << g.max_exact_period() << ")\n";
            };
        });
    }

    // ---- search-fixed ----
    struct {
        CommonOpts co;
        int d = 3;
        long bound = 1;
    } sf_o;
    {
        auto* sub = app.add_subcommand("search-fixed",
                                       "pairs of distinct rational fixed points");
        add_common(sub, sf_o.co);
        sub->add_option("--d", sf_o.d, "degree >= 3")->required();
        sub->add_option("--bound", sf_o.bound, "box bound W")->required();
        sub->callback([&] {
            run = [&] {
                const auto hits =
                    fixed_point_search(sf_o.d, sf_o.bound, sf_o.co.threads);
                for (const auto& h : hits) {
                    if (sf_o.co.json)
                        emit(wrap_certificate("cycle", fixed_pair_json(sf_o.d, h),
                                              "search-fixed",
                                              {{"d", sf_o.d},
                                               {"bound", sf_o.bound}}));
                    else
                        std::cout << "X1=" << to_string(h.X1)
                                  << " X2=" << to_string(h.X2)
                                  << " Z=" << to_string(h.Z)
                                  << " c=" << to_string(h.c) << "\n";
                }
                if (!sf_o.co.json) std::cout << "total: " << hits.size() << " pair(s)\n";
            };
        });
    }

    // ---- search-type12 ----
    struct {
        CommonOpts co;
        int d = 3;
        long bound = 1;
    } st_o;
    {
        auto* sub = app.add_subcommand(
            "search-type12", "integer solutions of X0^d - R^d = 2 X0 Z^(d-1)");
        add_common(sub, st_o.co);
        sub->add_option("--d", st_o.d, "degree >= 3")->required();
        sub->add_option("--bound", st_o.bound, "box bound B")->required();
        sub->callback([&] {
            run = [&] {
                for (const auto& h : type12_search(st_o.d, st_o.bound)) {
                    if (st_o.co.json)
                        emit(wrap_certificate(
                            "cycle", type12_json(st_o.d, h), "search-type12",
                            {{"d", st_o.d}, {"bound", st_o.bound}}));
                    else
                        std::cout << "X0=" << to_string(h.X0) << " R=" << to_string(h.R)
                                  << " Z=" << to_string(h.Z)
                                  << (h.degenerate ? " degenerate" : "") << "\n";
                }
            };
        });
    }

    // ---- sweep ----
    struct {
        CommonOpts co;
        std::vector<int> ds;
        long zmax = 1, height = 1;
    } sw_o;
    {
        auto* sub = app.add_subcommand("sweep",
                                       "preperiodic census over a c-parameter box");
        add_common(sub, sw_o.co);
        sub->add_option("--d", sw_o.ds, "degrees (repeatable)")->required();
        sub->add_option("--zmax", sw_o.zmax, "max denominator root Z")->required();
        sub->add_option("--height", sw_o.height, "max |C| numerator")->required();
        sub->callback([&] {
            run = [&] {
                const auto rows =
                    sweep(sw_o.ds, sw_o.zmax, sw_o.height, sw_o.co.threads);
                for (const auto& r : rows) {
                    if (sw_o.co.json)
                        emit(wrap_certificate("sweep-row", sweep_row_json(r), "sweep",
                                              {{"d", sw_o.ds},
                                               {"zmax", sw_o.zmax},
                                               {"height", sw_o.height}}));
                    else
                        std::cout << "d=" << r.d << " c=" << to_string(r.c)
                                  << " max_n=" << r.max_exact_period
                                  << " affine=" << r.affine_count
                                  << " p1=" << r.p1_count << "\n";
                }
            };
        });
    }

    // ---- fc-decompose ----
    struct {
        CommonOpts co;
        int d = 4;
        std::string x1, x2, z;
    } fd_o;
    {
        auto* sub = app.add_subcommand(
            "fc-decompose", "delta * Z1^(2k-1) structure of a 2-cycle certificate");
        add_common(sub, fd_o.co);
        sub->add_option("--d", fd_o.d, "even degree 2k")->required();
        sub->add_option("--x1", fd_o.x1, "first numerator X1")->required();
        sub->add_option("--x2", fd_o.x2, "second numerator X2")->required();
        sub->add_option("--z", fd_o.z, "common denominator Z")->required();
        sub->callback([&] {
            run = [&] {
                const auto cert = make_cycle_certificate(
                    fd_o.d, {parse_integer(fd_o.x1), parse_integer(fd_o.x2)},
                    parse_integer(fd_o.z));
                const auto fc = decompose_two_cycle(cert);
                if (fd_o.co.json) {
                    emit(wrap_certificate("decomposition", decomposition_json(fc),
                                          "fc-decompose",
                                          {{"d", fd_o.d},
                                           {"x1", fd_o.x1},
                                           {"x2", fd_o.x2},
                                           {"z", fd_o.z}}));
                    return;
                }
                std::cout << "k=" << fc.k << " X1=" << to_string(fc.X1)
                          << " X2=" << to_string(fc.X2) << " Z=" << to_string(fc.Z)
                          << "\n";
                std::cout << "S=" << to_string(fc.S) << " D=" << to_string(fc.D)
                          << " delta=" << fc.delta << " Z1=" << to_string(fc.Z1);
                if (fc.Z2) std::cout << " Z2=" << to_string(*fc.Z2);
                std::cout << "\n";
            };
        });
    }

    // ---- fc-search ----
    struct {
        CommonOpts co;
        unsigned long k = 2;
        int delta = 1;
        long bound = 1;
    } fs_o;
    {
        auto* sub = app.add_subcommand("fc-search",
                                       "coprime solutions of x^k + y^k = delta z^(2k-1)");
        add_common(sub, fs_o.co);
        sub->add_option("--k", fs_o.k, "exponent k >= 2")->required();
        sub->add_option("--delta", fs_o.delta, "1 or 2")->required();
        sub->add_option("--bound", fs_o.bound, "box bound B")->required();
        sub->callback([&] {
            run = [&] {
                const auto hits =
                    signature_search(fs_o.k, fs_o.delta, fs_o.bound, fs_o.co.threads);
                for (const auto& h : hits) {
                    if (fs_o.co.json)
                        emit(wrap_certificate("cycle",
                                              signature_json(fs_o.k, fs_o.delta, h),
                                              "fc-search",
                                              {{"k", fs_o.k},
                                               {"delta", fs_o.delta},
                                               {"bound", fs_o.bound}}));
                    else
                        std::cout << "x=" << to_string(h.x) << " y=" << to_string(h.y)
                                  << " z=" << to_string(h.z)
                                  << (h.trivial ? " trivial" : "") << "\n";
                }
                if (!fs_o.co.json)
                    std::cout << "total: " << hits.size() << " solution(s)\n";
            };
        });
    }

    // ---- fc-nonexistence ----
    struct {
        CommonOpts co;
        unsigned long k = 1;
    } fn_o;
    {
        auto* sub = app.add_subcommand("fc-nonexistence",
                                       "arithmetic 2-cycle nonexistence criterion");
        add_common(sub, fn_o.co);
        sub->add_option("--k", fn_o.k, "half degree k")->required();
        sub->callback([&] {
            run = [&] {
                const auto v = nonexistence_check(fn_o.k);
                if (fn_o.co.json) {
                    emit(wrap_certificate("bound", nonexistence_json(v),
                                          "fc-nonexistence", {{"k", fn_o.k}}));
                    return;
                }
                if (v.applies)
                    std::cout << "applies (3 | " << 2 * fn_o.k - 1 << ", witness prime "
                              << to_string(*v.witness_prime) << ")\n";
                else
                    std::cout << "not applicable\n";
            };
        });
    }

    // ---- abc-bound ----
    struct {
        CommonOpts co;
        double epsilon = 0, K = 0, base = 0;
    } ab_o;
    {
        auto* sub = app.add_subcommand("abc-bound",
                                       "conditional degree bound calculator");
        add_common(sub, ab_o.co);
        sub->add_option("--epsilon", ab_o.epsilon, "epsilon > 0")->required();
        sub->add_option("--K", ab_o.K, "constant K > 0")->required();
        sub->add_option("--base", ab_o.base, "log base > 1")->required();
        sub->callback([&] {
            run = [&] {
                const double v = degree_bound(ab_o.epsilon, ab_o.K, ab_o.base);
                if (ab_o.co.json) {
                    emit(wrap_certificate("bound",
                                          {{"epsilon", ab_o.epsilon},
                                           {"K", ab_o.K},
                                           {"base", ab_o.base},
                                           {"value", v}},
                                          "abc-bound",
                                          {{"epsilon", ab_o.epsilon},
                                           {"K", ab_o.K},
                                           {"base", ab_o.base}}));
                    return;
                }
                std::cout << fmt_double(v) << "\n";
            };
        });
    }

    // ---- abc-triple ----
    struct {
        CommonOpts co;
        std::string a, b, sum;
    } at_o;
    {
        auto* sub = app.add_subcommand("abc-triple",
                                       "validate a triple, quality, explicit bounds");
        add_common(sub, at_o.co);
        sub->add_option("--a", at_o.a, "first summand")->required();
        sub->add_option("--b", at_o.b, "second summand")->required();
        sub->add_option("--sum", at_o.sum, "their sum c")->required();
        sub->callback([&] {
            run = [&] {
                const AbcTriple t = validate_triple(
                    parse_integer(at_o.a), parse_integer(at_o.b), parse_integer(at_o.sum));
                const double q = quality(t);
                const auto chk = explicit_bound_holds(t);
                if (at_o.co.json) {
                    Json payload = bound_check_json(t, chk);
                    payload["quality"] = q;
                    emit(wrap_certificate(
                        "bound", payload, "abc-triple",
                        {{"a", at_o.a}, {"b", at_o.b}, {"sum", at_o.sum}}));
                    return;
                }
                std::cout << "valid triple; quality=" << fmt_double(q)
                          << " explicit-bound " << (chk.holds ? "holds" : "fails")
                          << " margin=" << fmt_double(chk.margin()) << "\n";
            };
        });
    }

    // ---- abc-wbound ----
    struct {
        CommonOpts co;
        double epsilon = 0, K = 0, w = 0;
        int d = 8;
    } aw_o;
    {
        auto* sub = app.add_subcommand("abc-wbound",
                                       "fixed-pair height threshold and margin");
        add_common(sub, aw_o.co);
        sub->add_option("--epsilon", aw_o.epsilon, "epsilon > 0")->required();
        sub->add_option("--K", aw_o.K, "constant K > 0")->required();
        sub->add_option("--d", aw_o.d, "degree")->required();
        sub->add_option("--w", aw_o.w, "height W to test (optional)");
        sub->callback([&] {
            run = [&] {
                const double wstar = fixedpoint_w_bound(aw_o.epsilon, aw_o.K, aw_o.d);
                Json payload = {{"epsilon", aw_o.epsilon},
                                {"K", aw_o.K},
                                {"d", aw_o.d},
                                {"w_star", wstar}};
                std::string human = "W* = " + fmt_double(wstar);
                if (aw_o.w > 0) {
                    const auto m =
                        fixedpoint_margin(aw_o.epsilon, aw_o.K, aw_o.d, aw_o.w);
                    payload["margin"] = margin_json(m);
                    human += m.contradiction ? "; W contradicts the bound"
                                             : "; W is below the threshold";
                }
                if (aw_o.co.json) {
                    emit(wrap_certificate("bound", payload, "abc-wbound",
                                          {{"epsilon", aw_o.epsilon},
                                           {"K", aw_o.K},
                                           {"d", aw_o.d},
                                           {"w", aw_o.w}}));
                    return;
                }
                std::cout << human << "\n";
            };
        });
    }

    // ---- system-check ----
    struct {
        CommonOpts co;
        int d = 2;
        std::string x1, x2, x3, z;
    } sc_o;
    {
        auto* sub = app.add_subcommand("system-check",
                                       "clause-by-clause cycle equation diagnostics");
        add_common(sub, sc_o.co);
        sub->add_option("--d", sc_o.d, "degree")->required();
        sub->add_option("--x1", sc_o.x1, "X1")->required();
        sub->add_option("--x2", sc_o.x2, "X2")->required();
        sub->add_option("--x3", sc_o.x3, "X3")->required();
        sub->add_option("--z", sc_o.z, "Z")->required();
        sub->callback([&] {
            run = [&] {
                const auto r =
                    system_check(parse_integer(sc_o.x1), parse_integer(sc_o.x2),
                                 parse_integer(sc_o.x3), parse_integer(sc_o.z), sc_o.d);
                if (sc_o.co.json) {
                    emit(wrap_certificate("bound", system_check_json(r), "system-check",
                                          {{"d", sc_o.d},
                                           {"x1", sc_o.x1},
                                           {"x2", sc_o.x2},
                                           {"x3", sc_o.x3},
                                           {"z", sc_o.z}}));
                    return;
                }
                std::cout << r.diagnosis() << "\n";
            };
        });
    }

    // ---- pair-to-cycle / cycle-to-pair ----
    struct {
        CommonOpts co;
        int d = 4;
        std::string a, b;
    } pc_o, cp_o;
    {
        auto* sub = app.add_subcommand(
            "pair-to-cycle", "fixed pair of x^d + c -> 2-cycle of x^d + c'");
        add_common(sub, pc_o.co);
        sub->add_option("--d", pc_o.d, "even degree")->required();
        sub->add_option("--x1", pc_o.a, "first fixed point p/q")->required();
        sub->add_option("--x2", pc_o.b, "second fixed point p/q")->required();
        sub->callback([&] {
            run = [&] {
                const auto tc = fixed_pair_to_two_cycle(pc_o.d, parse_rational(pc_o.a),
                                                        parse_rational(pc_o.b));
                if (pc_o.co.json) {
                    emit(wrap_certificate("cycle",
                                          {{"c_prime", to_json(tc.c)},
                                           {"y1", to_json(tc.y1)},
                                           {"y2", to_json(tc.y2)}},
                                          "pair-to-cycle",
                                          {{"d", pc_o.d},
                                           {"x1", pc_o.a},
                                           {"x2", pc_o.b}}));
                    return;
                }
                std::cout << "c'=" << to_string(tc.c) << " y1=" << to_string(tc.y1)
                          << " y2=" << to_string(tc.y2) << "\n";
            };
        });
    }
    {
        auto* sub = app.add_subcommand(
            "cycle-to-pair", "2-cycle of x^d + c -> fixed pair of x^d + c'");
        add_common(sub, cp_o.co);
        sub->add_option("--d", cp_o.d, "even degree")->required();
        sub->add_option("--y1", cp_o.a, "first cycle point p/q")->required();
        sub->add_option("--y2", cp_o.b, "second cycle point p/q")->required();
        sub->callback([&] {
            run = [&] {
                const auto fp = two_cycle_to_fixed_pair(cp_o.d, parse_rational(cp_o.a),
                                                        parse_rational(cp_o.b));
                if (cp_o.co.json) {
                    emit(wrap_certificate("cycle",
                                          {{"c", to_json(fp.c)},
                                           {"x1", to_json(fp.x1)},
                                           {"x2", to_json(fp.x2)}},
                                          "cycle-to-pair",
                                          {{"d", cp_o.d},
                                           {"y1", cp_o.a},
                                           {"y2", cp_o.b}}));
                    return;
                }
                std::cout << "c=" << to_string(fp.c) << " x1=" << to_string(fp.x1)
                          << " x2=" << to_string(fp.x2) << "\n";
            };
        });
    }

    // ---- curve-quartic ----
    struct {
        CommonOpts co;
        long bound = 1;
    } cq_o;
    {
        auto* sub = app.add_subcommand("curve-quartic",
                                       "rational points on y^2 = -t^4 - 2t");
        add_common(sub, cq_o.co);
        sub->add_option("--bound", cq_o.bound, "numerator/denominator bound")
            ->required();
        sub->callback([&] {
            run = [&] {
                for (const auto& p : quartic_points(cq_o.bound)) {
                    if (cq_o.co.json)
                        emit(wrap_certificate("curve-point", quartic_json(p),
                                              "curve-quartic",
                                              {{"bound", cq_o.bound}}));
                    else
                        std::cout << "t=" << to_string(p.t) << " y=" << to_string(p.y)
                                  << "\n";
                }
            };
        });
    }

    // ---- curve-hyper ----
    struct {
        CommonOpts co;
        long bound = 1;
    } ch_o;
    {
        auto* sub = app.add_subcommand("curve-hyper",
                                       "weighted points on y^2 = x^5 + 81");
        add_common(sub, ch_o.co);
        sub->add_option("--bound", ch_o.bound, "denominator bound (|X| <= bound^2)")
            ->required();
        sub->callback([&] {
            run = [&] {
                for (const auto& p : hyperelliptic_points(ch_o.bound, ch_o.co.threads)) {
                    if (ch_o.co.json)
                        emit(wrap_certificate("curve-point", weighted_json(p),
                                              "curve-hyper",
                                              {{"bound", ch_o.bound}}));
                    else
                        std::cout << "X=" << to_string(p.X) << " Y=" << to_string(p.Y)
                                  << " Z=" << to_string(p.Z) << "\n";
                }
            };
        });
    }

    // ---- sieve ----
    struct {
        CommonOpts co;
        unsigned long p = 3;
    } sv_o;
    {
        auto* sub = app.add_subcommand("sieve",
                                       "admissible residue classes mod p for the "
                                       "hyperelliptic search");
        add_common(sub, sv_o.co);
        sub->add_option("--p", sv_o.p, "prime <= 97")->required();
        sub->callback([&] {
            run = [&] {
                const auto s = local_sieve(sv_o.p);
                size_t count = 0;
                for (char c : s.classes) count += c != 0;
                if (sv_o.co.json) {
                    emit(wrap_certificate("bound",
                                          {{"p", s.p},
                                           {"admissible", count},
                                           {"classes", s.classes.size()},
                                           {"density", s.density()}},
                                          "sieve", {{"p", sv_o.p}}));
                    return;
                }
                std::cout << "p=" << s.p << " admissible " << count << "/"
                          << s.classes.size() << " density=" << fmt_double(s.density())
                          << "\n";
            };
        });
    }

    // ---- family ----
    struct {
        CommonOpts co;
        std::string t, y;
    } fa_o;
    {
        auto* sub = app.add_subcommand(
            "family", "2-cycle of x^4 + c attached to a quartic curve point");
        add_common(sub, fa_o.co);
        sub->add_option("--t", fa_o.t, "curve parameter t = p/q, nonzero")->required();
        sub->add_option("--y", fa_o.y, "curve coordinate y = p/q")->required();
        sub->callback([&] {
            run = [&] {
                const Rational t = parse_rational(fa_o.t), y = parse_rational(fa_o.y);
                const auto fp = family_generator(t, y);
                if (fa_o.co.json) {
                    emit(wrap_certificate("curve-point", family_json(t, y, fp),
                                          "family", {{"t", fa_o.t}, {"y", fa_o.y}}));
                    return;
                }
                std::cout << "c=" << to_string(fp.c) << "\n";
                std::cout << "cycle: " << to_string(fp.x1) << " <-> "
                          << to_string(fp.x2) << "\n";
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (run) run();
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
