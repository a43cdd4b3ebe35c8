#include "unicrit/search.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "partition.hpp"

namespace unicrit {

namespace {

Integer signed_pow(long base, int d) {
    return int_pow(Integer(base), static_cast<unsigned long>(d));
}

}  // namespace

CycleCertificate make_cycle_certificate(int d, const std::vector<Integer>& X,
                                        const Integer& Z) {
    if (d < 2) throw InvalidInput("cycle certificate: degree must be >= 2");
    if (X.size() < 1) throw InvalidInput("cycle certificate: empty cycle");
    if (Z < 1) throw InvalidInput("cycle certificate: Z must be positive");

    CycleCertificate cert;
    cert.d = d;
    cert.n = static_cast<int>(X.size());
    cert.Z = Z;
    cert.X = X;

    for (const Integer& Xi : X)
        if (int_gcd(Xi, Z) != 1)
            throw InvalidInput("cycle certificate: X[i]/Z not in lowest terms");

    // C from the first step f(X0/Z) = X1/Z; the rest must then close up.
    const Integer Zd1 = int_pow(Z, static_cast<unsigned long>(d - 1));
    const Integer& X0 = X[0];
    const Integer& X1next = X[X.size() > 1 ? 1 : 0];
    cert.C = X1next * Zd1 - int_pow(X0, static_cast<unsigned long>(d));
    cert.c = reduce(cert.C, Zd1 * Z);
    if (cert.c.get_den() != Zd1 * Z)
        throw InvalidInput("cycle certificate: c = C/Z^d is not in lowest terms");

    validate(cert);
    return cert;
}

void validate(const CycleCertificate& cert) {
    const PowerMap f(cert.d, cert.c);
    const size_t n = cert.X.size();
    for (size_t i = 0; i < n; ++i) {
        const Rational xi = reduce(cert.X[i], cert.Z);
        if (xi.get_den() != cert.Z)
            throw InvalidInput("cycle certificate: X[i]/Z not reduced");
        const Rational expect = reduce(cert.X[(i + 1) % n], cert.Z);
        if (eval(f, xi) != expect)
            throw InvalidInput("cycle certificate: orbit does not close up");
    }
    // distinctness <=> the period is exactly n; confirm via classification
    const auto type = preperiodic_type(f, reduce(cert.X[0], cert.Z));
    if (!type || type->second != 0 || type->first != cert.n)
        throw InvalidInput("cycle certificate: period is not exact");
}

int PreperGraph::max_exact_period() const {
    int best = 1;  // infinity is a fixed point of every map
    for (const auto& node : nodes) best = std::max(best, node.exact_period);
    return best;
}

PreperGraph preperiodic_points(const PowerMap& f) {
    PreperGraph g;
    g.d = f.d;
    g.c = f.c;

    // Rational preperiodic points have the forced denominator Z and sit
    // inside the escape radius, so scanning numerators |X| <= Z * (|c| + 2)
    // is complete.  No forced denominator means no affine points.
    const std::optional<Integer> z = forced_denominator(f);
    if (!z) return g;

    const Integer xmax = floor_to_integer(*z * (rat_abs(f.c) + 2));
    for (Integer X = -xmax; X <= xmax; ++X) {
        if (int_gcd(X, *z) != 1) continue;
        const Rational x0 = reduce(X, *z);
        const auto type = preperiodic_type(f, x0);
        if (!type) continue;
        g.nodes.push_back({x0, type->first, type->second, eval(f, x0)});
    }
    std::sort(g.nodes.begin(), g.nodes.end(),
              [](const PreperNode& a, const PreperNode& b) { return a.x < b.x; });
    return g;
}

std::vector<CycleCertificate> two_cycle_search(int d, long W, int threads) {
    if (d < 2 || d % 2 != 0)
        throw InvalidInput("two_cycle_search: degree must be even and >= 2");
    if (W < 1) throw InvalidInput("two_cycle_search: bound must be >= 1");

    // d is even, so X^d depends only on |X|
    std::vector<Integer> pw(static_cast<size_t>(W) + 1);
    for (long a = 0; a <= W; ++a) pw[static_cast<size_t>(a)] = signed_pow(a, d);

    // Canonical enumeration: coprime X1 < X2 with |X1| > |X2| (otherwise the
    // cycle quotient is <= 0).  Q = (X2^d - X1^d)/(X1 - X2) is integral, and
    // Q = Z^(d-1) with gcd(Z, X1 X2) = 1 pins down the certificate; closure
    // f(X2/Z) = X1/Z is then automatic, and X1 != X2 makes the period exact.
    auto scan_x1 = [&](long j) {
        const long X1 = -W + j;
        std::vector<CycleCertificate> hits;
        const long hi = std::min(W, X1 < 0 ? -X1 - 1 : -1);  // |X2| < |X1|
        for (long X2 = X1 + 1; X2 <= hi; ++X2) {
            if (std::gcd(X1, X2) != 1) continue;
            const Integer& p1 = pw[static_cast<size_t>(std::abs(X1))];
            const Integer& p2 = pw[static_cast<size_t>(std::abs(X2))];
            Integer q = p1 - p2;  // = -(X2^d - X1^d) > 0
            mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(),
                            static_cast<unsigned long>(X2 - X1));
            const auto zroot = kth_root_exact(q, static_cast<unsigned long>(d - 1));
            if (!zroot || *zroot > W) continue;
            if (int_gcd(*zroot, Integer(X1) * X2) != 1) continue;
            hits.push_back(make_cycle_certificate(d, {Integer(X1), Integer(X2)}, *zroot));
        }
        return hits;
    };

    auto out = run_partitioned<CycleCertificate>(2 * W + 1, threads, scan_x1);
    std::sort(out.begin(), out.end(),
              [](const CycleCertificate& a, const CycleCertificate& b) {
                  return std::tie(a.Z, a.X[0], a.X[1]) < std::tie(b.Z, b.X[0], b.X[1]);
              });
    return out;
}

std::vector<FixedPairHit> fixed_point_search(int d, long W, int threads) {
    if (d < 3) throw InvalidInput("fixed_point_search: degree must be >= 3");
    if (W < 1) throw InvalidInput("fixed_point_search: bound must be >= 1");

    std::vector<Integer> pw(static_cast<size_t>(W) + 1);
    for (long a = 0; a <= W; ++a) pw[static_cast<size_t>(a)] = signed_pow(a, d);
    auto powd = [&](long a) {
        const Integer& m = pw[static_cast<size_t>(std::abs(a))];
        return (a < 0 && d % 2 != 0) ? Integer(-m) : m;
    };

    // X1/Z and X2/Z are both fixed by x^d + c for one c exactly when
    // (X1^d - X2^d)/(X1 - X2) = Z^(d-1); scan coprime X1 < X2.
    auto scan_x1 = [&](long j) {
        const long X1 = -W + j;
        std::vector<FixedPairHit> hits;
        for (long X2 = X1 + 1; X2 <= W; ++X2) {
            if (std::gcd(X1, X2) != 1) continue;
            Integer q = powd(X1) - powd(X2);
            mpz_divexact(q.get_mpz_t(), q.get_mpz_t(),
                         Integer(X1 - X2).get_mpz_t());
            if (sgn(q) <= 0) continue;
            const auto zroot = kth_root_exact(q, static_cast<unsigned long>(d - 1));
            if (!zroot || *zroot > W) continue;
            if (int_gcd(*zroot, Integer(X1) * X2) != 1) continue;

            const Integer zd1 = int_pow(*zroot, static_cast<unsigned long>(d - 1));
            FixedPairHit hit{Integer(X1), Integer(X2), *zroot,
                             reduce(Integer(X1) * zd1 - powd(X1), zd1 * *zroot)};
            const PowerMap f(d, hit.c);
            const Rational x1 = reduce(hit.X1, hit.Z), x2 = reduce(hit.X2, hit.Z);
            if (eval(f, x1) != x1 || eval(f, x2) != x2)
                throw InternalError("fixed_point_search: candidate failed to verify");
            hits.push_back(std::move(hit));
        }
        return hits;
    };

    auto out = run_partitioned<FixedPairHit>(2 * W + 1, threads, scan_x1);
    std::sort(out.begin(), out.end(), [](const FixedPairHit& a, const FixedPairHit& b) {
        return std::tie(a.Z, a.X1, a.X2) < std::tie(b.Z, b.X1, b.X2);
    });
    return out;
}

std::vector<Type12Hit> type12_search(int d, long B) {
    if (d < 3) throw InvalidInput("type12_search: degree must be >= 3");
    if (B < 1) throw InvalidInput("type12_search: bound must be >= 1");

    std::vector<Type12Hit> out;
    for (long Z = 1; Z <= B; ++Z) {
        const Integer zd1 = signed_pow(Z, d - 1);
        for (long X0 = -B; X0 <= B; ++X0) {
            if (std::gcd(X0, Z) != 1) continue;
            for (long R = -B; R <= B; ++R) {
                if (std::gcd(R, Z) != 1) continue;
                const Integer lhs = signed_pow(X0, d) - signed_pow(R, d);
                if (lhs != 2 * Integer(X0) * zd1) continue;
                out.push_back({Integer(X0), Integer(R), Integer(Z), X0 == 0 || R == 0});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Type12Hit& a, const Type12Hit& b) {
        return std::tie(a.Z, a.X0, a.R) < std::tie(b.Z, b.X0, b.R);
    });
    return out;
}

std::vector<SweepRow> sweep(const std::vector<int>& degrees, long z_max,
                            long c_height, int threads) {
    if (z_max < 1 || c_height < 0) throw InvalidInput("sweep: bad box");
    for (int d : degrees)
        if (d < 2) throw InvalidInput("sweep: degrees must be >= 2");

    struct Task {
        int d;
        long C, Z;
    };
    std::vector<Task> tasks;
    for (int d : degrees)
        for (long Z = 1; Z <= z_max; ++Z)
            for (long C = -c_height; C <= c_height; ++C) {
                if (Z > 1 && std::gcd(C, Z) != 1) continue;
                tasks.push_back({d, C, Z});
            }

    auto run_task = [&](long j) {
        const Task& t = tasks[static_cast<size_t>(j)];
        const Rational c = reduce(Integer(t.C), signed_pow(t.Z, t.d));
        const PreperGraph g = preperiodic_points(PowerMap(t.d, c));
        SweepRow row;
        row.d = t.d;
        row.C = t.C;
        row.Z = t.Z;
        row.c = c;
        row.max_exact_period = g.max_exact_period();
        row.affine_count = g.nodes.size();
        row.p1_count = g.p1_count();
        return std::vector<SweepRow>{row};
    };

    return run_partitioned<SweepRow>(static_cast<long>(tasks.size()), threads, run_task);
}

std::string SystemCheckResult::diagnosis() const {
    if (ok()) return "all clauses hold";
    std::string out = "failed:";
    if (!eq_holds) out += " main-equation";
    if (!eq_nonzero) out += " nonzero-sides";
    if (!coprime) out += " coprimality";
    if (!max_is_x2) out += " max-at-X2";
    if (!nontrivial) out += " size>1";
    return out;
}

SystemCheckResult system_check(const Integer& X1, const Integer& X2,
                               const Integer& X3, const Integer& Z, int d) {
    if (d < 2) throw InvalidInput("system_check: degree must be >= 2");
    if (Z < 1) throw InvalidInput("system_check: Z must be positive");

    SystemCheckResult r;
    const Integer lhs = int_pow(X2, static_cast<unsigned long>(d)) -
                        int_pow(X1, static_cast<unsigned long>(d));
    const Integer rhs = (X3 - X2) * int_pow(Z, static_cast<unsigned long>(d - 1));
    r.eq_holds = lhs == rhs;
    r.eq_nonzero = sgn(lhs) != 0 && sgn(rhs) != 0;
    r.coprime = int_gcd(X1, X2) == 1;
    const Integer m = std::max({abs(X1), abs(X2), abs(X3)});
    r.max_is_x2 = m == abs(X2);
    r.nontrivial = std::max(abs(X2), abs(Z)) > 1;
    return r;
}

std::vector<CycleCertificate> extract_two_cycles(const PreperGraph& g) {
    std::vector<CycleCertificate> out;
    const std::optional<Integer> z =
        forced_denominator(PowerMap(g.d, g.c));
    if (!z) return out;
    for (const auto& node : g.nodes) {
        if (node.tail_length != 0 || node.exact_period != 2) continue;
        const Rational& a = node.x;
        const Rational& b = node.next;
        if (!(a < b)) continue;  // emit each cycle once, X1 < X2
        // preperiodic points carry the forced denominator, so numerators
        // against Z are immediate
        const Integer X1 = a.get_num() * (*z / a.get_den());
        const Integer X2 = b.get_num() * (*z / b.get_den());
        out.push_back(make_cycle_certificate(g.d, {X1, X2}, *z));
    }
    std::sort(out.begin(), out.end(),
              [](const CycleCertificate& a, const CycleCertificate& b) {
                  return std::tie(a.Z, a.X[0], a.X[1]) < std::tie(b.Z, b.X[0], b.X[1]);
              });
    return out;
}

}  // namespace unicrit
