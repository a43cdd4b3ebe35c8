#include "unicrit/curves.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "partition.hpp"

namespace unicrit {

std::vector<QuarticPoint> quartic_points(long bound) {
    if (bound < 1) throw InvalidInput("quartic_points: bound must be >= 1");

    std::vector<QuarticPoint> out;
    for (long P = -bound; P <= bound; ++P) {
        for (long Q = 1; Q <= bound; ++Q) {
            if (std::gcd(P, Q) != 1) continue;
            // y^2 * Q^4 = -P^4 - 2 P Q^3
            const Integer M =
                -int_pow(Integer(P), 4) - 2 * Integer(P) * int_pow(Integer(Q), 3);
            if (M < 0) continue;
            const auto S = kth_root_exact(M, 2);
            if (!S) continue;
            const Rational t = reduce(P, Q);
            const Rational y = reduce(*S, int_pow(Integer(Q), 2));
            out.push_back({t, y});
            if (*S != 0) out.push_back({t, Rational(-y)});
        }
    }
    std::sort(out.begin(), out.end(), [](const QuarticPoint& a, const QuarticPoint& b) {
        return std::tie(a.t, a.y) < std::tie(b.t, b.y);
    });
    return out;
}

bool SieveTable::admissible(const Integer& X, const Integer& Z) const {
    const unsigned long a = mpz_fdiv_ui(X.get_mpz_t(), p);
    const unsigned long b = mpz_fdiv_ui(Z.get_mpz_t(), p);
    return classes[a * p + b] != 0;
}

double SieveTable::density() const {
    size_t hits = 0;
    for (char c : classes) hits += c != 0;
    return static_cast<double>(hits) / static_cast<double>(classes.size());
}

SieveTable local_sieve(unsigned long p) {
    if (p > 97 || !is_prime(Integer(p)))
        throw InvalidInput("local_sieve: modulus must be a prime <= 97");

    std::vector<char> is_square_mod(p, 0);
    for (unsigned long r = 0; r < p; ++r) is_square_mod[(r * r) % p] = 1;

    SieveTable table;
    table.p = p;
    table.classes.assign(p * p, 0);
    auto powm = [p](unsigned long base, unsigned long e) {
        unsigned long r = 1 % p;
        for (unsigned long i = 0; i < e; ++i) r = (r * base) % p;
        return r;
    };
    for (unsigned long a = 0; a < p; ++a)
        for (unsigned long b = 0; b < p; ++b) {
            const unsigned long v = (powm(a, 5) + 81 * powm(b, 10)) % p;
            table.classes[a * p + b] = is_square_mod[v];
        }
    return table;
}

std::vector<WeightedPoint> hyperelliptic_points(long bound, int threads) {
    if (bound < 1) throw InvalidInput("hyperelliptic_points: bound must be >= 1");

    std::vector<SieveTable> sieves;
    for (unsigned long p : {3ul, 7ul, 11ul, 13ul}) sieves.push_back(local_sieve(p));

    const long xmax = bound * bound;
    auto scan_x = [&](long j) {
        const Integer X(-xmax + j);
        const Integer x5 = int_pow(X, 5);
        std::vector<WeightedPoint> hits;
        for (long Zl = 1; Zl <= bound; ++Zl) {
            const Integer Z(Zl);
            if (gcd(X, Z) != 1) continue;
            bool pass = true;
            for (const auto& s : sieves) pass = pass && s.admissible(X, Z);
            if (!pass) continue;
            const Integer V = x5 + 81 * int_pow(Z, 10);
            if (V < 0) continue;
            const auto Y = kth_root_exact(V, 2);
            if (!Y) continue;
            hits.push_back({X, *Y, Z});
            if (*Y != 0) hits.push_back({X, Integer(-*Y), Z});
        }
        return hits;
    };

    auto out = run_partitioned<WeightedPoint>(2 * xmax + 1, threads, scan_x);
    std::sort(out.begin(), out.end(), [](const WeightedPoint& a, const WeightedPoint& b) {
        return std::tie(a.Z, a.X, a.Y) < std::tie(b.Z, b.X, b.Y);
    });
    return out;
}

FamilyPoint family_generator(const Rational& t, const Rational& y) {
    if (t == 0) throw InvalidInput("family_generator: t must be nonzero");
    if (y * y != -rat_pow(t, 4) - 2 * t)
        throw InvalidInput("family_generator: (t, y) is not on the curve");

    FamilyPoint fp;
    const Rational t2 = t * t;
    fp.c = (rat_pow(t, 6) + 4 * rat_pow(t, 3) - 1) / (4 * t2);
    fp.x1 = (t2 + y) / (2 * t);
    fp.x2 = (t2 - y) / (2 * t);

    const PowerMap f(4, fp.c);
    if (eval(f, fp.x1) != fp.x2 || eval(f, fp.x2) != fp.x1)
        throw InternalError("family_generator: generated pair is not a 2-cycle");
    return fp;
}

}  // namespace unicrit
