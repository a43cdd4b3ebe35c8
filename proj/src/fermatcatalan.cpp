#include "unicrit/fermatcatalan.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "partition.hpp"

namespace unicrit {

namespace {

// signed odd-exponent exact root: n = r^e with e odd, or nothing
std::optional<Integer> odd_root_exact(const Integer& n, unsigned long e) {
    const bool neg = sgn(n) < 0;
    auto r = kth_root_exact(neg ? Integer(-n) : n, e);
    if (!r) return std::nullopt;
    return neg ? Integer(-*r) : *r;
}

// every prime exponent of |m| is a multiple of e (audit path for the root)
bool exponents_divisible(const Integer& m, unsigned long e) {
    if (m == 0) return false;
    Integer a = abs(m);
    if (a == 1) return true;
    for (const auto& [p, exp] : factorize(a))
        if (exp % e != 0) return false;
    return true;
}

}  // namespace

FCDecomposition decompose_two_cycle(const CycleCertificate& cert) {
    if (cert.n != 2)
        throw InvalidInput("decompose_two_cycle: certificate is not a 2-cycle");
    if (cert.d % 2 != 0)
        throw InvalidInput("decompose_two_cycle: degree must be even");

    FCDecomposition fc;
    fc.k = static_cast<unsigned long>(cert.d) / 2;
    fc.X1 = cert.X[0];
    fc.X2 = cert.X[1];
    fc.Z = cert.Z;
    const unsigned long e = 2 * fc.k - 1;

    const Integer p1 = int_pow(fc.X1, fc.k), p2 = int_pow(fc.X2, fc.k);
    fc.S = p1 + p2;
    Integer dn = p1 - p2;
    fc.D = 0;
    mpz_divexact(fc.D.get_mpz_t(), dn.get_mpz_t(), Integer(fc.X1 - fc.X2).get_mpz_t());

    // the 2-cycle relation forces S * D = -Z^(2k-1)
    if (fc.S * fc.D != -int_pow(fc.Z, e))
        throw InternalError("decompose_two_cycle: product identity failed");

    const Integer g = gcd(fc.S, fc.D);
    if (g != 1 && g != 2)
        throw InternalError("decompose_two_cycle: gcd(S, D) not in {1, 2}");
    fc.delta = (g == 2) ? 2 : 1;
    if (fc.k % 2 == 1 && fc.delta != 1)
        throw InternalError("decompose_two_cycle: odd k must give delta = 1");

    Integer body = fc.S;
    if (fc.delta == 2) {
        if (mpz_odd_p(body.get_mpz_t()))
            throw InternalError("decompose_two_cycle: delta = 2 with odd S");
        mpz_divexact_ui(body.get_mpz_t(), body.get_mpz_t(), 2);
    }
    const auto z1 = odd_root_exact(body, e);
    if (!z1 || !exponents_divisible(body, e))
        throw InternalError("decompose_two_cycle: S/delta is not a (2k-1)-th power");
    fc.Z1 = *z1;
    if (!mpz_divisible_p(fc.Z.get_mpz_t(), Integer(abs(fc.Z1)).get_mpz_t()))
        throw InternalError("decompose_two_cycle: Z1 does not divide Z");

    if (fc.delta == 2) {
        // gcd 2 case: D = 2^(2k-2) * Z2^(2k-1) with Z2 coprime to Z1
        Integer dbody = fc.D;
        const Integer pow2 = int_pow(Integer(2), 2 * fc.k - 2);
        if (!mpz_divisible_p(dbody.get_mpz_t(), pow2.get_mpz_t()))
            throw InternalError("decompose_two_cycle: 2^(2k-2) does not divide D");
        mpz_divexact(dbody.get_mpz_t(), dbody.get_mpz_t(), pow2.get_mpz_t());
        const auto z2 = odd_root_exact(dbody, e);
        if (!z2)
            throw InternalError("decompose_two_cycle: D shape is not 2^(2k-2) * Z2^(2k-1)");
        fc.Z2 = *z2;
        if (gcd(fc.Z1, *fc.Z2) != 1)
            throw InternalError("decompose_two_cycle: gcd(Z1, Z2) != 1");
    }
    return fc;
}

Integer gcd_divides_two(const Integer& X1, const Integer& X2, unsigned long k) {
    if (gcd(X1, X2) != 1)
        throw InvalidInput("gcd_divides_two: X1, X2 must be coprime");
    if (k == 0) throw InvalidInput("gcd_divides_two: k must be positive");
    const Integer p1 = int_pow(X1, k), p2 = int_pow(X2, k);
    const Integer g = gcd(Integer(p1 + p2), Integer(p1 - p2));
    if (g != 1 && g != 2)
        throw InternalError("gcd_divides_two: gcd exceeds 2");
    return g;
}

unsigned long lte_two_adic(const Integer& X1, const Integer& X2, unsigned long k) {
    if (mpz_even_p(X1.get_mpz_t()) || mpz_even_p(X2.get_mpz_t()))
        throw InvalidInput("lte_two_adic: X1, X2 must be odd");
    if (gcd(X1, X2) != 1)
        throw InvalidInput("lte_two_adic: X1, X2 must be coprime");
    if (k % 2 == 0 || k == 0) throw InvalidInput("lte_two_adic: k must be odd");
    if (X1 == X2) throw InvalidInput("lte_two_adic: X1 must differ from X2");

    Integer dn = int_pow(X1, k) - int_pow(X2, k);
    Integer D = 0;
    mpz_divexact(D.get_mpz_t(), dn.get_mpz_t(), Integer(X1 - X2).get_mpz_t());
    const unsigned long v = p_adic_valuation(D, 2);
    if (v != 0) throw InternalError("lte_two_adic: quotient is even");
    return v;
}

std::vector<SignatureHit> signature_search(unsigned long k, int delta, long B,
                                           int threads) {
    if (k < 2) throw InvalidInput("signature_search: k must be >= 2");
    if (delta != 1 && delta != 2)
        throw InvalidInput("signature_search: delta must be 1 or 2");
    if (B < 1) throw InvalidInput("signature_search: bound must be >= 1");
    if (threads < 1) throw InvalidInput("signature_search: threads must be >= 1");

    const unsigned long e = 2 * k - 1;
    std::vector<Integer> pw(static_cast<size_t>(B) + 1);
    for (long a = 0; a <= B; ++a) pw[a] = int_pow(Integer(a), k);
    auto powk = [&](long a) -> Integer {
        const Integer& p = pw[static_cast<size_t>(a < 0 ? -a : a)];
        return (a < 0 && k % 2 == 1) ? Integer(-p) : p;
    };

    auto scan_x = [&](long j) {
        const long x = -B + j;
        std::vector<SignatureHit> hits;
        for (long y = x; y <= B; ++y) {
            if (std::gcd(x, y) != 1) continue;
            Integer t = powk(x) + powk(y);
            if (delta == 2) {
                if (mpz_odd_p(t.get_mpz_t())) continue;
                mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), 2);
            }
            std::optional<Integer> z;
            if (t == 0)
                z = Integer(0);
            else
                z = odd_root_exact(t, e);
            if (!z || abs(*z) > B) continue;
            hits.push_back({Integer(x), Integer(y), *z,
                            abs(Integer(x) * Integer(y)) <= 1});
        }
        return hits;
    };

    auto out = run_partitioned<SignatureHit>(2 * B + 1, threads, scan_x);
    std::sort(out.begin(), out.end(), [](const SignatureHit& a, const SignatureHit& b) {
        return std::tie(a.x, a.y) < std::tie(b.x, b.y);
    });
    return out;
}

NonexistenceVerdict nonexistence_check(unsigned long k) {
    if (k == 0) throw InvalidInput("nonexistence_check: k must be positive");
    NonexistenceVerdict v;
    v.k = k;
    v.three_divides = (2 * k - 1) % 3 == 0;
    for (const auto& [p, exp] : factorize(Integer(k))) {
        if (p >= 5) {
            v.witness_prime = p;
            break;  // factorize returns primes in ascending order
        }
    }
    v.applies = v.three_divides && v.witness_prime.has_value();
    return v;
}

}  // namespace unicrit
