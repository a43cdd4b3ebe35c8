#include "unicrit/exactnum.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cctype>
#include <map>

namespace unicrit {

namespace {

constexpr std::array<unsigned, 25> kSmallPrimes = {
    2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// true if a is a Miller-Rabin witness for the compositeness of odd n >= 3
bool mr_witness(const Integer& n, const Integer& a) {
    Integer d = n - 1;
    const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    Integer x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;
}

// One nontrivial factor of odd composite n (Pollard rho, Floyd cycle).
Integer rho_factor(const Integer& n) {
    assert(n > 1 && n % 2 != 0);
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, g = 1;
        while (g == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            g = int_gcd(x - y, n);
        }
        if (g != n) return g;
        // cycle collapsed; retry with the next polynomial x^2 + c
    }
}

void split_into(const Integer& m, std::map<Integer, unsigned>& acc) {
    if (m == 1) return;
    if (is_prime(m)) {
        ++acc[m];
        return;
    }
    const Integer g = rho_factor(m);
    split_into(g, acc);
    split_into(m / g, acc);
}

}  // namespace

Rational reduce(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw InvalidInput("reduce: denominator must be nonzero");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (unsigned p : kSmallPrimes) {
        if (mpz_cmp_ui(n.get_mpz_t(), p) == 0) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    if (n < 97ul * 97ul) return true;

    // First 12 prime bases decide primality below 3.317e24; keep the rest of
    // the fixed base list as margin for anything larger that slips through.
    static const Integer proven_bound("3317044064679887385961981");
    const bool small = n < proven_bound;
    for (unsigned p : kSmallPrimes) {
        if (small && p > 37) break;
        if (mr_witness(n, Integer(p))) return false;
    }
    return true;
}

Factorization factorize(const Integer& n) {
    if (sgn(n) == 0) throw InvalidInput("factorize: argument must be nonzero");
    Integer m = abs(n);
    std::map<Integer, unsigned> acc;

    auto strip = [&m, &acc](unsigned long p) {
        const unsigned long e =
            mpz_remove(m.get_mpz_t(), m.get_mpz_t(), Integer(p).get_mpz_t());
        if (e) acc[Integer(p)] += static_cast<unsigned>(e);
    };

    strip(2);
    strip(3);
    for (unsigned long q = 5, step = 2; q <= 1000000ul; q += step, step = 6 - step) {
        if (mpz_cmp_ui(m.get_mpz_t(), q * q) < 0) break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), q)) strip(q);
    }
    split_into(m, acc);

    Factorization out;
    out.reserve(acc.size());
    for (const auto& [p, e] : acc) out.push_back({p, e});
    return out;
}

Integer radical(const Integer& n) {
    Integer r = 1;
    for (const auto& pp : factorize(n)) r *= pp.prime;
    return r;
}

unsigned long p_adic_valuation(const Integer& n, const Integer& p) {
    if (sgn(n) == 0) throw InvalidInput("p_adic_valuation: n must be nonzero");
    if (!is_prime(p)) throw InvalidInput("p_adic_valuation: p must be prime");
    Integer rest;
    return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

std::optional<Integer> kth_root_exact(const Integer& n, unsigned long k) {
    if (k < 1) throw InvalidInput("kth_root_exact: k must be >= 1");
    if (sgn(n) == 0) return Integer(0);
    const bool negative = sgn(n) < 0;
    if (negative && k % 2 == 0) return std::nullopt;

    const Integer m = abs(n);
    Integer r;
    mpz_root(r.get_mpz_t(), m.get_mpz_t(), k);  // floor root, by integer Newton
    if (int_pow(r, k) != m) return std::nullopt;
    return negative ? Integer(-r) : r;
}

bool is_square(const Integer& n) {
    const int s = sgn(n);
    if (s < 0) return false;
    if (s == 0) return true;

    static const auto residue_table = [](unsigned long mod) {
        std::vector<bool> ok(mod, false);
        for (unsigned long i = 0; i < mod; ++i) ok[i * i % mod] = true;
        return ok;
    };
    static const std::vector<bool> sq64 = residue_table(64);
    static const std::vector<bool> sq63 = residue_table(63);
    if (!sq64[mpz_fdiv_ui(n.get_mpz_t(), 64)]) return false;
    if (!sq63[mpz_fdiv_ui(n.get_mpz_t(), 63)]) return false;
    return kth_root_exact(n, 2).has_value();
}

Integer int_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational rat_pow(const Rational& base, unsigned long e) {
    // num and den are coprime, so their powers are too: no re-canonicalization
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    return r;
}

Integer int_gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Rational rat_abs(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

Integer floor_to_integer(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& n) { return n.get_str(); }

Integer parse_integer(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](unsigned char ch) { return std::isspace(ch); }),
            s.end());
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    Integer v;
    if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw InvalidInput("not an integer: '" + text + "'");
    return v;
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    const Integer num = parse_integer(text.substr(0, slash));
    const Integer den = parse_integer(text.substr(slash + 1));
    return reduce(num, den);
}

}  // namespace unicrit
