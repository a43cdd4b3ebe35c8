#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "unicrit/exactnum.hpp"

using namespace unicrit;

namespace {

// independent factorization oracle: plain trial division, no rho, no wheel
Factorization trial_factorize(Integer m) {
    m = abs(m);
    Factorization out;
    for (Integer p = 2; p * p <= m; ++p) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e) out.push_back({p, e});
    }
    if (m > 1) out.push_back({m, 1});
    return out;
}

Integer product_of(const Factorization& f) {
    Integer r = 1;
    for (const auto& pp : f) r *= int_pow(pp.prime, pp.exponent);
    return r;
}

}  // namespace

TEST_CASE("reduce puts fractions in canonical form") {
    CHECK(reduce(-26, 20) == Rational(-13, 10));
    CHECK(reduce(9000, 10000) == Rational(9, 10));
    CHECK(reduce(7, 1) == 7);
    CHECK(reduce(0, 5) == 0);
    CHECK(reduce(3, -6) == Rational(-1, 2));
    CHECK(reduce(3, -6).get_den() == 2);  // sign lives in the numerator
    CHECK_THROWS_AS(reduce(5, 0), InvalidInput);
}

TEST_CASE("factorize matches the trial-division oracle") {
    Factorization f72 = factorize(72);
    REQUIRE(f72.size() == 2);
    CHECK(f72[0] == PrimePower{2, 3});
    CHECK(f72[1] == PrimePower{3, 2});

    Factorization f = factorize(19561);
    REQUIRE(f.size() == 2);
    CHECK(f[0] == PrimePower{31, 1});
    CHECK(f[1] == PrimePower{631, 1});

    CHECK(factorize(1).empty());
    CHECK(factorize(-1).empty());
    CHECK(factorize(-12) == trial_factorize(-12));
    CHECK_THROWS_AS(factorize(0), InvalidInput);

    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 200; ++i) {
        const long n = static_cast<long>(rng() % 2000000) + 2;
        const Factorization mine = factorize(n);
        CHECK(mine == trial_factorize(n));
        CHECK(product_of(mine) == n);
        for (size_t j = 0; j + 1 < mine.size(); ++j)
            CHECK(mine[j].prime < mine[j + 1].prime);
    }
}

TEST_CASE("factorize splits large semiprimes") {
    // 1299709 * 1299721 (consecutive primes past the trial-division bound)
    const Integer n = Integer(1299709) * 1299721;
    const Factorization f = factorize(n);
    REQUIRE(f.size() == 2);
    CHECK(f[0] == PrimePower{1299709, 1});
    CHECK(f[1] == PrimePower{1299721, 1});
}

TEST_CASE("is_prime") {
    CHECK(is_prime(2));
    CHECK(is_prime(31));
    CHECK(is_prime(631));
    CHECK(is_prime(1299709));
    CHECK(is_prime(Integer("2305843009213693951")));  // 2^61 - 1
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(-7));
    CHECK_FALSE(is_prime(19561));
    CHECK_FALSE(is_prime(Integer("2305843009213693953")));
}

TEST_CASE("radical") {
    CHECK(radical(72) == 6);
    CHECK(radical(1) == 1);
    CHECK(radical(-1) == 1);
    CHECK(radical(30) == 30);
    CHECK(radical(-8) == 2);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const long a = static_cast<long>(rng() % 5000) + 1;
        const long b = static_cast<long>(rng() % 5000) + 1;
        if (int_gcd(a, b) != 1) continue;
        CHECK(radical(Integer(a) * b) == radical(a) * radical(b));
    }
}

TEST_CASE("p_adic_valuation") {
    CHECK(p_adic_valuation(250, 5) == 3);
    CHECK(p_adic_valuation(250, 2) == 1);
    CHECK(p_adic_valuation(7, 3) == 0);
    CHECK(p_adic_valuation(-8, 2) == 3);
    CHECK_THROWS_AS(p_adic_valuation(10, 4), InvalidInput);
    CHECK_THROWS_AS(p_adic_valuation(10, 1), InvalidInput);
    CHECK_THROWS_AS(p_adic_valuation(0, 5), InvalidInput);

    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        const Integer n = Integer(static_cast<long>(rng() % 1000000) + 1);
        const unsigned long v = p_adic_valuation(n, 3);
        CHECK(mpz_divisible_p(n.get_mpz_t(), int_pow(3, v).get_mpz_t()));
        CHECK_FALSE(mpz_divisible_p(n.get_mpz_t(), int_pow(3, v + 1).get_mpz_t()));
    }
}

TEST_CASE("kth_root_exact") {
    CHECK(kth_root_exact(1000, 3) == Integer(10));
    CHECK(kth_root_exact(128, 7) == Integer(2));
    CHECK(kth_root_exact(100, 3) == std::nullopt);
    CHECK(kth_root_exact(-27, 3) == Integer(-3));
    CHECK(kth_root_exact(-4, 2) == std::nullopt);
    CHECK(kth_root_exact(16, 2) == Integer(4));
    CHECK(kth_root_exact(0, 5) == Integer(0));
    CHECK(kth_root_exact(1, 1) == Integer(1));
    CHECK(kth_root_exact(-5, 1) == Integer(-5));
    CHECK_THROWS_AS(kth_root_exact(8, 0), InvalidInput);

    std::mt19937_64 rng(20240812);
    for (int i = 0; i < 200; ++i) {
        const long r = static_cast<long>(rng() % 4001) - 2000;
        const unsigned long k = rng() % 6 + 1;
        if (k % 2 == 0 && r < 0) continue;
        const Integer n = int_pow(r, k);
        const auto back = kth_root_exact(n, k);
        REQUIRE(back.has_value());
        if (k % 2 == 0)
            CHECK(*back == abs(Integer(r)));
        else
            CHECK(*back == r);
        // off-by-one neighbours are not k-th powers (except tiny cases)
        if (abs(n) > 2 && k > 1) CHECK(kth_root_exact(n + 1, k).has_value() == false);
    }
}

TEST_CASE("is_square") {
    CHECK(is_square(0));
    CHECK(is_square(1));
    CHECK(is_square(484));
    CHECK(is_square(82944));  // 288^2
    CHECK_FALSE(is_square(-4));
    CHECK_FALSE(is_square(82945));

    std::mt19937_64 rng(5150);
    for (int i = 0; i < 500; ++i) {
        const Integer r = Integer(static_cast<long>(rng() % 100000));
        CHECK(is_square(r * r));
    }
}

TEST_CASE("string round trips") {
    CHECK(to_string(reduce(-26, 20)) == "-13/10");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(to_string(Integer(-19561)) == "-19561");

    CHECK(parse_rational("-13/10") == Rational(-13, 10));
    CHECK(parse_rational("9/10") == Rational(9, 10));
    CHECK(parse_rational("+3/4") == Rational(3, 4));
    CHECK(parse_rational("-26/20") == Rational(-13, 10));
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("0") == 0);
    CHECK(parse_rational("3/-6") == Rational(-1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
    CHECK_THROWS_AS(parse_rational("abc"), InvalidInput);
    CHECK_THROWS_AS(parse_rational(""), InvalidInput);
    CHECK_THROWS_AS(parse_rational("1/2/3"), InvalidInput);

    std::mt19937_64 rng(31337);
    for (int i = 0; i < 100; ++i) {
        const Rational q = reduce(static_cast<long>(rng() % 20001) - 10000,
                                  static_cast<long>(rng() % 999) + 1);
        CHECK(parse_rational(to_string(q)) == q);
    }
}
