#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <tuple>

#include "unicrit/fermatcatalan.hpp"

using namespace unicrit;

namespace {

// Independent oracle: test the ternary equation directly over the full box.
std::vector<std::tuple<long, long, long>> brute_signature(unsigned long k, int delta,
                                                          long B) {
    std::vector<std::tuple<long, long, long>> out;
    for (long x = -B; x <= B; ++x)
        for (long y = x; y <= B; ++y) {
            if (std::gcd(x, y) != 1) continue;
            for (long z = -B; z <= B; ++z) {
                if (int_pow(Integer(x), k) + int_pow(Integer(y), k) !=
                    delta * int_pow(Integer(z), 2 * k - 1))
                    continue;
                out.emplace_back(x, y, z);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("decomposition of the showcase certificate") {
    const auto cert = make_cycle_certificate(4, {Integer(-13), Integer(9)}, 10);
    const auto fc = decompose_two_cycle(cert);
    CHECK(fc.k == 2);
    CHECK(fc.S == 250);
    CHECK(fc.D == -4);
    CHECK(fc.S * fc.D == -1000);  // = -Z^(2k-1)
    CHECK(fc.delta == 2);
    CHECK(fc.Z1 == 5);
    REQUIRE(fc.Z2.has_value());
    CHECK(*fc.Z2 == -1);  // D = 2^2 * (-1)^3
    CHECK(fc.Z == 10);
}

TEST_CASE("decomposition of trivial certificates") {
    SUBCASE("k even") {
        const auto fc =
            decompose_two_cycle(make_cycle_certificate(4, {Integer(-1), Integer(0)}, 1));
        CHECK(fc.S == 1);
        CHECK(fc.delta == 1);
        CHECK(fc.Z1 == 1);
        CHECK_FALSE(fc.Z2.has_value());
    }
    SUBCASE("k odd: Z1 carries the sign") {
        const auto fc =
            decompose_two_cycle(make_cycle_certificate(6, {Integer(-1), Integer(0)}, 1));
        CHECK(fc.S == -1);
        CHECK(fc.delta == 1);
        CHECK(fc.Z1 == -1);
    }
    SUBCASE("rejects non-2-cycles and odd degree") {
        CHECK_THROWS_AS(
            decompose_two_cycle(make_cycle_certificate(4, {Integer(0)}, 1)),
            InvalidInput);
        CHECK_THROWS_AS(
            decompose_two_cycle(make_cycle_certificate(3, {Integer(-1), Integer(0)}, 1)),
            InvalidInput);
    }
}

TEST_CASE("every searched certificate decomposes") {
    for (int d : {4, 6, 8, 10}) {
        const long W = d == 4 ? 60 : 30;
        for (const auto& cert : two_cycle_search(d, W)) {
            const auto fc = decompose_two_cycle(cert);
            CHECK((fc.delta == 1 || fc.delta == 2));
            if (fc.k % 2 == 1) CHECK(fc.delta == 1);
            CHECK(mpz_divisible_p(fc.Z.get_mpz_t(), Integer(abs(fc.Z1)).get_mpz_t()));
            CHECK(fc.S * fc.D == -int_pow(fc.Z, 2 * fc.k - 1));
            CHECK(fc.S == fc.delta * int_pow(fc.Z1, 2 * fc.k - 1));
        }
    }
}

TEST_CASE("gcd of sum and difference of k-th powers") {
    CHECK(gcd_divides_two(-13, 9, 2) == 2);  // gcd(250, 88)
    CHECK(gcd_divides_two(3, 1, 3) == 2);    // gcd(28, 26)
    CHECK(gcd_divides_two(2, 1, 2) == 1);    // gcd(5, 3)
    CHECK_THROWS_AS(gcd_divides_two(6, 9, 2), InvalidInput);

    std::mt19937 rng(20260823);
    std::uniform_int_distribution<long> pick(-500, 500);
    std::uniform_int_distribution<unsigned long> pick_k(1, 7);
    int done = 0;
    while (done < 1000) {
        const long a = pick(rng), b = pick(rng);
        if (std::gcd(a, b) != 1) continue;
        const Integer g = gcd_divides_two(a, b, pick_k(rng));
        CHECK((g == 1 || g == 2));
        ++done;
    }
}

TEST_CASE("lifting the exponent: the power quotient is odd") {
    CHECK(lte_two_adic(3, 1, 3) == 0);   // D = 13
    CHECK(lte_two_adic(5, 3, 3) == 0);   // D = 49
    CHECK(lte_two_adic(7, -1, 5) == 0);  // D = 2101

    CHECK_THROWS_AS(lte_two_adic(2, 1, 3), InvalidInput);   // even X1
    CHECK_THROWS_AS(lte_two_adic(3, 1, 2), InvalidInput);   // even k
    CHECK_THROWS_AS(lte_two_adic(3, 3, 3), InvalidInput);   // equal (and not coprime)
    CHECK_THROWS_AS(lte_two_adic(1, 1, 3), InvalidInput);   // equal

    std::mt19937 rng(7);
    std::uniform_int_distribution<long> pick(-200, 200);
    int done = 0;
    while (done < 200) {
        long a = 2 * pick(rng) + 1, b = 2 * pick(rng) + 1;
        if (a == b || std::gcd(a, b) != 1) continue;
        for (unsigned long k : {3ul, 5ul, 7ul}) CHECK(lte_two_adic(a, b, k) == 0);
        ++done;
    }
}

TEST_CASE("signature search") {
    SUBCASE("k=2, delta=2 box 15 contains the showcase solution") {
        const auto hits = signature_search(2, 2, 15);
        bool found = false;
        for (const auto& h : hits)
            if (h.x == -13 && h.y == 9 && h.z == 5) found = !h.trivial;
        CHECK(found);
    }
    SUBCASE("matches the cubic-box oracle") {
        for (unsigned long k : {2ul, 3ul}) {
            for (int delta : {1, 2}) {
                const auto hits = signature_search(k, delta, 12);
                std::vector<std::tuple<long, long, long>> got;
                for (const auto& h : hits)
                    got.emplace_back(h.x.get_si(), h.y.get_si(), h.z.get_si());
                std::sort(got.begin(), got.end());
                CHECK(got == brute_signature(k, delta, 12));
            }
        }
    }
    SUBCASE("k=3, delta=1, box 50: only trivial solutions") {
        for (const auto& h : signature_search(3, 1, 50)) CHECK(h.trivial);
    }
    SUBCASE("k=5, delta=1, box 30: only trivial solutions") {
        for (const auto& h : signature_search(5, 1, 30)) CHECK(h.trivial);
    }
    SUBCASE("thread count does not change the result") {
        const auto a = signature_search(2, 2, 25, 1);
        const auto b = signature_search(2, 2, 25, 6);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].x == b[i].x);
            CHECK(a[i].y == b[i].y);
            CHECK(a[i].z == b[i].z);
        }
    }
    SUBCASE("input validation") {
        CHECK_THROWS_AS(signature_search(1, 1, 10), InvalidInput);
        CHECK_THROWS_AS(signature_search(2, 3, 10), InvalidInput);
        CHECK_THROWS_AS(signature_search(2, 1, 0), InvalidInput);
    }
}

TEST_CASE("nonexistence criterion") {
    const auto v5 = nonexistence_check(5);
    CHECK(v5.applies);
    CHECK(v5.three_divides);  // 2k-1 = 9
    REQUIRE(v5.witness_prime.has_value());
    CHECK(*v5.witness_prime == 5);

    const auto v2 = nonexistence_check(2);
    CHECK_FALSE(v2.applies);
    CHECK(v2.three_divides);  // 3 | 3, but k = 2 has no prime factor >= 5
    CHECK_FALSE(v2.witness_prime.has_value());

    const auto v35 = nonexistence_check(35);
    CHECK(v35.applies);  // 2k-1 = 69 = 3*23
    CHECK(*v35.witness_prime == 5);

    const auto v14 = nonexistence_check(14);
    CHECK(v14.applies);  // 2k-1 = 27; p = 7
    CHECK(*v14.witness_prime == 7);

    const auto v3 = nonexistence_check(3);
    CHECK_FALSE(v3.applies);  // 2k-1 = 5 not divisible by 3

    CHECK_THROWS_AS(nonexistence_check(0), InvalidInput);
}

TEST_CASE("criterion-applying degree has only trivial cycles in the box") {
    REQUIRE(nonexistence_check(5).applies);
    const auto certs = two_cycle_search(10, 200, 4);
    REQUIRE(certs.size() == 1);
    CHECK(certs[0].c == -1);
    CHECK(certs[0].trivial());
}
