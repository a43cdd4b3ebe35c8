#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "unicrit/search.hpp"

using namespace unicrit;

namespace {

Rational q(const char* s) { return parse_rational(s); }

// Independent 2-cycle oracle: enumerate candidate pairs with explicit
// denominators and test the cycle property by direct rational evaluation.
// No divisibility shortcut, no root extraction.
std::vector<std::tuple<long, long, long>> brute_two_cycles(int d, long W) {
    std::vector<std::tuple<long, long, long>> out;
    for (long Z = 1; Z <= W; ++Z)
        for (long X1 = -W; X1 <= W; ++X1) {
            if (std::gcd(X1, Z) != 1) continue;
            for (long X2 = X1 + 1; X2 <= W; ++X2) {
                if (std::gcd(X2, Z) != 1) continue;
                const Rational x1 = reduce(X1, Z), x2 = reduce(X2, Z);
                const Rational c = x2 - rat_pow(x1, static_cast<unsigned long>(d));
                if (c.get_den() != int_pow(Z, static_cast<unsigned long>(d))) continue;
                if (rat_pow(x2, static_cast<unsigned long>(d)) + c != x1) continue;
                out.emplace_back(Z, X1, X2);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

// Independent fixed-pair oracle: direct rational evaluation over the box.
std::vector<std::tuple<long, long, long>> brute_fixed_pairs(int d, long W) {
    std::vector<std::tuple<long, long, long>> out;
    for (long Z = 1; Z <= W; ++Z)
        for (long X1 = -W; X1 <= W; ++X1) {
            if (std::gcd(X1, Z) != 1) continue;
            for (long X2 = X1 + 1; X2 <= W; ++X2) {
                if (std::gcd(X2, Z) != 1) continue;
                const Rational x1 = reduce(X1, Z), x2 = reduce(X2, Z);
                const Rational c = x1 - rat_pow(x1, static_cast<unsigned long>(d));
                if (rat_pow(x2, static_cast<unsigned long>(d)) + c != x2) continue;
                if (c.get_den() != int_pow(Z, static_cast<unsigned long>(d)) &&
                    !(Z == 1 && c.get_den() == 1))
                    continue;
                out.emplace_back(Z, X1, X2);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("cycle certificates validate and reject") {
    const CycleCertificate good =
        make_cycle_certificate(4, {Integer(-13), Integer(9)}, 10);
    CHECK(good.C == -19561);
    CHECK(good.c == q("-19561/10000"));
    CHECK(good.n == 2);
    CHECK_FALSE(good.trivial());

    const CycleCertificate triv = make_cycle_certificate(8, {Integer(-1), Integer(0)}, 1);
    CHECK(triv.c == -1);
    CHECK(triv.trivial());

    // fixed point as a 1-cycle
    const CycleCertificate fixed = make_cycle_certificate(4, {Integer(0)}, 1);
    CHECK(fixed.c == 0);
    CHECK(fixed.n == 1);

    CHECK_THROWS_AS(make_cycle_certificate(4, {Integer(2), Integer(9)}, 10),
                    InvalidInput);  // 2/10 not reduced
    CHECK_THROWS_AS(make_cycle_certificate(4, {Integer(-13), Integer(9)}, 0),
                    InvalidInput);
    CHECK_THROWS_AS(make_cycle_certificate(4, {Integer(1), Integer(2)}, 1),
                    InvalidInput);  // no such cycle
}

TEST_CASE("preperiodic points") {
    SUBCASE("d=4, c=-1: three affine points plus infinity") {
        const PreperGraph g = preperiodic_points(PowerMap(4, Rational(-1)));
        REQUIRE(g.nodes.size() == 3);
        CHECK(g.p1_count() == 4);
        CHECK(g.max_exact_period() == 2);
        CHECK(g.nodes[0].x == -1);
        CHECK(g.nodes[0].exact_period == 2);
        CHECK(g.nodes[0].tail_length == 0);
        CHECK(g.nodes[1].x == 0);
        CHECK(g.nodes[1].exact_period == 2);
        CHECK(g.nodes[2].x == 1);
        CHECK(g.nodes[2].tail_length == 1);
        CHECK(g.nodes[2].next == 0);
    }
    SUBCASE("denominator not a d-th power: only infinity") {
        const PreperGraph g = preperiodic_points(PowerMap(4, q("1/3")));
        CHECK(g.nodes.empty());
        CHECK(g.p1_count() == 1);
        CHECK(g.max_exact_period() == 1);
    }
    SUBCASE("the showcase map keeps its 2-cycle") {
        const PreperGraph g = preperiodic_points(PowerMap(4, q("-19561/10000")));
        bool a = false, b = false;
        for (const auto& n : g.nodes) {
            if (n.x == q("-13/10")) a = n.exact_period == 2 && n.tail_length == 0;
            if (n.x == q("9/10")) b = n.exact_period == 2 && n.tail_length == 0;
        }
        CHECK(a);
        CHECK(b);
        CHECK(g.max_exact_period() == 2);
    }
    SUBCASE("closure: the image of every node is a node") {
        for (const char* cs : {"-1", "0", "-19561/10000", "-29/16", "1/16"}) {
            for (int d : {2, 4}) {
                const PreperGraph g = preperiodic_points(PowerMap(d, q(cs)));
                std::set<Rational> pts;
                for (const auto& n : g.nodes) pts.insert(n.x);
                for (const auto& n : g.nodes) CHECK(pts.count(n.next) == 1);
            }
        }
    }
}

TEST_CASE("two-cycle search") {
    SUBCASE("finds the showcase and trivial certificates at W=13") {
        const auto certs = two_cycle_search(4, 13);
        REQUIRE(certs.size() == 2);
        CHECK(certs[0].Z == 1);
        CHECK(certs[0].X == std::vector<Integer>{Integer(-1), Integer(0)});
        CHECK(certs[0].c == -1);
        CHECK(certs[0].trivial());
        CHECK(certs[1].Z == 10);
        CHECK(certs[1].X == std::vector<Integer>{Integer(-13), Integer(9)});
        CHECK(certs[1].c == q("-19561/10000"));
    }
    SUBCASE("agrees with the direct-evaluation oracle") {
        for (int d : {4, 6}) {
            for (long W : {5L, 9L, 13L}) {
                const auto certs = two_cycle_search(d, W);
                std::vector<std::tuple<long, long, long>> got;
                for (const auto& c : certs)
                    got.emplace_back(c.Z.get_si(), c.X[0].get_si(), c.X[1].get_si());
                std::sort(got.begin(), got.end());
                CHECK(got == brute_two_cycles(d, W));
            }
        }
    }
    SUBCASE("d=6 within W=100: only the trivial cycle") {
        const auto certs = two_cycle_search(6, 100);
        REQUIRE(certs.size() == 1);
        CHECK(certs[0].c == -1);
    }
    SUBCASE("partitioned execution is independent of thread count") {
        const auto one = two_cycle_search(4, 60, 1);
        const auto many = two_cycle_search(4, 60, 7);
        REQUIRE(one.size() == many.size());
        for (size_t i = 0; i < one.size(); ++i) {
            CHECK(one[i].X == many[i].X);
            CHECK(one[i].Z == many[i].Z);
            CHECK(one[i].c == many[i].c);
        }
    }
    SUBCASE("input validation") {
        CHECK_THROWS_AS(two_cycle_search(3, 10), InvalidInput);
        CHECK_THROWS_AS(two_cycle_search(4, 0), InvalidInput);
        CHECK_THROWS_AS(two_cycle_search(4, 10, 0), InvalidInput);
    }
}

TEST_CASE("fixed point search") {
    SUBCASE("d=4, W=50: the c=0 pair and the pair mirroring the showcase cycle") {
        const auto hits = fixed_point_search(4, 50);
        REQUIRE(hits.size() == 2);
        CHECK(hits[0].X1 == 0);
        CHECK(hits[0].X2 == 1);
        CHECK(hits[0].Z == 1);
        CHECK(hits[0].c == 0);
        CHECK(hits[1].X1 == -9);
        CHECK(hits[1].X2 == 13);
        CHECK(hits[1].Z == 10);
        CHECK(hits[1].c == q("-15561/10000"));
    }
    SUBCASE("agrees with the direct-evaluation oracle") {
        for (int d : {3, 4}) {
            for (long W : {8L, 14L}) {
                const auto hits = fixed_point_search(d, W);
                std::vector<std::tuple<long, long, long>> got;
                for (const auto& h : hits)
                    got.emplace_back(h.Z.get_si(), h.X1.get_si(), h.X2.get_si());
                std::sort(got.begin(), got.end());
                CHECK(got == brute_fixed_pairs(d, W));
            }
        }
    }
    SUBCASE("even degree: fixed pairs are negated 2-cycles") {
        const auto pairs = fixed_point_search(4, 50);
        const auto cycles = two_cycle_search(4, 50);
        REQUIRE(pairs.size() == cycles.size());
        for (const auto& cert : cycles) {
            // cycle points (X1/Z, X2/Z) <-> fixed points (-X1/Z, -X2/Z)
            Integer a = -cert.X[0], b = -cert.X[1];
            if (a > b) std::swap(a, b);
            bool found = false;
            for (const auto& h : pairs)
                found = found || (h.X1 == a && h.X2 == b && h.Z == cert.Z);
            CHECK(found);
        }
    }
    SUBCASE("d=3, W=20 contains the integer pairs at c=0") {
        const auto hits = fixed_point_search(3, 20);
        auto has = [&](long a, long b) {
            for (const auto& h : hits)
                if (h.X1 == a && h.X2 == b && h.Z == 1 && h.c == 0) return true;
            return false;
        };
        CHECK(has(-1, 0));
        CHECK(has(0, 1));
        CHECK(has(-1, 1));
    }
    SUBCASE("d=8, W=1300: exactly the c=0 pair") {
        const auto hits = fixed_point_search(8, 1300, 4);
        REQUIRE(hits.size() == 1);
        CHECK(hits[0].X1 == 0);
        CHECK(hits[0].X2 == 1);
        CHECK(hits[0].Z == 1);
        CHECK(hits[0].c == 0);
    }
}

TEST_CASE("tail-one-to-fixed-point search") {
    SUBCASE("d=8, B=3: only the degenerate origin") {
        const auto hits = type12_search(8, 3);
        REQUIRE(hits.size() == 1);
        CHECK(hits[0].X0 == 0);
        CHECK(hits[0].R == 0);
        CHECK(hits[0].Z == 1);
        CHECK(hits[0].degenerate);
    }
    SUBCASE("even d, B=2: only the degenerate origin") {
        for (int d : {4, 6}) {
            const auto hits = type12_search(d, 2);
            REQUIRE(hits.size() == 1);
            CHECK(hits[0].X0 == 0);
            CHECK(hits[0].R == 0);
            CHECK(hits[0].degenerate);
        }
    }
    SUBCASE("odd d admits the antisymmetric solutions") {
        // X0^d - R^d = 2*X0*Z^(d-1) at (X0, R, Z) = (s, -s, 1), s = +-1, d odd
        for (int d : {3, 5}) {
            const auto hits = type12_search(d, 2);
            REQUIRE(hits.size() == 3);
            CHECK(hits[0].X0 == -1);
            CHECK(hits[0].R == 1);
            CHECK_FALSE(hits[0].degenerate);
            CHECK(hits[1].X0 == 0);
            CHECK(hits[1].R == 0);
            CHECK(hits[1].degenerate);
            CHECK(hits[2].X0 == 1);
            CHECK(hits[2].R == -1);
            CHECK_FALSE(hits[2].degenerate);
        }
    }
}

TEST_CASE("sweep") {
    const auto rows = sweep({3}, 2, 8);
    // Z=1: C in [-8, 8]; Z=2: odd C in [-8, 8] -> 17 + 8 = 25 rows
    CHECK(rows.size() == 25);
    bool saw_zero = false;
    for (const auto& row : rows) {
        CHECK(row.d == 3);
        CHECK(row.p1_count == row.affine_count + 1);
        if (row.c == 0) {
            saw_zero = true;
            CHECK(row.affine_count == 3);  // -1, 0, 1 all fixed
            CHECK(row.max_exact_period == 1);
        }
    }
    CHECK(saw_zero);

    const auto rows2 = sweep({4}, 1, 1);
    for (const auto& row : rows2) {
        if (row.c == -1) CHECK(row.max_exact_period == 2);
        if (row.c == 0) CHECK(row.affine_count == 3);  // 0, 1 fixed; -1 tails
        if (row.c == 1) CHECK(row.affine_count == 0);
    }

    // thread independence
    const auto a = sweep({3, 4}, 2, 6, 1);
    const auto b = sweep({3, 4}, 2, 6, 5);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].c == b[i].c);
        CHECK(a[i].max_exact_period == b[i].max_exact_period);
        CHECK(a[i].p1_count == b[i].p1_count);
    }
}

TEST_CASE("certificate-system clause check") {
    const auto good = system_check(9, -13, 9, 10, 4);
    CHECK(good.ok());
    CHECK(good.diagnosis() == "all clauses hold");

    const auto trivial = system_check(0, -1, 0, 1, 8);
    CHECK_FALSE(trivial.ok());
    CHECK(trivial.eq_holds);
    CHECK(trivial.coprime);
    CHECK_FALSE(trivial.nontrivial);
    CHECK(trivial.diagnosis() == "failed: size>1");

    const auto bad = system_check(1, 2, 3, 1, 4);
    CHECK_FALSE(bad.ok());
    CHECK_FALSE(bad.eq_holds);
}

TEST_CASE("extracting 2-cycles from a graph") {
    const PreperGraph g = preperiodic_points(PowerMap(4, q("-19561/10000")));
    const auto certs = extract_two_cycles(g);
    REQUIRE(certs.size() == 1);
    CHECK(certs[0].X == std::vector<Integer>{Integer(-13), Integer(9)});
    CHECK(certs[0].Z == 10);

    const PreperGraph g2 = preperiodic_points(PowerMap(6, Rational(-1)));
    const auto certs2 = extract_two_cycles(g2);
    REQUIRE(certs2.size() == 1);
    CHECK(certs2[0].X == std::vector<Integer>{Integer(-1), Integer(0)});

    const PreperGraph g3 = preperiodic_points(PowerMap(4, Rational(0)));
    CHECK(extract_two_cycles(g3).empty());
}
