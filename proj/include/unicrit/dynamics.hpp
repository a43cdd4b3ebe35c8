#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "unicrit/exactnum.hpp"
#include "unicrit/polyring.hpp"

namespace unicrit {

// The unicritical map f_{d,c}(x) = x^d + c acting on rationals.
struct PowerMap {
    int d;
    Rational c;

    PowerMap(int d_, Rational c_) : d(d_), c(std::move(c_)) {
        if (d < 2) throw InvalidInput("PowerMap: degree must be >= 2");
    }
};

Rational eval(const PowerMap& f, const Rational& x);

// If den(c) = Z^d for a (unique, positive) integer Z, every rational
// preperiodic point of f is X/Z in lowest terms with that exact Z; if den(c)
// is not a d-th power there are no rational preperiodic points at all.
std::optional<Integer> forced_denominator(const PowerMap& f);

enum class OrbitStatus { Escaped, Preperiodic };
enum class EscapeReason { None, Radius, Denominator, IterationCap };

struct OrbitReport {
    Rational start;
    OrbitStatus status = OrbitStatus::Escaped;
    int tail_length = 0;   // m: steps before the cycle is entered
    int exact_period = 0;  // n: minimal cycle length
    // Preperiodic: the m tail points followed by the n cycle points, each
    // once.  Escaped: the visited points ending with the one that tripped
    // the escape rule.
    std::vector<Rational> orbit;
    EscapeReason escape_reason = EscapeReason::None;
};

// Iterates until the point leaves the escape radius |c| + 2, acquires a
// denominator a preperiodic point cannot have, or revisits a point.  A hard
// cap of 4x the candidate-set size backstops termination.
OrbitReport orbit_classify(const PowerMap& f, const Rational& x);

// (n, m): exact period and tail length, when x is preperiodic.
std::optional<std::pair<int, int>> preperiodic_type(const PowerMap& f,
                                                   const Rational& x);

using CPoly = Poly<Rational>;  // coefficient polynomials, variable c (or t)
using XPoly = Poly<CPoly>;     // polynomials in x over Q[c]

XPoly power_map_poly(int d);      // x^d + c
XPoly iterate_poly(int d, int n); // n-fold composition f^n(x)

// Product over e | n of (f^e(x) - x)^{mu(n/e)}; its roots are the points of
// exact period n (plus, for some (d,c,n), finitely many degenerate cases).
// Supported for 1 <= n <= 6.
XPoly dynatomic_poly(int d, int n);

// Res_x(Phi_2(x,c), t - (x + f(x))) as a polynomial in t over Q[c]: the
// characteristic polynomial of the trace x + f(x) on 2-cycles.
Poly<CPoly> trace_resultant(int d);

struct TwoCycle {
    Rational c;  // the map the cycle lives on
    Rational y1, y2;
};

struct FixedPair {
    Rational c;
    Rational x1, x2;
};

// For even d: two distinct fixed points x1, x2 of f_{d,c} give the 2-cycle
// {-x1, -x2} of f_{d,c'} with c' = -x1 - x2^d, and conversely.  Both
// directions verify the produced orbit by evaluation before returning.
TwoCycle fixed_pair_to_two_cycle(int d, const Rational& x1, const Rational& x2);
FixedPair two_cycle_to_fixed_pair(int d, const Rational& y1, const Rational& y2);

}  // namespace unicrit
