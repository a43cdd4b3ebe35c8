#pragma once

// Radical-based triple checks and the conditional degree/height bounds used
// by the cycle nonexistence arguments, as double-precision calculators.

#include "unicrit/exactnum.hpp"

namespace unicrit {

struct AbcTriple {
    Integer a, b, c;  // a + b = c, all nonzero, pairwise coprime
};

// Validates the arithmetic invariants; throws InvalidInput otherwise.
AbcTriple validate_triple(const Integer& a, const Integer& b, const Integer& c);

// log max(|a|,|b|,|c|) / log radical(|abc|)
double quality(const AbcTriple& t);

struct ExplicitBoundCheck {
    double lhs = 0;         // max(|a|, |b|, |c|)
    double bound_172 = 0;   // N^1.72
    double bound_1629 = 0;  // 10 * N^1.62991
    double bound_16 = 0;    // 32 * N^1.6
    bool holds = false;     // lhs < min of the three
    double margin() const;  // min bound - lhs
};

// Checks max(|a|,|b|,|c|) < min(N^1.72, 10 N^1.62991, 32 N^1.6) with
// N = radical(|abc|).
ExplicitBoundCheck explicit_bound_holds(const AbcTriple& t);

struct BoundParams {
    double epsilon = 0;  // > 0
    double K = 0;        // > 0
    double base = 0;     // > 1
};

BoundParams make_bound_params(double epsilon, double K, double base);

// log_base(2^(1+eps) * K) + 5 + 4*eps
double degree_bound(const BoundParams& p);
double degree_bound(double epsilon, double K, double base);

// W* = (2^(1+eps) * K)^(1/(d-5-4*eps)); denominators W > W* contradict the
// height bound.  Throws InvalidInput when the exponent is not positive.
double fixedpoint_w_bound(double epsilon, double K, int d);

struct FixedpointMargin {
    double exponent = 0;        // d - 5 - 4*eps
    double lhs = 0;             // W^exponent
    double rhs = 0;             // 2^(1+eps) * K
    bool contradiction = false; // lhs > rhs, i.e. W beyond the threshold
};

FixedpointMargin fixedpoint_margin(double epsilon, double K, int d, double W);

// natural log of |n| for big integers (exact mantissa/exponent split)
double log_abs(const Integer& n);

}  // namespace unicrit
