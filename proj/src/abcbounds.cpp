#include "unicrit/abcbounds.hpp"

#include <algorithm>
#include <cmath>

namespace unicrit {

double log_abs(const Integer& n) {
    if (n == 0) throw InvalidInput("log_abs: zero has no logarithm");
    signed long e = 0;
    const double m = mpz_get_d_2exp(&e, n.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(e) * M_LN2;
}

AbcTriple validate_triple(const Integer& a, const Integer& b, const Integer& c) {
    if (a == 0 || b == 0 || c == 0)
        throw InvalidInput("abc triple: entries must be nonzero");
    if (a + b != c) throw InvalidInput("abc triple: a + b != c");
    if (gcd(a, b) != 1 || gcd(b, c) != 1 || gcd(a, c) != 1)
        throw InvalidInput("abc triple: entries must be pairwise coprime");
    return {a, b, c};
}

double quality(const AbcTriple& t) {
    const Integer mx = std::max({Integer(abs(t.a)), Integer(abs(t.b)), Integer(abs(t.c))});
    const Integer N = radical(Integer(abs(t.a * t.b * t.c)));
    return log_abs(mx) / log_abs(N);
}

double ExplicitBoundCheck::margin() const {
    return std::min({bound_172, bound_1629, bound_16}) - lhs;
}

ExplicitBoundCheck explicit_bound_holds(const AbcTriple& t) {
    const Integer mx = std::max({Integer(abs(t.a)), Integer(abs(t.b)), Integer(abs(t.c))});
    const double logN = log_abs(radical(Integer(abs(t.a * t.b * t.c))));
    ExplicitBoundCheck r;
    r.lhs = mx.get_d();  // exact below 2^53, truncated above
    r.bound_172 = std::exp(1.72 * logN);
    r.bound_1629 = 10.0 * std::exp(1.62991 * logN);
    r.bound_16 = 32.0 * std::exp(1.6 * logN);
    r.holds = r.lhs < std::min({r.bound_172, r.bound_1629, r.bound_16});
    return r;
}

BoundParams make_bound_params(double epsilon, double K, double base) {
    if (!(epsilon > 0)) throw InvalidInput("bound params: epsilon must be > 0");
    if (!(K > 0)) throw InvalidInput("bound params: K must be > 0");
    if (!(base > 1)) throw InvalidInput("bound params: base must be > 1");
    return {epsilon, K, base};
}

double degree_bound(const BoundParams& p) {
    return ((1.0 + p.epsilon) * M_LN2 + std::log(p.K)) / std::log(p.base) + 5.0 +
           4.0 * p.epsilon;
}

double degree_bound(double epsilon, double K, double base) {
    return degree_bound(make_bound_params(epsilon, K, base));
}

double fixedpoint_w_bound(double epsilon, double K, int d) {
    if (!(epsilon > 0)) throw InvalidInput("fixedpoint bound: epsilon must be > 0");
    if (!(K > 0)) throw InvalidInput("fixedpoint bound: K must be > 0");
    const double expo = static_cast<double>(d) - 5.0 - 4.0 * epsilon;
    if (!(expo > 0))
        throw InvalidInput("fixedpoint bound: exponent d - 5 - 4*eps must be positive");
    return std::pow(std::exp2(1.0 + epsilon) * K, 1.0 / expo);
}

FixedpointMargin fixedpoint_margin(double epsilon, double K, int d, double W) {
    if (!(epsilon > 0)) throw InvalidInput("fixedpoint margin: epsilon must be > 0");
    if (!(K > 0)) throw InvalidInput("fixedpoint margin: K must be > 0");
    if (!(W > 0)) throw InvalidInput("fixedpoint margin: W must be > 0");
    FixedpointMargin m;
    m.exponent = static_cast<double>(d) - 5.0 - 4.0 * epsilon;
    m.lhs = std::pow(W, m.exponent);
    m.rhs = std::exp2(1.0 + epsilon) * K;
    m.contradiction = m.lhs > m.rhs;
    return m;
}

}  // namespace unicrit
