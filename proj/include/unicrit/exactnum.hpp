#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace unicrit {

// Every value in this project is exact: arbitrary-precision integers and
// canonical reduced fractions.  GMP supplies the representation; the
// number-theoretic predicates on top are ours.
using Integer  = mpz_class;
using Rational = mpq_class;

// A caller violated an operation contract.  The CLI maps this to exit 2.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An identity that should be a theorem failed on concrete data, or an
// internal invariant broke.  The CLI maps this to exit 3.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Exact polynomial/rational division had a nonzero remainder where the
// caller asserted divisibility.
struct InexactDivision : InternalError {
    using InternalError::InternalError;
};

struct PrimePower {
    Integer  prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization of |n|: primes strictly increasing, exponents >= 1,
// empty for n = +-1.
using Factorization = std::vector<PrimePower>;

// num/den in canonical form (gcd 1, positive denominator).  den = 0 is an
// error; the sign lives in the numerator.
Rational reduce(const Integer& num, const Integer& den);

// Trial division below 10^6, then fixed-base Miller-Rabin (proven
// deterministic below 3.3e24, far above anything this project factors),
// with Pollard rho splitting composite cofactors.
bool is_prime(const Integer& n);
Factorization factorize(const Integer& n);

// rad(n) = product of the distinct primes dividing |n|; rad(+-1) = 1.
Integer radical(const Integer& n);

// Largest e with p^e | n.  p must be prime, n nonzero.
unsigned long p_adic_valuation(const Integer& n, const Integer& p);

// The integer r with r^k = n, if one exists.  Even k: n must be >= 0 and
// the nonnegative root is returned.  Integer Newton iteration plus a final
// exact power check; no floating point.
std::optional<Integer> kth_root_exact(const Integer& n, unsigned long k);

// Squareness with a cheap residue filter (mod 64 and mod 63) in front of
// the exact root extraction.
bool is_square(const Integer& n);

Integer  int_pow(const Integer& base, unsigned long e);
Rational rat_pow(const Rational& base, unsigned long e);
Integer  int_gcd(const Integer& a, const Integer& b);
Rational rat_abs(const Rational& q);
Integer  floor_to_integer(const Rational& q);

// "p/q" with canonical sign, plain "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

// Accepts "p", "p/q", optional leading sign on either part.
Rational parse_rational(const std::string& text);
Integer  parse_integer(const std::string& text);

}  // namespace unicrit
