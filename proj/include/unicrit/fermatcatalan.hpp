#pragma once

// Fermat-Catalan structure of 2-cycles of x^(2k) + c: the sum of k-th powers
// of a cycle's numerators is delta * Z1^(2k-1) with delta in {1, 2}, which
// ties cycle existence to ternary equations x^k + y^k = delta z^(2k-1).

#include <optional>
#include <vector>

#include "unicrit/search.hpp"

namespace unicrit {

struct FCDecomposition {
    unsigned long k = 0;
    Integer X1, X2;
    Integer S;  // X1^k + X2^k = delta * Z1^(2k-1)
    Integer D;  // (X1^k - X2^k) / (X1 - X2)
    int delta = 1;
    Integer Z1;  // sign carried here; |Z1| divides Z
    Integer Z;   // denominator of the parent cycle
    // populated when gcd(S, D) = 2: D = 2^(2k-2) * Z2^(2k-1), gcd(Z1, Z2) = 1
    std::optional<Integer> Z2;
};

// Decompose a 2-cycle certificate with even degree d = 2k.  Throws
// InvalidInput unless cert is a 2-cycle of even degree; throws InternalError
// if any structural conclusion fails (it cannot on a valid certificate).
FCDecomposition decompose_two_cycle(const CycleCertificate& cert);

// gcd(X1^k + X2^k, X1^k - X2^k) for coprime X1, X2; always divides 2
// (asserted).  Returns the actual gcd.
Integer gcd_divides_two(const Integer& X1, const Integer& X2, unsigned long k);

// 2-adic valuation of (X1^k - X2^k)/(X1 - X2) for odd coprime X1 != X2 and
// odd k; lifting-the-exponent forces it to 0 (asserted).
unsigned long lte_two_adic(const Integer& X1, const Integer& X2, unsigned long k);

struct SignatureHit {
    Integer x, y, z;  // x^k + y^k = delta * z^(2k-1), x <= y
    bool trivial = false;  // |x*y| <= 1
};

// All coprime solutions of x^k + y^k = delta * z^(2k-1) with
// |x|, |y|, |z| <= B, reported once per unordered pair (x <= y), sorted.
std::vector<SignatureHit> signature_search(unsigned long k, int delta, long B,
                                           int threads = 1);

struct NonexistenceVerdict {
    unsigned long k = 0;
    bool three_divides = false;            // 3 | 2k - 1
    std::optional<Integer> witness_prime;  // smallest prime >= 5 dividing k
    bool applies = false;                  // both conditions hold
};

// Arithmetic criterion for "x^(2k) + c has no nontrivial rational 2-cycle":
// applies when 3 | 2k - 1 and k has a prime factor >= 5.
NonexistenceVerdict nonexistence_check(unsigned long k);

}  // namespace unicrit
