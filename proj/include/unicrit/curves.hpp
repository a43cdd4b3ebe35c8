#pragma once

// Bounded rational-point enumeration on the two auxiliary curves
// y^2 = -t^4 - 2t and y^2 = x^5 + 81, plus the quartic 2-cycle family
// parametrized by the first curve.

#include <vector>

#include "unicrit/dynamics.hpp"

namespace unicrit {

struct QuarticPoint {
    Rational t, y;  // y^2 = -t^4 - 2t
};

// All curve points with t = P/Q reduced, |P| <= bound, 1 <= Q <= bound;
// both y signs reported, sorted by (t, y).
std::vector<QuarticPoint> quartic_points(long bound);

struct WeightedPoint {
    Integer X, Y;  // Y^2 = X^5 + 81 Z^10; affine x = X/Z^2, y = Y/Z^5
    Integer Z;     // positive, gcd(X, Z) = 1
};

// All weighted points with |X| <= bound^2, 1 <= Z <= bound; both Y signs
// reported, sorted by (Z, X, Y).
std::vector<WeightedPoint> hyperelliptic_points(long bound, int threads = 1);

struct SieveTable {
    unsigned long p = 0;
    std::vector<char> classes;  // p*p entries, row X mod p, column Z mod p

    bool admissible(const Integer& X, const Integer& Z) const;
    double density() const;  // admissible fraction
};

// Residue classes (X, Z) mod p for which X^5 + 81 Z^10 is a square mod p;
// sound: a global point is admissible at every prime.  p must be a prime
// <= 97.
SieveTable local_sieve(unsigned long p);

struct FamilyPoint {
    Rational c, x1, x2;  // {x1, x2} is a 2-cycle of x^4 + c
};

// The quartic 2-cycle attached to a curve point (t, y) with t != 0:
// c = (t^6 + 4t^3 - 1)/(4t^2), x_{1,2} = (t^2 +- y)/(2t).  Verified by
// evaluation before returning.
FamilyPoint family_generator(const Rational& t, const Rational& y);

}  // namespace unicrit
