#pragma once

#include <string>
#include <vector>

#include "unicrit/dynamics.hpp"
#include "unicrit/exactnum.hpp"

namespace unicrit {

// A verified rational cycle of f_{d,c}: points X[i]/Z in lowest terms,
// f(X[i]/Z) = X[i+1]/Z cyclically, exact period n = X.size(), and
// c = C/Z^d in lowest terms.  Construction re-verifies everything.
struct CycleCertificate {
    int d = 0;
    int n = 0;
    Integer Z;
    std::vector<Integer> X;
    Integer C;
    Rational c;

    bool trivial() const { return c == 0 || c == -1; }
};

CycleCertificate make_cycle_certificate(int d, const std::vector<Integer>& X,
                                        const Integer& Z);
void validate(const CycleCertificate& cert);

struct PreperNode {
    Rational x;
    int exact_period = 0;  // n of the cycle this orbit falls into
    int tail_length = 0;   // m: 0 iff x is itself periodic
    Rational next;         // f(x)
};

// All rational preperiodic points of one map.  The point at infinity is a
// fixed point of every f_{d,c}; it is counted but kept out of the affine
// node list.
struct PreperGraph {
    int d = 0;
    Rational c;
    std::vector<PreperNode> nodes;  // sorted by x

    size_t p1_count() const { return nodes.size() + 1; }  // + infinity
    int max_exact_period() const;                         // 1 when only infinity
};

PreperGraph preperiodic_points(const PowerMap& f);

// Complete search for rational 2-cycles of x^d + c (even d) with
// max(|X1|, |X2|, Z) <= W.  Output sorted by (Z, X1, X2), X1 < X2.
std::vector<CycleCertificate> two_cycle_search(int d, long W, int threads = 1);

struct FixedPairHit {
    Integer X1, X2, Z;
    Rational c;
};

// Complete search for pairs of distinct rational fixed points X1/Z, X2/Z of
// a common x^d + c with max(|X1|, |X2|, Z) <= W.  Sorted, X1 < X2.
std::vector<FixedPairHit> fixed_point_search(int d, long W, int threads = 1);

struct Type12Hit {
    Integer X0, R, Z;
    bool degenerate = false;  // X0 * R = 0
};

// Integer solutions of X0^d - R^d = 2 X0 Z^(d-1) with gcd(X0,Z) =
// gcd(R,Z) = 1 and |X0|, |R|, Z <= B: the certificate equation for a point
// whose tail of length 1 lands on a fixed point.
std::vector<Type12Hit> type12_search(int d, long B);

struct SweepRow {
    int d = 0;
    Integer C, Z;  // c = C / Z^d
    Rational c;
    int max_exact_period = 0;
    size_t affine_count = 0;
    size_t p1_count = 0;
};

// preperiodic_points over every reduced c = C/Z^d with Z <= z_max and
// |C| <= c_height (Z = 1 giving the integer sweep), for each listed degree.
std::vector<SweepRow> sweep(const std::vector<int>& degrees, long z_max,
                            long c_height, int threads = 1);

struct SystemCheckResult {
    bool eq_holds = false;      // X2^d - X1^d = (X3 - X2) Z^(d-1)
    bool eq_nonzero = false;    // both sides nonzero
    bool coprime = false;       // gcd(X1, X2) = 1
    bool max_is_x2 = false;     // max(|X1|,|X2|,|X3|) = |X2|
    bool nontrivial = false;    // max(|X2|, |Z|) > 1
    bool ok() const { return eq_holds && eq_nonzero && coprime && max_is_x2 && nontrivial; }
    std::string diagnosis() const;  // names of the failed clauses
};

SystemCheckResult system_check(const Integer& X1, const Integer& X2,
                               const Integer& X3, const Integer& Z, int d);

// The verified 2-cycles contained in a preperiodic-point graph.
std::vector<CycleCertificate> extract_two_cycles(const PreperGraph& g);

}  // namespace unicrit
