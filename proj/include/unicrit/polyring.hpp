#pragma once

#include <algorithm>
#include <concepts>
#include <string>
#include <utility>
#include <vector>

#include "unicrit/exactnum.hpp"

namespace unicrit {

// Dense univariate polynomials over an exact coefficient ring.  Nesting
// Poly<Poly<Rational>> gives the bivariate rings Q[c][x], Q[t][x], Q[c][t]
// used by the dynatomic and resultant machinery; the outer index is always
// the outer variable's degree.

template <class C>
class Poly;

// Coefficient-ring hooks.  exact_div must throw InexactDivision whenever the
// quotient does not exist in the ring; that discipline is what makes the
// fraction-free elimination below safe to trust.
template <class C>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& a) { return sgn(a) == 0; }
    static Rational exact_div(const Rational& a, const Rational& b) {
        if (is_zero(b)) throw InvalidInput("exact_div: division by zero");
        return a / b;
    }
};

template <class C>
class Poly {
  public:
    Poly() = default;
    explicit Poly(C constant) {
        if (!RingTraits<C>::is_zero(constant)) coeffs_.push_back(std::move(constant));
    }

    static Poly variable() {
        return from_coeffs({RingTraits<C>::zero(), RingTraits<C>::one()});
    }

    static Poly from_coeffs(std::vector<C> coeffs) {
        Poly p;
        p.coeffs_ = std::move(coeffs);
        p.trim();
        return p;
    }

    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    const C& coeff(int i) const {
        static const C kZero = RingTraits<C>::zero();
        if (i < 0 || i > degree()) return kZero;
        return coeffs_[static_cast<size_t>(i)];
    }

    const C& leading() const {
        if (is_zero()) throw InvalidInput("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    const std::vector<C>& coeffs() const { return coeffs_; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<C> r(std::max(a.coeffs_.size(), b.coeffs_.size()),
                         RingTraits<C>::zero());
        for (size_t i = 0; i < a.coeffs_.size(); ++i) r[i] = r[i] + a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) r[i] = r[i] + b.coeffs_[i];
        return from_coeffs(std::move(r));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    Poly operator-() const {
        std::vector<C> r = coeffs_;
        for (C& x : r) x = RingTraits<C>::zero() - x;
        return from_coeffs(std::move(r));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> r(a.coeffs_.size() + b.coeffs_.size() - 1,
                         RingTraits<C>::zero());
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (RingTraits<C>::is_zero(a.coeffs_[i])) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                r[i + j] = r[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return from_coeffs(std::move(r));
    }

    Poly scaled(const C& s) const {
        std::vector<C> r = coeffs_;
        for (C& x : r) x = x * s;
        return from_coeffs(std::move(r));
    }

    // Horner evaluation; with C = Poly<...> this substitutes a polynomial.
    C evaluate(const C& v) const {
        C acc = RingTraits<C>::zero();
        for (int i = degree(); i >= 0; --i) acc = acc * v + coeffs_[static_cast<size_t>(i)];
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  private:
    void trim() {
        while (!coeffs_.empty() && RingTraits<C>::is_zero(coeffs_.back()))
            coeffs_.pop_back();
    }

    std::vector<C> coeffs_;
};

template <class C>
struct RingTraits<Poly<C>> {
    static Poly<C> zero() { return {}; }
    static Poly<C> one() { return Poly<C>(RingTraits<C>::one()); }
    static bool is_zero(const Poly<C>& a) { return a.is_zero(); }
    static Poly<C> exact_div(const Poly<C>& a, const Poly<C>& b);
};

template <class C>
Poly<C> pow(const Poly<C>& p, unsigned long e) {
    Poly<C> acc = RingTraits<Poly<C>>::one();
    Poly<C> sq = p;
    for (; e; e >>= 1) {
        if (e & 1) acc = acc * sq;
        if (e > 1) sq = sq * sq;
    }
    return acc;
}

template <class C>
Poly<C> compose(const Poly<C>& p, const Poly<C>& q) {
    Poly<C> acc;
    for (int i = p.degree(); i >= 0; --i) acc = acc * q + Poly<C>(p.coeff(i));
    return acc;
}

// Quotient p/q when q divides p exactly.  Exactness is checked coefficient
// by coefficient and again via the final remainder; any failure throws
// InexactDivision because a caller asserted divisibility that is false.
template <class C>
Poly<C> exact_div(const Poly<C>& p, const Poly<C>& q) {
    if (q.is_zero()) throw InvalidInput("exact_div: zero divisor polynomial");
    if (p.is_zero()) return {};
    if (p.degree() < q.degree())
        throw InexactDivision("exact_div: divisor degree exceeds dividend degree");

    std::vector<C> rem = p.coeffs();
    const int dq = q.degree();
    std::vector<C> quo(static_cast<size_t>(p.degree() - dq) + 1, RingTraits<C>::zero());
    for (int k = p.degree() - dq; k >= 0; --k) {
        C& top = rem[static_cast<size_t>(k + dq)];
        if (RingTraits<C>::is_zero(top)) continue;
        C t = RingTraits<C>::exact_div(top, q.leading());
        for (int j = 0; j < dq; ++j)
            rem[static_cast<size_t>(k + j)] =
                rem[static_cast<size_t>(k + j)] - t * q.coeff(j);
        top = RingTraits<C>::zero();
        quo[static_cast<size_t>(k)] = std::move(t);
    }
    for (const C& r : rem)
        if (!RingTraits<C>::is_zero(r))
            throw InexactDivision("exact_div: nonzero remainder");
    return Poly<C>::from_coeffs(std::move(quo));
}

template <class C>
Poly<C> RingTraits<Poly<C>>::exact_div(const Poly<C>& a, const Poly<C>& b) {
    return unicrit::exact_div(a, b);
}

// Res_x(p, q) via Bareiss fraction-free elimination of the Sylvester matrix.
// Works over any exact coefficient ring: every division Bareiss performs is
// by a previous pivot and is exact by the minor identity, so RingTraits
// exact_div never legitimately throws here.  At least one input must be
// nonconstant and both nonzero.
template <class C>
C sylvester_resultant(const Poly<C>& p, const Poly<C>& q) {
    if (p.is_zero() || q.is_zero())
        throw InvalidInput("sylvester_resultant: zero polynomial");
    const int m = p.degree(), n = q.degree();
    if (m == 0 && n == 0)
        throw InvalidInput("sylvester_resultant: both inputs constant");

    const int N = m + n;
    std::vector<std::vector<C>> M(static_cast<size_t>(N),
                                  std::vector<C>(static_cast<size_t>(N),
                                                 RingTraits<C>::zero()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[i][i + j] = p.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[n + i][i + j] = q.coeff(n - j);

    int sign = 1;
    C prev = RingTraits<C>::one();
    for (int k = 0; k + 1 < N; ++k) {
        int piv = -1;
        for (int r = k; r < N; ++r)
            if (!RingTraits<C>::is_zero(M[r][k])) {
                piv = r;
                break;
            }
        if (piv < 0) return RingTraits<C>::zero();
        if (piv != k) {
            std::swap(M[piv], M[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j)
                M[i][j] = RingTraits<C>::exact_div(M[k][k] * M[i][j] - M[i][k] * M[k][j],
                                                   prev);
            M[i][k] = RingTraits<C>::zero();
        }
        prev = M[k][k];
    }
    C det = M[static_cast<size_t>(N - 1)][static_cast<size_t>(N - 1)];
    return sign < 0 ? RingTraits<C>::zero() - det : det;
}

template <class C, class F>
auto map_coeffs(const Poly<C>& p, F&& f) {
    using D = decltype(f(std::declval<const C&>()));
    std::vector<D> out;
    out.reserve(p.coeffs().size());
    for (const C& c : p.coeffs()) out.push_back(f(c));
    return Poly<D>::from_coeffs(std::move(out));
}

// ---- printing ----------------------------------------------------------

inline std::string coeff_to_display(const Rational& q) { return to_string(q); }

namespace detail {
inline bool is_display_one(const std::string& s) { return s == "1"; }
inline bool is_display_minus_one(const std::string& s) { return s == "-1"; }
}  // namespace detail

// Descending-degree rendering: "x^12 + x^9 + 3*c*x^8 + ... + c^3 + 1".
template <class C, class CoeffFormat>
    requires std::invocable<CoeffFormat, const C&>
std::string poly_to_string(const Poly<C>& p, const std::string& var,
                           CoeffFormat&& fmt) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        if (RingTraits<C>::is_zero(p.coeff(i))) continue;
        auto [text, atomic] = fmt(p.coeff(i));
        std::string term;
        if (i == 0) {
            term = atomic ? text : "(" + text + ")";
        } else {
            const std::string xpow = i == 1 ? var : var + "^" + std::to_string(i);
            if (atomic && detail::is_display_one(text))
                term = xpow;
            else if (atomic && detail::is_display_minus_one(text))
                term = "-" + xpow;
            else if (atomic)
                term = text + "*" + xpow;
            else
                term = "(" + text + ")*" + xpow;
        }
        if (out.empty()) {
            out = term;
        } else if (!term.empty() && term.front() == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

inline std::string poly_to_string(const Poly<Rational>& p, const std::string& var) {
    return poly_to_string(p, var, [](const Rational& q) {
        return std::pair<std::string, bool>(to_string(q), true);
    });
}

inline std::string poly_to_string(const Poly<Poly<Rational>>& p,
                                  const std::string& outer,
                                  const std::string& inner) {
    return poly_to_string(p, outer, [&inner](const Poly<Rational>& c) {
        int nonzero = 0;
        for (const Rational& q : c.coeffs())
            if (sgn(q) != 0) ++nonzero;
        return std::pair<std::string, bool>(poly_to_string(c, inner), nonzero <= 1);
    });
}

}  // namespace unicrit
