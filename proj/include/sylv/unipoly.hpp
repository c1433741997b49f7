#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sylv/combinatorics.hpp"
#include "sylv/rational.hpp"

namespace sylv {

/// Dense univariate polynomial over Rational. Coefficients are stored in
/// ascending degree with no trailing zeros; the zero polynomial is the empty
/// coefficient list and its degree is reported as nullopt rather than -1.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(const Rational& c) {
        if (c != 0) coeffs_.push_back(c);
    }
    explicit UniPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

    static UniPoly variable() { return UniPoly(std::vector<Rational>{0, 1}); }
    static UniPoly monomial(int deg, const Rational& c) {
        if (c == 0) return UniPoly();
        std::vector<Rational> v(static_cast<size_t>(deg) + 1, Rational(0));
        v.back() = c;
        return UniPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<int>(coeffs_.size()) - 1;
    }
    /// Degree of a polynomial known to be nonzero.
    int degree_nonzero() const {
        if (coeffs_.empty()) throw domain_error("degree_nonzero: zero polynomial");
        return static_cast<int>(coeffs_.size()) - 1;
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
        return coeffs_[i];
    }
    Rational leading() const {
        if (coeffs_.empty()) throw domain_error("leading: zero polynomial");
        return coeffs_.back();
    }

    Rational evaluate(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    UniPoly& operator+=(const UniPoly& rhs) {
        if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
        for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& rhs) { return *this += -rhs; }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return UniPoly(std::move(out));
    }
    friend UniPoly operator*(const Rational& s, UniPoly p) {
        for (auto& c : p.coeffs_) c *= s;
        p.trim();
        return p;
    }
    friend UniPoly operator*(UniPoly p, const Rational& s) { return s * std::move(p); }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// (1/i!) d^i f / dU^i. The normalization keeps Taylor coefficients and
/// confluent Vandermonde columns denominator-free.
inline UniPoly normalized_derivative(const UniPoly& f, int i) {
    if (i < 0) throw argument_error("normalized_derivative: negative order");
    if (i == 0) return f;
    if (f.is_zero() || f.degree_nonzero() < i) return UniPoly();
    std::vector<Rational> out;
    out.reserve(f.coeffs().size() - i);
    for (int e = i; e < static_cast<int>(f.coeffs().size()); ++e)
        out.push_back(f.coeff(e) * Rational(binom(e, i)));
    return UniPoly(std::move(out));
}

/// Euclidean division: P = quotient * Q + remainder, deg remainder < deg Q.
inline std::pair<UniPoly, UniPoly> euclid_divrem(const UniPoly& p, const UniPoly& q) {
    if (q.is_zero()) throw domain_error("euclid_divrem: division by the zero polynomial");
    UniPoly rem = p;
    UniPoly quot;
    const int dq = q.degree_nonzero();
    const Rational lq = q.leading();
    while (!rem.is_zero() && rem.degree_nonzero() >= dq) {
        const int d = rem.degree_nonzero() - dq;
        const Rational c = rem.leading() / lq;
        const UniPoly t = UniPoly::monomial(d, c);
        quot += t;
        rem -= t * q;
    }
    return {quot, rem};
}

} // namespace sylv
