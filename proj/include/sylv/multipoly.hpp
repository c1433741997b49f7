#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sylv/combinatorics.hpp"
#include "sylv/rational.hpp"
#include "sylv/unipoly.hpp"

namespace sylv {

/// Sparse multivariate polynomial over Rational with named variables.
///
/// Canonical form: variables sorted by name, no zero coefficients, and no
/// variable that appears in every term with exponent zero. Equality is
/// structural equality of the canonical form, so two polynomials built over
/// different ambient variable sets compare equal when they denote the same
/// polynomial. Monomials are ordered lexicographically with the first
/// (smallest-named) variable most significant; the leading term is the last
/// entry of the term map.
class MultiPoly {
  public:
    using Key = std::vector<int>;

    MultiPoly() = default;
    explicit MultiPoly(const Rational& c) {
        if (c != 0) terms_[Key{}] = c;
    }

    static MultiPoly constant(const Rational& c) { return MultiPoly(c); }
    static MultiPoly variable(const std::string& name) { return variable_power(name, 1); }
    static MultiPoly variable_power(const std::string& name, int exp) {
        if (exp < 0) throw argument_error("variable_power: negative exponent");
        if (exp == 0) return MultiPoly(Rational(1));
        MultiPoly p;
        p.vars_ = {name};
        p.terms_[Key{exp}] = 1;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }
    Rational constant_value() const {
        if (!vars_.empty()) throw domain_error("constant_value: polynomial is not constant");
        return terms_.empty() ? Rational(0) : terms_.begin()->second;
    }

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<Key, Rational>& terms() const { return terms_; }

    int degree_in(const std::string& var) const {
        const int idx = var_index(var);
        if (idx < 0) return 0;
        int d = 0;
        for (const auto& [key, c] : terms_) d = std::max(d, key[idx]);
        return d;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [key, c] : r.terms_) c = -c;
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        auto [vars, ta, tb] = aligned(a, b);
        MultiPoly out;
        out.vars_ = std::move(vars);
        out.terms_ = std::move(ta);
        for (auto& [key, c] : tb) out.terms_[key] += c;
        out.normalize();
        return out;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
    MultiPoly& operator+=(const MultiPoly& rhs) { return *this = *this + rhs; }
    MultiPoly& operator-=(const MultiPoly& rhs) { return *this = *this - rhs; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        auto [vars, ta, tb] = aligned(a, b);
        MultiPoly out;
        out.vars_ = std::move(vars);
        const size_t width = out.vars_.size();
        Key key(width);
        for (const auto& [ka, ca] : ta)
            for (const auto& [kb, cb] : tb) {
                for (size_t i = 0; i < width; ++i) key[i] = ka[i] + kb[i];
                out.terms_[key] += ca * cb;
            }
        out.normalize();
        return out;
    }
    friend MultiPoly operator*(const Rational& s, MultiPoly p) {
        if (s == 0) return MultiPoly();
        for (auto& [key, c] : p.terms_) c *= s;
        return p;
    }
    friend MultiPoly operator*(MultiPoly p, const Rational& s) { return s * std::move(p); }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Polynomial in the remaining variables multiplying the monomial
    /// prod var^exp over the assigned variables.
    MultiPoly coefficient_of(const std::map<std::string, int>& assignments) const {
        std::vector<std::pair<int, int>> present; // (var index, required exponent)
        for (const auto& [name, exp] : assignments) {
            if (exp < 0) throw argument_error("coefficient_of: negative exponent");
            const int idx = var_index(name);
            if (idx < 0) {
                if (exp != 0) return MultiPoly();
            } else {
                present.emplace_back(idx, exp);
            }
        }
        MultiPoly out;
        out.vars_ = vars_;
        for (const auto& [key, c] : terms_) {
            bool match = true;
            for (const auto& [idx, exp] : present)
                if (key[idx] != exp) {
                    match = false;
                    break;
                }
            if (!match) continue;
            Key reduced = key;
            for (const auto& [idx, exp] : present) reduced[idx] = 0;
            out.terms_[reduced] += c;
        }
        out.normalize();
        return out;
    }

    /// Substitutes rational values for a subset of the variables.
    MultiPoly substitute(const std::map<std::string, Rational>& values) const {
        std::vector<int> sub_idx;
        std::vector<Rational> sub_val;
        for (const auto& [name, value] : values) {
            const int idx = var_index(name);
            if (idx >= 0) {
                sub_idx.push_back(idx);
                sub_val.push_back(value);
            }
        }
        if (sub_idx.empty()) return *this;
        MultiPoly out;
        out.vars_ = vars_;
        for (const auto& [key, c] : terms_) {
            Rational factor = c;
            Key reduced = key;
            for (size_t t = 0; t < sub_idx.size(); ++t) {
                factor *= rational_pow(sub_val[t], key[sub_idx[t]]);
                reduced[sub_idx[t]] = 0;
            }
            if (factor != 0) out.terms_[reduced] += factor;
        }
        out.normalize();
        return out;
    }

    Rational evaluate(const std::map<std::string, Rational>& values) const {
        const MultiPoly r = substitute(values);
        if (!r.is_constant()) throw argument_error("evaluate: unassigned variables remain");
        return r.constant_value();
    }

    /// Simultaneous renaming of a subset of the variables.
    MultiPoly rename(const std::map<std::string, std::string>& mapping) const {
        std::vector<std::string> new_names = vars_;
        for (size_t i = 0; i < vars_.size(); ++i) {
            auto it = mapping.find(vars_[i]);
            if (it != mapping.end()) new_names[i] = it->second;
        }
        std::vector<std::string> sorted = new_names;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw argument_error("rename: variable name collision");
        MultiPoly out;
        out.vars_ = sorted;
        std::vector<int> remap(vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i)
            remap[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), new_names[i]) - sorted.begin());
        for (const auto& [key, c] : terms_) {
            Key nk(key.size());
            for (size_t i = 0; i < key.size(); ++i) nk[remap[i]] = key[i];
            out.terms_[std::move(nk)] = c;
        }
        out.normalize();
        return out;
    }

    /// (1/order!) d^order / d var^order.
    MultiPoly normalized_derivative(const std::string& var, int order) const {
        if (order < 0) throw argument_error("normalized_derivative: negative order");
        if (order == 0) return *this;
        const int idx = var_index(var);
        if (idx < 0) return MultiPoly();
        MultiPoly out;
        out.vars_ = vars_;
        for (const auto& [key, c] : terms_) {
            if (key[idx] < order) continue;
            Key nk = key;
            nk[idx] -= order;
            out.terms_[std::move(nk)] += c * Rational(binom(key[idx], order));
        }
        out.normalize();
        return out;
    }

    /// Exact quotient f/g; throws divisibility_error when the division leaves
    /// a remainder.
    friend MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g) {
        if (f.is_zero()) return MultiPoly();
        if (g.is_zero()) throw divisibility_error("exact_divide: division by the zero polynomial");
        auto [vars, tf, tg] = aligned(f, g);
        const size_t width = vars.size();
        MultiPoly divisor;
        divisor.vars_ = vars;
        divisor.terms_ = std::move(tg);
        MultiPoly rem;
        rem.vars_ = vars;
        rem.terms_ = std::move(tf);
        MultiPoly quot;
        quot.vars_ = vars;
        const auto& [lg_key, lg_coeff] = *divisor.terms_.rbegin();
        while (!rem.terms_.empty()) {
            const auto& [lr_key, lr_coeff] = *rem.terms_.rbegin();
            Key diff(width);
            for (size_t i = 0; i < width; ++i) {
                diff[i] = lr_key[i] - lg_key[i];
                if (diff[i] < 0) throw divisibility_error("exact_divide: non-exact division");
            }
            const Rational c = lr_coeff / lg_coeff;
            quot.terms_[diff] += c;
            // rem -= (c * X^diff) * divisor
            Key shifted(width);
            for (const auto& [kg, cg] : divisor.terms_) {
                for (size_t i = 0; i < width; ++i) shifted[i] = kg[i] + diff[i];
                auto it = rem.terms_.find(shifted);
                const Rational delta = c * cg;
                if (it == rem.terms_.end()) {
                    if (delta != 0) rem.terms_[shifted] = -delta;
                } else {
                    it->second -= delta;
                    if (it->second == 0) rem.terms_.erase(it);
                }
            }
        }
        quot.normalize();
        return quot;
    }

    UniPoly to_unipoly() const {
        if (vars_.size() > 1) throw argument_error("to_unipoly: more than one variable");
        if (terms_.empty()) return UniPoly();
        std::vector<Rational> coeffs;
        for (const auto& [key, c] : terms_) {
            const int e = key.empty() ? 0 : key[0];
            if (e >= static_cast<int>(coeffs.size())) coeffs.resize(e + 1, Rational(0));
            coeffs[e] = c;
        }
        return UniPoly(std::move(coeffs));
    }

    static MultiPoly from_unipoly(const UniPoly& p, const std::string& var) {
        MultiPoly out;
        if (p.is_zero()) return out;
        out.vars_ = {var};
        for (int e = 0; e < static_cast<int>(p.coeffs().size()); ++e)
            if (p.coeff(e) != 0) out.terms_[Key{e}] = p.coeff(e);
        out.normalize();
        return out;
    }

  private:
    int var_index(const std::string& name) const {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
        if (it == vars_.end() || *it != name) return -1;
        return static_cast<int>(it - vars_.begin());
    }

    // Rewrites both operands over the union of their variable sets.
    static std::tuple<std::vector<std::string>, std::map<Key, Rational>, std::map<Key, Rational>>
    aligned(const MultiPoly& a, const MultiPoly& b) {
        std::vector<std::string> vars;
        std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(), std::back_inserter(vars));
        return {vars, remapped(a, vars), remapped(b, vars)};
    }

    static std::map<Key, Rational> remapped(const MultiPoly& p, const std::vector<std::string>& vars) {
        if (vars == p.vars_) return p.terms_;
        std::vector<int> where(p.vars_.size());
        for (size_t i = 0; i < p.vars_.size(); ++i)
            where[i] = static_cast<int>(std::lower_bound(vars.begin(), vars.end(), p.vars_[i]) - vars.begin());
        std::map<Key, Rational> out;
        for (const auto& [key, c] : p.terms_) {
            Key nk(vars.size(), 0);
            for (size_t i = 0; i < key.size(); ++i) nk[where[i]] = key[i];
            out[std::move(nk)] = c;
        }
        return out;
    }

    // Drops zero terms and variables that no surviving term uses.
    void normalize() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second == 0)
                it = terms_.erase(it);
            else
                ++it;
        }
        if (terms_.empty()) {
            vars_.clear();
            return;
        }
        std::vector<bool> used(vars_.size(), false);
        for (const auto& [key, c] : terms_)
            for (size_t i = 0; i < key.size(); ++i)
                if (key[i] > 0) used[i] = true;
        if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
        std::vector<std::string> kept;
        std::vector<int> keep_idx;
        for (size_t i = 0; i < vars_.size(); ++i)
            if (used[i]) {
                kept.push_back(vars_[i]);
                keep_idx.push_back(static_cast<int>(i));
            }
        std::map<Key, Rational> nt;
        for (const auto& [key, c] : terms_) {
            Key nk(keep_idx.size());
            for (size_t i = 0; i < keep_idx.size(); ++i) nk[i] = key[keep_idx[i]];
            nt[std::move(nk)] = c;
        }
        vars_ = std::move(kept);
        terms_ = std::move(nt);
    }

    std::vector<std::string> vars_; // sorted ascending
    std::map<Key, Rational> terms_;
};

} // namespace sylv
