#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sylv/multipoly.hpp"
#include "sylv/roots.hpp"
#include "sylv/unipoly.hpp"

namespace sylv {

/// Canonical text form: "num" when the denominator is 1, otherwise "num/den".
inline std::string format_rational(const Rational& q) {
    const Integer den = denominator(q);
    std::string s = numerator(q).str();
    if (den != 1) {
        s += '/';
        s += den.str();
    }
    return s;
}

namespace detail {

inline std::string_view trimmed(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

inline Integer parse_integer(std::string_view s, const char* what) {
    if (s.empty()) throw argument_error(std::string(what) + ": empty number");
    size_t i = 0;
    const bool neg = s[0] == '-';
    if (neg) i = 1;
    if (i == s.size()) throw argument_error(std::string(what) + ": bad number '" + std::string(s) + "'");
    Integer v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw argument_error(std::string(what) + ": bad number '" + std::string(s) + "'");
        v = v * 10 + (s[i] - '0');
    }
    return neg ? Integer(-v) : v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

} // namespace detail

/// Parses "num" or "num/den"; the denominator must be a positive integer.
inline Rational parse_rational(std::string_view text) {
    const std::string_view s = detail::trimmed(text);
    const size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(detail::parse_integer(s, "rational"));
    const Integer num = detail::parse_integer(s.substr(0, slash), "rational");
    const std::string_view den_text = detail::trimmed(s.substr(slash + 1));
    if (!den_text.empty() && den_text[0] == '-') throw argument_error("rational: denominator must be positive");
    const Integer den = detail::parse_integer(den_text, "rational");
    if (den == 0) throw argument_error("rational: zero denominator");
    return Rational(num) / Rational(den);
}

inline std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    for (const auto& tok : detail::split(text, ',')) out.push_back(parse_rational(tok));
    return out;
}

/// Root spec "r^m,r^m,...": r an integer or num/den rational, m >= 1 an
/// integer multiplicity, omitted for 1. Roots must be pairwise distinct.
inline RootMultiset parse_root_spec(std::string_view text) {
    std::vector<RootGroup> groups;
    const std::string_view body = detail::trimmed(text);
    if (body.empty()) return RootMultiset();
    for (const auto& tok : detail::split(body, ',')) {
        const std::string_view t = detail::trimmed(tok);
        const size_t caret = t.find('^');
        RootGroup g;
        if (caret == std::string_view::npos) {
            g.root = parse_rational(t);
            g.multiplicity = 1;
        } else {
            g.root = parse_rational(t.substr(0, caret));
            const Integer m = detail::parse_integer(detail::trimmed(t.substr(caret + 1)), "multiplicity");
            if (m < 1 || m > 64) throw argument_error("root spec: multiplicity out of range");
            g.multiplicity = static_cast<int>(m);
        }
        groups.push_back(std::move(g));
    }
    return RootMultiset(std::move(groups));
}

/// Ascending coefficient list "c0,c1,...": trailing zeros are rejected so the
/// list is in canonical form; the empty list would denote the zero polynomial
/// and is rejected at the CLI boundary.
inline UniPoly parse_coeff_list(std::string_view text) {
    const std::vector<Rational> coeffs = parse_rational_list(text);
    if (coeffs.empty() || coeffs.back() == 0)
        throw argument_error("coefficient list: last (leading) coefficient must be nonzero");
    return UniPoly(coeffs);
}

namespace detail {

inline void append_term(std::string& out, bool first, const Rational& coeff, const std::string& monomial) {
    const bool negative = coeff < 0;
    if (first) {
        if (negative) out += '-';
    } else {
        out += negative ? " - " : " + ";
    }
    const Rational mag = negative ? Rational(-coeff) : coeff;
    if (monomial.empty()) {
        out += format_rational(mag);
    } else {
        if (mag != 1) out += format_rational(mag);
        out += monomial;
    }
}

} // namespace detail

/// Descending-degree text with explicit signs: "-U + 3", "3U - 1", "2".
inline std::string render_unipoly(const UniPoly& p, const std::string& var = "U") {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int e = p.degree_nonzero(); e >= 0; --e) {
        const Rational c = p.coeff(e);
        if (c == 0) continue;
        std::string mono;
        if (e == 1)
            mono = var;
        else if (e > 1)
            mono = var + "^" + std::to_string(e);
        detail::append_term(out, first, c, mono);
        first = false;
    }
    return out;
}

/// Multivariate text, leading monomial first; variable factors joined by '*'.
inline std::string render_multipoly(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    const auto& vars = p.variables();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        std::string mono;
        for (size_t v = 0; v < vars.size(); ++v) {
            const int e = it->first[v];
            if (e == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += vars[v];
            if (e > 1) mono += "^" + std::to_string(e);
        }
        detail::append_term(out, first, it->second, mono);
        first = false;
    }
    return out;
}

/// PolyJson: {"variable": ..., "coeffs": ["num/den", ...]} ascending degree,
/// empty array for the zero polynomial.
inline nlohmann::json unipoly_to_json(const UniPoly& p, const std::string& var = "U") {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(format_rational(c));
    return nlohmann::json{{"variable", var}, {"coeffs", coeffs}};
}

inline std::pair<UniPoly, std::string> unipoly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("variable") || !j.contains("coeffs") || !j["variable"].is_string() ||
        !j["coeffs"].is_array())
        throw argument_error("PolyJson: expected {\"variable\": string, \"coeffs\": [string...]}");
    std::vector<Rational> coeffs;
    for (const auto& c : j["coeffs"]) {
        if (!c.is_string()) throw argument_error("PolyJson: coefficients must be strings");
        coeffs.push_back(parse_rational(c.get<std::string>()));
    }
    if (!coeffs.empty() && coeffs.back() == 0) throw argument_error("PolyJson: trailing zero coefficient");
    return {UniPoly(std::move(coeffs)), j["variable"].get<std::string>()};
}

inline nlohmann::json multipoly_to_json(const MultiPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back(nlohmann::json{{"exponents", it->first}, {"coeff", format_rational(it->second)}});
    return nlohmann::json{{"variables", p.variables()}, {"terms", terms}};
}

} // namespace sylv
