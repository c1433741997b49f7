#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "sylv/matrix.hpp"
#include "sylv/multipoly.hpp"
#include "sylv/roots.hpp"

namespace sylv {

// Generalized (confluent) Vandermonde conventions used throughout:
//   * row r of a dimension-n matrix carries the monomial of degree r,
//     matching the Vandermonde vector v_n(x) = (1, x, ..., x^{n-1});
//   * the column attached to a derivated point (x, j) is the normalized
//     j-th derivative of v_n(x), i.e. entry binom(r, j) x^{r-j} (0 for r < j);
//   * a variable column for U has entry U^r in row r.

/// Classical Vandermonde determinant, prod_{i<j} (x_j - x_i); 1 on the empty
/// and singleton lists.
inline Rational vandermonde_det(const std::vector<Rational>& pts) {
    Rational v = 1;
    for (size_t j = 1; j < pts.size(); ++j)
        for (size_t i = 0; i < j; ++i) v *= (pts[j] - pts[i]);
    return v;
}

/// The same product over an ordered list of distinct variables.
inline MultiPoly vandermonde_symbolic(const std::vector<std::string>& vars) {
    MultiPoly v((Rational(1)));
    for (size_t j = 1; j < vars.size(); ++j)
        for (size_t i = 0; i < j; ++i) v = v * (MultiPoly::variable(vars[j]) - MultiPoly::variable(vars[i]));
    return v;
}

/// Square generalized Vandermonde: the derivated blocks L||K followed by the
/// variable column block U.
struct GenVandermondeSpec {
    std::vector<DerivatedPoint> derivated_blocks;
    std::vector<std::string> variable_columns;

    int dimension() const {
        return static_cast<int>(derivated_blocks.size() + variable_columns.size());
    }
};

namespace detail {

inline Rational derivated_entry(int row, const DerivatedPoint& p) {
    if (row < p.der) return 0;
    return Rational(binom(row, p.der)) * rational_pow(p.point, row - p.der);
}

/// Minor of the numeric block: the given rows against all derivated columns.
inline Rational numeric_minor(const std::vector<DerivatedPoint>& blocks, const std::vector<int>& rows) {
    const int n = static_cast<int>(blocks.size());
    if (static_cast<int>(rows.size()) != n) throw dimension_error("numeric_minor: row count mismatch");
    ScalarMatrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = derivated_entry(rows[r], blocks[c]);
    return det(m);
}

} // namespace detail

/// Determinant of the all-derivated-columns square matrix (no variables).
inline Rational gen_vandermonde_value(const std::vector<DerivatedPoint>& blocks) {
    const int n = static_cast<int>(blocks.size());
    std::vector<int> rows(n);
    std::iota(rows.begin(), rows.end(), 0);
    return detail::numeric_minor(blocks, rows);
}

/// Determinant with exactly one trailing variable column, as a polynomial in
/// that variable: Laplace expansion along the variable column, numeric minors
/// by Bareiss.
inline UniPoly gen_vandermonde_unipoly(const std::vector<DerivatedPoint>& blocks) {
    const int n = static_cast<int>(blocks.size()) + 1;
    std::vector<Rational> coeffs(n, Rational(0));
    std::vector<int> rows(n - 1);
    for (int r = 0; r < n; ++r) {
        int t = 0;
        for (int v = 0; v < n; ++v)
            if (v != r) rows[t++] = v;
        const Rational minor = detail::numeric_minor(blocks, rows);
        coeffs[r] = parity_sign(r + n - 1) * minor;
    }
    return UniPoly(std::move(coeffs));
}

/// Full generalized Vandermonde determinant as an exact polynomial in the
/// variable columns. Expansion is generalized Laplace along the variable
/// block: every size-u row subset contributes the symbolic minor of the
/// variable columns times the complementary numeric minor.
inline MultiPoly gen_vandermonde_det(const GenVandermondeSpec& spec) {
    const int u = static_cast<int>(spec.variable_columns.size());
    const int n = spec.dimension();
    if (u == 0) return MultiPoly(gen_vandermonde_value(spec.derivated_blocks));
    for (int a = 0; a < u; ++a)
        for (int b = a + 1; b < u; ++b)
            if (spec.variable_columns[a] == spec.variable_columns[b])
                throw argument_error("gen_vandermonde_det: duplicate variable column name");

    // Parity of the fixed column part of the Laplace sign: columns n-u..n-1.
    long col_sum = 0;
    for (int c = n - u; c < n; ++c) col_sum += c;

    std::vector<int> perm_base(u);
    std::iota(perm_base.begin(), perm_base.end(), 0);

    MultiPoly total;
    for_each_subset(n, u, [&](const std::vector<int>& var_rows) {
        const std::vector<int> num_rows = complement_positions(n, var_rows);
        const Rational minor = detail::numeric_minor(spec.derivated_blocks, num_rows);
        if (minor == 0) return;
        long row_sum = 0;
        for (int r : var_rows) row_sum += r;
        const int laplace_sign = parity_sign(row_sum + col_sum);

        // Symbolic det of [ U_t ^ var_rows[s] ] by Leibniz expansion.
        MultiPoly block;
        std::vector<int> perm = perm_base;
        do {
            long inv = 0;
            for (int a = 0; a < u; ++a)
                for (int b = a + 1; b < u; ++b)
                    if (perm[a] > perm[b]) ++inv;
            MultiPoly mono(Rational(parity_sign(inv)));
            for (int s = 0; s < u; ++s)
                mono = mono * MultiPoly::variable_power(spec.variable_columns[perm[s]], var_rows[s]);
            block += mono;
        } while (std::next_permutation(perm.begin(), perm.end()));

        total += (minor * Rational(laplace_sign)) * block;
    });
    return total;
}

/// Closed form of V[P]: prod_{i<j} (x_j - x_i)^{mu_i mu_j}.
inline Rational vp_closed_form(const RootMultiset& r) {
    Rational v = 1;
    const auto& gs = r.groups();
    for (size_t j = 1; j < gs.size(); ++j)
        for (size_t i = 0; i < j; ++i)
            v *= rational_pow(gs[j].root - gs[i].root, static_cast<long>(gs[i].multiplicity) * gs[j].multiplicity);
    return v;
}

/// Sequential normalized partial derivation (1/j!) d^j/d var^j per schedule
/// entry; the operators commute.
inline MultiPoly partial_derivation(MultiPoly f, const std::vector<std::pair<std::string, int>>& schedule) {
    for (const auto& [var, order] : schedule) f = f.normalized_derivative(var, order);
    return f;
}

/// Variables attached to an ordered list of derivated points: the names, the
/// derivation schedule of the corresponding del-operator, and the substitution
/// sending each variable to its point value.
struct BoundVariables {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, int>> schedule;
    std::map<std::string, Rational> substitution;
};

inline BoundVariables bind_variables(const std::vector<DerivatedPoint>& pairs, const std::string& prefix) {
    BoundVariables bv;
    for (size_t t = 0; t < pairs.size(); ++t) {
        std::string name = prefix;
        name += static_cast<char>('0' + (t / 10));
        name += static_cast<char>('0' + (t % 10));
        bv.names.push_back(name);
        bv.schedule.emplace_back(name, pairs[t].der);
        bv.substitution.emplace(std::move(name), pairs[t].point);
    }
    return bv;
}

/// del^[pairs] f followed by the point substitution.
inline MultiPoly derivate_then_substitute(const MultiPoly& f, const BoundVariables& bv) {
    return partial_derivation(f, bv.schedule).substitute(bv.substitution);
}

} // namespace sylv
