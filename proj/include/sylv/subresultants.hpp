#pragma once

#include <map>
#include <vector>

#include "sylv/matrix.hpp"
#include "sylv/unipoly.hpp"

namespace sylv {

// Sylvester-Habicht layout. For j < q the matrix of (P, Q) at level j has
// p+q-2j rows over the monomial basis X^{p+q-j-1}, ..., X, 1:
//     X^{q-j-1} P, ..., X P, P,   Q, X Q, ..., X^{p-j-1} Q
// i.e. the P block with descending multipliers followed by the Q block with
// ascending multipliers. The literature leaves the row order to convention;
// this one is pinned by the sign-anchor identities (Sres_{q-1} =
// eps_{p-q} lc(Q)^{p-q+1} (-Rem(P,Q)) and friends), which the test suite runs
// on every build. If those anchors ever fail globally, the one sanctioned fix
// is to flip kQBlockAscending below.
namespace detail {
constexpr bool kQBlockAscending = true;
}

/// Coefficient matrix behind Sres_j; requires deg P > deg Q > j >= 0.
inline ScalarMatrix sylvester_habicht_matrix(const UniPoly& P, const UniPoly& Q, int j) {
    const int p = P.degree_nonzero();
    const int q = Q.degree_nonzero();
    if (p <= q) throw domain_error("sylvester_habicht_matrix: need deg P > deg Q");
    if (j < 0 || j >= q) throw argument_error("sylvester_habicht_matrix: need 0 <= j < deg Q");
    const int rows = p + q - 2 * j;
    const int cols = p + q - j;
    ScalarMatrix m(rows, cols);
    // Row holding X^a * F has the coefficient of X^{p+q-j-1-c} in column c.
    auto fill_row = [&](int row, const UniPoly& f, int a) {
        for (int c = 0; c < cols; ++c) m.at(row, c) = f.coeff(p + q - j - 1 - c - a);
    };
    for (int t = 0; t < q - j; ++t) fill_row(t, P, q - j - 1 - t);
    for (int s = 0; s < p - j; ++s) {
        const int a = detail::kQBlockAscending ? s : p - j - 1 - s;
        fill_row(q - j + s, Q, a);
    }
    return m;
}

/// Subresultant by minors: Sres_j = sum_i det(M_{j,i}) U^i where M_{j,i}
/// takes the first p+q-2j-1 columns plus the column of X^i. Levels j >= q
/// return the conventional values (Q at p-1, zero strictly between, and
/// eps_{p-q} lc(Q)^{p-q-1} Q at q).
inline UniPoly sres_det(const UniPoly& P, const UniPoly& Q, int j) {
    if (P.is_zero() || Q.is_zero()) throw domain_error("sres_det: zero input polynomial");
    const int p = P.degree_nonzero();
    const int q = Q.degree_nonzero();
    if (p <= q) throw domain_error("sres_det: need deg P > deg Q");
    if (j < 0 || j > p - 1) throw argument_error("sres_det: need 0 <= j <= deg P - 1");

    if (j == p - 1) return Q;
    if (j > q) return UniPoly();
    if (j == q) return Rational(epsilon(p - q)) * rational_pow(Q.leading(), p - q - 1) * Q;

    const ScalarMatrix m = sylvester_habicht_matrix(P, Q, j);
    const int rows = p + q - 2 * j;
    std::vector<Rational> coeffs(j + 1, Rational(0));
    ScalarMatrix minor(rows, rows);
    for (int i = 0; i <= j; ++i) {
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c + 1 < rows; ++c) minor.at(r, c) = m.at(r, c);
            minor.at(r, rows - 1) = m.at(r, p + q - j - 1 - i);
        }
        coeffs[i] = det(minor);
    }
    return UniPoly(std::move(coeffs));
}

/// The whole family Sres_j for 0 <= j <= deg P - 1.
struct SresSequence {
    std::map<int, UniPoly> entries;
};

/// Subresultants by the remainder recursion: base levels from the stated
/// conventions, Sres_{q-1} = eps_{p-q} lc(Q)^{p-q+1} R with R = -Rem(P, Q),
/// and levels below q-1 pushed down to (Q, R) with the factor
/// eps_{p-q} lc(Q)^{p-r}. Agrees entrywise with sres_det.
inline SresSequence sres_prs(const UniPoly& P, const UniPoly& Q) {
    if (P.is_zero() || Q.is_zero()) throw domain_error("sres_prs: zero input polynomial");
    const int p = P.degree_nonzero();
    const int q = Q.degree_nonzero();
    if (p <= q) throw domain_error("sres_prs: need deg P > deg Q");

    SresSequence out;
    out.entries[p - 1] = Q;
    for (int j = q + 1; j < p - 1; ++j) out.entries[j] = UniPoly();
    if (q < p - 1) out.entries[q] = Rational(epsilon(p - q)) * rational_pow(Q.leading(), p - q - 1) * Q;
    if (q == 0) return out;

    const UniPoly R = -euclid_divrem(P, Q).second;
    const Rational eps(epsilon(p - q));
    out.entries[q - 1] = eps * rational_pow(Q.leading(), p - q + 1) * R;
    if (q == 1) return out;

    if (R.is_zero()) {
        for (int j = 0; j < q - 1; ++j) out.entries[j] = UniPoly();
        return out;
    }
    const int r = R.degree_nonzero();
    const Rational push = eps * rational_pow(Q.leading(), p - r);
    const SresSequence sub = sres_prs(Q, R);
    for (int j = 0; j < q - 1; ++j) out.entries[j] = push * sub.entries.at(j);
    return out;
}

/// P, Q, -Rem(P,Q), -Rem(Q, .), ... down to the last nonzero entry.
inline std::vector<UniPoly> remainder_sequence(const UniPoly& P, const UniPoly& Q) {
    if (Q.is_zero()) throw domain_error("remainder_sequence: Q is zero");
    std::vector<UniPoly> seq{P, Q};
    while (true) {
        UniPoly next = -euclid_divrem(seq[seq.size() - 2], seq.back()).second;
        if (next.is_zero()) return seq;
        seq.push_back(std::move(next));
    }
}

} // namespace sylv
