#pragma once

#include <string>
#include <vector>

#include "sylv/vandermonde.hpp"

namespace sylv {

/// Index pair (k, l) of a double sum; j = k + l is the level the fundamental
/// proportionality acts on.
struct DoubleSumIndex {
    int k = 0;
    int ell = 0;
    int j() const { return k + ell; }
};

/// Classical simple-root double sum (the oracle): sum over K, L of
/// Pi(U,K) Pi(U,L) Pi(K,L) Pi(P\K, Q\L) / (Pi(K, P\K) Pi(L, Q\L)).
/// Repeated roots make a denominator vanish and are rejected.
inline UniPoly sylv_classical(const std::vector<Rational>& p_roots, const std::vector<Rational>& q_roots,
                              DoubleSumIndex idx) {
    const int p = static_cast<int>(p_roots.size());
    const int q = static_cast<int>(q_roots.size());
    if (idx.k < 0 || idx.ell < 0) throw argument_error("sylv_classical: negative index");
    if (idx.k > p || idx.ell > q) return UniPoly();
    auto check_distinct = [](const std::vector<Rational>& roots, const char* which) {
        for (size_t i = 0; i < roots.size(); ++i)
            for (size_t j = 0; j < i; ++j)
                if (roots[i] == roots[j])
                    throw domain_error(std::string("sylv_classical: repeated root in ") + which);
    };
    check_distinct(p_roots, "P");
    check_distinct(q_roots, "Q");

    auto pick = [](const std::vector<Rational>& v, const std::vector<int>& pos) {
        std::vector<Rational> out;
        out.reserve(pos.size());
        for (int i : pos) out.push_back(v[i]);
        return out;
    };
    auto pick_rest = [&](const std::vector<Rational>& v, const std::vector<int>& pos) {
        return pick(v, complement_positions(static_cast<int>(v.size()), pos));
    };
    auto root_factors = [](const std::vector<Rational>& roots) {
        UniPoly f((Rational(1)));
        for (const auto& r : roots) f = f * UniPoly(std::vector<Rational>{-r, 1});
        return f;
    };

    UniPoly total;
    for_each_subset(p, idx.k, [&](const std::vector<int>& kpos) {
        const auto K = pick(p_roots, kpos);
        const auto Kc = pick_rest(p_roots, kpos);
        for_each_subset(q, idx.ell, [&](const std::vector<int>& lpos) {
            const auto L = pick(q_roots, lpos);
            const auto Lc = pick_rest(q_roots, lpos);
            const Rational num = pi_product(K, L) * pi_product(Kc, Lc);
            const Rational den = pi_product(K, Kc) * pi_product(L, Lc);
            total += (num / den) * (root_factors(K) * root_factors(L));
        });
    });
    return total;
}

/// Generalized double sum for monic P, Q given as root multisets:
/// sum over K, L of s_K s_L V[(Q\L)||(P\K)] V[L||K||U) / (V[P] V[Q]).
inline UniPoly sylv_general(const RootMultiset& P, const RootMultiset& Q, DoubleSumIndex idx) {
    const int p = P.degree();
    const int q = Q.degree();
    if (idx.k < 0 || idx.ell < 0) throw argument_error("sylv_general: negative index");
    if (idx.k > p || idx.ell > q) return UniPoly();

    UniPoly total;
    for_each_subset(p, idx.k, [&](const std::vector<int>& kpos) {
        const int sk = subset_signature(p, kpos);
        const auto K = P.select(kpos);
        const auto Kc = P.select_complement(kpos);
        for_each_subset(q, idx.ell, [&](const std::vector<int>& lpos) {
            const int sl = subset_signature(q, lpos);
            const auto L = Q.select(lpos);
            auto blocks = Q.select_complement(lpos); // (Q\L) || (P\K)
            blocks.insert(blocks.end(), Kc.begin(), Kc.end());
            const Rational outer = gen_vandermonde_value(blocks);
            if (outer == 0) return;
            auto lk = L; // L || K, one trailing variable column
            lk.insert(lk.end(), K.begin(), K.end());
            total += (Rational(sk * sl) * outer) * gen_vandermonde_unipoly(lk);
        });
    });
    const Rational divisor = vp_closed_form(P) * vp_closed_form(Q);
    return Rational(1) / divisor * total;
}

/// Leading coefficient paired with the root multiset of the monic part.
struct ScaledRoots {
    Rational lc = 1;
    RootMultiset roots;
};

/// Double sum of not necessarily monic polynomials:
/// lc(P)^{q-j} lc(Q)^{p-j} Sylv(P/lc(P), Q/lc(Q)); defined for j <= p only.
inline UniPoly sylv_nonmonic(const ScaledRoots& P, const ScaledRoots& Q, DoubleSumIndex idx) {
    if (P.lc == 0 || Q.lc == 0) throw argument_error("sylv_nonmonic: zero leading coefficient");
    const int p = P.roots.degree();
    const int q = Q.roots.degree();
    const int j = idx.j();
    if (j > p) throw domain_error("sylv_nonmonic: index k+l exceeds deg P");
    const Rational scale = rational_pow(P.lc, q - j) * rational_pow(Q.lc, p - j);
    return scale * sylv_general(P.roots, Q.roots, idx);
}

/// Multi double sum over a block of p-j indeterminates:
/// sum s_K s_L V[(Q\L)||(P\K)] V[L||K||U) / (V[P] V[Q] V(U)).
/// The numerator is alternating in the U block, so the division by V(U) is
/// exact; a remainder means the implementation is broken.
inline MultiPoly msylv(const RootMultiset& P, const RootMultiset& Q, DoubleSumIndex idx,
                       const std::vector<std::string>& u_vars) {
    const int p = P.degree();
    const int q = Q.degree();
    if (idx.k < 0 || idx.ell < 0) throw argument_error("msylv: negative index");
    const int j = idx.j();
    if (static_cast<int>(u_vars.size()) != p - j)
        throw argument_error("msylv: the variable block must have exactly p-(k+l) names");
    if (idx.k > p || idx.ell > q) return MultiPoly();

    MultiPoly numerator;
    for_each_subset(p, idx.k, [&](const std::vector<int>& kpos) {
        const int sk = subset_signature(p, kpos);
        const auto K = P.select(kpos);
        const auto Kc = P.select_complement(kpos);
        for_each_subset(q, idx.ell, [&](const std::vector<int>& lpos) {
            const int sl = subset_signature(q, lpos);
            const auto L = Q.select(lpos);
            auto blocks = Q.select_complement(lpos);
            blocks.insert(blocks.end(), Kc.begin(), Kc.end());
            const Rational outer = gen_vandermonde_value(blocks);
            if (outer == 0) return;
            GenVandermondeSpec spec;
            spec.derivated_blocks = L;
            spec.derivated_blocks.insert(spec.derivated_blocks.end(), K.begin(), K.end());
            spec.variable_columns = u_vars;
            numerator += (Rational(sk * sl) * outer) * gen_vandermonde_det(spec);
        });
    });
    const Rational divisor = vp_closed_form(P) * vp_closed_form(Q);
    numerator = Rational(1) / divisor * numerator;
    try {
        return exact_divide(numerator, vandermonde_symbolic(u_vars));
    } catch (const divisibility_error&) {
        throw invariant_violation("msylv: numerator not divisible by V(U)");
    }
}

namespace detail {

inline std::vector<std::string> indexed_names(const std::string& prefix, int count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (int i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
    return names;
}

constexpr int kSymbolicScaleGuard = 3;

} // namespace detail

/// The fully symbolic antisymmetrized sum F^{k,l}(X, Y)(U) over variables
/// X1..Xp, Y1..Yq, U. Desk scale only: the object has (p+q+1)-variate terms.
inline MultiPoly symbolic_F(int p, int q, DoubleSumIndex idx) {
    if (p < 0 || q < 0 || idx.k < 0 || idx.ell < 0) throw argument_error("symbolic_F: negative argument");
    if (p > detail::kSymbolicScaleGuard || q > detail::kSymbolicScaleGuard)
        throw resource_error("symbolic_F: p and q are limited to " + std::to_string(detail::kSymbolicScaleGuard));
    if (idx.k > p || idx.ell > q) return MultiPoly();

    const auto xs = detail::indexed_names("X", p);
    const auto ys = detail::indexed_names("Y", q);
    auto sublist = [](const std::vector<std::string>& v, const std::vector<int>& pos) {
        std::vector<std::string> out;
        out.reserve(pos.size());
        for (int i : pos) out.push_back(v[i]);
        return out;
    };

    MultiPoly total;
    for_each_subset(p, idx.k, [&](const std::vector<int>& kpos) {
        const int sx = subset_signature(p, kpos);
        const auto X1 = sublist(xs, kpos);
        const auto Xc = sublist(xs, complement_positions(p, kpos));
        for_each_subset(q, idx.ell, [&](const std::vector<int>& lpos) {
            const int sy = subset_signature(q, lpos);
            const auto Y1 = sublist(ys, lpos);
            auto left = sublist(ys, complement_positions(q, lpos)); // (Y\Y') || (X\X')
            left.insert(left.end(), Xc.begin(), Xc.end());
            auto right = Y1; // Y' || X' || U
            right.insert(right.end(), X1.begin(), X1.end());
            right.push_back("U");
            total += Rational(sx * sy) * (vandermonde_symbolic(left) * vandermonde_symbolic(right));
        });
    });
    return total;
}

/// S^{k,l} = F^{k,l} / (V(X) V(Y)): symmetric in X and in Y by construction.
inline MultiPoly symbolic_S(int p, int q, DoubleSumIndex idx) {
    const MultiPoly f = symbolic_F(p, q, idx);
    if (f.is_zero()) return f;
    const MultiPoly vxvy =
        vandermonde_symbolic(detail::indexed_names("X", p)) * vandermonde_symbolic(detail::indexed_names("Y", q));
    try {
        return exact_divide(f, vxvy);
    } catch (const divisibility_error&) {
        throw invariant_violation("symbolic_S: F^{k,l} not divisible by V(X)V(Y)");
    }
}

/// Sylv^{j,0}(P, Q) computed from P's coefficients and Q's roots, for
/// j <= deg Q < deg P. Follows the remainder-recursion derivation:
///   Sylv^{0,j}(P,Q) = lc(Q)^{p-j} / V[Q] * sum_L s_L f(Q\L) V[L||U)
/// with f = (-1)^{p(q-j)} del^[Q\L] ( V(Y_{Q\L}) prod P(Y) ) evaluated at the
/// Q\L points, and Sylv^{j,0} = (-1)^{j(p-j)} Sylv^{0,j}.
/// This makes the pair (P, Q) usable when P does not split over the
/// rationals, which is exactly the situation for backward-generated
/// remainder-recursion inputs.
inline UniPoly sylv_j0_from_coefficients(const UniPoly& P, const Rational& lc_q, const RootMultiset& Q, int j) {
    if (P.is_zero()) throw argument_error("sylv_j0_from_coefficients: P is zero");
    if (lc_q == 0) throw argument_error("sylv_j0_from_coefficients: zero leading coefficient");
    const int p = P.degree_nonzero();
    const int q = Q.degree();
    if (j < 0 || j > q || q >= p) throw argument_error("sylv_j0_from_coefficients: need 0 <= j <= deg Q < deg P");

    UniPoly sum;
    for_each_subset(q, j, [&](const std::vector<int>& lpos) {
        const int sl = subset_signature(q, lpos);
        const auto L = Q.select(lpos);
        const auto Lc = Q.select_complement(lpos);
        const BoundVariables bv = bind_variables(Lc, "Y");
        MultiPoly inner = vandermonde_symbolic(bv.names);
        for (const auto& name : bv.names) inner = inner * MultiPoly::from_unipoly(P, name);
        const Rational f =
            Rational(parity_sign(static_cast<long>(p) * (q - j))) * derivate_then_substitute(inner, bv).constant_value();
        if (f == 0) return;
        sum += (Rational(sl) * f) * gen_vandermonde_unipoly(L);
    });
    const Rational scale = rational_pow(lc_q, p - j) / vp_closed_form(Q);
    return Rational(parity_sign(static_cast<long>(j) * (p - j))) * scale * sum;
}

} // namespace sylv
