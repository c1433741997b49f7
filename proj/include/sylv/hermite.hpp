#pragma once

#include <map>
#include <string>
#include <vector>

#include "sylv/vandermonde.hpp"

namespace sylv {

/// Interpolation data: one prescribed value per flattened pair (x_i, j) of
/// the node multiset, aligned with nodes.flattened(). The value at (x_i, j)
/// constrains the normalized derivative Q^[j](x_i).
struct HermiteData {
    RootMultiset nodes;
    std::vector<Rational> values;
};

/// The unique polynomial of degree <= p-1 with Q^[j](x_i) = q_{i,j}, built
/// from the k = p-1 specialization of the symmetric interpolation formula:
/// the coordinate of the (i,j) datum carries the sign (-1)^{mu_i+...+mu_m-j-1},
/// which for the flattened position t is (-1)^{p-1-t}.
inline UniPoly hermite_interpolate(const HermiteData& data) {
    const int p = data.nodes.degree();
    if (p == 0) throw argument_error("hermite_interpolate: empty node multiset");
    if (static_cast<int>(data.values.size()) != p)
        throw argument_error("hermite_interpolate: need exactly one value per flattened node pair");

    const Rational vp = vp_closed_form(data.nodes);
    UniPoly out;
    for (int t = 0; t < p; ++t) {
        if (data.values[t] == 0) continue;
        std::vector<int> rest = complement_positions(p, {t});
        const UniPoly basis = gen_vandermonde_unipoly(data.nodes.select(rest));
        out += (Rational(parity_sign(p - 1 - t)) * data.values[t] / vp) * basis;
    }
    return out;
}

/// One element of the symmetric interpolation basis B_{P,k}(U):
/// V[K||U) / (V[P] V(U)) for a size-k subset K of the flattened multiset.
struct SymmetricBasisElement {
    SubsetSelection subset;
    MultiPoly poly;
};

/// The binom(p,k) basis elements of the space of symmetric polynomials in
/// the p-k variables u_vars of multidegree at most (k,...,k).
inline std::vector<SymmetricBasisElement> symmetric_basis(const RootMultiset& P, int k,
                                                          const std::vector<std::string>& u_vars) {
    const int p = P.degree();
    if (k < 0 || k > p) throw argument_error("symmetric_basis: k out of range");
    if (static_cast<int>(u_vars.size()) != p - k)
        throw argument_error("symmetric_basis: need exactly p-k variable names");

    const Rational vp = vp_closed_form(P);
    const MultiPoly vu = vandermonde_symbolic(u_vars);
    std::vector<SymmetricBasisElement> out;
    for_each_subset(p, k, [&](const std::vector<int>& kpos) {
        GenVandermondeSpec spec;
        spec.derivated_blocks = P.select(kpos);
        spec.variable_columns = u_vars;
        MultiPoly numerator = Rational(1) / vp * gen_vandermonde_det(spec);
        MultiPoly poly;
        try {
            poly = exact_divide(numerator, vu);
        } catch (const divisibility_error&) {
            throw invariant_violation("symmetric_basis: V[K||U) not divisible by V(U)");
        }
        out.push_back({SubsetSelection::make(p, kpos), std::move(poly)});
    });
    return out;
}

namespace detail {

inline void require_symmetric_bounded(const MultiPoly& g, int k, const std::vector<std::string>& u_vars) {
    for (const auto& v : g.variables()) {
        bool known = false;
        for (const auto& u : u_vars) known = known || (u == v);
        if (!known) throw argument_error("symmetric_coords: polynomial uses a variable outside the block");
    }
    for (const auto& u : u_vars)
        if (g.degree_in(u) > k) throw argument_error("symmetric_coords: degree exceeds k in " + u);
    for (size_t t = 0; t + 1 < u_vars.size(); ++t) {
        const std::map<std::string, std::string> swap{{u_vars[t], u_vars[t + 1]}, {u_vars[t + 1], u_vars[t]}};
        if (g.rename(swap) != g) throw argument_error("symmetric_coords: polynomial is not symmetric in the block");
    }
}

} // namespace detail

/// Coordinates of a symmetric polynomial g of multidegree <= (k,...,k) in the
/// basis B_{P,k}: g_K = (-1)^{k(p-k)} s_K h(P\K) with
/// h = del^[P\K] ( V(X_{P\K}) g(X_{P\K}) ) evaluated by the multiset
/// substitution. Keyed by the subset positions.
inline std::map<std::vector<int>, Rational> symmetric_coords(const MultiPoly& g, const RootMultiset& P, int k,
                                                             const std::vector<std::string>& u_vars) {
    const int p = P.degree();
    if (k < 0 || k > p) throw argument_error("symmetric_coords: k out of range");
    if (static_cast<int>(u_vars.size()) != p - k)
        throw argument_error("symmetric_coords: need exactly p-k variable names");
    detail::require_symmetric_bounded(g, k, u_vars);

    const int outer_sign = parity_sign(static_cast<long>(k) * (p - k));
    std::map<std::vector<int>, Rational> coords;
    for_each_subset(p, k, [&](const std::vector<int>& kpos) {
        const int sk = subset_signature(p, kpos);
        const BoundVariables bv = bind_variables(P.select_complement(kpos), "X");
        std::map<std::string, std::string> to_bound;
        for (size_t t = 0; t < u_vars.size(); ++t) to_bound.emplace(u_vars[t], bv.names[t]);
        const MultiPoly inner = vandermonde_symbolic(bv.names) * g.rename(to_bound);
        const Rational h = derivate_then_substitute(inner, bv).constant_value();
        coords[kpos] = Rational(outer_sign * sk) * h;
    });
    return coords;
}

/// Sum of coordinate times basis element; inverse of symmetric_coords on the
/// space the basis spans.
inline MultiPoly reconstruct(const std::map<std::vector<int>, Rational>& coords,
                             const std::vector<SymmetricBasisElement>& basis) {
    MultiPoly out;
    for (const auto& el : basis) {
        auto it = coords.find(el.subset.positions);
        if (it == coords.end()) throw argument_error("reconstruct: missing coordinate for a basis subset");
        if (it->second != 0) out += it->second * el.poly;
    }
    return out;
}

} // namespace sylv
