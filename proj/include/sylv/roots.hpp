#pragma once

#include <utility>
#include <vector>

#include "sylv/rational.hpp"
#include "sylv/unipoly.hpp"

namespace sylv {

/// A point paired with a derivative index: the flattened form x_{i,j} of a
/// root of multiplicity > 1, and the unit a derivated Vandermonde column is
/// attached to.
struct DerivatedPoint {
    Rational point;
    int der = 0;

    friend bool operator==(const DerivatedPoint& a, const DerivatedPoint& b) {
        return a.point == b.point && a.der == b.der;
    }
};

struct RootGroup {
    Rational root;
    int multiplicity = 1;
};

/// Ordered multiset of roots: groups (root, multiplicity) with pairwise
/// distinct roots, flattened to the ordered pair list
/// (x_1,0),...,(x_1,mu_1-1),...,(x_m,mu_m-1).
class RootMultiset {
  public:
    RootMultiset() = default;
    explicit RootMultiset(std::vector<RootGroup> groups) : groups_(std::move(groups)) {
        for (size_t i = 0; i < groups_.size(); ++i) {
            if (groups_[i].multiplicity < 1) throw argument_error("RootMultiset: multiplicity must be >= 1");
            for (size_t j = 0; j < i; ++j)
                if (groups_[j].root == groups_[i].root)
                    throw argument_error("RootMultiset: roots must be pairwise distinct");
        }
        for (const auto& g : groups_)
            for (int j = 0; j < g.multiplicity; ++j) flattened_.push_back({g.root, j});
    }

    static RootMultiset simple(const std::vector<Rational>& roots) {
        std::vector<RootGroup> gs;
        gs.reserve(roots.size());
        for (const auto& r : roots) gs.push_back({r, 1});
        return RootMultiset(std::move(gs));
    }

    int degree() const { return static_cast<int>(flattened_.size()); }
    const std::vector<RootGroup>& groups() const { return groups_; }
    const std::vector<DerivatedPoint>& flattened() const { return flattened_; }

    std::vector<DerivatedPoint> select(const std::vector<int>& positions) const {
        std::vector<DerivatedPoint> out;
        out.reserve(positions.size());
        for (int p : positions) out.push_back(flattened_.at(p));
        return out;
    }

    std::vector<DerivatedPoint> select_complement(const std::vector<int>& positions) const {
        std::vector<DerivatedPoint> out;
        out.reserve(flattened_.size() - positions.size());
        auto it = positions.begin();
        for (int v = 0; v < degree(); ++v) {
            if (it != positions.end() && *it == v)
                ++it;
            else
                out.push_back(flattened_[v]);
        }
        return out;
    }

  private:
    std::vector<RootGroup> groups_;
    std::vector<DerivatedPoint> flattened_;
};

/// Monic polynomial prod (U - x_i)^{mu_i}, expanded.
inline UniPoly from_roots(const RootMultiset& r) {
    UniPoly p((Rational(1)));
    for (const auto& g : r.groups()) {
        const UniPoly factor(std::vector<Rational>{-g.root, 1});
        for (int j = 0; j < g.multiplicity; ++j) p = p * factor;
    }
    return p;
}

/// prod_{x in A, y in B} (x - y); 1 on empty lists.
inline Rational pi_product(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational r = 1;
    for (const auto& x : a)
        for (const auto& y : b) r *= (x - y);
    return r;
}

} // namespace sylv
