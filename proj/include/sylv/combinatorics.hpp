#pragma once

#include <functional>
#include <vector>

#include "sylv/rational.hpp"

namespace sylv {

/// Binomial coefficient; 0 whenever k < 0 or k > n.
inline Integer binom(long n, long k) {
    if (n < 0) throw argument_error("binom: n must be non-negative");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

/// (-1)^(k(k-1)/2): the signature of the order-reversing permutation on k
/// elements. +1 for k = 0,1 (mod 4), -1 for k = 2,3 (mod 4).
inline int epsilon(long k) {
    if (k < 0) throw argument_error("epsilon: k must be non-negative");
    return (k % 4 == 0 || k % 4 == 1) ? 1 : -1;
}

/// Signature of the permutation sending (0..n-1) to (complement || positions),
/// computed as the parity of the inversion count of that word. `positions`
/// must be strictly increasing and within [0, n).
inline int subset_signature(int n, const std::vector<int>& positions) {
    int prev = -1;
    for (int p : positions) {
        if (p <= prev || p < 0 || p >= n)
            throw argument_error("subset_signature: positions must be strictly increasing in [0, n)");
        prev = p;
    }
    // Complement and positions are each increasing, so every inversion of the
    // word (complement || positions) pairs a chosen index p with a larger
    // unchosen index standing before it. Count those pairs.
    long inversions = 0;
    int unchosen_above = 0;
    auto it = positions.rbegin();
    for (int v = n - 1; v >= 0; --v) {
        if (it != positions.rend() && *it == v) {
            ++it;
            inversions += unchosen_above;
        } else {
            ++unchosen_above;
        }
    }
    return parity_sign(inversions);
}

/// Calls fn once per strictly increasing index list of size k drawn from
/// 0..n-1, in lexicographic order.
inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 0 || k > n) throw argument_error("for_each_subset: k out of range");
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int t = i + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
}

inline std::vector<std::vector<int>> enumerate_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    for_each_subset(n, k, [&](const std::vector<int>& s) { out.push_back(s); });
    return out;
}

inline std::vector<int> complement_positions(int n, const std::vector<int>& positions) {
    std::vector<int> out;
    out.reserve(n - static_cast<int>(positions.size()));
    auto it = positions.begin();
    for (int v = 0; v < n; ++v) {
        if (it != positions.end() && *it == v) {
            ++it;
        } else {
            out.push_back(v);
        }
    }
    return out;
}

/// An ordered size-k subset of flattened multiset positions together with the
/// signature of the permutation moving it to the tail.
struct SubsetSelection {
    std::vector<int> positions;
    int sign = 1;

    static SubsetSelection make(int n, std::vector<int> positions) {
        SubsetSelection s;
        s.sign = subset_signature(n, positions);
        s.positions = std::move(positions);
        return s;
    }

    friend bool operator<(const SubsetSelection& a, const SubsetSelection& b) {
        return a.positions < b.positions;
    }
    friend bool operator==(const SubsetSelection& a, const SubsetSelection& b) {
        return a.positions == b.positions;
    }
};

} // namespace sylv
