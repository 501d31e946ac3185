// descent_set.hpp -- descent sets of permutations and their complements.

#pragma once

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "descent_metrics/permutation.hpp"

namespace descent_metrics {

/// A subset of [n-1] naming a descent class D(S;n). Carries n explicitly:
/// the same index set means different classes for different n. Indices are
/// stored sorted ascending; equality compares both n and indices.
class descent_set {
public:
    descent_set(int n, std::vector<int> indices) : n_(n), indices_(std::move(indices)) {
        if (n_ < 1) throw std::invalid_argument("descent_set: n must be >= 1");
        std::sort(indices_.begin(), indices_.end());
        for (std::size_t k = 0; k < indices_.size(); ++k) {
            const int i = indices_[k];
            if (i < 1 || i > n_ - 1)
                throw std::invalid_argument("descent_set: index " + std::to_string(i) +
                                            " outside [1," + std::to_string(n_ - 1) + "]");
            if (k > 0 && indices_[k - 1] == i)
                throw std::invalid_argument("descent_set: duplicate index " + std::to_string(i));
        }
    }

    static descent_set empty(int n) { return descent_set(n, {}); }

    /// The full set [n-1].
    static descent_set full(int n) {
        std::vector<int> idx(static_cast<std::size_t>(n - 1));
        for (int i = 1; i < n; ++i) idx[static_cast<std::size_t>(i - 1)] = i;
        return descent_set(n, std::move(idx));
    }

    int n() const noexcept { return n_; }
    const std::vector<int>& indices() const noexcept { return indices_; }
    std::size_t size() const noexcept { return indices_.size(); }
    bool is_empty() const noexcept { return indices_.empty(); }
    bool is_full() const noexcept { return static_cast<int>(indices_.size()) == n_ - 1; }

    bool contains(int i) const {
        return std::binary_search(indices_.begin(), indices_.end(), i);
    }

    auto operator<=>(const descent_set&) const = default;

private:
    int n_;
    std::vector<int> indices_;
};

/// [n-1] minus s; an involution.
inline descent_set complement(const descent_set& s) {
    std::vector<int> idx;
    idx.reserve(static_cast<std::size_t>(s.n() - 1) - s.size());
    for (int i = 1; i <= s.n() - 1; ++i)
        if (!s.contains(i)) idx.push_back(i);
    return descent_set(s.n(), std::move(idx));
}

/// All indices i with p.entry(i) > p.entry(i+1).
inline descent_set descents(const permutation& p) {
    std::vector<int> idx;
    const auto& e = p.entries();
    for (int i = 1; i < p.size(); ++i)
        if (e[static_cast<std::size_t>(i - 1)] > e[static_cast<std::size_t>(i)]) idx.push_back(i);
    return descent_set(p.size(), std::move(idx));
}

}  // namespace descent_metrics
