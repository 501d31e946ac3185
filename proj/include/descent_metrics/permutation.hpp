// permutation.hpp -- immutable one-line-notation permutations and the two
// metrics (Hamming, l-infinity) together with the value-reflection map phi.

#pragma once

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace descent_metrics {

/// Selector between the two supported metrics.
enum class metric_kind { hamming, linf };

inline const char* name(metric_kind m) {
    return m == metric_kind::hamming ? "hamming" : "linf";
}

/// A permutation of [n] in one-line notation. Entries and positions are
/// 1-based in the public interface. Values are immutable after construction;
/// construction validates that the entries are a rearrangement of 1..n and
/// rejects anything else.
class permutation {
public:
    explicit permutation(std::vector<int> entries) : entries_(std::move(entries)) {
        const int n = static_cast<int>(entries_.size());
        if (n < 1)
            throw std::invalid_argument("permutation: need at least one entry");
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (int v : entries_) {
            if (v < 1 || v > n)
                throw std::invalid_argument("permutation: entry " + std::to_string(v) +
                                            " outside [1," + std::to_string(n) + "]");
            if (seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("permutation: duplicate entry " + std::to_string(v));
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    static permutation identity(int n) {
        std::vector<int> e(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = i + 1;
        return permutation(std::move(e));
    }

    int size() const noexcept { return static_cast<int>(entries_.size()); }

    /// 1-based entry access: entry(i) is the image of i.
    int entry(int position) const {
        if (position < 1 || position > size())
            throw std::out_of_range("permutation::entry: position " + std::to_string(position));
        return entries_[static_cast<std::size_t>(position - 1)];
    }

    const std::vector<int>& entries() const noexcept { return entries_; }

    /// Lexicographic order on one-line notation.
    auto operator<=>(const permutation&) const = default;

private:
    std::vector<int> entries_;
};

namespace detail {
inline void require_same_length(const permutation& p, const permutation& q, const char* op) {
    if (p.size() != q.size())
        throw std::invalid_argument(std::string(op) + ": permutations of different lengths (" +
                                    std::to_string(p.size()) + " vs " + std::to_string(q.size()) +
                                    ") are incomparable");
}
}  // namespace detail

/// Number of positions at which p and q differ.
inline int hamming(const permutation& p, const permutation& q) {
    detail::require_same_length(p, q, "hamming");
    int count = 0;
    for (int i = 0; i < p.size(); ++i)
        count += p.entries()[static_cast<std::size_t>(i)] != q.entries()[static_cast<std::size_t>(i)];
    return count;
}

/// Maximum absolute componentwise difference.
inline int linf(const permutation& p, const permutation& q) {
    detail::require_same_length(p, q, "linf");
    int best = 0;
    for (int i = 0; i < p.size(); ++i) {
        const int d = std::abs(p.entries()[static_cast<std::size_t>(i)] -
                               q.entries()[static_cast<std::size_t>(i)]);
        if (d > best) best = d;
    }
    return best;
}

inline int distance(const permutation& p, const permutation& q, metric_kind m) {
    return m == metric_kind::hamming ? hamming(p, q) : linf(p, q);
}

/// The reflection sigma_i -> n+1-sigma_i. An involution; complements the
/// descent set and preserves both metrics.
inline permutation phi(const permutation& p) {
    const int n = p.size();
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        e[static_cast<std::size_t>(i)] = n + 1 - p.entries()[static_cast<std::size_t>(i)];
    return permutation(std::move(e));
}

}  // namespace descent_metrics
