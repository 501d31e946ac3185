// descent_class.hpp -- enumerating and counting the classes D(S;n): a
// streaming backtracking generator in lexicographic order, a filter-everything
// oracle for cross-checks, and an inclusion-exclusion counter.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "descent_metrics/descent_set.hpp"
#include "descent_metrics/permutation.hpp"

namespace descent_metrics {

/// Names a class D(S;n). The n is carried by the descent set.
class class_spec {
public:
    explicit class_spec(descent_set s) : s_(std::move(s)) {}

    int n() const noexcept { return s_.n(); }
    const descent_set& s() const noexcept { return s_; }

    bool operator==(const class_spec&) const = default;

private:
    descent_set s_;
};

/// Streaming enumerator over D(S;n) in lexicographic order of one-line
/// notation. Places values left to right; a partial prefix survives only if
/// each committed position respects the required ascent/descent relation, so
/// the full n! tree is never walked. Single-consumer; distinct enumerators
/// are independent.
class class_enumerator {
public:
    explicit class_enumerator(class_spec spec)
        : spec_(std::move(spec)), used_(static_cast<std::size_t>(spec_.n()) + 1, false) {
        cur_.reserve(static_cast<std::size_t>(spec_.n()));
    }

    const class_spec& spec() const noexcept { return spec_; }

    /// Next member, or nullopt once the class is exhausted.
    std::optional<permutation> next() {
        const int n = spec_.n();
        if (exhausted_) return std::nullopt;
        int resume_from = 0;  // exclusive lower bound for the next candidate
        if (!fresh_) resume_from = pop();
        fresh_ = false;
        while (true) {
            const int v = next_candidate(resume_from);
            if (v != 0) {
                cur_.push_back(v);
                used_[static_cast<std::size_t>(v)] = true;
                resume_from = 0;
                if (static_cast<int>(cur_.size()) == n) return permutation(cur_);
            } else {
                if (cur_.empty()) {
                    exhausted_ = true;
                    return std::nullopt;
                }
                resume_from = pop();
            }
        }
    }

private:
    int pop() {
        const int v = cur_.back();
        used_[static_cast<std::size_t>(v)] = false;
        cur_.pop_back();
        return v;
    }

    // Smallest unused value > lower_exclusive that respects the relation
    // between the previous position and the one being filled; 0 if none.
    int next_candidate(int lower_exclusive) const {
        const int n = spec_.n();
        const int depth = static_cast<int>(cur_.size());  // filling position depth+1
        int lo = lower_exclusive + 1;
        int hi = n;
        if (depth > 0) {
            const int prev = cur_.back();
            if (spec_.s().contains(depth))
                hi = std::min(hi, prev - 1);  // descent: strictly smaller
            else
                lo = std::max(lo, prev + 1);  // ascent: strictly larger
        }
        for (int v = lo; v <= hi; ++v)
            if (!used_[static_cast<std::size_t>(v)]) return v;
        return 0;
    }

    class_spec spec_;
    std::vector<int> cur_;
    std::vector<bool> used_;
    bool exhausted_ = false;
    bool fresh_ = true;
};

/// Visits every member of D(S;n) in lexicographic order.
template <typename Visitor>
void for_each_member(const class_spec& spec, Visitor&& visit) {
    class_enumerator gen(spec);
    while (auto p = gen.next()) visit(*p);
}

inline constexpr std::size_t default_materialize_cap = 1'000'000;

/// Buffers the whole class. Throws std::length_error when the class exceeds
/// the cap; callers that may face such classes should stream instead.
inline std::vector<permutation> materialize(const class_spec& spec,
                                            std::size_t cap = default_materialize_cap) {
    std::vector<permutation> out;
    class_enumerator gen(spec);
    while (auto p = gen.next()) {
        if (out.size() == cap)
            throw std::length_error("materialize: class D(S;" + std::to_string(spec.n()) +
                                    ") exceeds the buffer cap of " + std::to_string(cap));
        out.push_back(std::move(*p));
    }
    return out;
}

inline constexpr int default_naive_bound = 10;

/// Reference oracle: filters all n! permutations in lexicographic order by
/// descent-set equality. Intentionally brute; refuses n above the bound.
inline std::vector<permutation> enumerate_naive(const class_spec& spec,
                                                int bound = default_naive_bound) {
    const int n = spec.n();
    if (n > bound)
        throw std::invalid_argument("enumerate_naive: n=" + std::to_string(n) +
                                    " exceeds the oracle bound " + std::to_string(bound) +
                                    "; use the direct generator");
    std::vector<permutation> out;
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = i + 1;
    do {
        permutation p(e);
        if (descents(p) == spec.s()) out.push_back(std::move(p));
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

namespace detail {

inline boost::multiprecision::cpp_int factorial_big(int n) {
    boost::multiprecision::cpp_int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Permutations of [n] whose descent set is contained in the set picked out by
// `chosen`: the multinomial coefficient of the composition of n it induces.
inline boost::multiprecision::cpp_int descents_within(int n, const std::vector<int>& chosen) {
    boost::multiprecision::cpp_int value = factorial_big(n);
    int prev = 0;
    for (int t : chosen) {
        value /= factorial_big(t - prev);
        prev = t;
    }
    value /= factorial_big(n - prev);
    return value;
}

}  // namespace detail

/// |D(S;n)| by signed inclusion-exclusion over subsets T of S. Exact big
/// integers internally; narrows to a machine integer on return and throws
/// std::overflow_error when the count does not fit.
inline std::uint64_t class_count(const class_spec& spec) {
    const auto& s = spec.s().indices();
    const std::size_t k = s.size();
    if (k >= 63)
        throw std::invalid_argument("class_count: descent set too large to enumerate subsets");
    boost::multiprecision::cpp_int total = 0;
    std::vector<int> chosen;
    chosen.reserve(k);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        chosen.clear();
        for (std::size_t b = 0; b < k; ++b)
            if (mask & (std::uint64_t{1} << b)) chosen.push_back(s[b]);
        const bool negate = ((k - chosen.size()) % 2) != 0;
        const auto term = detail::descents_within(spec.n(), chosen);
        if (negate)
            total -= term;
        else
            total += term;
    }
    if (total < 0)
        throw std::logic_error("class_count: inclusion-exclusion produced a negative total");
    if (total > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("class_count: |D(S;n)| does not fit in 64 bits");
    return static_cast<std::uint64_t>(total);
}

}  // namespace descent_metrics
