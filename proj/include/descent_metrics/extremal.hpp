// extremal.hpp -- closed-form maximum-distance formulas and the constructive
// witness pairs that realize them, case by case, plus the forced-entry lemma
// and the complement dispatch for the l-infinity families.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "descent_metrics/descent_class.hpp"
#include "descent_metrics/descent_set.hpp"
#include "descent_metrics/permutation.hpp"

namespace descent_metrics {

/// A closed-form value plus the branch of the piecewise definition that
/// produced it (e.g. "Hamming/Case3", "LInf/Singleton/n-i").
struct formula_result {
    int value;
    std::string case_label;

    bool operator==(const formula_result&) const = default;
};

/// Two distinct permutations in the same descent class realizing a claimed
/// distance. Construction re-verifies every invariant so a corrupted
/// construction is caught immediately rather than at use.
class witness_pair {
public:
    witness_pair(permutation sigma, permutation rho, int claimed_distance, metric_kind metric)
        : sigma_(std::move(sigma)), rho_(std::move(rho)),
          claimed_distance_(claimed_distance), metric_(metric) {
        if (sigma_.size() != rho_.size())
            throw std::logic_error("witness_pair: members have different lengths");
        if (sigma_ == rho_)
            throw std::logic_error("witness_pair: members must be distinct");
        if (descents(sigma_) != descents(rho_))
            throw std::logic_error("witness_pair: members lie in different descent classes");
        if (distance(sigma_, rho_, metric_) != claimed_distance_)
            throw std::logic_error("witness_pair: claimed distance " +
                                   std::to_string(claimed_distance_) + " but actual is " +
                                   std::to_string(distance(sigma_, rho_, metric_)));
    }

    const permutation& sigma() const noexcept { return sigma_; }
    const permutation& rho() const noexcept { return rho_; }
    int claimed_distance() const noexcept { return claimed_distance_; }
    metric_kind metric() const noexcept { return metric_; }

private:
    permutation sigma_;
    permutation rho_;
    int claimed_distance_;
    metric_kind metric_;
};

namespace detail {

inline bool is_consecutive_run(const std::vector<int>& sorted) {
    for (std::size_t k = 1; k < sorted.size(); ++k)
        if (sorted[k] != sorted[k - 1] + 1) return false;
    return true;
}

inline void require_theorem_domain(const class_spec& spec, const char* op) {
    if (spec.n() < 3)
        throw std::domain_error(std::string(op) + ": theorem requires n >= 3");
    if (spec.s().is_empty() || spec.s().is_full())
        throw std::domain_error(std::string(op) +
                                ": theorem requires S nonempty and proper in [n-1]");
}

// The six-way split of Theorem 3.3's induction step. `k` is the case's own
// parameter; unused for cases 5 and 6.
enum class hamming_case { c1, c2, c3, c4, c5, c6 };

struct hamming_dispatch {
    hamming_case which;
    int k;
};

inline hamming_dispatch classify_hamming(const class_spec& spec) {
    const int n = spec.n();
    const auto& idx = spec.s().indices();
    const bool run = is_consecutive_run(idx);
    const int lo = idx.front();
    const int hi = idx.back();
    if (run && lo == 1) return {hamming_case::c1, hi};       // {1..k}, k <= n-2
    if (run && hi == n - 1) return {hamming_case::c2, lo};   // {k..n-1}, k >= 2
    if (run && hi == n - 2 && lo >= 2) return {hamming_case::c4, lo};
    if (hi == n - 1) {
        std::vector<int> rest(idx.begin(), idx.end() - 1);   // S' = S \ {n-1}, nonempty here
        if (rest.front() == 1 && is_consecutive_run(rest))
            return {hamming_case::c3, rest.back()};          // {1..k, n-1}, k <= n-3
        return {hamming_case::c6, 0};
    }
    return {hamming_case::c5, 0};
}

inline const char* hamming_case_label(hamming_case c) {
    switch (c) {
        case hamming_case::c1: return "Hamming/Case1";
        case hamming_case::c2: return "Hamming/Case2";
        case hamming_case::c3: return "Hamming/Case3";
        case hamming_case::c4: return "Hamming/Case4";
        case hamming_case::c5: return "Hamming/Case5";
        case hamming_case::c6: return "Hamming/Case6";
    }
    return "";
}

}  // namespace detail

/// Maximum Hamming distance over D(S;n): n-1 when S is a consecutive run
/// touching index 1 or index n-1, n otherwise. The case label names the
/// branch of the proof that applies to S.
inline formula_result hamming_formula(const class_spec& spec) {
    detail::require_theorem_domain(spec, "hamming_formula");
    const auto d = detail::classify_hamming(spec);
    const bool damped =
        d.which == detail::hamming_case::c1 || d.which == detail::hamming_case::c2;
    return {damped ? spec.n() - 1 : spec.n(), detail::hamming_case_label(d.which)};
}

/// Lemma-forced entries: S = {1..k} forces value 1 at position k+1, and
/// S = {k..n-1} forces value n at position k. Both rules fire for S = [n-1].
/// Only lemma-derived entries are reported; other classes yield an empty map.
inline std::map<int, int> forced_entries(const class_spec& spec) {
    std::map<int, int> out;
    const auto& idx = spec.s().indices();
    if (idx.empty() || !detail::is_consecutive_run(idx)) return out;
    if (idx.front() == 1) out[idx.back() + 1] = 1;
    if (idx.back() == spec.n() - 1) out[idx.front()] = spec.n();
    return out;
}

namespace detail {

inline permutation make_perm(std::vector<int> e) { return permutation(std::move(e)); }

// Case 1, S = {1..k}: sigma = n n-1 .. n-k+1 | 1 2 .. n-k
//                     rho   = k+1 k .. 1 | k+2 .. n
inline std::pair<permutation, permutation> hamming_pair_case1(int n, int k) {
    std::vector<int> s, r;
    for (int i = 0; i < k; ++i) s.push_back(n - i);
    for (int v = 1; v <= n - k; ++v) s.push_back(v);
    for (int v = k + 1; v >= 1; --v) r.push_back(v);
    for (int v = k + 2; v <= n; ++v) r.push_back(v);
    return {make_perm(std::move(s)), make_perm(std::move(r))};
}

// Case 2, S = {k..n-1}: sigma = 1 .. k-1 | n n-1 .. k
//                       rho   = n-k+1 .. n-1 | n | n-k .. 1
inline std::pair<permutation, permutation> hamming_pair_case2(int n, int k) {
    std::vector<int> s, r;
    for (int v = 1; v <= k - 1; ++v) s.push_back(v);
    for (int v = n; v >= k; --v) s.push_back(v);
    for (int v = n - k + 1; v <= n - 1; ++v) r.push_back(v);
    r.push_back(n);
    for (int v = n - k; v >= 1; --v) r.push_back(v);
    return {make_perm(std::move(s)), make_perm(std::move(r))};
}

// Case 3, S = {1..k, n-1}: sigma = n .. n-k+1 | 1 .. n-k-2 | n-k n-k-1
//                          rho   = n-1 .. n-k | 2 .. n-k-1 | n 1
inline std::pair<permutation, permutation> hamming_pair_case3(int n, int k) {
    std::vector<int> s, r;
    for (int i = 0; i < k; ++i) s.push_back(n - i);
    for (int v = 1; v <= n - k - 2; ++v) s.push_back(v);
    s.push_back(n - k);
    s.push_back(n - k - 1);
    for (int i = 0; i < k; ++i) r.push_back(n - 1 - i);
    for (int v = 2; v <= n - k - 1; ++v) r.push_back(v);
    r.push_back(n);
    r.push_back(1);
    return {make_perm(std::move(s)), make_perm(std::move(r))};
}

// Case 4, S = {k..n-2}: sigma = 1 .. k-1 | n-1 n-2 .. k | n
//                       rho   = n-k .. n-2 | n | n-k-1 .. 1 | n-1
inline std::pair<permutation, permutation> hamming_pair_case4(int n, int k) {
    std::vector<int> s, r;
    for (int v = 1; v <= k - 1; ++v) s.push_back(v);
    for (int v = n - 1; v >= k; --v) s.push_back(v);
    s.push_back(n);
    for (int v = n - k; v <= n - 2; ++v) r.push_back(v);
    r.push_back(n);
    for (int v = n - k - 1; v >= 1; --v) r.push_back(v);
    r.push_back(n - 1);
    return {make_perm(std::move(s)), make_perm(std::move(r))};
}

inline int position_of(const permutation& p, int value) {
    for (int i = 1; i <= p.size(); ++i)
        if (p.entry(i) == value) return i;
    throw std::logic_error("position_of: value not present");
}

// Role choice shared by cases 5 and 6: the rho role must not carry value n-1
// at `pinned_pos`; when both members qualify, the lexicographically smaller
// one takes the sigma role so the output is deterministic.
inline std::pair<permutation, permutation> orient(const permutation& a, const permutation& b,
                                                  int pinned_pos) {
    const int top = a.size();  // recursive pair lives in S_{n-1}; its top value is n-1
    if (a.entry(pinned_pos) == top) return {a, b};
    if (b.entry(pinned_pos) == top) return {b, a};
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

inline permutation insert_value_at(const permutation& p, int position, int value) {
    std::vector<int> e;
    e.reserve(static_cast<std::size_t>(p.size()) + 1);
    for (int i = 1; i < position; ++i) e.push_back(p.entry(i));
    e.push_back(value);
    for (int i = position; i <= p.size(); ++i) e.push_back(p.entry(i));
    return make_perm(std::move(e));
}

}  // namespace detail

inline witness_pair hamming_witness(const class_spec& spec);

namespace detail {

// Case 5: append n to sigma; append n to rho then swap the values n and n-1.
inline std::pair<permutation, permutation> hamming_pair_case5(const class_spec& spec) {
    const int n = spec.n();
    const class_spec sub(descent_set(n - 1, spec.s().indices()));
    const witness_pair rec = hamming_witness(sub);
    auto [sig, rho] = orient(rec.sigma(), rec.rho(), n - 1);
    std::vector<int> s(sig.entries());
    s.push_back(n);
    std::vector<int> r(rho.entries());
    r.push_back(n);
    const int j = position_of(rho, n - 1);
    r[static_cast<std::size_t>(j - 1)] = n;
    r[static_cast<std::size_t>(n - 1)] = n - 1;
    return {make_perm(std::move(s)), make_perm(std::move(r))};
}

// Case 6: S = S' u {n-1}. Insert n (and relocate n-1) as the proof's two
// subcases prescribe, depending on whether n-2 lies in S'.
inline std::pair<permutation, permutation> hamming_pair_case6(const class_spec& spec) {
    const int n = spec.n();
    std::vector<int> rest(spec.s().indices().begin(), spec.s().indices().end() - 1);
    const bool deep_run = !rest.empty() && rest.back() == n - 2;
    const class_spec sub(descent_set(n - 1, rest));
    const witness_pair rec = hamming_witness(sub);

    if (deep_run) {
        // n-2 in S': k is the start of the maximal run of S' ending at n-2.
        int k = n - 2;
        const descent_set& sp = sub.s();
        while (k - 1 >= 1 && sp.contains(k - 1)) --k;
        if (k < 3)
            throw std::logic_error("hamming_witness: case 6 run start k < 3; S should have "
                                   "been dispatched to an explicit case");
        auto [sig, rho] = orient(rec.sigma(), rec.rho(), k);
        const int j = position_of(rho, n - 1);
        if (j > k - 2)
            throw std::logic_error("hamming_witness: case 6 expected n-1 before the run");
        permutation sig2 = insert_value_at(sig, k, n);
        std::vector<int> r(rho.entries());
        r[static_cast<std::size_t>(j - 1)] = n;
        permutation rho2 = insert_value_at(make_perm(std::move(r)), k, n - 1);
        return {sig2, rho2};
    }

    // n-2 not in S': insert at position n-1 instead of at the run start.
    auto [sig, rho] = orient(rec.sigma(), rec.rho(), n - 1);
    const int j = position_of(rho, n - 1);
    if (j > n - 3)
        throw std::logic_error("hamming_witness: case 6 expected n-1 before position n-2");
    permutation sig2 = insert_value_at(sig, n - 1, n);
    std::vector<int> r(rho.entries());
    r[static_cast<std::size_t>(j - 1)] = n;
    permutation rho2 = insert_value_at(make_perm(std::move(r)), n - 1, n - 1);
    return {sig2, rho2};
}

}  // namespace detail

/// A pair in D(S;n) whose Hamming distance equals hamming_formula(spec).
/// Cases 1-4 instantiate the explicit displays; cases 5 and 6 lift a pair
/// from S_{n-1} by the proof's insertion rules. Every step is re-verified;
/// a violation is a bug, reported as std::logic_error.
inline witness_pair hamming_witness(const class_spec& spec) {
    detail::require_theorem_domain(spec, "hamming_witness");
    const formula_result expect = hamming_formula(spec);
    const auto d = detail::classify_hamming(spec);
    std::pair<permutation, permutation> pr = [&] {
        switch (d.which) {
            case detail::hamming_case::c1: return detail::hamming_pair_case1(spec.n(), d.k);
            case detail::hamming_case::c2: return detail::hamming_pair_case2(spec.n(), d.k);
            case detail::hamming_case::c3: return detail::hamming_pair_case3(spec.n(), d.k);
            case detail::hamming_case::c4: return detail::hamming_pair_case4(spec.n(), d.k);
            case detail::hamming_case::c5: return detail::hamming_pair_case5(spec);
            case detail::hamming_case::c6: return detail::hamming_pair_case6(spec);
        }
        throw std::logic_error("hamming_witness: unreachable");
    }();
    if (descents(pr.first) != spec.s())
        throw std::logic_error("hamming_witness: constructed pair left the class");
    return witness_pair(std::move(pr.first), std::move(pr.second), expect.value,
                        metric_kind::hamming);
}

/// Maximum l-infinity distance over D([n-i];n) = max(i-1, n-i), for
/// i in 2..n-1 (the descent set is the full prefix run of length n-i).
inline formula_result linf_prefix_formula(int n, int i) {
    if (n < 3) throw std::domain_error("linf_prefix_formula: theorem requires n >= 3");
    if (i < 2 || i > n - 1)
        throw std::domain_error("linf_prefix_formula: i must lie in [2, n-1]");
    const int left = i - 1, right = n - i;
    return left >= right ? formula_result{left, "LInf/Prefix/i-1"}
                         : formula_result{right, "LInf/Prefix/n-i"};
}

/// The display pair for D([n-i];n): sigma runs n-i+1 .. 2, 1, then ascends
/// n-i+2 .. n; rho runs n .. i+1 then ascends 1 .. i.
inline witness_pair linf_prefix_witness(int n, int i) {
    const formula_result expect = linf_prefix_formula(n, i);
    std::vector<int> s, r;
    for (int v = n - i + 1; v >= 2; --v) s.push_back(v);
    s.push_back(1);
    for (int v = n - i + 2; v <= n; ++v) s.push_back(v);
    for (int v = n; v >= i + 1; --v) r.push_back(v);
    for (int v = 1; v <= i; ++v) r.push_back(v);
    return witness_pair(permutation(std::move(s)), permutation(std::move(r)), expect.value,
                        metric_kind::linf);
}

/// The piecewise expression of the singleton theorem with no n >= 6 gate.
/// Used by the verification harness to record, not assert, how small n
/// compares against the formula's extrapolation.
inline int linf_singleton_expression(int n, int i) {
    if (i == 1 || i == n - 1) return n - 2;
    if (i <= n / 2) return n - i;
    return i;
}

namespace detail {
inline const char* singleton_branch(int n, int i) {
    if (i == 1 || i == n - 1) return "endpoint";
    if (i <= n / 2) return "n-i";
    return "i";
}
}  // namespace detail

/// Maximum l-infinity distance over D({i};n) for n >= 6: n-2 at the
/// endpoints, n-i up to the midpoint, i beyond it.
inline formula_result linf_singleton_formula(int n, int i) {
    if (n < 6) throw std::domain_error("linf_singleton_formula: theorem requires n >= 6");
    if (i < 1 || i > n - 1)
        throw std::domain_error("linf_singleton_formula: i must lie in [1, n-1]");
    return {linf_singleton_expression(n, i),
            std::string("LInf/Singleton/") + detail::singleton_branch(n, i)};
}

/// The display pair for D({i};n): sigma is the identity with i and i+1
/// swapped; rho ascends n-i+1 .. n then 1 .. n-i.
inline witness_pair linf_singleton_witness(int n, int i) {
    const formula_result expect = linf_singleton_formula(n, i);
    std::vector<int> s, r;
    for (int v = 1; v <= i - 1; ++v) s.push_back(v);
    s.push_back(i + 1);
    s.push_back(i);
    for (int v = i + 2; v <= n; ++v) s.push_back(v);
    for (int v = n - i + 1; v <= n; ++v) r.push_back(v);
    for (int v = 1; v <= n - i; ++v) r.push_back(v);
    return witness_pair(permutation(std::move(s)), permutation(std::move(r)), expect.value,
                        metric_kind::linf);
}

namespace detail {

enum class linf_family { prefix_run, suffix_run, singleton, co_singleton, none };

struct linf_dispatch {
    linf_family family;
    int i;  // the theorem parameter for the (possibly complemented) family
};

inline linf_dispatch classify_linf(const class_spec& spec) {
    const int n = spec.n();
    const auto& idx = spec.s().indices();
    const bool run = is_consecutive_run(idx);
    if (run && idx.front() == 1) return {linf_family::prefix_run, n - idx.back()};
    if (run && idx.back() == n - 1) return {linf_family::suffix_run, n - idx.front() + 1};
    if (idx.size() == 1 && n >= 6) return {linf_family::singleton, idx.front()};
    if (static_cast<int>(idx.size()) == n - 2 && n >= 6) {
        const auto gap = complement(spec.s());
        return {linf_family::co_singleton, gap.indices().front()};
    }
    return {linf_family::none, 0};
}

}  // namespace detail

/// Dispatches S (or its complement) to a covered l-infinity family: prefix
/// runs [n-i], their suffix-run complements, singletons {i} with n >= 6, and
/// their complements. Returns nullopt for the families the theorems leave
/// open.
inline std::optional<formula_result> linf_formula_via_complement(const class_spec& spec) {
    detail::require_theorem_domain(spec, "linf_formula_via_complement");
    const auto d = detail::classify_linf(spec);
    switch (d.family) {
        case detail::linf_family::prefix_run:
            return linf_prefix_formula(spec.n(), d.i);
        case detail::linf_family::suffix_run: {
            formula_result f = linf_prefix_formula(spec.n(), d.i);
            f.case_label = "LInf/PrefixBar/" + f.case_label.substr(std::string("LInf/Prefix/").size());
            return f;
        }
        case detail::linf_family::singleton:
            return linf_singleton_formula(spec.n(), d.i);
        case detail::linf_family::co_singleton: {
            formula_result f = linf_singleton_formula(spec.n(), d.i);
            f.case_label =
                "LInf/SingletonBar/" + f.case_label.substr(std::string("LInf/Singleton/").size());
            return f;
        }
        case detail::linf_family::none: return std::nullopt;
    }
    return std::nullopt;
}

/// Witness pairs for the same four families. Complemented families map the
/// direct display pair through phi, which preserves l-infinity distances and
/// lands in the complement class.
inline std::optional<witness_pair> linf_witness_via_complement(const class_spec& spec) {
    detail::require_theorem_domain(spec, "linf_witness_via_complement");
    const auto d = detail::classify_linf(spec);
    switch (d.family) {
        case detail::linf_family::prefix_run: return linf_prefix_witness(spec.n(), d.i);
        case detail::linf_family::suffix_run: {
            const witness_pair w = linf_prefix_witness(spec.n(), d.i);
            return witness_pair(phi(w.sigma()), phi(w.rho()), w.claimed_distance(),
                                metric_kind::linf);
        }
        case detail::linf_family::singleton: return linf_singleton_witness(spec.n(), d.i);
        case detail::linf_family::co_singleton: {
            const witness_pair w = linf_singleton_witness(spec.n(), d.i);
            return witness_pair(phi(w.sigma()), phi(w.rho()), w.claimed_distance(),
                                metric_kind::linf);
        }
        case detail::linf_family::none: return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace descent_metrics
