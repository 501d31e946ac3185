// solver.hpp -- exhaustive max/min distance scans over descent classes and
// the verification harness that certifies the closed-form theorems against
// brute force.

#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "descent_metrics/descent_class.hpp"
#include "descent_metrics/descent_set.hpp"
#include "descent_metrics/extremal.hpp"
#include "descent_metrics/permutation.hpp"
#include "descent_metrics/text_io.hpp"

namespace descent_metrics {

class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t default_scan_budget = 5'000'000'000ULL;

/// Cumulative pairwise-comparison budget, shared across the scans of a sweep.
class budget_tracker {
public:
    explicit budget_tracker(std::uint64_t limit = default_scan_budget) : limit_(limit) {}

    void charge(std::uint64_t pairs) {
        const std::uint64_t before = used_.fetch_add(pairs, std::memory_order_relaxed);
        if (before + pairs > limit_)
            throw budget_error("comparison budget of " + std::to_string(limit_) +
                               " exceeded; rerun with a larger budget");
    }

    std::uint64_t used() const noexcept { return used_.load(std::memory_order_relaxed); }
    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t limit_;
    std::atomic<std::uint64_t> used_{0};
};

struct scan_options {
    std::uint64_t budget = default_scan_budget;
    std::size_t buffer_cap = default_materialize_cap;
    bool early_exit = true;
    unsigned threads = 1;
};

struct extreme_result {
    int value;
    witness_pair witness;
};

namespace detail {

inline std::uint64_t pair_count(std::uint64_t m) { return m * (m - 1) / 2; }

// Attainable bound that lets a scan stop early: reaching it cannot be beaten.
inline int scan_bound(metric_kind metric, int n, bool want_max) {
    if (want_max) return metric == metric_kind::hamming ? n : n - 1;
    return metric == metric_kind::hamming ? 2 : 1;  // distinct rearrangements never differ less
}

struct scan_state {
    int best = 0;
    std::optional<permutation> a, b;

    bool offer(bool want_max, int d, const permutation& p, const permutation& q) {
        const bool better = !a.has_value() || (want_max ? d > best : d < best);
        if (better) {
            best = d;
            a = p;
            b = q;
        }
        return better;
    }
};

// Exhaustive pairwise scan in lexicographic enumeration order. The witness is
// the first pair attaining the extreme under strict improvement, which is the
// lexicographically smallest realizing (sigma, rho) concatenation because the
// enumeration itself is lexicographic.
inline extreme_result scan_class(const class_spec& spec, metric_kind metric, bool want_max,
                                 const scan_options& options, budget_tracker* tracker) {
    const std::uint64_t m = class_count(spec);
    if (m < 2)
        throw std::invalid_argument("no distinct pairs in D(" + to_string(spec.s()) + ";" +
                                    std::to_string(spec.n()) + ")");
    if (tracker) tracker->charge(pair_count(m));
    const int bound = scan_bound(metric, spec.n(), want_max);
    scan_state state;

    if (m <= options.buffer_cap) {
        const auto members = materialize(spec, options.buffer_cap);
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const int d = distance(members[i], members[j], metric);
                if (state.offer(want_max, d, members[i], members[j]) &&
                    options.early_exit && state.best == bound)
                    goto done;
            }
        }
    } else {
        // Slow path for classes that exceed the buffer: stream the outer loop
        // and re-enumerate the inner loop from scratch each round.
        class_enumerator outer(spec);
        std::uint64_t i = 0;
        while (auto p = outer.next()) {
            class_enumerator inner(spec);
            for (std::uint64_t skip = 0; skip <= i; ++skip) inner.next();
            while (auto q = inner.next()) {
                const int d = distance(*p, *q, metric);
                if (state.offer(want_max, d, *p, *q) && options.early_exit &&
                    state.best == bound)
                    goto done;
            }
            ++i;
        }
    }

done:
    return {state.best, witness_pair(std::move(*state.a), std::move(*state.b), state.best,
                                     metric)};
}

}  // namespace detail

/// Exact maximum distance over all unordered pairs of D(S;n), with the
/// lexicographically smallest realizing pair as witness.
inline extreme_result brute_max(const class_spec& spec, metric_kind metric,
                                const scan_options& options = {}) {
    budget_tracker tracker(options.budget);
    return detail::scan_class(spec, metric, true, options, &tracker);
}

/// Exact minimum distance over distinct pairs. For every nonempty proper S
/// this lands on 2 (Hamming) and 1 (l-infinity); the harness asserts that,
/// this operation merely computes it.
inline extreme_result brute_min(const class_spec& spec, metric_kind metric,
                                const scan_options& options = {}) {
    budget_tracker tracker(options.budget);
    return detail::scan_class(spec, metric, false, options, &tracker);
}

/// Everything known about one class: cardinality, brute extremes with
/// witnesses, closed-form predictions where the theorems apply, and
/// prediction-vs-brute agreement flags.
struct class_report {
    class_spec spec;
    std::uint64_t cardinality = 0;
    std::optional<int> max_hamming, min_hamming, max_linf, min_linf;
    std::optional<witness_pair> witness_max_hamming, witness_max_linf;
    std::optional<formula_result> predicted_hamming;
    std::optional<formula_result> predicted_linf;
    bool linf_covered = false;
    std::optional<bool> agree_hamming, agree_linf;
};

inline class_report build_class_report(const class_spec& spec, const scan_options& options,
                                       budget_tracker* tracker) {
    class_report rep{spec};
    rep.cardinality = class_count(spec);
    if (rep.cardinality >= 2) {
        auto mh = detail::scan_class(spec, metric_kind::hamming, true, options, tracker);
        rep.max_hamming = mh.value;
        rep.witness_max_hamming = std::move(mh.witness);
        auto ml = detail::scan_class(spec, metric_kind::linf, true, options, tracker);
        rep.max_linf = ml.value;
        rep.witness_max_linf = std::move(ml.witness);
        rep.min_hamming = detail::scan_class(spec, metric_kind::hamming, false, options, tracker).value;
        rep.min_linf = detail::scan_class(spec, metric_kind::linf, false, options, tracker).value;
    }
    if (spec.n() >= 3 && !spec.s().is_empty() && !spec.s().is_full()) {
        rep.predicted_hamming = hamming_formula(spec);
        rep.predicted_linf = linf_formula_via_complement(spec);
        rep.linf_covered = rep.predicted_linf.has_value();
    }
    if (rep.predicted_hamming && rep.max_hamming)
        rep.agree_hamming = rep.predicted_hamming->value == *rep.max_hamming;
    if (rep.predicted_linf && rep.max_linf)
        rep.agree_linf = rep.predicted_linf->value == *rep.max_linf;
    return rep;
}

inline class_report build_class_report(const class_spec& spec, const scan_options& options = {}) {
    budget_tracker tracker(options.budget);
    return build_class_report(spec, options, &tracker);
}

namespace detail {

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&] {
        while (true) {
            const std::size_t i = cursor.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned spawn = std::min<std::size_t>(threads, count);
    pool.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

inline descent_set set_from_mask(int n, std::uint64_t mask) {
    std::vector<int> idx;
    for (int i = 1; i <= n - 1; ++i)
        if (mask & (std::uint64_t{1} << (i - 1))) idx.push_back(i);
    return descent_set(n, std::move(idx));
}

}  // namespace detail

struct theorem_check {
    std::string name;
    std::size_t instances = 0;
    std::vector<std::string> disagreements;
};

/// Brute value vs the singleton formula's expression for n outside the
/// theorem's domain (n < 6); recorded, never asserted.
struct singleton_observation {
    int n;
    int i;
    int brute_value;
    int expression_value;
    bool matches;
};

struct sweep_options {
    int n_min = 3;
    int n_max = 8;
    int prefix_n_max = 0;     // 0: follow n_max
    int singleton_n_max = 0;  // 0: follow n_max
    scan_options scan{};
};

struct sweep_summary {
    sweep_options options;
    theorem_check hamming_max{"Theorem 3.3 (max Hamming, all S)"};
    theorem_check linf_prefix{"Theorem 4.1 (max l-inf, prefix runs S=[n-i])"};
    theorem_check linf_singleton{"Theorem 4.2 (max l-inf, singletons, n>=6)"};
    theorem_check linf_complement{"Theorem 5.5 (l-inf complement equality)"};
    theorem_check minima{"Remark (min d_H=2, min d_linf=1)"};
    std::vector<singleton_observation> singleton_small_n;
    bool truncated = false;
    std::string truncation_note;
    std::uint64_t comparisons_charged = 0;

    std::size_t total_disagreements() const {
        return hamming_max.disagreements.size() + linf_prefix.disagreements.size() +
               linf_singleton.disagreements.size() + linf_complement.disagreements.size() +
               minima.disagreements.size();
    }
    bool certified() const { return total_disagreements() == 0 && !truncated; }
};

namespace detail {

struct sweep_instance {
    std::uint64_t mask;
    class_spec spec;
    std::uint64_t cardinality;
    // results
    int max_h = 0, min_h = 0, max_l = 0, min_l = 0;
    formula_result predicted_h{0, ""};
    bool witness_ok = false;
    std::string witness_note;
};

inline std::string spec_tag(const class_spec& spec) {
    return "n=" + std::to_string(spec.n()) + " S={" + to_string(spec.s()) + "}";
}

}  // namespace detail

/// Certifies Theorems 3.3, 4.1, 4.2, 5.5 and the minimum-distance remark by
/// exhaustive scans. The budget is charged deterministically, in instance
/// order, before any parallel work starts, so results and truncation points
/// do not depend on the thread count. On budget exhaustion the summary is
/// partial and carries an explicit truncation record.
inline sweep_summary verify_sweep(const sweep_options& options = {}) {
    sweep_summary summary;
    summary.options = options;
    budget_tracker tracker(options.scan.budget);
    const int n_lo = std::max(3, options.n_min);
    const int prefix_n_max = options.prefix_n_max ? options.prefix_n_max : options.n_max;
    const int singleton_n_max =
        options.singleton_n_max ? options.singleton_n_max : options.n_max;
    bool out_of_budget = false;
    auto note_truncation = [&](const std::string& where, const budget_error& e) {
        out_of_budget = true;
        summary.truncated = true;
        if (!summary.truncation_note.empty()) return;
        summary.truncation_note = where + ": " + e.what();
    };

    // Full cross product of nonempty proper S per n: Theorems 3.3 and 5.5
    // plus the minimum-distance remark, four scans per class.
    for (int n = n_lo; n <= options.n_max && !out_of_budget; ++n) {
        std::vector<detail::sweep_instance> instances;
        const std::uint64_t full = (std::uint64_t{1} << (n - 1)) - 1;
        for (std::uint64_t mask = 1; mask < full; ++mask) {
            class_spec spec{detail::set_from_mask(n, mask)};
            const std::uint64_t m = class_count(spec);
            try {
                tracker.charge(4 * detail::pair_count(m));
            } catch (const budget_error& e) {
                note_truncation("all-S sweep at n=" + std::to_string(n), e);
                break;
            }
            instances.push_back({mask, std::move(spec), m});
        }
        const bool level_complete = instances.size() == full - 1;

        detail::parallel_for(instances.size(), options.scan.threads, [&](std::size_t idx) {
            detail::sweep_instance& inst = instances[idx];
            inst.max_h =
                detail::scan_class(inst.spec, metric_kind::hamming, true, options.scan, nullptr)
                    .value;
            inst.max_l =
                detail::scan_class(inst.spec, metric_kind::linf, true, options.scan, nullptr)
                    .value;
            inst.min_h =
                detail::scan_class(inst.spec, metric_kind::hamming, false, options.scan, nullptr)
                    .value;
            inst.min_l =
                detail::scan_class(inst.spec, metric_kind::linf, false, options.scan, nullptr)
                    .value;
            inst.predicted_h = hamming_formula(inst.spec);
            try {
                const witness_pair w = hamming_witness(inst.spec);
                inst.witness_ok = w.claimed_distance() == inst.predicted_h.value;
                if (!inst.witness_ok)
                    inst.witness_note = "witness distance " +
                                        std::to_string(w.claimed_distance()) +
                                        " != formula " + std::to_string(inst.predicted_h.value);
            } catch (const std::logic_error& e) {
                inst.witness_ok = false;
                inst.witness_note = e.what();
            }
        });

        std::vector<int> max_l_by_mask(static_cast<std::size_t>(full) + 1, -1);
        for (const auto& inst : instances) {
            summary.hamming_max.instances += 1;
            if (inst.max_h != inst.predicted_h.value)
                summary.hamming_max.disagreements.push_back(
                    detail::spec_tag(inst.spec) + ": brute max d_H=" +
                    std::to_string(inst.max_h) + " formula=" +
                    std::to_string(inst.predicted_h.value));
            if (!inst.witness_ok)
                summary.hamming_max.disagreements.push_back(detail::spec_tag(inst.spec) +
                                                            ": " + inst.witness_note);
            summary.minima.instances += 1;
            if (inst.min_h != 2 || inst.min_l != 1)
                summary.minima.disagreements.push_back(
                    detail::spec_tag(inst.spec) + ": min d_H=" + std::to_string(inst.min_h) +
                    " min d_linf=" + std::to_string(inst.min_l));
            max_l_by_mask[inst.mask] = inst.max_l;
        }
        if (level_complete) {
            for (const auto& inst : instances) {
                const std::uint64_t comp = full ^ inst.mask;
                if (inst.mask >= comp) continue;
                summary.linf_complement.instances += 1;
                if (inst.max_l != max_l_by_mask[comp])
                    summary.linf_complement.disagreements.push_back(
                        detail::spec_tag(inst.spec) + ": max d_linf=" +
                        std::to_string(inst.max_l) + " but complement gives " +
                        std::to_string(max_l_by_mask[comp]));
            }
        }
    }

    // Theorem 4.1 family: S = [n-i].
    for (int n = n_lo; n <= prefix_n_max && !out_of_budget; ++n) {
        for (int i = 2; i <= n - 1; ++i) {
            std::vector<int> idx;
            for (int t = 1; t <= n - i; ++t) idx.push_back(t);
            class_spec spec{descent_set(n, std::move(idx))};
            int brute;
            try {
                brute = detail::scan_class(spec, metric_kind::linf, true, options.scan, &tracker)
                            .value;
            } catch (const budget_error& e) {
                note_truncation("prefix-run sweep at n=" + std::to_string(n), e);
                break;
            }
            const formula_result f = linf_prefix_formula(n, i);
            const witness_pair w = linf_prefix_witness(n, i);
            summary.linf_prefix.instances += 1;
            if (brute != f.value || w.claimed_distance() != f.value)
                summary.linf_prefix.disagreements.push_back(
                    detail::spec_tag(spec) + " (i=" + std::to_string(i) + "): brute=" +
                    std::to_string(brute) + " formula=" + std::to_string(f.value) +
                    " witness=" + std::to_string(w.claimed_distance()));
        }
    }

    // Theorem 4.2 family: S = {i}; informational below n = 6.
    for (int n = n_lo; n <= singleton_n_max && !out_of_budget; ++n) {
        for (int i = 1; i <= n - 1; ++i) {
            class_spec spec{descent_set(n, {i})};
            if (class_count(spec) < 2) continue;  // n = 2 only
            int brute;
            try {
                brute = detail::scan_class(spec, metric_kind::linf, true, options.scan, &tracker)
                            .value;
            } catch (const budget_error& e) {
                note_truncation("singleton sweep at n=" + std::to_string(n), e);
                break;
            }
            if (n >= 6) {
                const formula_result f = linf_singleton_formula(n, i);
                const witness_pair w = linf_singleton_witness(n, i);
                summary.linf_singleton.instances += 1;
                if (brute != f.value || w.claimed_distance() != f.value)
                    summary.linf_singleton.disagreements.push_back(
                        detail::spec_tag(spec) + ": brute=" + std::to_string(brute) +
                        " formula=" + std::to_string(f.value) + " witness=" +
                        std::to_string(w.claimed_distance()));
            } else {
                const int expr = linf_singleton_expression(n, i);
                summary.singleton_small_n.push_back({n, i, brute, expr, brute == expr});
            }
        }
    }

    summary.comparisons_charged = tracker.used();
    return summary;
}

inline sweep_summary verify_sweep(int n_min, int n_max) {
    sweep_options options;
    options.n_min = n_min;
    options.n_max = n_max;
    return verify_sweep(options);
}

/// One row of the open-problem table: the class (keyed by the
/// lexicographically smaller of S and its complement), its brute maximum
/// l-infinity distance, and whether a theorem covers it.
struct explore_row {
    descent_set s;
    descent_set s_bar;
    std::uint64_t cardinality;
    int max_linf;
    bool covered;
    std::optional<formula_result> predicted;
};

/// Data for the open problem: brute max l-infinity per class at this n,
/// deduplicated through the complement symmetry.
inline std::vector<explore_row> explore_linf(int n, const scan_options& options = {}) {
    if (n < 3) throw std::invalid_argument("explore_linf: need n >= 3");
    budget_tracker tracker(options.budget);
    std::vector<explore_row> rows;
    const std::uint64_t full = (std::uint64_t{1} << (n - 1)) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        descent_set s = detail::set_from_mask(n, mask);
        descent_set bar = complement(s);
        if (s.indices() == bar.indices())
            throw std::logic_error("explore_linf: S equal to its complement cannot happen");
        if (bar.indices() < s.indices()) continue;  // keep the lex-smaller key
        class_spec spec{s};
        tracker.charge(detail::pair_count(class_count(spec)));
        rows.push_back({std::move(s), std::move(bar), class_count(spec), 0, false, std::nullopt});
    }
    std::sort(rows.begin(), rows.end(),
              [](const explore_row& a, const explore_row& b) { return a.s.indices() < b.s.indices(); });
    detail::parallel_for(rows.size(), options.threads, [&](std::size_t idx) {
        explore_row& row = rows[idx];
        class_spec spec{row.s};
        row.max_linf = detail::scan_class(spec, metric_kind::linf, true, options, nullptr).value;
        row.predicted = linf_formula_via_complement(spec);
        row.covered = row.predicted.has_value();
    });
    return rows;
}

}  // namespace descent_metrics
