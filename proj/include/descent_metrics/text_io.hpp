// text_io.hpp -- the text formats: space-separated permutations (compact
// digit form accepted on input for n <= 9), comma-separated descent sets,
// the class file form with its "# n=.. S=.." header, and witness blocks.

#pragma once

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "descent_metrics/descent_class.hpp"
#include "descent_metrics/descent_set.hpp"
#include "descent_metrics/extremal.hpp"
#include "descent_metrics/permutation.hpp"

namespace descent_metrics {

/// Entries joined by single spaces, e.g. "5 8 3 2 7 1 6 4".
inline std::string to_string(const permutation& p) {
    std::string out;
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) out += ' ';
        out += std::to_string(p.entry(i));
    }
    return out;
}

/// Digit string like "58327164"; only defined for n <= 9.
inline std::string to_compact_string(const permutation& p) {
    if (p.size() > 9)
        throw std::invalid_argument("to_compact_string: compact form requires n <= 9");
    std::string out;
    for (int i = 1; i <= p.size(); ++i) out += static_cast<char>('0' + p.entry(i));
    return out;
}

/// Comma-separated indices with no spaces, e.g. "2,3,5,7"; empty string for
/// the empty set. The n is carried separately.
inline std::string to_string(const descent_set& s) {
    std::string out;
    for (std::size_t k = 0; k < s.indices().size(); ++k) {
        if (k > 0) out += ',';
        out += std::to_string(s.indices()[k]);
    }
    return out;
}

namespace detail {
inline std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    return text;
}

inline int parse_int(std::string_view token, const char* what) {
    if (token.empty()) throw std::invalid_argument(std::string(what) + ": empty number");
    int value = 0;
    for (char c : token) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument(std::string(what) + ": bad number '" +
                                        std::string(token) + "'");
        value = value * 10 + (c - '0');
        if (value > 1'000'000)
            throw std::invalid_argument(std::string(what) + ": number out of range");
    }
    return value;
}
}  // namespace detail

/// Accepts the space-separated form for any n, or the compact digit form
/// ("58327164") when n <= 9.
inline permutation parse_permutation(std::string_view text) {
    const std::string_view body = detail::trim(text);
    if (body.empty()) throw std::invalid_argument("parse_permutation: empty input");
    if (body.find(' ') == std::string_view::npos && body.size() > 1) {
        std::vector<int> e;
        for (char c : body) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("parse_permutation: bad compact form '" +
                                            std::string(body) + "'");
            e.push_back(c - '0');
        }
        if (e.size() > 9)
            throw std::invalid_argument("parse_permutation: compact form only covers n <= 9; "
                                        "use space-separated entries");
        return permutation(std::move(e));
    }
    std::vector<int> e;
    std::size_t pos = 0;
    while (pos < body.size()) {
        while (pos < body.size() && body[pos] == ' ') ++pos;
        std::size_t end = pos;
        while (end < body.size() && body[end] != ' ') ++end;
        if (end > pos) e.push_back(detail::parse_int(body.substr(pos, end - pos), "parse_permutation"));
        pos = end;
    }
    return permutation(std::move(e));
}

/// Parses "2,3,5,7" (or "" for the empty set) against a given n.
inline descent_set parse_descent_set(std::string_view text, int n) {
    const std::string_view body = detail::trim(text);
    std::vector<int> idx;
    if (!body.empty()) {
        std::size_t pos = 0;
        while (true) {
            const std::size_t comma = body.find(',', pos);
            const auto token = body.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
            idx.push_back(detail::parse_int(detail::trim(token), "parse_descent_set"));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    return descent_set(n, std::move(idx));
}

inline std::string class_file_header(const class_spec& spec) {
    return "# n=" + std::to_string(spec.n()) + " S=" + to_string(spec.s());
}

/// Header line then one member per line, lexicographic, space-separated.
inline void write_class(std::ostream& os, const class_spec& spec) {
    os << class_file_header(spec) << '\n';
    for_each_member(spec, [&](const permutation& p) { os << to_string(p) << '\n'; });
}

/// Witness block: "# metric=<H|L> distance=<d> case=<label>" then the two
/// permutation lines.
inline std::string to_string(const witness_pair& w, std::string_view case_label) {
    std::string out = "# metric=";
    out += (w.metric() == metric_kind::hamming ? 'H' : 'L');
    out += " distance=" + std::to_string(w.claimed_distance());
    out += " case=" + std::string(case_label) + "\n";
    out += to_string(w.sigma()) + "\n";
    out += to_string(w.rho()) + "\n";
    return out;
}

}  // namespace descent_metrics
