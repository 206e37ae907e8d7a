#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "binary_io.hpp"
#include "collection.hpp"
#include "common.hpp"
#include "rindex.hpp"
#include "rmq.hpp"
#include "wavelet_tree.hpp"

namespace docfreq {

// Distinct values of DA[first..last] by RMQ recursion over C (previous row of
// the same document): a row is a leftmost occurrence iff C[row] < first.
// Returns (doc, row) pairs in discovery order.
template <class DaFn>
std::vector<std::pair<doc_id, std::size_t>> muthu_list(const rmq_min<std::uint32_t>& c, std::size_t first,
                                                       std::size_t last, DaFn&& da_at) {
    if (first < 1 || first > last || last > c.size())
        throw error(errc::empty_interval, "[" + std::to_string(first) + ", " + std::to_string(last) + "]");
    std::vector<std::pair<doc_id, std::size_t>> out;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{first, last}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        if (a > b)
            continue;
        auto i = c.query(a, b);
        if (c.value(i) >= first)
            continue;
        out.emplace_back(da_at(i), i);
        stack.emplace_back(i + 1, b);
        stack.emplace_back(a, i - 1);
    }
    return out;
}

// Sadakane's document frequency: leftmost occurrences by a left-first
// traversal of RMQ-min over C, rightmost by a right-first traversal of
// RMQ-max over CNext, each stopping at an already reported document.
class sada_index {
public:
    sada_index() = default;

    // prev_same / next_same are 1-based (element 0 unused).
    sada_index(std::size_t t, const std::vector<std::size_t>& prev_same, const std::vector<std::size_t>& next_same)
        : t_(t), prev_(narrow(prev_same)), next_(narrow(next_same)) {}

    std::size_t t() const { return t_; }
    const rmq_min<std::uint32_t>& prev() const { return prev_; }
    const rmq_max<std::uint32_t>& next() const { return next_; }

    template <class DaFn>
    std::vector<std::pair<doc_id, std::size_t>> leftmost(std::size_t first, std::size_t last, DaFn&& da_at) const {
        check(first, last);
        std::vector<bool> marked(t_ + 1, false);
        std::vector<std::pair<doc_id, std::size_t>> out;
        traverse(first, last, marked, out, da_at, [&](std::size_t a, std::size_t b) { return prev_.query(a, b); },
                 false);
        return out;
    }

    template <class DaFn>
    std::vector<std::pair<doc_id, std::size_t>> rightmost(std::size_t first, std::size_t last, DaFn&& da_at) const {
        check(first, last);
        std::vector<bool> marked(t_ + 1, false);
        std::vector<std::pair<doc_id, std::size_t>> out;
        traverse(first, last, marked, out, da_at, [&](std::size_t a, std::size_t b) { return next_.query(a, b); },
                 true);
        return out;
    }

    doc_freq query_range(const collection& coll, const rindex_set& text, std::size_t first, std::size_t last) const {
        auto da_at = [&](std::size_t row) { return coll.doc_of(text.global.sa_access(row)); };
        auto lo = leftmost(first, last, da_at);
        auto hi = rightmost(first, last, da_at);
        std::vector<std::size_t> right(t_ + 1, 0);
        for (auto [d, i] : hi)
            right[d] = i;
        doc_freq out;
        for (auto [d, i] : lo) {
            if (right[d] == 0)
                throw error(errc::doc_mismatch, "document " + std::to_string(d) + " has no rightmost occurrence");
            out[d] = text.freq_from_extremes(coll, d, i, right[d]);
        }
        if (lo.size() != hi.size())
            throw error(errc::doc_mismatch, "leftmost and rightmost document sets differ");
        return out;
    }

    doc_freq query(std::string_view pattern, const collection& coll, const rindex_set& text) const {
        auto range = text.global.pattern_interval(pattern);
        if (!range)
            return {};
        return query_range(coll, text, range->first, range->last);
    }

    void serialize(byte_writer& out) const {
        out.put<std::uint64_t>(t_);
        out.put_vector(prev_.values());
        out.put_vector(next_.values());
    }

    static sada_index load(byte_reader& in) {
        sada_index s;
        s.t_ = in.get<std::uint64_t>();
        s.prev_ = rmq_min<std::uint32_t>(in.get_vector<std::uint32_t>());
        s.next_ = rmq_max<std::uint32_t>(in.get_vector<std::uint32_t>());
        if (s.prev_.size() != s.next_.size())
            throw error(errc::corrupt_container, "C and CNext differ in length");
        return s;
    }

private:
    static std::vector<std::uint32_t> narrow(const std::vector<std::size_t>& v) {
        return std::vector<std::uint32_t>(v.begin() + 1, v.end());
    }

    void check(std::size_t first, std::size_t last) const {
        if (first < 1 || first > last || last > prev_.size())
            throw error(errc::empty_interval, "[" + std::to_string(first) + ", " + std::to_string(last) + "]");
    }

    template <class DaFn, class Argext>
    void traverse(std::size_t a, std::size_t b, std::vector<bool>& marked,
                  std::vector<std::pair<doc_id, std::size_t>>& out, DaFn& da_at, Argext argext,
                  bool right_first) const {
        if (a > b)
            return;
        auto i = argext(a, b);
        auto d = da_at(i);
        if (marked[d])
            return;
        marked[d] = true;
        out.emplace_back(d, i);
        if (right_first) {
            traverse(i + 1, b, marked, out, da_at, argext, right_first);
            traverse(a, i - 1, marked, out, da_at, argext, right_first);
        } else {
            traverse(a, i - 1, marked, out, da_at, argext, right_first);
            traverse(i + 1, b, marked, out, da_at, argext, right_first);
        }
    }

    std::size_t t_ = 0;
    rmq_min<std::uint32_t> prev_;
    rmq_max<std::uint32_t> next_;
};

// Frequencies by two wavelet-tree ranks per distinct document of DA[range].
class wt_index {
public:
    wt_index() = default;

    // da is 1-based (element 0 unused).
    explicit wt_index(const std::vector<doc_id>& da) : wt_(std::vector<std::uint32_t>(da.begin() + 1, da.end())) {}

    const wavelet_tree& tree() const { return wt_; }

    doc_freq query_range(std::size_t first, std::size_t last) const {
        if (first < 1 || first > last || last > wt_.size())
            throw error(errc::empty_interval, "[" + std::to_string(first) + ", " + std::to_string(last) + "]");
        doc_freq out;
        for (auto d : wt_.distinct(first, last))
            out.emplace_hint(out.end(), d, wt_.rank(d, last) - wt_.rank(d, first - 1));
        return out;
    }

    doc_freq query(std::string_view pattern, const rindex_set& text) const {
        auto range = text.global.pattern_interval(pattern);
        if (!range)
            return {};
        return query_range(range->first, range->last);
    }

    void serialize(byte_writer& out) const { wt_.serialize(out); }
    static wt_index load(byte_reader& in) {
        wt_index w;
        w.wt_ = wavelet_tree::load(in);
        return w;
    }

private:
    wavelet_tree wt_;
};

// Locate every occurrence and tally its document.
inline doc_freq scan_freq(std::string_view pattern, const collection& coll, const rindex_set& text) {
    auto range = text.global.pattern_interval(pattern);
    if (!range)
        return {};
    doc_freq out;
    for (auto p : text.global.locate(*range))
        ++out[coll.doc_of(p)];
    return out;
}

}  // namespace docfreq
