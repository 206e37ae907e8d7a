#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "binary_io.hpp"
#include "bit_vector.hpp"
#include "collection.hpp"
#include "common.hpp"
#include "rindex.hpp"
#include "rmq.hpp"

namespace docfreq {

// Run-length encoded ILCP: run values plus a bitvector marking the first
// position of every run, so run k starts at select1(k).
class rle_ilcp {
public:
    rle_ilcp() = default;

    // ilcp is 1-based (element 0 unused).
    explicit rle_ilcp(const std::vector<std::size_t>& ilcp) {
        const std::size_t n = ilcp.size() - 1;
        std::vector<std::size_t> starts;
        std::vector<std::uint32_t> values;
        for (std::size_t i = 1; i <= n; ++i) {
            if (i == 1 || ilcp[i] != ilcp[i - 1]) {
                starts.push_back(i);
                values.push_back(static_cast<std::uint32_t>(ilcp[i]));
            }
        }
        starts_ = bit_vector::from_positions(n, starts);
        values_ = rmq_min<std::uint32_t>(std::move(values));
    }

    rle_ilcp(bit_vector starts, std::vector<std::uint32_t> values)
        : starts_(std::move(starts)), values_(std::move(values)) {
        if (starts_.ones() != values_.size() || (starts_.size() > 0 && !starts_[1]))
            throw error(errc::corrupt_container, "ILCP run shape");
    }

    std::size_t size() const { return starts_.size(); }
    std::size_t runs() const { return values_.size(); }
    std::uint32_t value(std::size_t k) const { return values_.value(k); }
    std::size_t run_of(std::size_t pos) const { return starts_.rank1(pos); }
    std::size_t run_begin(std::size_t k) const { return starts_.select1(k); }
    std::size_t run_end(std::size_t k) const { return k < runs() ? starts_.select1(k + 1) - 1 : size(); }
    std::size_t argmin(std::size_t a, std::size_t b) const { return values_.query(a, b); }
    const bit_vector& starts() const { return starts_; }
    const std::vector<std::uint32_t>& values() const { return values_.values(); }

    std::vector<std::size_t> decode() const {
        std::vector<std::size_t> out(size() + 1, 0);
        for (std::size_t k = 1; k <= runs(); ++k)
            for (std::size_t i = run_begin(k); i <= run_end(k); ++i)
                out[i] = value(k);
        return out;
    }

    void serialize(byte_writer& out) const {
        starts_.serialize(out);
        out.put_vector(values_.values());
    }

    static rle_ilcp load(byte_reader& in) {
        auto starts = bit_vector::load(in);
        auto values = in.get_vector<std::uint32_t>();
        return rle_ilcp(std::move(starts), std::move(values));
    }

private:
    bit_vector starts_;
    rmq_min<std::uint32_t> values_;
};

// ILCP with consecutive runs merged whenever all of them cover a single, common
// document. Merged value is the minimum; same_doc marks runs whose positions
// all belong to one document.
class double_rle_ilcp {
public:
    double_rle_ilcp() = default;

    // da is 1-based (element 0 unused).
    double_rle_ilcp(const rle_ilcp& rle, const std::vector<doc_id>& da) {
        const std::size_t n = rle.size();
        std::vector<std::size_t> starts, flags;
        std::vector<std::uint32_t> values;
        std::size_t k = 1;
        while (k <= rle.runs()) {
            doc_id d = single_doc(rle, da, k);
            std::size_t begin = rle.run_begin(k);
            std::uint32_t v = rle.value(k);
            std::size_t next = k + 1;
            if (d != 0) {
                while (next <= rle.runs() && single_doc(rle, da, next) == d) {
                    v = std::min(v, rle.value(next));
                    ++next;
                }
            }
            starts.push_back(begin);
            values.push_back(v);
            if (d != 0)
                flags.push_back(values.size());
            k = next;
        }
        starts_ = bit_vector::from_positions(n, starts);
        same_doc_ = bit_vector::from_positions(values.size(), flags);
        values_ = rmq_min<std::uint32_t>(std::move(values));
    }

    std::size_t size() const { return starts_.size(); }
    std::size_t runs() const { return values_.size(); }
    std::uint32_t value(std::size_t k) const { return values_.value(k); }
    bool same_doc(std::size_t k) const { return same_doc_[k]; }
    std::size_t run_of(std::size_t pos) const { return starts_.rank1(pos); }
    std::size_t run_begin(std::size_t k) const { return starts_.select1(k); }
    std::size_t run_end(std::size_t k) const { return k < runs() ? starts_.select1(k + 1) - 1 : size(); }
    std::size_t argmin(std::size_t a, std::size_t b) const { return values_.query(a, b); }
    const std::vector<std::uint32_t>& values() const { return values_.values(); }

    void serialize(byte_writer& out) const {
        starts_.serialize(out);
        out.put_vector(values_.values());
        same_doc_.serialize(out);
    }

    static double_rle_ilcp load(byte_reader& in) {
        double_rle_ilcp r;
        r.starts_ = bit_vector::load(in);
        r.values_ = rmq_min<std::uint32_t>(in.get_vector<std::uint32_t>());
        r.same_doc_ = bit_vector::load(in);
        if (r.starts_.ones() != r.values_.size() || r.same_doc_.size() != r.values_.size() ||
            (r.starts_.size() > 0 && !r.starts_[1]))
            throw error(errc::corrupt_container, "ILCP* run shape");
        return r;
    }

private:
    // the document of run k when all its positions share one, else 0
    static doc_id single_doc(const rle_ilcp& rle, const std::vector<doc_id>& da, std::size_t k) {
        std::size_t b = rle.run_begin(k), e = rle.run_end(k);
        for (std::size_t i = b + 1; i <= e; ++i)
            if (da[i] != da[b])
                return 0;
        return da[b];
    }

    bit_vector starts_;
    rmq_min<std::uint32_t> values_;
    bit_vector same_doc_;
};

namespace detail {

template <class Runs>
bool run_is_same_doc(const Runs& runs, std::size_t k) {
    if constexpr (requires { runs.same_doc(k); })
        return runs.same_doc(k);
    else
        return false;
}

}  // namespace detail

// Distinct documents of DA[first..last] with their leftmost (leftmost = true,
// on a left-LCP variant) or rightmost (on a right-LCP variant) position.
// Runs with value < m are enumerated by RMQ recursion over the runs touching
// the interval. A same-document run reports the interval-clipped end facing
// the search direction (its head, or first when cut by the left boundary,
// for leftmost); other runs report every clipped position. Duplicates keep the
// extreme position. da_at(row) resolves DA.
template <class Runs, class DaFn>
std::map<doc_id, std::size_t> distinct_extremes(const Runs& runs, std::size_t first, std::size_t last,
                                                std::size_t m, bool leftmost, DaFn&& da_at) {
    if (first < 1 || first > last || last > runs.size())
        throw error(errc::empty_interval, "[" + std::to_string(first) + ", " + std::to_string(last) + "]");
    std::map<doc_id, std::size_t> found;
    auto offer = [&](doc_id d, std::size_t pos) {
        auto [it, fresh] = found.try_emplace(d, pos);
        if (!fresh)
            it->second = leftmost ? std::min(it->second, pos) : std::max(it->second, pos);
    };
    std::vector<std::pair<std::size_t, std::size_t>> stack{{runs.run_of(first), runs.run_of(last)}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        if (a > b)
            continue;
        std::size_t k = runs.argmin(a, b);
        if (runs.value(k) >= m)
            continue;
        std::size_t lo = std::max(first, runs.run_begin(k));
        std::size_t hi = std::min(last, runs.run_end(k));
        if (detail::run_is_same_doc(runs, k)) {
            std::size_t pos = leftmost ? lo : hi;
            offer(da_at(pos), pos);
        } else {
            for (std::size_t i = lo; i <= hi; ++i)
                offer(da_at(i), i);
        }
        stack.emplace_back(a, k - 1);
        stack.emplace_back(k + 1, b);
    }
    return found;
}

// Left and right ILCP in one of the two encodings; answers frequencies through
// the extremes and the per-document indexes.
template <class Runs>
class ilcp_family_index {
public:
    ilcp_family_index() = default;
    ilcp_family_index(Runs left, Runs right) : left_(std::move(left)), right_(std::move(right)) {}

    const Runs& left() const { return left_; }
    const Runs& right() const { return right_; }

    std::map<doc_id, std::size_t> distinct_leftmost(const collection& coll, const rindex_set& text,
                                                    std::size_t first, std::size_t last, std::size_t m) const {
        return distinct_extremes(left_, first, last, m, true, da_resolver(coll, text));
    }

    std::map<doc_id, std::size_t> distinct_rightmost(const collection& coll, const rindex_set& text,
                                                     std::size_t first, std::size_t last, std::size_t m) const {
        return distinct_extremes(right_, first, last, m, false, da_resolver(coll, text));
    }

    doc_freq query_range(const collection& coll, const rindex_set& text, std::size_t first, std::size_t last,
                         std::size_t m) const {
        auto lo = distinct_leftmost(coll, text, first, last, m);
        auto hi = distinct_rightmost(coll, text, first, last, m);
        if (lo.size() != hi.size())
            throw error(errc::doc_mismatch, "left and right ILCP report different document sets");
        doc_freq out;
        for (auto [d, l] : lo) {
            auto it = hi.find(d);
            if (it == hi.end())
                throw error(errc::doc_mismatch, "document " + std::to_string(d) + " missing on the right");
            out.emplace_hint(out.end(), d, text.freq_from_extremes(coll, d, l, it->second));
        }
        return out;
    }

    doc_freq query(std::string_view pattern, const collection& coll, const rindex_set& text) const {
        auto range = text.global.pattern_interval(pattern);
        if (!range)
            return {};
        return query_range(coll, text, range->first, range->last, pattern.size());
    }

    void serialize(byte_writer& out) const {
        left_.serialize(out);
        right_.serialize(out);
    }

    static ilcp_family_index load(byte_reader& in) {
        auto l = Runs::load(in);
        auto r = Runs::load(in);
        if (l.size() != r.size())
            throw error(errc::corrupt_container, "ILCP variants differ in length");
        return ilcp_family_index(std::move(l), std::move(r));
    }

private:
    static auto da_resolver(const collection& coll, const rindex_set& text) {
        return [&coll, &text](std::size_t row) { return coll.doc_of(text.global.sa_access(row)); };
    }

    Runs left_, right_;
};

using ilcp_index = ilcp_family_index<rle_ilcp>;
using ilcp_star_index = ilcp_family_index<double_rle_ilcp>;

}  // namespace docfreq
