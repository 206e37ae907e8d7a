#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <string_view>
#include <vector>

#include "binary_io.hpp"
#include "bit_vector.hpp"
#include "common.hpp"
#include "grammar.hpp"
#include "rindex.hpp"

namespace docfreq {

struct doc_count {
    doc_id doc;
    std::uint64_t freq;

    bool operator==(const doc_count&) const = default;
};

// Grammar-compressed document array with a precomputed (doc, freq) list per
// nonterminal. Nonterminals expanding to fewer than `sampling` positions keep
// no list and are counted on the fly at query time.
class pdl_index {
public:
    pdl_index() = default;

    static pdl_index build(const balanced_slp& da, std::size_t sampling = 0) {
        pdl_index idx;
        idx.terminals_ = da.terminals();
        idx.sampling_ = sampling;
        const std::size_t nt = da.nonterminals();
        std::vector<std::vector<doc_count>> lists(nt);
        auto list_of = [&](balanced_slp::symbol s) -> std::vector<doc_count> {
            if (da.is_terminal(s))
                return {{static_cast<doc_id>(da.terminal_value(s)), 1}};
            return lists[s - idx.terminals_];
        };
        std::vector<std::size_t> stored;
        for (std::size_t k = 0; k < nt; ++k) {
            auto s = static_cast<balanced_slp::symbol>(idx.terminals_ + k);
            lists[k] = merge_two(list_of(da.left(s)), list_of(da.right(s)));
        }
        idx.offsets_.assign(nt + 1, 0);
        for (std::size_t k = 0; k < nt; ++k) {
            auto s = static_cast<balanced_slp::symbol>(idx.terminals_ + k);
            if (da.length(s) >= sampling) {
                stored.push_back(k + 1);
                for (auto [d, f] : lists[k]) {
                    idx.docs_.push_back(d);
                    idx.freqs_.push_back(f);
                }
            }
            idx.offsets_[k + 1] = idx.docs_.size();
        }
        idx.stored_ = bit_vector::from_positions(nt, stored);
        return idx;
    }

    std::size_t sampling() const { return sampling_; }

    bool has_list(balanced_slp::symbol s) const { return s >= terminals_ && stored_[s - terminals_ + 1]; }

    // Stored list of a nonterminal, ascending by document.
    std::vector<doc_count> list(balanced_slp::symbol s) const {
        std::vector<doc_count> out;
        if (!has_list(s))
            return out;
        for (auto k = offsets_[s - terminals_]; k < offsets_[s - terminals_ + 1]; ++k)
            out.push_back({docs_[k], freqs_[k]});
        return out;
    }

    // Document frequencies of DA[range] by merging the lists of its maximal cover.
    doc_freq query_range(const balanced_slp& da, std::size_t first, std::size_t last,
                         std::size_t* merged_lists = nullptr) const {
        auto cover = da.maximal_cover(first, last);
        struct cursor {
            const doc_id* doc;
            const std::uint64_t* freq;
            const doc_id* end;
        };
        std::vector<cursor> cursors;
        // singletons and on-the-fly census of unsampled symbols
        std::vector<std::vector<doc_id>> owned_docs;
        std::vector<std::vector<std::uint64_t>> owned_freqs;
        owned_docs.reserve(cover.size());
        owned_freqs.reserve(cover.size());
        for (auto [s, begin] : cover) {
            if (has_list(s)) {
                auto b = offsets_[s - terminals_], e = offsets_[s - terminals_ + 1];
                cursors.push_back({docs_.data() + b, freqs_.data() + b, docs_.data() + e});
                continue;
            }
            std::vector<doc_id> d;
            std::vector<std::uint64_t> f;
            if (da.is_terminal(s)) {
                d.push_back(static_cast<doc_id>(da.terminal_value(s)));
                f.push_back(1);
            } else {
                for (auto [doc, c] : census(da, s)) {
                    d.push_back(doc);
                    f.push_back(c);
                }
            }
            owned_docs.push_back(std::move(d));
            owned_freqs.push_back(std::move(f));
            const auto& od = owned_docs.back();
            cursors.push_back({od.data(), owned_freqs.back().data(), od.data() + od.size()});
        }
        if (merged_lists)
            *merged_lists = cursors.size();

        using item = std::pair<doc_id, std::size_t>;  // (doc at cursor head, cursor index)
        std::priority_queue<item, std::vector<item>, std::greater<>> heap;
        for (std::size_t k = 0; k < cursors.size(); ++k)
            if (cursors[k].doc != cursors[k].end)
                heap.emplace(*cursors[k].doc, k);
        doc_freq out;
        auto hint = out.end();
        while (!heap.empty()) {
            auto [d, k] = heap.top();
            heap.pop();
            auto& c = cursors[k];
            if (hint != out.end() && hint->first == d)
                hint->second += *c.freq;
            else
                hint = out.emplace_hint(out.end(), d, *c.freq);
            ++c.doc;
            ++c.freq;
            if (c.doc != c.end)
                heap.emplace(*c.doc, k);
        }
        return out;
    }

    doc_freq query(std::string_view pattern, const rindex_set& text, const balanced_slp& da) const {
        auto range = text.global.pattern_interval(pattern);
        if (!range)
            return {};
        return query_range(da, range->first, range->last);
    }

    void serialize(byte_writer& out) const {
        out.put<std::uint64_t>(terminals_);
        out.put<std::uint64_t>(sampling_);
        stored_.serialize(out);
        out.put_vector(offsets_);
        out.put_vector(docs_);
        out.put_vector(freqs_);
    }

    static pdl_index load(byte_reader& in, const balanced_slp& da) {
        pdl_index idx;
        idx.terminals_ = in.get<std::uint64_t>();
        idx.sampling_ = in.get<std::uint64_t>();
        idx.stored_ = bit_vector::load(in);
        idx.offsets_ = in.get_vector<std::uint64_t>();
        idx.docs_ = in.get_vector<doc_id>();
        idx.freqs_ = in.get_vector<std::uint64_t>();
        if (idx.terminals_ != da.terminals() || idx.stored_.size() != da.nonterminals() ||
            idx.offsets_.size() != da.nonterminals() + 1 || idx.docs_.size() != idx.freqs_.size() ||
            (idx.offsets_.empty() ? 0 : idx.offsets_.back()) != idx.docs_.size())
            throw error(errc::corrupt_container, "document list shape");
        for (std::size_t k = 0; k + 1 < idx.offsets_.size(); ++k)
            if (idx.offsets_[k] > idx.offsets_[k + 1])
                throw error(errc::corrupt_container, "document list offsets");
        return idx;
    }

private:
    static std::vector<doc_count> merge_two(const std::vector<doc_count>& a, const std::vector<doc_count>& b) {
        std::vector<doc_count> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].doc < b[j].doc)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].doc < a[i].doc) {
                out.push_back(b[j++]);
            } else {
                out.push_back({a[i].doc, a[i].freq + b[j].freq});
                ++i;
                ++j;
            }
        }
        return out;
    }

    static doc_freq census(const balanced_slp& da, balanced_slp::symbol s) {
        std::vector<std::int64_t> e;
        da.expand_into(s, e);
        doc_freq out;
        for (auto v : e)
            ++out[static_cast<doc_id>(v)];
        return out;
    }

    std::size_t terminals_ = 0;
    std::size_t sampling_ = 0;
    bit_vector stored_;  // over nonterminals
    std::vector<std::uint64_t> offsets_;
    std::vector<doc_id> docs_;
    std::vector<std::uint64_t> freqs_;
};

}  // namespace docfreq
