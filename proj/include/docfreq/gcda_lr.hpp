#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string_view>
#include <vector>

#include "binary_io.hpp"
#include "collection.hpp"
#include "common.hpp"
#include "grammar.hpp"
#include "rindex.hpp"

namespace docfreq {

// Grammar-compressed document array with two t-bit vectors per nonterminal:
//   L[i] = 0  iff doc i occurs and its leftmost occurrence is in the left child
//   R[i] = 1  iff doc i occurs and its rightmost occurrence is in the right child
// (L, R) = (1, 0) means doc i does not occur. Children combine as
//   L = L_left & ~R_left,   R = ~L_right | R_right.
class lr_index {
public:
    struct extremes {
        doc_id doc;
        std::size_t leftmost;   // DA position (SA row)
        std::size_t rightmost;
    };

    struct extremes_result {
        std::vector<extremes> docs;  // ascending by doc
        std::size_t descents = 0;    // root-to-leaf descents performed
        std::size_t tree_height = 0; // height of the temporary tree over the cover
    };

    lr_index() = default;

    static lr_index build(const balanced_slp& da, std::size_t t) {
        lr_index idx;
        idx.t_ = t;
        idx.words_ = (t + 63) / 64;
        idx.terminals_ = da.terminals();
        const std::size_t nt = da.nonterminals();
        idx.bits_.assign(nt * 2 * idx.words_, 0);
        std::vector<std::uint64_t> ll(idx.words_), lr(idx.words_), rl(idx.words_), rr(idx.words_);
        for (std::size_t k = 0; k < nt; ++k) {
            auto s = static_cast<balanced_slp::symbol>(idx.terminals_ + k);
            idx.load_lr(da, da.left(s), ll.data(), lr.data());
            idx.load_lr(da, da.right(s), rl.data(), rr.data());
            auto* L = idx.bits_.data() + k * 2 * idx.words_;
            auto* R = L + idx.words_;
            for (std::size_t w = 0; w < idx.words_; ++w) {
                L[w] = ll[w] & ~lr[w];
                R[w] = (~rl[w] | rr[w]) & idx.mask(w);
            }
        }
        return idx;
    }

    std::size_t t() const { return t_; }

    bool l_bit(const balanced_slp& da, balanced_slp::symbol s, doc_id doc) const {
        if (da.is_terminal(s))
            return static_cast<doc_id>(da.terminal_value(s)) != doc;
        return (l_words(s)[(doc - 1) / 64] >> ((doc - 1) % 64)) & 1;
    }

    bool r_bit(const balanced_slp& da, balanced_slp::symbol s, doc_id doc) const {
        if (da.is_terminal(s))
            return static_cast<doc_id>(da.terminal_value(s)) == doc;
        return (r_words(s)[(doc - 1) / 64] >> ((doc - 1) % 64)) & 1;
    }

    // L and R of any symbol; terminals are synthesized (present doc j: (0,1)).
    void load_lr(const balanced_slp& da, balanced_slp::symbol s, std::uint64_t* L, std::uint64_t* R) const {
        if (da.is_terminal(s)) {
            auto j = static_cast<std::size_t>(da.terminal_value(s)) - 1;
            for (std::size_t w = 0; w < words_; ++w) {
                L[w] = mask(w);
                R[w] = 0;
            }
            if (j < t_) {
                L[j / 64] &= ~(std::uint64_t{1} << (j % 64));
                R[j / 64] |= std::uint64_t{1} << (j % 64);
            }
            return;
        }
        const auto* l = l_words(s);
        const auto* r = r_words(s);
        std::copy(l, l + words_, L);
        std::copy(r, r + words_, R);
    }

    // Leftmost and rightmost DA positions in [first..last] of every document
    // present there.
    extremes_result find_extremes(const balanced_slp& da, std::size_t first, std::size_t last) const {
        auto cover = da.maximal_cover(first, last);
        // Temporary balanced tree over the cover nodes: leaves 0..k-1, then
        // internal nodes built by pairing adjacent nodes level by level.
        struct tnode {
            std::size_t left = npos, right = npos;  // children, npos for leaves
            std::size_t leaf = npos;                 // cover index for leaves
        };
        std::vector<tnode> nodes;
        std::vector<std::uint64_t> lbits, rbits;  // words_ per node
        auto add_node = [&](tnode n) {
            nodes.push_back(n);
            lbits.resize(nodes.size() * words_);
            rbits.resize(nodes.size() * words_);
            return nodes.size() - 1;
        };
        std::vector<std::size_t> level;
        for (std::size_t k = 0; k < cover.size(); ++k) {
            auto id = add_node({npos, npos, k});
            load_lr(da, cover[k].sym, lbits.data() + id * words_, rbits.data() + id * words_);
            level.push_back(id);
        }
        std::size_t height = 0;
        while (level.size() > 1) {
            std::vector<std::size_t> up;
            for (std::size_t k = 0; k + 1 < level.size(); k += 2) {
                auto a = level[k], b = level[k + 1];
                auto id = add_node({a, b, npos});
                for (std::size_t w = 0; w < words_; ++w) {
                    lbits[id * words_ + w] = lbits[a * words_ + w] & ~rbits[a * words_ + w];
                    rbits[id * words_ + w] = (~lbits[b * words_ + w] | rbits[b * words_ + w]) & mask(w);
                }
                up.push_back(id);
            }
            if (level.size() % 2)
                up.push_back(level.back());
            level.swap(up);
            ++height;
        }

        extremes_result res;
        res.tree_height = height;
        const std::size_t root = level.front();
        auto bit = [&](const std::vector<std::uint64_t>& v, std::size_t node, doc_id d) {
            return (v[node * words_ + (d - 1) / 64] >> ((d - 1) % 64)) & 1;
        };
        auto descend = [&](doc_id d, bool leftmost) {
            std::size_t node = root;
            while (nodes[node].leaf == npos) {
                bool go_right = leftmost ? bit(lbits, node, d) : bit(rbits, node, d);
                node = go_right ? nodes[node].right : nodes[node].left;
            }
            auto [s, begin] = cover[nodes[node].leaf];
            while (!da.is_terminal(s)) {
                bool go_right = leftmost ? l_bit(da, s, d) : r_bit(da, s, d);
                if (go_right) {
                    begin += da.length(da.left(s));
                    s = da.right(s);
                } else {
                    s = da.left(s);
                }
            }
            ++res.descents;
            return begin;
        };
        for (std::size_t w = 0; w < words_; ++w) {
            // present = not (L=1 and R=0)
            std::uint64_t present = ~(lbits[root * words_ + w] & ~rbits[root * words_ + w]) & mask(w);
            while (present) {
                auto b = static_cast<std::size_t>(std::countr_zero(present));
                present &= present - 1;
                auto d = static_cast<doc_id>(w * 64 + b + 1);
                auto lo = descend(d, true);
                auto hi = descend(d, false);
                res.docs.push_back({d, lo, hi});
            }
        }
        return res;
    }

    doc_freq query_range(const collection& coll, const rindex_set& text, const balanced_slp& da,
                         std::size_t first, std::size_t last) const {
        doc_freq out;
        for (auto [d, lo, hi] : find_extremes(da, first, last).docs)
            out[d] = text.freq_from_extremes(coll, d, lo, hi);
        return out;
    }

    doc_freq query(std::string_view pattern, const collection& coll, const rindex_set& text,
                   const balanced_slp& da) const {
        auto range = text.global.pattern_interval(pattern);
        if (!range)
            return {};
        return query_range(coll, text, da, range->first, range->last);
    }

    void serialize(byte_writer& out) const {
        out.put<std::uint64_t>(t_);
        out.put<std::uint64_t>(terminals_);
        out.put_vector(bits_);
    }

    static lr_index load(byte_reader& in, const balanced_slp& da) {
        lr_index idx;
        idx.t_ = in.get<std::uint64_t>();
        idx.words_ = (idx.t_ + 63) / 64;
        idx.terminals_ = in.get<std::uint64_t>();
        idx.bits_ = in.get_vector<std::uint64_t>();
        if (idx.terminals_ != da.terminals() || idx.bits_.size() != da.nonterminals() * 2 * idx.words_)
            throw error(errc::corrupt_container, "L/R bitvector shape");
        return idx;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::uint64_t mask(std::size_t w) const {
        std::size_t bits = std::min<std::size_t>(64, t_ - w * 64);
        return bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
    }

    const std::uint64_t* l_words(balanced_slp::symbol s) const {
        return bits_.data() + (s - terminals_) * 2 * words_;
    }
    const std::uint64_t* r_words(balanced_slp::symbol s) const { return l_words(s) + words_; }

    std::size_t t_ = 0;
    std::size_t words_ = 0;
    std::size_t terminals_ = 0;
    std::vector<std::uint64_t> bits_;  // per nonterminal: L words, then R words
};

}  // namespace docfreq
