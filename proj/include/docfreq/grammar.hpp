#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "binary_io.hpp"
#include "common.hpp"

namespace docfreq {

// Binary, balanced straight-line program over an integer sequence.
//
// Symbols [0, terminals()) are terminals, each standing for one distinct
// sequence value; the remaining symbols are rules with exactly two children.
// Construction runs pairing rounds: runs of equal symbols are paired left to
// right, other symbols are paired when a per-round hash marks the left one 0
// and the right one 1. Decisions depend only on the neighbourhood, so repeated
// substrings get the same nonterminals. A round that shrinks the sequence by
// less than 1/8 is redone as plain left-to-right pairing, which bounds the
// height by log_{8/7} n.
class balanced_slp {
public:
    using symbol = std::uint32_t;

    struct cover_node {
        symbol sym;
        std::size_t begin;  // 1-based position of the expansion's first element
    };

    balanced_slp() = default;

    static balanced_slp build(const std::vector<std::int64_t>& seq) {
        if (seq.empty())
            throw error(errc::empty_input, "grammar over empty sequence");
        balanced_slp g;
        std::unordered_map<std::int64_t, symbol> term_of;
        std::vector<symbol> cur;
        cur.reserve(seq.size());
        for (auto v : seq) {
            auto [it, fresh] = term_of.try_emplace(v, static_cast<symbol>(g.values_.size()));
            if (fresh)
                g.values_.push_back(v);
            cur.push_back(it->second);
        }

        std::unordered_map<std::uint64_t, symbol> rule_of;
        std::vector<symbol> next;
        std::vector<std::uint8_t> paired;  // 1 = starts a pair
        for (std::uint64_t round = 0; cur.size() > 1; ++round) {
            const std::size_t len = cur.size();
            paired.assign(len, 0);
            std::size_t pairs = 0;
            std::size_t i = 0;
            while (i < len) {
                std::size_t j = i;
                while (j + 1 < len && cur[j + 1] == cur[i])
                    ++j;
                if (j > i) {
                    for (std::size_t k = i; k + 1 <= j; k += 2) {
                        paired[k] = 1;
                        ++pairs;
                    }
                    i = j + 1;
                    continue;
                }
                // singleton run at i; pair with i+1 if that is also a singleton
                bool next_single = i + 1 < len && (i + 2 >= len || cur[i + 2] != cur[i + 1]);
                if (next_single && !coin(cur[i], round) && coin(cur[i + 1], round)) {
                    paired[i] = 1;
                    ++pairs;
                    i += 2;
                    continue;
                }
                ++i;
            }
            if (pairs * 8 < len) {
                std::fill(paired.begin(), paired.end(), 0);
                for (std::size_t k = 0; k + 1 < len; k += 2)
                    paired[k] = 1;
            }
            next.clear();
            for (std::size_t k = 0; k < len; ++k) {
                if (paired[k]) {
                    next.push_back(g.make_rule(rule_of, cur[k], cur[k + 1]));
                    ++k;
                } else {
                    next.push_back(cur[k]);
                }
            }
            cur.swap(next);
        }
        g.root_ = cur[0];
        g.compute_attributes();
        return g;
    }

    std::size_t size() const { return length_.empty() ? 0 : length_[root_]; }
    std::size_t terminals() const { return values_.size(); }
    std::size_t nonterminals() const { return rules_.size(); }
    std::size_t symbols() const { return values_.size() + rules_.size(); }
    symbol root() const { return root_; }
    std::size_t height() const { return height_.empty() ? 0 : height_[root_]; }

    bool is_terminal(symbol s) const { return s < values_.size(); }
    std::int64_t terminal_value(symbol s) const { return values_[s]; }
    symbol left(symbol s) const { return rules_[s - values_.size()].first; }
    symbol right(symbol s) const { return rules_[s - values_.size()].second; }
    std::size_t length(symbol s) const { return length_[s]; }
    std::int64_t sum(symbol s) const { return sum_[s]; }
    std::size_t height(symbol s) const { return height_[s]; }

    std::vector<std::int64_t> expand(symbol s) const {
        if (s >= symbols())
            throw error(errc::out_of_range, "symbol " + std::to_string(s));
        std::vector<std::int64_t> out;
        out.reserve(length_[s]);
        expand_into(s, out);
        return out;
    }

    void expand_into(symbol s, std::vector<std::int64_t>& out) const {
        std::vector<symbol> stack{s};
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            if (is_terminal(x)) {
                out.push_back(values_[x]);
            } else {
                stack.push_back(right(x));
                stack.push_back(left(x));
            }
        }
    }

    // seq[i], 1-based; one root-to-leaf descent.
    std::int64_t random_access(std::size_t i) const {
        check_index(i);
        symbol s = root_;
        while (!is_terminal(s)) {
            auto l = left(s);
            if (i <= length_[l]) {
                s = l;
            } else {
                i -= length_[l];
                s = right(s);
            }
        }
        return values_[s];
    }

    // seq[1] + ... + seq[i]; prefix_sum(0) = 0.
    std::int64_t prefix_sum(std::size_t i) const {
        if (i == 0)
            return 0;
        check_index(i);
        std::int64_t acc = 0;
        symbol s = root_;
        while (!is_terminal(s)) {
            auto l = left(s);
            if (i <= length_[l]) {
                s = l;
            } else {
                i -= length_[l];
                acc += sum_[l];
                s = right(s);
            }
        }
        return acc + values_[s];
    }

    // Maximal parse-tree nodes whose expansions tile seq[l..r], left to right.
    std::vector<cover_node> maximal_cover(std::size_t l, std::size_t r) const {
        if (l < 1 || l > r)
            throw error(errc::empty_range, "cover [" + std::to_string(l) + ", " + std::to_string(r) + "]");
        check_index(r);
        std::vector<cover_node> out;
        cover(root_, 1, l, r, out);
        return out;
    }

    std::size_t size_in_bytes() const {
        return values_.size() * sizeof(std::int64_t) + rules_.size() * 2 * sizeof(symbol);
    }

    void serialize(byte_writer& out) const {
        out.put_vector(values_);
        out.put<std::uint64_t>(rules_.size());
        for (auto [a, b] : rules_) {
            out.put(a);
            out.put(b);
        }
        out.put(root_);
    }

    // Rule k defines symbol values.size() + k and may only refer to smaller ids.
    static balanced_slp from_rules(std::vector<std::int64_t> values, std::vector<std::pair<symbol, symbol>> rules,
                                   symbol root) {
        balanced_slp g;
        g.values_ = std::move(values);
        g.rules_ = std::move(rules);
        for (std::size_t k = 0; k < g.rules_.size(); ++k) {
            symbol self = static_cast<symbol>(g.values_.size() + k);
            if (g.rules_[k].first >= self || g.rules_[k].second >= self)
                throw error(errc::invalid_parameter, "rule refers forward");
        }
        if (g.values_.empty() || root >= g.symbols())
            throw error(errc::invalid_parameter, "grammar root");
        g.root_ = root;
        g.compute_attributes();
        return g;
    }

    static balanced_slp load(byte_reader& in) {
        auto values = in.get_vector<std::int64_t>();
        auto nr = in.get<std::uint64_t>();
        if (nr > in.remaining() / 8)
            throw error(errc::corrupt_container, "rule count");
        std::vector<std::pair<symbol, symbol>> rules(nr);
        for (auto& [a, b] : rules) {
            a = in.get<symbol>();
            b = in.get<symbol>();
        }
        auto root = in.get<symbol>();
        try {
            return from_rules(std::move(values), std::move(rules), root);
        } catch (const error& e) {
            throw error(errc::corrupt_container, e.what());
        }
    }

    bool operator==(const balanced_slp& o) const {
        return values_ == o.values_ && rules_ == o.rules_ && root_ == o.root_;
    }

private:
    static bool coin(symbol s, std::uint64_t round) {
        std::uint64_t z = (static_cast<std::uint64_t>(s) << 20) ^ (round * 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z & 1;
    }

    symbol make_rule(std::unordered_map<std::uint64_t, symbol>& rule_of, symbol a, symbol b) {
        std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
        auto [it, fresh] = rule_of.try_emplace(key, static_cast<symbol>(values_.size() + rules_.size()));
        if (fresh)
            rules_.emplace_back(a, b);
        return it->second;
    }

    void compute_attributes() {
        const std::size_t ns = symbols();
        length_.assign(ns, 1);
        sum_.assign(ns, 0);
        height_.assign(ns, 0);
        for (std::size_t s = 0; s < values_.size(); ++s)
            sum_[s] = values_[s];
        for (std::size_t k = 0; k < rules_.size(); ++k) {
            std::size_t s = values_.size() + k;
            auto [a, b] = rules_[k];
            length_[s] = length_[a] + length_[b];
            sum_[s] = sum_[a] + sum_[b];
            height_[s] = 1 + std::max(height_[a], height_[b]);
        }
    }

    void check_index(std::size_t i) const {
        if (i < 1 || i > size())
            throw error(errc::out_of_range, "grammar position " + std::to_string(i));
    }

    void cover(symbol s, std::size_t begin, std::size_t l, std::size_t r, std::vector<cover_node>& out) const {
        std::size_t end = begin + length_[s] - 1;
        if (end < l || begin > r)
            return;
        if (l <= begin && end <= r) {
            out.push_back({s, begin});
            return;
        }
        auto a = left(s);
        cover(a, begin, l, r, out);
        cover(right(s), begin + length_[a], l, r, out);
    }

    std::vector<std::int64_t> values_;
    std::vector<std::pair<symbol, symbol>> rules_;
    symbol root_ = 0;
    std::vector<std::size_t> length_;
    std::vector<std::int64_t> sum_;
    std::vector<std::uint16_t> height_;
};

}  // namespace docfreq
