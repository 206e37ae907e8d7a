#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "bit_vector.hpp"

namespace docfreq {

// Balanced wavelet tree over an integer sequence, stored level-wise
// (wavelet-matrix layout: one bitvector per bit of the alphabet, with the
// zero-count of each level). Positions are 1-based.
class wavelet_tree {
public:
    wavelet_tree() = default;

    explicit wavelet_tree(const std::vector<std::uint32_t>& seq) : n_(seq.size()) {
        std::uint32_t maxv = seq.empty() ? 0 : *std::max_element(seq.begin(), seq.end());
        levels_ = std::max<std::size_t>(1, std::bit_width(maxv));
        std::vector<std::uint32_t> cur = seq, next(seq.size());
        for (std::size_t l = 0; l < levels_; ++l) {
            std::size_t shift = levels_ - 1 - l;
            std::vector<std::uint64_t> w((n_ + 63) / 64, 0);
            std::size_t z = 0;
            for (std::size_t i = 0; i < n_; ++i) {
                if ((cur[i] >> shift) & 1)
                    w[i / 64] |= std::uint64_t{1} << (i % 64);
                else
                    ++z;
            }
            std::size_t zi = 0, oi = z;
            for (std::size_t i = 0; i < n_; ++i) {
                if ((cur[i] >> shift) & 1)
                    next[oi++] = cur[i];
                else
                    next[zi++] = cur[i];
            }
            bits_.emplace_back(std::move(w), n_);
            zeros_.push_back(z);
            cur.swap(next);
        }
    }

    std::size_t size() const { return n_; }

    std::uint32_t access(std::size_t i) const {
        check(i);
        std::size_t p = i - 1;
        std::uint32_t v = 0;
        for (std::size_t l = 0; l < levels_; ++l) {
            bool b = bits_[l][p + 1];
            v = (v << 1) | static_cast<std::uint32_t>(b);
            p = b ? zeros_[l] + bits_[l].rank1(p) : bits_[l].rank0(p);
        }
        return v;
    }

    // occurrences of c in seq[1..i]
    std::size_t rank(std::uint32_t c, std::size_t i) const {
        if (i > n_)
            throw error(errc::out_of_range, "wavelet rank position " + std::to_string(i));
        if (levels_ < 32 && (c >> levels_) != 0)
            return 0;
        std::size_t s = 0, e = i;
        for (std::size_t l = 0; l < levels_; ++l) {
            if ((c >> (levels_ - 1 - l)) & 1) {
                s = zeros_[l] + bits_[l].rank1(s);
                e = zeros_[l] + bits_[l].rank1(e);
            } else {
                s = bits_[l].rank0(s);
                e = bits_[l].rank0(e);
            }
        }
        return e - s;
    }

    // position of the j-th occurrence of c
    std::size_t select(std::uint32_t c, std::size_t j) const {
        if (j == 0 || j > rank(c, n_))
            throw error(errc::select_overflow, "wavelet select " + std::to_string(j));
        std::size_t lo = 1, hi = n_;
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (rank(c, mid) >= j)
                hi = mid;
            else
                lo = mid + 1;
        }
        return lo;
    }

    // distinct symbols of seq[l..r], ascending
    std::vector<std::uint32_t> distinct(std::size_t l, std::size_t r) const {
        if (l < 1 || l > r)
            throw error(errc::empty_range, "wavelet range");
        check(r);
        std::vector<std::uint32_t> out;
        distinct_rec(0, l - 1, r, 0, out);
        return out;
    }

    void serialize(byte_writer& out) const {
        out.put<std::uint64_t>(n_);
        out.put<std::uint64_t>(levels_);
        for (std::size_t l = 0; l < levels_; ++l)
            bits_[l].serialize(out);
    }

    static wavelet_tree load(byte_reader& in) {
        wavelet_tree wt;
        wt.n_ = in.get<std::uint64_t>();
        wt.levels_ = in.get<std::uint64_t>();
        if (wt.levels_ > 32)
            throw error(errc::corrupt_container, "wavelet tree depth");
        for (std::size_t l = 0; l < wt.levels_; ++l) {
            wt.bits_.push_back(bit_vector::load(in));
            if (wt.bits_.back().size() != wt.n_)
                throw error(errc::corrupt_container, "wavelet level length");
            wt.zeros_.push_back(wt.bits_.back().size() - wt.bits_.back().ones());
        }
        return wt;
    }

private:
    void distinct_rec(std::size_t level, std::size_t s, std::size_t e, std::uint32_t prefix,
                      std::vector<std::uint32_t>& out) const {
        if (s >= e)
            return;
        if (level == levels_) {
            out.push_back(prefix);
            return;
        }
        const auto& b = bits_[level];
        distinct_rec(level + 1, b.rank0(s), b.rank0(e), prefix << 1, out);
        distinct_rec(level + 1, zeros_[level] + b.rank1(s), zeros_[level] + b.rank1(e), (prefix << 1) | 1, out);
    }

    void check(std::size_t i) const {
        if (i < 1 || i > n_)
            throw error(errc::out_of_range, "wavelet position " + std::to_string(i));
    }

    std::size_t n_ = 0;
    std::size_t levels_ = 0;
    std::vector<bit_vector> bits_;
    std::vector<std::size_t> zeros_;
};

}  // namespace docfreq
