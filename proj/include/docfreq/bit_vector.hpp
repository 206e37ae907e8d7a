#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "binary_io.hpp"
#include "common.hpp"

namespace docfreq {

// Static bitvector with rank/select. Positions are 1-based: rank1(i) counts
// ones in [1..i], select1(j) returns the position of the j-th one.
class bit_vector {
public:
    static constexpr std::size_t words_per_block = 8;  // 512-bit superblocks

    bit_vector() { build_support(); }

    bit_vector(std::vector<std::uint64_t> words, std::size_t length)
        : words_(std::move(words)), size_(length) {
        words_.resize((size_ + 63) / 64);
        if (size_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
        build_support();
    }

    static bit_vector from_positions(std::size_t length, const std::vector<std::size_t>& ones) {
        std::vector<std::uint64_t> w((length + 63) / 64, 0);
        for (auto p : ones) {
            if (p < 1 || p > length)
                throw error(errc::out_of_range, "bit position " + std::to_string(p));
            w[(p - 1) / 64] |= std::uint64_t{1} << ((p - 1) % 64);
        }
        return bit_vector(std::move(w), length);
    }

    std::size_t size() const { return size_; }
    std::size_t ones() const { return ones_; }

    bool operator[](std::size_t i) const {
        check_pos(i);
        return (words_[(i - 1) / 64] >> ((i - 1) % 64)) & 1;
    }

    std::size_t rank1(std::size_t i) const {
        if (i > size_)
            throw error(errc::out_of_range, "rank position " + std::to_string(i));
        std::size_t w = i / 64;
        std::size_t blk = w / words_per_block;
        std::size_t r = block_rank_[blk];
        for (std::size_t k = blk * words_per_block; k < w; ++k)
            r += std::popcount(words_[k]);
        if (i % 64)
            r += std::popcount(words_[w] & ((std::uint64_t{1} << (i % 64)) - 1));
        return r;
    }

    std::size_t rank0(std::size_t i) const { return i - rank1(i); }

    std::size_t select1(std::size_t j) const {
        if (j == 0 || j > ones_)
            throw error(errc::select_overflow, "select1(" + std::to_string(j) + ") with " +
                                                   std::to_string(ones_) + " ones");
        // last block whose preceding count is < j
        auto it = std::lower_bound(block_rank_.begin(), block_rank_.end(), j);
        std::size_t blk = static_cast<std::size_t>(it - block_rank_.begin()) - 1;
        std::size_t need = j - block_rank_[blk];
        for (std::size_t k = blk * words_per_block;; ++k) {
            auto c = static_cast<std::size_t>(std::popcount(words_[k]));
            if (c >= need)
                return k * 64 + select_in_word(words_[k], need) + 1;
            need -= c;
        }
    }

    std::size_t select0(std::size_t j) const {
        std::size_t zeros = size_ - ones_;
        if (j == 0 || j > zeros)
            throw error(errc::select_overflow, "select0(" + std::to_string(j) + ") with " +
                                                   std::to_string(zeros) + " zeros");
        std::size_t lo = 0, hi = block_rank_.size() - 1;
        // last block b with zeros-before(b) < j
        while (lo < hi) {
            std::size_t mid = (lo + hi + 1) / 2;
            if (mid * words_per_block * 64 - block_rank_[mid] < j)
                lo = mid;
            else
                hi = mid - 1;
        }
        std::size_t need = j - (lo * words_per_block * 64 - block_rank_[lo]);
        for (std::size_t k = lo * words_per_block;; ++k) {
            auto c = static_cast<std::size_t>(std::popcount(~words_[k]));
            if (c >= need)
                return k * 64 + select_in_word(~words_[k], need) + 1;
            need -= c;
        }
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    void serialize(byte_writer& out) const {
        out.put<std::uint64_t>(size_);
        out.put_vector(words_);
    }

    static bit_vector load(byte_reader& in) {
        auto len = in.get<std::uint64_t>();
        auto w = in.get_vector<std::uint64_t>();
        if (w.size() != (len + 63) / 64)
            throw error(errc::corrupt_container, "bitvector word count mismatch");
        return bit_vector(std::move(w), len);
    }

    bool operator==(const bit_vector& o) const { return size_ == o.size_ && words_ == o.words_; }

private:
    static std::size_t select_in_word(std::uint64_t w, std::size_t k) {
        for (std::size_t i = 1; i < k; ++i)
            w &= w - 1;
        return static_cast<std::size_t>(std::countr_zero(w));
    }

    void check_pos(std::size_t i) const {
        if (i < 1 || i > size_)
            throw error(errc::out_of_range, "bit position " + std::to_string(i));
    }

    void build_support() {
        std::size_t blocks = words_.size() / words_per_block + 1;
        block_rank_.assign(blocks + 1, 0);
        std::size_t r = 0;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if (k % words_per_block == 0)
                block_rank_[k / words_per_block] = r;
            r += std::popcount(words_[k]);
        }
        for (std::size_t b = (words_.size() + words_per_block - 1) / words_per_block; b < block_rank_.size(); ++b)
            block_rank_[b] = r;
        ones_ = r;
    }

    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
    std::size_t ones_ = 0;
    std::vector<std::size_t> block_rank_;  // ones before each superblock
};

}  // namespace docfreq
