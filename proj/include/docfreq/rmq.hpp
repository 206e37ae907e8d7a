#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "common.hpp"

namespace docfreq {

// Range minimum (or maximum, with Max = true) query over an owned array.
// Blocked sparse table: one table over block winners, linear scan inside the
// partial blocks at the ends. Positions are 1-based; ties go to the leftmost.
template <class T, bool Max = false>
class rmq {
public:
    static constexpr std::size_t block = 32;

    rmq() = default;

    explicit rmq(std::vector<T> values) : v_(std::move(values)) {
        std::size_t nb = (v_.size() + block - 1) / block;
        if (nb == 0)
            return;
        table_.emplace_back(nb);
        for (std::size_t b = 0; b < nb; ++b)
            table_[0][b] = static_cast<std::uint32_t>(scan(b * block, std::min(v_.size(), (b + 1) * block) - 1));
        for (std::size_t k = 1; (std::size_t{1} << k) <= nb; ++k) {
            std::size_t len = nb - (std::size_t{1} << k) + 1;
            std::vector<std::uint32_t> row(len);
            const auto& prev = table_[k - 1];
            for (std::size_t b = 0; b < len; ++b)
                row[b] = pick(prev[b], prev[b + (std::size_t{1} << (k - 1))]);
            table_.push_back(std::move(row));
        }
    }

    std::size_t size() const { return v_.size(); }
    const std::vector<T>& values() const { return v_; }
    const T& value(std::size_t i) const { return v_[i - 1]; }

    std::size_t query(std::size_t l, std::size_t r) const {
        if (l < 1 || l > r)
            throw error(errc::empty_range, "rmq [" + std::to_string(l) + ", " + std::to_string(r) + "]");
        if (r > v_.size())
            throw error(errc::out_of_range, "rmq right end " + std::to_string(r));
        std::size_t lo = l - 1, hi = r - 1;
        std::size_t bl = lo / block, br = hi / block;
        if (br - bl <= 1)
            return scan(lo, hi) + 1;
        std::size_t best = scan(lo, (bl + 1) * block - 1);
        std::size_t fb = bl + 1, lb = br - 1;  // full blocks
        std::size_t k = std::bit_width(lb - fb + 1) - 1;
        std::size_t mid = pick(table_[k][fb], table_[k][lb + 1 - (std::size_t{1} << k)]);
        best = pick(best, mid);
        best = pick(best, scan(br * block, hi));
        return best + 1;
    }

private:
    bool better(std::size_t a, std::size_t b) const {
        if constexpr (Max)
            return v_[a] > v_[b];
        else
            return v_[a] < v_[b];
    }

    // a is left of b
    std::size_t pick(std::size_t a, std::size_t b) const { return better(b, a) ? b : a; }

    std::size_t scan(std::size_t lo, std::size_t hi) const {
        std::size_t best = lo;
        for (std::size_t i = lo + 1; i <= hi; ++i)
            if (better(i, best))
                best = i;
        return best;
    }

    std::vector<T> v_;
    std::vector<std::vector<std::uint32_t>> table_;
};

template <class T>
using rmq_min = rmq<T, false>;
template <class T>
using rmq_max = rmq<T, true>;

}  // namespace docfreq
