#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string_view>
#include <vector>

#include "common.hpp"

namespace docfreq::detail {

inline std::vector<std::int32_t> sa_naive(const std::vector<std::int32_t>& s) {
    std::vector<std::int32_t> sa(s.size());
    std::iota(sa.begin(), sa.end(), 0);
    std::sort(sa.begin(), sa.end(), [&](std::int32_t a, std::int32_t b) {
        return std::lexicographical_compare(s.begin() + a, s.end(), s.begin() + b, s.end());
    });
    return sa;
}

// Induced sorting (SA-IS) over an integer alphabet [0..upper]. 0-based output.
inline std::vector<std::int32_t> sa_is(const std::vector<std::int32_t>& s, std::int32_t upper) {
    const auto n = static_cast<std::int32_t>(s.size());
    if (n == 0)
        return {};
    if (n < 16)
        return sa_naive(s);

    std::vector<std::int32_t> sa(n);
    std::vector<bool> ls(n);  // true = S-type
    for (std::int32_t i = n - 2; i >= 0; --i)
        ls[i] = s[i] == s[i + 1] ? ls[i + 1] : s[i] < s[i + 1];

    std::vector<std::int32_t> sum_l(upper + 1), sum_s(upper + 1);
    for (std::int32_t i = 0; i < n; ++i) {
        if (!ls[i])
            ++sum_s[s[i]];
        else
            ++sum_l[s[i] + 1];
    }
    for (std::int32_t i = 0; i <= upper; ++i) {
        sum_s[i] += sum_l[i];
        if (i < upper)
            sum_l[i + 1] += sum_s[i];
    }

    auto induce = [&](const std::vector<std::int32_t>& lms) {
        std::fill(sa.begin(), sa.end(), -1);
        std::vector<std::int32_t> buf(sum_s);
        for (auto d : lms)
            if (d != n)
                sa[buf[s[d]]++] = d;
        buf = sum_l;
        sa[buf[s[n - 1]]++] = n - 1;
        for (std::int32_t i = 0; i < n; ++i) {
            auto v = sa[i];
            if (v >= 1 && !ls[v - 1])
                sa[buf[s[v - 1]]++] = v - 1;
        }
        buf = sum_l;
        for (std::int32_t i = n - 1; i >= 0; --i) {
            auto v = sa[i];
            if (v >= 1 && ls[v - 1])
                sa[--buf[s[v - 1] + 1]] = v - 1;
        }
    };

    std::vector<std::int32_t> lms_map(n + 1, -1), lms;
    std::int32_t m = 0;
    for (std::int32_t i = 1; i < n; ++i)
        if (!ls[i - 1] && ls[i])
            lms_map[i] = m++;
    lms.reserve(m);
    for (std::int32_t i = 1; i < n; ++i)
        if (!ls[i - 1] && ls[i])
            lms.push_back(i);

    induce(lms);

    if (m) {
        std::vector<std::int32_t> sorted_lms;
        sorted_lms.reserve(m);
        for (auto v : sa)
            if (lms_map[v] != -1)
                sorted_lms.push_back(v);
        std::vector<std::int32_t> rec_s(m);
        std::int32_t rec_upper = 0;
        rec_s[lms_map[sorted_lms[0]]] = 0;
        for (std::int32_t i = 1; i < m; ++i) {
            auto l = sorted_lms[i - 1], r = sorted_lms[i];
            auto end_l = lms_map[l] + 1 < m ? lms[lms_map[l] + 1] : n;
            auto end_r = lms_map[r] + 1 < m ? lms[lms_map[r] + 1] : n;
            bool same = true;
            if (end_l - l != end_r - r) {
                same = false;
            } else {
                while (l < end_l && s[l] == s[r]) {
                    ++l;
                    ++r;
                }
                if (l == n || s[l] != s[r])
                    same = false;
            }
            if (!same)
                ++rec_upper;
            rec_s[lms_map[sorted_lms[i]]] = rec_upper;
        }
        auto rec_sa = sa_is(rec_s, rec_upper);
        for (std::int32_t i = 0; i < m; ++i)
            sorted_lms[i] = lms[rec_sa[i]];
        induce(sorted_lms);
    }
    return sa;
}

}  // namespace docfreq::detail

namespace docfreq {

// 0-based suffix array of a byte string.
inline std::vector<std::int32_t> suffix_array(std::string_view text) {
    if (text.size() >= static_cast<std::size_t>(INT32_MAX))
        throw error(errc::invalid_parameter, "text too long for 32-bit suffix array");
    std::vector<std::int32_t> s(text.size());
    for (std::size_t i = 0; i < text.size(); ++i)
        s[i] = static_cast<unsigned char>(text[i]);
    return detail::sa_is(s, 255);
}

// Kasai et al.: lcp[i] = lcp(text[sa[i-1]..], text[sa[i]..]), lcp[0] = 0. 0-based.
inline std::vector<std::uint32_t> lcp_array(std::string_view text, const std::vector<std::int32_t>& sa) {
    const std::size_t n = sa.size();
    std::vector<std::int32_t> rank(n);
    for (std::size_t i = 0; i < n; ++i)
        rank[sa[i]] = static_cast<std::int32_t>(i);
    std::vector<std::uint32_t> lcp(n, 0);
    std::size_t h = 0;
    for (std::size_t p = 0; p < n; ++p) {
        auto r = static_cast<std::size_t>(rank[p]);
        if (r == 0) {
            h = 0;
            continue;
        }
        std::size_t q = static_cast<std::size_t>(sa[r - 1]);
        while (p + h < n && q + h < n && text[p + h] == text[q + h])
            ++h;
        lcp[r] = static_cast<std::uint32_t>(h);
        if (h > 0)
            --h;
    }
    return lcp;
}

}  // namespace docfreq
