#pragma once

#include <string_view>
#include <vector>

#include "collection.hpp"
#include "common.hpp"
#include "suffix_array.hpp"

namespace docfreq {

// Plain suffix structures of a collection. Every array is 1-based; element 0
// is unused padding.
struct suffix_structures {
    std::size_t n = 0;
    std::vector<std::size_t> sa;
    std::vector<std::size_t> isa;
    std::vector<doc_id> da;
    std::vector<std::size_t> lcp;   // lcp[i] = lcp(SA[i-1], SA[i]), lcp[1] = 0
    std::vector<std::size_t> rlcp;  // rlcp[i] = lcp(SA[i], SA[i+1]), rlcp[n] = 0
    std::vector<std::size_t> prev_same;  // C: previous row of the same document, 0 if none
    std::vector<std::size_t> next_same;  // CNext: next row of the same document, n+1 if none
};

// Interleaved per-document LCP arrays, 1-based.
struct ilcp_arrays {
    std::vector<std::size_t> ilcp;
    std::vector<std::size_t> rilcp;
};

inline suffix_structures build_suffix_structures(const collection& coll) {
    suffix_structures s;
    const auto& text = coll.concat();
    s.n = text.size();
    auto sa0 = suffix_array(text);
    auto lcp0 = lcp_array(text, sa0);

    s.sa.assign(s.n + 1, 0);
    s.isa.assign(s.n + 1, 0);
    s.da.assign(s.n + 1, 0);
    s.lcp.assign(s.n + 1, 0);
    s.rlcp.assign(s.n + 1, 0);
    for (std::size_t i = 1; i <= s.n; ++i) {
        s.sa[i] = static_cast<std::size_t>(sa0[i - 1]) + 1;
        s.isa[s.sa[i]] = i;
        s.da[i] = coll.doc_of(s.sa[i]);
        s.lcp[i] = lcp0[i - 1];
    }
    for (std::size_t i = 1; i < s.n; ++i)
        s.rlcp[i] = s.lcp[i + 1];

    s.prev_same.assign(s.n + 1, 0);
    s.next_same.assign(s.n + 1, s.n + 1);
    std::vector<std::size_t> last(coll.t() + 1, 0);
    for (std::size_t i = 1; i <= s.n; ++i) {
        auto d = s.da[i];
        s.prev_same[i] = last[d];
        if (last[d] != 0)
            s.next_same[last[d]] = i;
        last[d] = i;
    }
    return s;
}

// ILCP[i] = LCP_k[j] when SA[i] is the j-th smallest suffix of document k (over
// T_k 0x01). The row of the global sentinel belongs to no document text and
// gets 0 in both arrays.
inline ilcp_arrays build_ilcp(const collection& coll, const suffix_structures& s) {
    ilcp_arrays out;
    out.ilcp.assign(s.n + 1, 0);
    out.rilcp.assign(s.n + 1, 0);
    std::vector<std::vector<std::uint32_t>> doc_lcp(coll.t() + 1);
    for (doc_id k = 1; k <= coll.t(); ++k) {
        auto local = coll.local_text(k);
        doc_lcp[k] = lcp_array(local, suffix_array(local));
    }
    std::vector<std::size_t> seen(coll.t() + 1, 0);
    for (std::size_t i = 1; i <= s.n; ++i) {
        if (s.sa[i] == s.n)
            continue;
        auto d = s.da[i];
        const auto& l = doc_lcp[d];
        std::size_t j = seen[d]++;
        out.ilcp[i] = l[j];
        out.rilcp[i] = j + 1 < l.size() ? l[j + 1] : 0;
    }
    return out;
}

// Ground truth: overlapping occurrence counts by scanning every document.
inline doc_freq oracle_doc_freq(const collection& coll, std::string_view pattern) {
    check_pattern(pattern);
    doc_freq out;
    for (doc_id k = 1; k <= coll.t(); ++k) {
        std::string_view d = coll.doc(k);
        std::uint64_t c = 0;
        for (auto p = d.find(pattern); p != std::string_view::npos; p = d.find(pattern, p + 1))
            ++c;
        if (c)
            out[k] = c;
    }
    return out;
}

}  // namespace docfreq
