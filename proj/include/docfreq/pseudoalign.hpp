#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "common.hpp"
#include "doc_index.hpp"

namespace docfreq {

enum class assign_status { assigned, ambiguous, unassigned };

inline const char* status_name(assign_status s) {
    switch (s) {
    case assign_status::assigned: return "ASSIGNED";
    case assign_status::ambiguous: return "AMBIGUOUS";
    case assign_status::unassigned: return "UNASSIGNED";
    }
    return "?";
}

// A maximal matching stretch of the read, 1-based inclusive, in the
// orientation it was found.
struct read_segment {
    std::size_t begin = 0, end = 0;
    bool reverse = false;
    doc_freq freqs;  // empty when shorter than k or unmatched

    std::size_t length() const { return end - begin + 1; }
};

struct assignment {
    assign_status status = assign_status::unassigned;
    std::vector<doc_id> docs;  // the qualifying documents
    std::size_t kmers = 0;     // k-mers examined (both orientations with rc)
    std::size_t kmer_hits = 0; // of those, k-mers found in some document
    std::size_t n_kmers = 0;   // k-mers skipped for containing N
    std::vector<read_segment> segments;
};

struct assign_options {
    std::size_t k = 31;
    bool rc = false;
    std::optional<method> via;  // defaults to the index's first method
};

inline std::string reverse_complement(std::string_view s) {
    std::string out(s.rbegin(), s.rend());
    for (auto& c : out) {
        switch (c) {
        case 'A': c = 'T'; break;
        case 'C': c = 'G'; break;
        case 'G': c = 'C'; break;
        case 'T': c = 'A'; break;
        default: break;
        }
    }
    return out;
}

namespace detail {

inline bool unmatchable(char c) { return c == 'N' || static_cast<unsigned char>(c) <= doc_sentinel; }

inline void settle(assignment& a, const std::set<doc_id>& qualifying) {
    a.docs.assign(qualifying.begin(), qualifying.end());
    a.status = a.docs.empty() ? assign_status::unassigned
               : a.docs.size() == 1 ? assign_status::assigned
                                    : assign_status::ambiguous;
}

inline void check_read(std::string_view read, std::size_t k) {
    if (k == 0)
        throw error(errc::invalid_parameter, "k must be positive");
    if (read.size() < k)
        throw error(errc::read_shorter_than_k,
                    "read of length " + std::to_string(read.size()) + " < k = " + std::to_string(k));
}

}  // namespace detail

// A document qualifies when some k-mer occurs in it and every k-mer occurs in
// it or nowhere.
inline assignment kmer_assign(const doc_index& idx, std::string_view read, const assign_options& opt) {
    detail::check_read(read, opt.k);
    const method m = opt.via.value_or(idx.default_method());
    std::string rc = opt.rc ? reverse_complement(read) : std::string();
    assignment a;
    std::optional<std::set<doc_id>> common;
    const std::size_t count = read.size() - opt.k + 1;
    for (std::size_t i = 0; i < count; ++i) {
        std::set<doc_id> docs;
        bool skipped = true;
        auto add = [&](std::string_view kmer) {
            ++a.kmers;
            if (std::any_of(kmer.begin(), kmer.end(), detail::unmatchable)) {
                ++a.n_kmers;
                return;
            }
            skipped = false;
            for (auto [d, f] : idx.query(m, kmer))
                docs.insert(d);
        };
        add(read.substr(i, opt.k));
        if (opt.rc)
            add(std::string_view(rc).substr(count - 1 - i, opt.k));
        if (skipped || docs.empty())
            continue;
        ++a.kmer_hits;
        if (!common) {
            common = std::move(docs);
        } else {
            std::set<doc_id> both;
            std::set_intersection(common->begin(), common->end(), docs.begin(), docs.end(),
                                  std::inserter(both, both.end()));
            common = std::move(both);
        }
    }
    detail::settle(a, common.value_or(std::set<doc_id>{}));
    return a;
}

// Backward search from the end of the read; whenever the interval empties the
// matched suffix becomes a segment and the search restarts just left of it.
// Segments of length >= k report their document frequencies.
inline std::vector<read_segment> maximal_runs(const doc_index& idx, std::string_view read, std::size_t k,
                                              method m, bool reverse = false) {
    const auto& g = idx.text().global;
    std::vector<read_segment> out;
    std::size_t end = read.size();
    while (end > 0) {
        std::optional<sa_range> range = g.full_range();
        std::size_t i = end;
        while (i > 0 && !detail::unmatchable(read[i - 1])) {
            auto next = g.extend_left(*range, static_cast<unsigned char>(read[i - 1]));
            if (!next)
                break;
            range = next;
            --i;
        }
        if (i == end) {
            // the symbol matches nowhere
            out.push_back({end, end, reverse, {}});
            --end;
            continue;
        }
        read_segment seg{i + 1, end, reverse, {}};
        if (seg.length() >= k)
            seg.freqs = idx.query_range(m, *range, seg.length());
        out.push_back(std::move(seg));
        end = i;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

// Every reported segment (length >= k) must list the same single document.
inline assignment maxrun_assign(const doc_index& idx, std::string_view read, const assign_options& opt) {
    detail::check_read(read, opt.k);
    const method m = opt.via.value_or(idx.default_method());
    assignment a;
    a.segments = maximal_runs(idx, read, opt.k, m);
    if (opt.rc) {
        auto rc = maximal_runs(idx, reverse_complement(read), opt.k, m, true);
        a.segments.insert(a.segments.end(), rc.begin(), rc.end());
    }
    std::optional<std::set<doc_id>> common;
    for (const auto& s : a.segments) {
        if (s.length() < opt.k)
            continue;
        std::set<doc_id> docs;
        for (auto [d, f] : s.freqs)
            docs.insert(d);
        if (!common) {
            common = std::move(docs);
        } else {
            std::set<doc_id> both;
            std::set_intersection(common->begin(), common->end(), docs.begin(), docs.end(),
                                  std::inserter(both, both.end()));
            common = std::move(both);
        }
    }
    detail::settle(a, common.value_or(std::set<doc_id>{}));
    return a;
}

}  // namespace docfreq
