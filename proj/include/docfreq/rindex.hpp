#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "binary_io.hpp"
#include "bit_vector.hpp"
#include "collection.hpp"
#include "common.hpp"
#include "grammar.hpp"
#include "suffix_array.hpp"

namespace docfreq {

enum class sa_provider_kind : std::uint8_t { plain = 0, grammar_diff = 1 };

// Random access to SA and ISA. PLAIN keeps both arrays; GRAMMAR_DIFF keeps
// balanced grammars over SA[i] - SA[i-1] and ISA[p] - ISA[p-1] and answers by
// prefix sums along one root-to-leaf path. Rows and text positions are 1-based.
class sa_access_provider {
public:
    sa_access_provider() = default;

    sa_access_provider(sa_provider_kind kind, const std::vector<std::int32_t>& sa0) : kind_(kind), n_(sa0.size()) {
        std::vector<std::int64_t> sa(n_), isa(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            sa[i] = sa0[i] + 1;
            isa[static_cast<std::size_t>(sa0[i])] = static_cast<std::int64_t>(i) + 1;
        }
        if (kind_ == sa_provider_kind::plain) {
            sa_ = std::move(sa);
            isa_ = std::move(isa);
        } else {
            sa_grammar_ = balanced_slp::build(differences(sa));
            isa_grammar_ = balanced_slp::build(differences(isa));
        }
    }

    sa_provider_kind kind() const { return kind_; }
    std::size_t size() const { return n_; }

    std::size_t sa(std::size_t row) const {
        if (row < 1 || row > n_)
            throw error(errc::out_of_range, "SA row " + std::to_string(row));
        if (kind_ == sa_provider_kind::plain)
            return static_cast<std::size_t>(sa_[row - 1]);
        return static_cast<std::size_t>(sa_grammar_.prefix_sum(row));
    }

    std::size_t isa(std::size_t pos) const {
        if (pos < 1 || pos > n_)
            throw error(errc::out_of_range, "ISA position " + std::to_string(pos));
        if (kind_ == sa_provider_kind::plain)
            return static_cast<std::size_t>(isa_[pos - 1]);
        return static_cast<std::size_t>(isa_grammar_.prefix_sum(pos));
    }

    std::size_t size_in_bytes() const {
        if (kind_ == sa_provider_kind::plain)
            return (sa_.size() + isa_.size()) * sizeof(std::int64_t);
        return sa_grammar_.size_in_bytes() + isa_grammar_.size_in_bytes();
    }

    void serialize(byte_writer& out) const {
        out.put(static_cast<std::uint8_t>(kind_));
        out.put<std::uint64_t>(n_);
        if (kind_ == sa_provider_kind::plain) {
            out.put_vector(sa_);
            out.put_vector(isa_);
        } else {
            sa_grammar_.serialize(out);
            isa_grammar_.serialize(out);
        }
    }

    static sa_access_provider load(byte_reader& in) {
        sa_access_provider p;
        auto k = in.get<std::uint8_t>();
        if (k > 1)
            throw error(errc::corrupt_container, "unknown SA provider");
        p.kind_ = static_cast<sa_provider_kind>(k);
        p.n_ = in.get<std::uint64_t>();
        if (p.kind_ == sa_provider_kind::plain) {
            p.sa_ = in.get_vector<std::int64_t>();
            p.isa_ = in.get_vector<std::int64_t>();
            if (p.sa_.size() != p.n_ || p.isa_.size() != p.n_)
                throw error(errc::corrupt_container, "SA length");
        } else {
            p.sa_grammar_ = balanced_slp::load(in);
            p.isa_grammar_ = balanced_slp::load(in);
            if (p.sa_grammar_.size() != p.n_ || p.isa_grammar_.size() != p.n_)
                throw error(errc::corrupt_container, "SA grammar length");
        }
        return p;
    }

private:
    static std::vector<std::int64_t> differences(const std::vector<std::int64_t>& v) {
        std::vector<std::int64_t> d(v.size());
        std::int64_t prev = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            d[i] = v[i] - prev;
            prev = v[i];
        }
        return d;
    }

    sa_provider_kind kind_ = sa_provider_kind::plain;
    std::size_t n_ = 0;
    std::vector<std::int64_t> sa_, isa_;
    balanced_slp sa_grammar_, isa_grammar_;
};

// Suffix-array interval [first..last] (1-based rows). toehold is SA[first]
// when known from backward search, 0 otherwise.
struct sa_range {
    std::size_t first = 0;
    std::size_t last = 0;
    std::size_t toehold = 0;

    std::size_t width() const { return last - first + 1; }
};

// Run-length BWT index: backward search over the runs, locate by walking
// successor samples taken at run ends, and SA/ISA access through a provider.
class r_index {
public:
    r_index() = default;

    static r_index build(std::string_view text, sa_provider_kind kind) { return build(text, suffix_array(text), kind); }

    static r_index build(std::string_view text, const std::vector<std::int32_t>& sa0, sa_provider_kind kind) {
        const std::size_t n = text.size();
        std::vector<std::uint8_t> heads;
        std::vector<std::uint64_t> lengths, first_sa, last_sa;
        for (std::size_t i = 0; i < n; ++i) {
            auto p = static_cast<std::size_t>(sa0[i]);
            auto c = static_cast<std::uint8_t>(text[p == 0 ? n - 1 : p - 1]);
            if (heads.empty() || heads.back() != c) {
                heads.push_back(c);
                lengths.push_back(0);
                first_sa.push_back(p);
                last_sa.push_back(p);
            }
            ++lengths.back();
            last_sa.back() = p;
        }
        r_index idx;
        idx.n_ = n;
        idx.heads_ = std::move(heads);
        idx.lengths_ = std::move(lengths);
        idx.first_sa_ = std::move(first_sa);
        idx.last_sa_ = std::move(last_sa);
        idx.provider_ = sa_access_provider(kind, sa0);
        idx.build_support();
        return idx;
    }

    std::size_t size() const { return n_; }
    std::size_t runs() const { return heads_.size(); }
    const sa_access_provider& provider() const { return provider_; }

    // Full interval, with toehold SA[1].
    sa_range full_range() const { return {1, n_, first_sa_.empty() ? 0 : first_sa_[0] + 1}; }

    // One backward-search step: rows of suffixes c·X given the rows of X.
    std::optional<sa_range> extend_left(const sa_range& range, unsigned char c) const {
        std::size_t sp = range.first - 1, ep = range.last - 1;
        std::size_t nsp = c_table_[c] + rank(c, sp);
        std::size_t nep_excl = c_table_[c] + rank(c, ep + 1);
        if (nsp >= nep_excl)
            return std::nullopt;
        // SA of the row whose LF-image is the new first row (0-based)
        std::size_t prev = 0;
        std::size_t j = run_of(sp);
        if (heads_[j] == c) {
            prev = range.toehold != 0 ? range.toehold - 1 : provider_.sa(sp + 1) - 1;
        } else {
            const auto& ids = runs_of_[c];
            prev = static_cast<std::size_t>(first_sa_[*std::upper_bound(ids.begin(), ids.end(), j)]);
        }
        std::size_t toehold = prev == 0 ? n_ - 1 : prev - 1;
        return sa_range{nsp + 1, nep_excl, toehold + 1};
    }

    std::optional<sa_range> pattern_interval(std::string_view pattern) const {
        check_pattern(pattern);
        std::optional<sa_range> range = full_range();
        for (std::size_t k = pattern.size(); k-- > 0 && range;)
            range = extend_left(*range, static_cast<unsigned char>(pattern[k]));
        return range;
    }

    std::size_t count(std::string_view pattern) const {
        auto r = pattern_interval(pattern);
        return r ? r->width() : 0;
    }

    // SA[first..last] in row order (1-based text positions).
    std::vector<std::size_t> locate(const sa_range& range) const {
        if (range.first < 1 || range.first > range.last || range.last > n_)
            throw error(errc::out_of_range, "locate range");
        std::vector<std::size_t> out;
        out.reserve(range.width());
        std::size_t p = range.toehold != 0 ? range.toehold - 1 : provider_.sa(range.first) - 1;
        out.push_back(p + 1);
        for (std::size_t i = range.first; i < range.last; ++i) {
            p = phi_inverse(p);
            out.push_back(p + 1);
        }
        return out;
    }

    std::size_t sa_access(std::size_t row) const { return provider_.sa(row); }
    std::size_t isa_access(std::size_t pos) const { return provider_.isa(pos); }

    unsigned char bwt_at(std::size_t row) const {
        if (row < 1 || row > n_)
            throw error(errc::out_of_range, "BWT row " + std::to_string(row));
        return heads_[run_of(row - 1)];
    }

    // LF mapping on 1-based rows.
    std::size_t lf(std::size_t row) const {
        auto c = bwt_at(row);
        return c_table_[c] + rank(c, row - 1) + 1;
    }

    // Occurrences of c in BWT[1..i].
    std::size_t rank(unsigned char c, std::size_t i) const {
        if (i == 0)
            return 0;
        std::size_t j = run_of(i - 1);
        const auto& ids = runs_of_[c];
        std::size_t k = static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), j) - ids.begin());
        std::size_t r = cum_[c][k];
        if (heads_[j] == c)
            r += i - run_start(j);
        return r;
    }

    std::string bwt() const {
        std::string out;
        out.reserve(n_);
        for (std::size_t j = 0; j < heads_.size(); ++j)
            out.append(lengths_[j], static_cast<char>(heads_[j]));
        return out;
    }

    // Rebuild the text by LF-walking from the row of the last text position.
    std::string invert() const {
        std::string t(n_, '\0');
        if (n_ == 0)
            return t;
        std::size_t row = 1;
        std::size_t pos = static_cast<std::size_t>(first_sa_[0]);  // SA[1], 0-based
        unsigned char first_char = 0;
        for (int c = 0; c < 256; ++c)
            if (c_table_[c + 1] > 0) {
                first_char = static_cast<unsigned char>(c);
                break;
            }
        t[pos] = static_cast<char>(first_char);
        for (std::size_t k = 1; k < n_; ++k) {
            auto c = bwt_at(row);
            pos = pos == 0 ? n_ - 1 : pos - 1;
            t[pos] = static_cast<char>(c);
            row = lf(row);
        }
        return t;
    }

    std::size_t size_in_bytes(bool with_samples = true) const {
        std::size_t b = heads_.size() * (1 + sizeof(std::uint64_t));
        if (with_samples)
            b += 2 * first_sa_.size() * sizeof(std::uint64_t);
        return b + provider_.size_in_bytes();
    }

    void serialize(byte_writer& out) const {
        out.put<std::uint64_t>(n_);
        out.put_vector(heads_);
        out.put_vector(lengths_);
        out.put_vector(first_sa_);
        out.put_vector(last_sa_);
        provider_.serialize(out);
    }

    static r_index load(byte_reader& in) {
        r_index idx;
        idx.n_ = in.get<std::uint64_t>();
        idx.heads_ = in.get_vector<std::uint8_t>();
        idx.lengths_ = in.get_vector<std::uint64_t>();
        idx.first_sa_ = in.get_vector<std::uint64_t>();
        idx.last_sa_ = in.get_vector<std::uint64_t>();
        std::uint64_t total = 0;
        for (auto l : idx.lengths_)
            total += l;
        auto r = idx.heads_.size();
        if (idx.lengths_.size() != r || idx.first_sa_.size() != r || idx.last_sa_.size() != r || total != idx.n_)
            throw error(errc::corrupt_container, "run-length BWT shape");
        for (std::size_t j = 0; j < r; ++j)
            if (idx.first_sa_[j] >= idx.n_ || idx.last_sa_[j] >= idx.n_)
                throw error(errc::corrupt_container, "SA sample out of range");
        idx.provider_ = sa_access_provider::load(in);
        if (idx.provider_.size() != idx.n_)
            throw error(errc::corrupt_container, "provider length");
        idx.build_support();
        return idx;
    }

private:
    std::size_t run_of(std::size_t row0) const { return run_starts_.rank1(row0 + 1) - 1; }
    std::size_t run_start(std::size_t j) const { return run_starts_.select1(j + 1) - 1; }

    // SA[i+1] from SA[i] (0-based text positions).
    std::size_t phi_inverse(std::size_t p) const {
        auto it = std::upper_bound(phi_keys_.begin(), phi_keys_.end(), p);
        if (it == phi_keys_.begin())
            throw error(errc::out_of_range, "no successor sample for text position " + std::to_string(p));
        std::size_t k = static_cast<std::size_t>(it - phi_keys_.begin()) - 1;
        return phi_vals_[k] + (p - phi_keys_[k]);
    }

    void build_support() {
        const std::size_t r = heads_.size();
        std::vector<std::size_t> starts;
        starts.reserve(r);
        std::array<std::size_t, 256> counts{};
        for (auto& v : runs_of_)
            v.clear();
        for (auto& v : cum_)
            v.assign(1, 0);
        std::size_t row = 0;
        for (std::size_t j = 0; j < r; ++j) {
            starts.push_back(row + 1);
            auto c = heads_[j];
            runs_of_[c].push_back(static_cast<std::uint32_t>(j));
            cum_[c].push_back(cum_[c].back() + lengths_[j]);
            counts[c] += lengths_[j];
            row += lengths_[j];
        }
        run_starts_ = bit_vector::from_positions(n_, starts);
        c_table_[0] = 0;
        for (int c = 0; c < 256; ++c)
            c_table_[c + 1] = c_table_[c] + counts[c];

        std::vector<std::pair<std::uint64_t, std::uint64_t>> phi;
        phi.reserve(r);
        for (std::size_t j = 0; j + 1 < r; ++j)
            phi.emplace_back(last_sa_[j], first_sa_[j + 1]);
        std::sort(phi.begin(), phi.end());
        phi_keys_.clear();
        phi_vals_.clear();
        for (auto [k, v] : phi) {
            phi_keys_.push_back(k);
            phi_vals_.push_back(v);
        }
    }

    std::size_t n_ = 0;
    std::vector<std::uint8_t> heads_;
    std::vector<std::uint64_t> lengths_;
    std::vector<std::uint64_t> first_sa_;  // SA at the first row of each run, 0-based
    std::vector<std::uint64_t> last_sa_;   // SA at the last row of each run, 0-based
    sa_access_provider provider_;

    bit_vector run_starts_;
    std::array<std::vector<std::uint32_t>, 256> runs_of_;
    std::array<std::vector<std::size_t>, 256> cum_;
    std::array<std::size_t, 257> c_table_{};
    std::vector<std::uint64_t> phi_keys_, phi_vals_;
};

// The global index over the concatenation plus one index per document
// (over T_k 0x01).
struct rindex_set {
    r_index global;
    std::vector<r_index> docs;

    static rindex_set build(const collection& coll, const std::vector<std::int32_t>& global_sa0,
                            sa_provider_kind kind) {
        rindex_set s;
        s.global = r_index::build(coll.concat(), global_sa0, kind);
        s.docs.reserve(coll.t());
        for (doc_id k = 1; k <= coll.t(); ++k)
            s.docs.push_back(r_index::build(coll.local_text(k), kind));
        return s;
    }

    std::size_t total_doc_runs() const {
        std::size_t r = 0;
        for (const auto& d : docs)
            r += d.runs();
        return r;
    }

    // Frequency of the pattern in doc given the global rows of its leftmost and
    // rightmost occurrence inside the pattern interval.
    std::uint64_t freq_from_extremes(const collection& coll, doc_id doc, std::size_t left_row,
                                     std::size_t right_row) const {
        auto [dl, pl] = coll.to_local(global.sa_access(left_row));
        auto [dr, pr] = coll.to_local(global.sa_access(right_row));
        if (dl != doc || dr != doc)
            throw error(errc::doc_mismatch, "extremes of document " + std::to_string(doc) + " map to documents " +
                                                std::to_string(dl) + " and " + std::to_string(dr));
        const auto& idx = docs.at(doc - 1);
        auto l = idx.isa_access(pl);
        auto r = idx.isa_access(pr);
        if (r < l)
            throw error(errc::doc_mismatch, "extremes out of order in document " + std::to_string(doc));
        return r - l + 1;
    }
};

}  // namespace docfreq
