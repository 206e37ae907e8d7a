#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "baselines.hpp"
#include "binary_io.hpp"
#include "collection.hpp"
#include "common.hpp"
#include "gcda_lr.hpp"
#include "grammar.hpp"
#include "ilcp.hpp"
#include "pdl.hpp"
#include "rindex.hpp"
#include "suffix_oracle.hpp"

namespace docfreq {

enum class method : std::uint8_t { pdl, gcda, ilcp, ilcp_star, sada, wt, scan };

inline constexpr std::array<method, 7> all_methods{method::pdl,  method::gcda, method::ilcp, method::ilcp_star,
                                                   method::sada, method::wt,   method::scan};

inline const char* method_name(method m) {
    switch (m) {
    case method::pdl: return "pdl";
    case method::gcda: return "gcda";
    case method::ilcp: return "ilcp";
    case method::ilcp_star: return "ilcp-star";
    case method::sada: return "sada";
    case method::wt: return "wt";
    case method::scan: return "scan";
    }
    return "?";
}

inline method parse_method(std::string_view s) {
    for (auto m : all_methods)
        if (s == method_name(m))
            return m;
    if (s == "gcda-lr")
        return method::gcda;
    if (s == "ilcp*" || s == "ilcp_star")
        return method::ilcp_star;
    throw error(errc::invalid_parameter, "unknown method '" + std::string(s) + "'");
}

inline sa_provider_kind parse_provider(std::string_view s) {
    if (s == "plain")
        return sa_provider_kind::plain;
    if (s == "grammar-diff")
        return sa_provider_kind::grammar_diff;
    throw error(errc::invalid_parameter, "unknown SA provider '" + std::string(s) + "'");
}

inline const char* provider_name(sa_provider_kind k) {
    return k == sa_provider_kind::plain ? "plain" : "grammar-diff";
}

struct build_options {
    std::vector<method> methods{method::pdl};
    sa_provider_kind provider = sa_provider_kind::grammar_diff;
    std::size_t pdl_sampling = 0;
};

struct index_stats {
    std::uint64_t n = 0, t = 0;
    std::uint64_t r = 0;        // BWT runs of the concatenation
    std::uint64_t r_docs = 0;   // BWT runs summed over the documents
    std::optional<std::uint64_t> nu;  // nonterminals of the DA grammar
    std::uint64_t rho = 0, rho_star = 0;
};

inline constexpr std::uint32_t container_version = 1;

// A collection with the r-indexes every method shares plus the structures of
// the selected methods. Serializes to a tagged-section container.
class doc_index {
public:
    static doc_index build(collection coll, const build_options& opt) {
        if (opt.methods.empty())
            throw error(errc::invalid_parameter, "no method selected");
        doc_index idx;
        idx.methods_ = opt.methods;
        idx.provider_ = opt.provider;
        idx.sampling_ = opt.pdl_sampling;
        auto s = build_suffix_structures(coll);
        std::vector<std::int32_t> sa0(s.n);
        for (std::size_t i = 1; i <= s.n; ++i)
            sa0[i - 1] = static_cast<std::int32_t>(s.sa[i] - 1);
        idx.text_ = rindex_set::build(coll, sa0, opt.provider);
        auto ilcp = build_ilcp(coll, s);
        rle_ilcp left(ilcp.ilcp), right(ilcp.rilcp);
        double_rle_ilcp left_star(left, s.da), right_star(right, s.da);
        idx.stats_.n = s.n;
        idx.stats_.t = coll.t();
        idx.stats_.r = idx.text_.global.runs();
        idx.stats_.r_docs = idx.text_.total_doc_runs();
        idx.stats_.rho = left.runs();
        idx.stats_.rho_star = left_star.runs();
        if (idx.has(method::pdl) || idx.has(method::gcda)) {
            idx.grammar_ = balanced_slp::build(std::vector<std::int64_t>(s.da.begin() + 1, s.da.end()));
            idx.stats_.nu = idx.grammar_->nonterminals();
        }
        if (idx.has(method::pdl))
            idx.pdl_ = pdl_index::build(*idx.grammar_, opt.pdl_sampling);
        if (idx.has(method::gcda))
            idx.lr_ = lr_index::build(*idx.grammar_, coll.t());
        if (idx.has(method::ilcp))
            idx.ilcp_ = ilcp_index(std::move(left), std::move(right));
        if (idx.has(method::ilcp_star))
            idx.ilcp_star_ = ilcp_star_index(std::move(left_star), std::move(right_star));
        if (idx.has(method::sada))
            idx.sada_ = sada_index(coll.t(), s.prev_same, s.next_same);
        if (idx.has(method::wt))
            idx.wt_ = wt_index(s.da);
        idx.coll_ = std::move(coll);
        return idx;
    }

    const collection& coll() const { return coll_; }
    const rindex_set& text() const { return text_; }
    const std::vector<method>& methods() const { return methods_; }
    method default_method() const { return methods_.front(); }
    sa_provider_kind provider() const { return provider_; }
    const index_stats& stats() const { return stats_; }
    const std::optional<balanced_slp>& da_grammar() const { return grammar_; }

    bool has(method m) const { return std::find(methods_.begin(), methods_.end(), m) != methods_.end(); }

    doc_freq query(std::string_view pattern) const { return query(default_method(), pattern); }

    doc_freq query(method m, std::string_view pattern) const {
        auto range = text_.global.pattern_interval(pattern);
        if (!range)
            return {};
        return query_range(m, *range, pattern.size());
    }

    // Frequencies over the SA interval of a pattern of length plen.
    doc_freq query_range(method m, const sa_range& range, std::size_t plen) const {
        require(m);
        switch (m) {
        case method::pdl: return pdl_->query_range(*grammar_, range.first, range.last);
        case method::gcda: return lr_->query_range(coll_, text_, *grammar_, range.first, range.last);
        case method::ilcp: return ilcp_->query_range(coll_, text_, range.first, range.last, plen);
        case method::ilcp_star: return ilcp_star_->query_range(coll_, text_, range.first, range.last, plen);
        case method::sada: return sada_->query_range(coll_, text_, range.first, range.last);
        case method::wt: return wt_->query_range(range.first, range.last);
        case method::scan: {
            doc_freq out;
            for (auto p : text_.global.locate(range))
                ++out[coll_.doc_of(p)];
            return out;
        }
        }
        return {};
    }

    // Serialized section sizes keyed by tag; RIDX accumulates global and per document.
    std::map<std::string, std::size_t> section_bytes() const {
        std::map<std::string, std::size_t> out;
        for (const auto& [tag, payload] : sections())
            out[tag] += payload.size() + 12;
        return out;
    }

    // Bytes of the shared parts plus the sections one method reads.
    std::size_t footprint_bytes(method m) const {
        require(m);
        auto sec = section_bytes();
        std::size_t b = 8 + sec["META"] + sec["COLL"] + sec["RIDX"];
        switch (m) {
        case method::pdl: return b + sec["GRMR"] + sec["PDLX"];
        case method::gcda: return b + sec["GRMR"] + sec["GLRX"];
        case method::ilcp: return b + sec["ILCP"];
        case method::ilcp_star: return b + sec["ILCS"];
        case method::sada: return b + sec["BSLC"];
        case method::wt: return b + sec["BSWT"];
        case method::scan: return b;
        }
        return b;
    }

    std::string serialize() const {
        byte_writer out;
        out.put_bytes("DLFQ");
        out.put<std::uint32_t>(container_version);
        for (const auto& [tag, payload] : sections())
            out.put_section(tag, payload);
        return out.take();
    }

    static doc_index load(std::string_view bytes) {
        byte_reader in(bytes);
        if (in.remaining() < 8 || in.get_bytes(4) != "DLFQ")
            throw error(errc::corrupt_container, "bad magic");
        auto version = in.get<std::uint32_t>();
        if (version != container_version)
            throw error(errc::corrupt_container, "unsupported container version " + std::to_string(version));
        doc_index idx;
        bool meta = false, coll = false;
        std::vector<r_index> ridx;
        std::optional<std::string> pdl, glr;
        while (!in.done()) {
            auto tag = std::string(in.get_bytes(4));
            auto len = in.get<std::uint64_t>();
            if (len > in.remaining())
                throw error(errc::corrupt_container, "section " + tag + " overruns the container");
            byte_reader sec(in.get_bytes(len));
            if (tag == "META") {
                idx.load_meta(sec);
                meta = true;
            } else if (tag == "COLL") {
                idx.coll_ = collection::load(sec);
                coll = true;
            } else if (tag == "RIDX") {
                ridx.push_back(r_index::load(sec));
            } else if (tag == "GRMR") {
                idx.grammar_ = balanced_slp::load(sec);
            } else if (tag == "PDLX") {
                pdl = std::string(sec.get_bytes(len));
            } else if (tag == "GLRX") {
                glr = std::string(sec.get_bytes(len));
            } else if (tag == "ILCP") {
                idx.ilcp_ = ilcp_index::load(sec);
            } else if (tag == "ILCS") {
                idx.ilcp_star_ = ilcp_star_index::load(sec);
            } else if (tag == "BSLC") {
                idx.sada_ = sada_index::load(sec);
            } else if (tag == "BSWT") {
                idx.wt_ = wt_index::load(sec);
            } else {
                continue;
            }
            if (!sec.done())
                throw error(errc::corrupt_container, "trailing bytes in section " + tag);
        }
        if (!meta || !coll || ridx.size() != idx.coll_.t() + 1)
            throw error(errc::corrupt_container, "missing META, COLL or RIDX sections");
        idx.text_.global = std::move(ridx.front());
        idx.text_.docs.assign(std::make_move_iterator(ridx.begin() + 1), std::make_move_iterator(ridx.end()));
        if (idx.text_.global.size() != idx.coll_.n())
            throw error(errc::corrupt_container, "global index length");
        if ((pdl || glr) && !idx.grammar_)
            throw error(errc::corrupt_container, "document lists without a DA grammar");
        if (pdl) {
            byte_reader r(*pdl);
            idx.pdl_ = pdl_index::load(r, *idx.grammar_);
        }
        if (glr) {
            byte_reader r(*glr);
            idx.lr_ = lr_index::load(r, *idx.grammar_);
        }
        for (auto m : idx.methods_)
            if (!idx.available(m))
                throw error(errc::corrupt_container, std::string("missing sections for method ") + method_name(m));
        return idx;
    }

    void save(const std::string& path) const {
        std::ofstream f(path, std::ios::binary);
        auto bytes = serialize();
        f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!f)
            throw error(errc::unreadable_file, "cannot write " + path);
    }

    static doc_index open(const std::string& path) { return load(read_file(path)); }

private:
    bool available(method m) const {
        switch (m) {
        case method::pdl: return pdl_.has_value();
        case method::gcda: return lr_.has_value();
        case method::ilcp: return ilcp_.has_value();
        case method::ilcp_star: return ilcp_star_.has_value();
        case method::sada: return sada_.has_value();
        case method::wt: return wt_.has_value();
        case method::scan: return true;
        }
        return false;
    }

    void require(method m) const {
        if (!has(m) || !available(m))
            throw error(errc::invalid_parameter, std::string("index was not built for method ") + method_name(m));
    }

    std::vector<std::pair<std::string, std::string>> sections() const {
        std::vector<std::pair<std::string, std::string>> out;
        auto add = [&](const char* tag, auto&& fill) {
            byte_writer w;
            fill(w);
            out.emplace_back(tag, w.take());
        };
        add("META", [&](byte_writer& w) { save_meta(w); });
        add("COLL", [&](byte_writer& w) { coll_.serialize(w); });
        add("RIDX", [&](byte_writer& w) { text_.global.serialize(w); });
        for (const auto& d : text_.docs)
            add("RIDX", [&](byte_writer& w) { d.serialize(w); });
        if (grammar_)
            add("GRMR", [&](byte_writer& w) { grammar_->serialize(w); });
        if (pdl_)
            add("PDLX", [&](byte_writer& w) { pdl_->serialize(w); });
        if (lr_)
            add("GLRX", [&](byte_writer& w) { lr_->serialize(w); });
        if (ilcp_)
            add("ILCP", [&](byte_writer& w) { ilcp_->serialize(w); });
        if (ilcp_star_)
            add("ILCS", [&](byte_writer& w) { ilcp_star_->serialize(w); });
        if (sada_)
            add("BSLC", [&](byte_writer& w) { sada_->serialize(w); });
        if (wt_)
            add("BSWT", [&](byte_writer& w) { wt_->serialize(w); });
        return out;
    }

    void save_meta(byte_writer& w) const {
        w.put<std::uint8_t>(static_cast<std::uint8_t>(methods_.size()));
        for (auto m : methods_)
            w.put<std::uint8_t>(static_cast<std::uint8_t>(m));
        w.put<std::uint8_t>(static_cast<std::uint8_t>(provider_));
        w.put<std::uint64_t>(sampling_);
        w.put<std::uint64_t>(stats_.n);
        w.put<std::uint64_t>(stats_.t);
        w.put<std::uint64_t>(stats_.r);
        w.put<std::uint64_t>(stats_.r_docs);
        w.put<std::uint8_t>(stats_.nu.has_value());
        w.put<std::uint64_t>(stats_.nu.value_or(0));
        w.put<std::uint64_t>(stats_.rho);
        w.put<std::uint64_t>(stats_.rho_star);
    }

    void load_meta(byte_reader& r) {
        auto k = r.get<std::uint8_t>();
        if (k == 0)
            throw error(errc::corrupt_container, "no method recorded");
        for (std::uint8_t i = 0; i < k; ++i) {
            auto m = r.get<std::uint8_t>();
            if (m >= all_methods.size())
                throw error(errc::corrupt_container, "unknown method id " + std::to_string(m));
            methods_.push_back(static_cast<method>(m));
        }
        auto p = r.get<std::uint8_t>();
        if (p > 1)
            throw error(errc::corrupt_container, "unknown SA provider id");
        provider_ = static_cast<sa_provider_kind>(p);
        sampling_ = r.get<std::uint64_t>();
        stats_.n = r.get<std::uint64_t>();
        stats_.t = r.get<std::uint64_t>();
        stats_.r = r.get<std::uint64_t>();
        stats_.r_docs = r.get<std::uint64_t>();
        bool has_nu = r.get<std::uint8_t>();
        auto nu = r.get<std::uint64_t>();
        if (has_nu)
            stats_.nu = nu;
        stats_.rho = r.get<std::uint64_t>();
        stats_.rho_star = r.get<std::uint64_t>();
    }

    collection coll_{std::vector<std::string>{"x"}};
    rindex_set text_;
    std::vector<method> methods_;
    sa_provider_kind provider_ = sa_provider_kind::grammar_diff;
    std::size_t sampling_ = 0;
    index_stats stats_;
    std::optional<balanced_slp> grammar_;
    std::optional<pdl_index> pdl_;
    std::optional<lr_index> lr_;
    std::optional<ilcp_index> ilcp_;
    std::optional<ilcp_star_index> ilcp_star_;
    std::optional<sada_index> sada_;
    std::optional<wt_index> wt_;
};

}  // namespace docfreq
