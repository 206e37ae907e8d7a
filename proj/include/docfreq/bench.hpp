#pragma once

#include <chrono>
#include <cstdio>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "doc_index.hpp"
#include "synthgen.hpp"

namespace docfreq {

struct bench_config {
    concat_params gen;
    std::vector<method> methods{all_methods.begin(), all_methods.end()};
    sa_provider_kind provider = sa_provider_kind::grammar_diff;
    std::vector<std::size_t> pattern_lengths{8, 12, 16};
    std::size_t patterns = 100;  // per length
    std::size_t reps = 1;
};

struct bench_row {
    method m;
    std::uint64_t n = 0, t = 0, r = 0;
    std::optional<std::uint64_t> nu;
    double bits_per_symbol = 0;
    double mean_query_us = 0;
    double ndoc_mean = 0;
};

inline const char* bench_csv_header =
    "method,n,t,r,nu,index_bits_per_symbol,mean_query_microsec,ndoc_mean";

inline std::string bench_csv_line(const bench_row& row) {
    std::string nu = row.nu ? std::to_string(*row.nu) : "";
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s,%llu,%llu,%llu,%s,%.4f,%.3f,%.3f", method_name(row.m),
                  static_cast<unsigned long long>(row.n), static_cast<unsigned long long>(row.t),
                  static_cast<unsigned long long>(row.r), nu.c_str(), row.bits_per_symbol, row.mean_query_us,
                  row.ndoc_mean);
    return buf;
}

// Builds every requested method over one generated collection, checks that all
// methods agree on every pattern and times them.
inline std::vector<bench_row> run_bench(const bench_config& cfg) {
    if (cfg.methods.empty() || cfg.reps == 0)
        throw error(errc::invalid_parameter, "bench needs at least one method and one repetition");
    auto idx = doc_index::build(gen_concat(cfg.gen), {cfg.methods, cfg.provider, 0});
    std::vector<std::string> patterns;
    for (auto m : cfg.pattern_lengths) {
        auto ps = gen_patterns(idx.coll(), m, cfg.patterns, cfg.gen.seed + m);
        patterns.insert(patterns.end(), ps.begin(), ps.end());
    }
    std::vector<doc_freq> expected;
    for (const auto& p : patterns)
        expected.push_back(idx.query(cfg.methods.front(), p));

    std::vector<bench_row> rows;
    for (auto m : cfg.methods) {
        bench_row row;
        row.m = m;
        row.n = idx.stats().n;
        row.t = idx.stats().t;
        row.r = idx.stats().r;
        row.nu = idx.stats().nu;
        row.bits_per_symbol = 8.0 * static_cast<double>(idx.footprint_bytes(m)) / static_cast<double>(row.n);
        std::size_t ndoc = 0;
        auto start = std::chrono::steady_clock::now();
        for (std::size_t rep = 0; rep < cfg.reps; ++rep) {
            for (std::size_t i = 0; i < patterns.size(); ++i) {
                auto got = idx.query(m, patterns[i]);
                if (got != expected[i])
                    throw error(errc::doc_mismatch, std::string("methods disagree on '") + patterns[i] + "': " +
                                                        method_name(m) + " vs " + method_name(cfg.methods.front()));
                ndoc += got.size();
            }
        }
        auto elapsed = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();
        const double queries = static_cast<double>(patterns.size() * cfg.reps);
        row.mean_query_us = queries > 0 ? elapsed / queries : 0;
        row.ndoc_mean = queries > 0 ? static_cast<double>(ndoc) / queries : 0;
        rows.push_back(row);
    }
    return rows;
}

inline void write_bench_csv(std::ostream& out, const std::vector<bench_row>& rows) {
    out << bench_csv_header << '\n';
    for (const auto& r : rows)
        out << bench_csv_line(r) << '\n';
}

}  // namespace docfreq
