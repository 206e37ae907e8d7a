#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include <docfreq/rindex.hpp>
#include <docfreq/suffix_oracle.hpp>

#include "test_util.hpp"

namespace tu = docfreq::test_support;

using namespace docfreq;
using tu::corpus_a;

namespace {

std::string naive_bwt(std::string_view text) {
    auto sa = tu::naive_sa(text);
    std::string bwt;
    for (auto p : sa)
        bwt.push_back(text[p == 1 ? text.size() - 1 : p - 2]);
    return bwt;
}

std::size_t count_runs(const std::string& s) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        r += i == 0 || s[i] != s[i - 1];
    return r;
}

rindex_set build_set(const collection& c, sa_provider_kind kind) {
    return rindex_set::build(c, suffix_array(c.concat()), kind);
}

}  // namespace

TEST(RIndex, RunsOfAaaa) {
    std::string text = "aaaa";
    text.push_back('\0');
    auto idx = r_index::build(text, sa_provider_kind::plain);
    EXPECT_EQ(naive_bwt(text), std::string("aaaa\0", 5));
    EXPECT_EQ(idx.runs(), count_runs(naive_bwt(text)));
    EXPECT_LE(idx.runs(), 3u);
    EXPECT_EQ(idx.bwt(), naive_bwt(text));
}

TEST(RIndex, RunLengthsSumToN) {
    auto c = corpus_a();
    auto idx = r_index::build(c.concat(), sa_provider_kind::plain);
    EXPECT_EQ(idx.bwt().size(), c.n());
    EXPECT_EQ(idx.bwt(), naive_bwt(c.concat()));
    EXPECT_EQ(idx.runs(), count_runs(naive_bwt(c.concat())));
}

TEST(RIndex, InversionReproducesText) {
    auto c = corpus_a();
    EXPECT_EQ(r_index::build(c.concat(), sa_provider_kind::plain).invert(), c.concat());
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 10; ++rep) {
        collection rc(tu::random_docs(rng, 1 + rng() % 6, 1, 400, tu::kDna));
        EXPECT_EQ(r_index::build(rc.concat(), sa_provider_kind::grammar_diff).invert(), rc.concat());
    }
}

TEST(RIndex, PatternIntervalCorpusA) {
    auto c = corpus_a();
    auto idx = r_index::build(c.concat(), sa_provider_kind::plain);
    auto r = idx.pattern_interval("ta");
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->width(), 3u);
    EXPECT_FALSE(idx.pattern_interval("g").has_value());
    try {
        idx.pattern_interval("");
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::empty_pattern);
    }
    try {
        idx.pattern_interval(std::string("t\0", 2));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::invalid_pattern_byte);
    }
}

TEST(RIndex, LocateCorpusA) {
    auto c = corpus_a();
    auto idx = r_index::build(c.concat(), sa_provider_kind::plain);
    auto pos = idx.locate(*idx.pattern_interval("ta"));
    std::sort(pos.begin(), pos.end());
    EXPECT_EQ(pos, (std::vector<std::size_t>{2, 5, 7}));
}

TEST(RIndex, LocateWidthOneAtRunBoundaryIsSample) {
    auto c = corpus_a();
    auto idx = r_index::build(c.concat(), sa_provider_kind::plain);
    auto s = build_suffix_structures(c);
    for (std::size_t row = 1; row <= c.n(); ++row) {
        bool run_start = row == 1 || idx.bwt_at(row) != idx.bwt_at(row - 1);
        if (!run_start)
            continue;
        auto got = idx.locate(sa_range{row, row, 0});
        ASSERT_EQ(got.size(), 1u);
        EXPECT_EQ(got[0], s.sa[row]);
    }
}

TEST(RIndex, LocateMatchesNaiveScan) {
    std::mt19937_64 rng(32);
    for (int rep = 0; rep < 8; ++rep) {
        const auto& alpha = rep % 2 ? tu::kBinary : tu::kDna;
        collection c(tu::random_docs(rng, 1 + rng() % 8, 10, 500, alpha));
        auto idx = r_index::build(c.concat(), rep % 2 ? sa_provider_kind::plain : sa_provider_kind::grammar_diff);
        for (int q = 0; q < 100; ++q) {
            auto p = tu::random_string(rng, 1 + rng() % 8, alpha);
            auto naive = tu::naive_occurrences(c.concat(), p);
            auto r = idx.pattern_interval(p);
            if (naive.empty()) {
                EXPECT_FALSE(r.has_value());
                continue;
            }
            ASSERT_TRUE(r.has_value());
            auto got = idx.locate(*r);
            // rows are consecutive SA entries
            for (std::size_t k = 0; k < got.size(); ++k)
                ASSERT_EQ(got[k], idx.sa_access(r->first + k));
            std::sort(got.begin(), got.end());
            ASSERT_EQ(got, naive) << p;
        }
    }
}

TEST(RIndex, CountMatchesOracleTotals) {
    std::mt19937_64 rng(33);
    collection c(tu::random_docs(rng, 5, 50, 300, tu::kBinary));
    auto idx = r_index::build(c.concat(), sa_provider_kind::plain);
    for (int q = 0; q < 200; ++q) {
        auto p = tu::random_string(rng, 1 + rng() % 6, tu::kBinary);
        std::uint64_t total = 0;
        for (auto [d, f] : oracle_doc_freq(c, p))
            total += f;
        EXPECT_EQ(idx.count(p), total);
    }
}

TEST(RIndex, SaIsaAccess) {
    std::mt19937_64 rng(34);
    collection c(tu::random_docs(rng, 4, 100, 2000, tu::kDna));
    auto plain = r_index::build(c.concat(), sa_provider_kind::plain);
    auto gram = r_index::build(c.concat(), sa_provider_kind::grammar_diff);
    EXPECT_EQ(plain.sa_access(1), c.n());
    EXPECT_EQ(gram.sa_access(1), c.n());
    for (std::size_t p = 1; p <= c.n(); ++p)
        ASSERT_EQ(plain.sa_access(plain.isa_access(p)), p);
    for (int q = 0; q < 10000; ++q) {
        std::size_t i = 1 + rng() % c.n();
        ASSERT_EQ(gram.sa_access(i), plain.sa_access(i));
        ASSERT_EQ(gram.isa_access(i), plain.isa_access(i));
    }
    EXPECT_THROW(plain.sa_access(0), error);
    EXPECT_THROW(gram.isa_access(c.n() + 1), error);
}

TEST(RIndex, LfVisitsEveryRowOnce) {
    std::mt19937_64 rng(35);
    collection c(tu::random_docs(rng, 3, 100, 700, tu::kLetters));
    auto idx = r_index::build(c.concat(), sa_provider_kind::plain);
    std::vector<bool> seen(c.n() + 1, false);
    std::size_t row = 1;
    for (std::size_t k = 0; k < c.n(); ++k) {
        ASSERT_FALSE(seen[row]);
        seen[row] = true;
        row = idx.lf(row);
    }
    EXPECT_EQ(row, 1u);
}

TEST(RIndex, PerDocumentOrderPreserved) {
    std::mt19937_64 rng(36);
    for (int rep = 0; rep < 10; ++rep) {
        collection c(tu::random_docs(rng, 1 + rng() % 6, 1, 200, tu::kBinary));
        auto s = build_suffix_structures(c);
        auto set = build_set(c, sa_provider_kind::plain);
        std::vector<std::size_t> last(c.t() + 1, 0);
        for (std::size_t i = 1; i <= c.n(); ++i) {
            if (s.sa[i] == c.n())
                continue;
            auto [d, local] = c.to_local(s.sa[i]);
            auto local_row = set.docs[d - 1].isa_access(local);
            ASSERT_EQ(local_row, last[d] + 1);
            last[d] = local_row;
        }
    }
}

TEST(RIndex, FreqFromExtremesCorpusA) {
    auto c = corpus_a();
    auto s = build_suffix_structures(c);
    auto set = build_set(c, sa_provider_kind::grammar_diff);
    auto r = *set.global.pattern_interval("ta");
    std::size_t lo[3] = {0, 0, 0}, hi[3] = {0, 0, 0};
    for (std::size_t i = r.first; i <= r.last; ++i) {
        if (!lo[s.da[i]])
            lo[s.da[i]] = i;
        hi[s.da[i]] = i;
    }
    auto l1 = lo[1], r1 = hi[1], l2 = lo[2], r2 = hi[2];
    EXPECT_EQ(set.freq_from_extremes(c, 2, l2, r2), 2u);
    EXPECT_EQ(l1, r1);
    EXPECT_EQ(set.freq_from_extremes(c, 1, l1, r1), 1u);
    try {
        set.freq_from_extremes(c, 1, l2, r2);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::doc_mismatch);
    }
}

TEST(RIndex, SerializeRoundTrip) {
    std::mt19937_64 rng(37);
    collection c(tu::random_docs(rng, 3, 50, 300, tu::kDna));
    for (auto kind : {sa_provider_kind::plain, sa_provider_kind::grammar_diff}) {
        auto idx = r_index::build(c.concat(), kind);
        byte_writer w;
        idx.serialize(w);
        byte_reader r(w.data());
        auto idx2 = r_index::load(r);
        EXPECT_TRUE(r.done());
        byte_writer w2;
        idx2.serialize(w2);
        EXPECT_EQ(w.data(), w2.data());
        for (int q = 0; q < 50; ++q) {
            auto p = tu::random_string(rng, 1 + rng() % 5, tu::kDna);
            auto a = idx.pattern_interval(p), b = idx2.pattern_interval(p);
            ASSERT_EQ(a.has_value(), b.has_value());
            if (a) {
                EXPECT_EQ(idx.locate(*a), idx2.locate(*b));
            }
        }
    }
}
