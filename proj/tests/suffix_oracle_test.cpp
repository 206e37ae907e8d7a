#include <random>

#include <gtest/gtest.h>

#include <docfreq/suffix_oracle.hpp>

#include "test_util.hpp"

namespace tu = docfreq::test_support;

using namespace docfreq;
using tu::corpus_a;

namespace {

void check_against_naive(const collection& c) {
    auto s = build_suffix_structures(c);
    const auto& text = c.concat();
    auto naive = tu::naive_sa(text);
    ASSERT_EQ(s.n, text.size());
    for (std::size_t i = 1; i <= s.n; ++i) {
        ASSERT_EQ(s.sa[i], naive[i - 1]) << "row " << i;
        ASSERT_EQ(s.isa[s.sa[i]], i);
        ASSERT_EQ(s.da[i], c.doc_of(s.sa[i]));
        std::string_view tv = text;
        if (i > 1) {
            ASSERT_EQ(s.lcp[i], tu::naive_lcp(tv.substr(s.sa[i - 1] - 1), tv.substr(s.sa[i] - 1)));
        }
        std::size_t prev = 0;
        for (std::size_t j = i - 1; j >= 1; --j)
            if (s.da[j] == s.da[i]) {
                prev = j;
                break;
            }
        ASSERT_EQ(s.prev_same[i], prev);
        if (prev) {
            ASSERT_EQ(s.next_same[prev], i);
        }
    }
    EXPECT_EQ(s.lcp[1], 0u);
    EXPECT_EQ(s.rlcp[s.n], 0u);
}

// Per-document LCPs by naive suffix sorting, interleaved in global DA order.
std::vector<std::size_t> naive_ilcp(const collection& c, const suffix_structures& s, bool right) {
    std::vector<std::vector<std::size_t>> lcps(c.t() + 1);
    for (doc_id k = 1; k <= c.t(); ++k) {
        auto local = c.local_text(k);
        auto sa = tu::naive_sa(local);
        std::string_view lv = local;
        auto& l = lcps[k];
        l.assign(sa.size(), 0);
        for (std::size_t j = 1; j < sa.size(); ++j)
            l[j] = tu::naive_lcp(lv.substr(sa[j - 1] - 1), lv.substr(sa[j] - 1));
    }
    std::vector<std::size_t> out(s.n + 1, 0), seen(c.t() + 1, 0);
    for (std::size_t i = 1; i <= s.n; ++i) {
        if (s.sa[i] == s.n)
            continue;
        auto d = s.da[i];
        auto j = seen[d]++;
        if (right)
            out[i] = j + 1 < lcps[d].size() ? lcps[d][j + 1] : 0;
        else
            out[i] = lcps[d][j];
    }
    return out;
}

}  // namespace

TEST(SuffixOracle, CorpusAAgainstNaiveSort) { check_against_naive(corpus_a()); }

TEST(SuffixOracle, RandomCollectionsAgainstNaiveSort) {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 30; ++rep) {
        const auto& alpha = rep % 3 == 0 ? tu::kBinary : rep % 3 == 1 ? tu::kDna : tu::kLetters;
        collection c(tu::random_docs(rng, 1 + rng() % 6, 1, 120, alpha));
        check_against_naive(c);
    }
}

TEST(SuffixOracle, SaIsOnLongRepetitiveText) {
    std::string t;
    for (int i = 0; i < 300; ++i)
        t += i % 7 == 0 ? "abaab" : "abab";
    auto sa = suffix_array(t);
    auto naive = tu::naive_sa(t);
    for (std::size_t i = 0; i < sa.size(); ++i)
        ASSERT_EQ(static_cast<std::size_t>(sa[i]) + 1, naive[i]);
}

TEST(SuffixOracle, DaOfPosition5IsDoc2) {
    auto c = corpus_a();
    auto s = build_suffix_structures(c);
    EXPECT_EQ(s.da[s.isa[5]], 2u);
    EXPECT_EQ(s.sa[1], c.n());  // global sentinel is the smallest suffix
}

TEST(SuffixOracle, IlcpCorpusA) {
    auto c = corpus_a();
    auto s = build_suffix_structures(c);
    auto il = build_ilcp(c, s);
    EXPECT_EQ(il.ilcp, naive_ilcp(c, s, false));
    EXPECT_EQ(il.rilcp, naive_ilcp(c, s, true));
}

TEST(SuffixOracle, IlcpSingleDocumentIsItsLcp) {
    collection c({"abracadabra"});
    auto s = build_suffix_structures(c);
    auto il = build_ilcp(c, s);
    auto local = c.local_text(1);
    auto lsa = suffix_array(local);
    auto lcp = lcp_array(local, lsa);
    std::vector<std::size_t> got;
    for (std::size_t i = 1; i <= s.n; ++i)
        if (s.sa[i] != s.n)
            got.push_back(il.ilcp[i]);
    EXPECT_EQ(got, std::vector<std::size_t>(lcp.begin(), lcp.end()));
}

TEST(SuffixOracle, IlcpRandomAndFirstSuffixZero) {
    std::mt19937_64 rng(12);
    for (int rep = 0; rep < 20; ++rep) {
        collection c(tu::random_docs(rng, 1 + rng() % 5, 1, 80, tu::kDna));
        auto s = build_suffix_structures(c);
        auto il = build_ilcp(c, s);
        ASSERT_EQ(il.ilcp, naive_ilcp(c, s, false));
        ASSERT_EQ(il.rilcp, naive_ilcp(c, s, true));
        std::vector<bool> seen(c.t() + 1, false);
        for (std::size_t i = 1; i <= s.n; ++i) {
            if (s.sa[i] == s.n)
                continue;
            if (!seen[s.da[i]]) {
                EXPECT_EQ(il.ilcp[i], 0u);
                seen[s.da[i]] = true;
            }
        }
    }
}

TEST(SuffixOracle, OracleDocFreqCorpusA) {
    auto c = corpus_a();
    EXPECT_EQ(oracle_doc_freq(c, "ta"), (doc_freq{{1, 1}, {2, 2}}));
    EXPECT_EQ(oracle_doc_freq(c, "a"), (doc_freq{{1, 2}, {2, 2}}));
    EXPECT_TRUE(oracle_doc_freq(c, "g").empty());
    try {
        oracle_doc_freq(c, std::string("a\x01", 2));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::invalid_pattern_byte);
    }
}

TEST(SuffixOracle, OracleTotalsMatchConcatenationCount) {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 20; ++rep) {
        collection c(tu::random_docs(rng, 1 + rng() % 6, 5, 60, tu::kBinary));
        for (int q = 0; q < 20; ++q) {
            auto p = tu::random_string(rng, 1 + rng() % 4, tu::kBinary);
            std::uint64_t total = 0;
            for (auto [d, f] : oracle_doc_freq(c, p))
                total += f;
            EXPECT_EQ(total, tu::naive_occurrences(c.concat(), p).size());
        }
    }
}
