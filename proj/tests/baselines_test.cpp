#include <random>
#include <set>

#include <gtest/gtest.h>

#include <docfreq/baselines.hpp>
#include <docfreq/suffix_oracle.hpp>

#include "test_util.hpp"

namespace tu = docfreq::test_support;

using namespace docfreq;

namespace {

struct fixture {
    collection coll;
    suffix_structures s;
    rindex_set text;
    rmq_min<std::uint32_t> c;
    sada_index sada;
    wt_index wt;

    explicit fixture(collection cl, sa_provider_kind kind = sa_provider_kind::plain)
        : coll(std::move(cl)), s(build_suffix_structures(coll)),
          text(rindex_set::build(coll, suffix_array(coll.concat()), kind)),
          c(std::vector<std::uint32_t>(s.prev_same.begin() + 1, s.prev_same.end())),
          sada(coll.t(), s.prev_same, s.next_same), wt(s.da) {}

    auto da_at() const {
        return [this](std::size_t row) { return s.da[row]; };
    }
};

std::map<doc_id, std::size_t> scan_extremes(const std::vector<doc_id>& da, std::size_t first, std::size_t last,
                                            bool leftmost) {
    std::map<doc_id, std::size_t> out;
    for (auto i = first; i <= last; ++i)
        if (leftmost)
            out.try_emplace(da[i], i);
        else
            out[da[i]] = i;
    return out;
}

std::map<doc_id, std::size_t> as_map(const std::vector<std::pair<doc_id, std::size_t>>& v) {
    std::map<doc_id, std::size_t> m;
    for (auto [d, i] : v)
        EXPECT_TRUE(m.emplace(d, i).second) << "document " << d << " reported twice";
    return m;
}

}  // namespace

TEST(Baselines, MuthuFullIntervalListsAllDocuments) {
    std::mt19937_64 rng(1);
    fixture f(collection(tu::random_docs(rng, 7, 10, 30, tu::kDna)));
    auto got = as_map(muthu_list(f.c, 1, f.s.n, f.da_at()));
    EXPECT_EQ(got.size(), 7u);
    EXPECT_EQ(muthu_list(f.c, 5, 5, f.da_at()).size(), 1u);
}

TEST(Baselines, MuthuMatchesScan) {
    std::mt19937_64 rng(2);
    fixture f(collection(tu::random_docs(rng, 9, 20, 80, tu::kBinary)));
    std::uniform_int_distribution<std::size_t> pick(1, f.s.n);
    for (int k = 0; k < 500; ++k) {
        auto a = pick(rng), b = pick(rng);
        if (a > b)
            std::swap(a, b);
        auto want = scan_extremes(f.s.da, a, b, true);
        EXPECT_EQ(as_map(muthu_list(f.c, a, b, f.da_at())), want);
        EXPECT_EQ(as_map(f.sada.leftmost(a, b, f.da_at())), want);
        EXPECT_EQ(as_map(f.sada.rightmost(a, b, f.da_at())), scan_extremes(f.s.da, a, b, false));
    }
}

TEST(Baselines, EmptyIntervalRejected) {
    fixture f(tu::corpus_a());
    try {
        muthu_list(f.c, 4, 3, f.da_at());
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::empty_interval);
    }
}

TEST(Baselines, CorpusAExamples) {
    fixture f(tu::corpus_a());
    const doc_freq ta{{1, 1}, {2, 2}};
    EXPECT_EQ(f.sada.query("ta", f.coll, f.text), ta);
    EXPECT_EQ(f.wt.query("ta", f.text), ta);
    EXPECT_EQ(scan_freq("ta", f.coll, f.text), ta);
    EXPECT_TRUE(f.sada.query("g", f.coll, f.text).empty());
    EXPECT_TRUE(f.wt.query("g", f.text).empty());
    EXPECT_TRUE(scan_freq("g", f.coll, f.text).empty());
}

TEST(Baselines, SingleDocumentCountsOccurrences) {
    fixture f(collection({"abababbaba"}));
    for (const auto* p : {"ab", "ba", "bab", "a"}) {
        const doc_freq want{{1, tu::naive_occurrences(f.coll.doc(1), p).size()}};
        EXPECT_EQ(f.sada.query(p, f.coll, f.text), want) << p;
        EXPECT_EQ(f.wt.query(p, f.text), want) << p;
        EXPECT_EQ(scan_freq(p, f.coll, f.text), want) << p;
    }
}

TEST(Baselines, AllMatchOracle) {
    std::mt19937_64 rng(3);
    for (auto kind : {sa_provider_kind::plain, sa_provider_kind::grammar_diff}) {
        for (std::size_t t : {1, 3, 8}) {
            fixture f(collection(tu::random_docs(rng, t, 20, 100, tu::kDna)), kind);
            for (int k = 0; k < 80; ++k) {
                auto p = tu::random_string(rng, 1 + k % 6, tu::kDna);
                auto want = oracle_doc_freq(f.coll, p);
                ASSERT_EQ(f.sada.query(p, f.coll, f.text), want) << p;
                ASSERT_EQ(f.wt.query(p, f.text), want) << p;
                ASSERT_EQ(scan_freq(p, f.coll, f.text), want) << p;
            }
        }
    }
}

TEST(Baselines, WaveletDistinctMatchesScan) {
    std::mt19937_64 rng(4);
    std::vector<std::uint32_t> seq(300);
    std::uniform_int_distribution<std::uint32_t> v(0, 40);
    for (auto& x : seq)
        x = v(rng);
    wavelet_tree wt(seq);
    std::uniform_int_distribution<std::size_t> pick(1, seq.size());
    for (int k = 0; k < 200; ++k) {
        auto a = pick(rng), b = pick(rng);
        if (a > b)
            std::swap(a, b);
        std::set<std::uint32_t> want(seq.begin() + a - 1, seq.begin() + b);
        EXPECT_EQ(wt.distinct(a, b), std::vector<std::uint32_t>(want.begin(), want.end()));
    }
}

TEST(Baselines, SerializationRoundTrip) {
    std::mt19937_64 rng(5);
    fixture f(collection(tu::random_docs(rng, 4, 20, 40, tu::kDna)));
    byte_writer w;
    f.sada.serialize(w);
    f.wt.serialize(w);
    byte_reader r(w.data());
    auto sada = sada_index::load(r);
    auto wt = wt_index::load(r);
    EXPECT_TRUE(r.done());
    EXPECT_EQ(sada.query("A", f.coll, f.text), oracle_doc_freq(f.coll, "A"));
    EXPECT_EQ(wt.query("AC", f.text), oracle_doc_freq(f.coll, "AC"));
}
