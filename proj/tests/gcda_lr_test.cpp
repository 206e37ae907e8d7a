#include <random>

#include <gtest/gtest.h>

#include <docfreq/gcda_lr.hpp>
#include <docfreq/suffix_oracle.hpp>

#include "test_util.hpp"

namespace tu = docfreq::test_support;

using namespace docfreq;
using symbol = balanced_slp::symbol;

namespace {

balanced_slp da_grammar(const suffix_structures& s) {
    return balanced_slp::build(std::vector<std::int64_t>(s.da.begin() + 1, s.da.end()));
}

// (L, R) of doc d over a child split, by direct scan of the expansion.
std::pair<bool, bool> direct_lr(const balanced_slp& g, symbol s, doc_id d) {
    auto left = g.expand(g.left(s)), right = g.expand(g.right(s));
    bool in_left = std::count(left.begin(), left.end(), d) > 0;
    bool in_right = std::count(right.begin(), right.end(), d) > 0;
    if (!in_left && !in_right)
        return {true, false};
    return {!in_left, in_right};
}

struct fixture {
    collection coll;
    suffix_structures s;
    balanced_slp g;
    rindex_set text;

    explicit fixture(collection c)
        : coll(std::move(c)), s(build_suffix_structures(coll)), g(da_grammar(s)),
          text(rindex_set::build(coll, suffix_array(coll.concat()), sa_provider_kind::plain)) {}
};

}  // namespace

TEST(GcdaLr, TwoLeafRule) {
    // DA = [1, 2, 1]: A -> 1 2, root -> A 1
    auto g = balanced_slp::from_rules({1, 2}, {{0, 1}, {2, 0}}, 3);
    auto idx = lr_index::build(g, 2);
    EXPECT_FALSE(idx.l_bit(g, 2, 1));
    EXPECT_FALSE(idx.r_bit(g, 2, 1));
    EXPECT_TRUE(idx.l_bit(g, 2, 2));
    EXPECT_TRUE(idx.r_bit(g, 2, 2));
    EXPECT_FALSE(idx.l_bit(g, 3, 1));
    EXPECT_TRUE(idx.r_bit(g, 3, 1));
    EXPECT_FALSE(idx.l_bit(g, 3, 2));
    EXPECT_FALSE(idx.r_bit(g, 3, 2));
    auto res = idx.find_extremes(g, 1, 3);
    ASSERT_EQ(res.docs.size(), 2u);
    EXPECT_EQ(res.docs[0].leftmost, 1u);
    EXPECT_EQ(res.docs[0].rightmost, 3u);
    EXPECT_EQ(res.docs[1].leftmost, 2u);
    EXPECT_EQ(res.docs[1].rightmost, 2u);
}

TEST(GcdaLr, BitsMatchDirectScan) {
    std::mt19937_64 rng(21);
    fixture f(collection(tu::random_docs(rng, 70, 5, 12, tu::kBinary)));
    auto idx = lr_index::build(f.g, f.coll.t());
    for (symbol s = static_cast<symbol>(f.g.terminals()); s < f.g.symbols(); ++s)
        for (doc_id d = 1; d <= f.coll.t(); ++d) {
            auto [l, r] = direct_lr(f.g, s, d);
            ASSERT_EQ(idx.l_bit(f.g, s, d), l) << "symbol " << s << " doc " << d;
            ASSERT_EQ(idx.r_bit(f.g, s, d), r) << "symbol " << s << " doc " << d;
        }
}

TEST(GcdaLr, ExtremesMatchLinearScan) {
    std::mt19937_64 rng(22);
    fixture f(collection(tu::random_docs(rng, 9, 20, 60, tu::kDna)));
    auto idx = lr_index::build(f.g, f.coll.t());
    std::uniform_int_distribution<std::size_t> pick(1, f.s.n);
    for (int k = 0; k < 400; ++k) {
        auto a = pick(rng), b = pick(rng);
        if (a > b)
            std::swap(a, b);
        std::map<doc_id, std::pair<std::size_t, std::size_t>> want;
        for (auto i = a; i <= b; ++i) {
            auto [it, fresh] = want.try_emplace(f.s.da[i], i, i);
            it->second.second = i;
        }
        auto res = idx.find_extremes(f.g, a, b);
        ASSERT_EQ(res.docs.size(), want.size());
        EXPECT_EQ(res.descents, 2 * want.size());
        for (auto [d, lo, hi] : res.docs) {
            ASSERT_TRUE(want.count(d));
            EXPECT_EQ(lo, want[d].first);
            EXPECT_EQ(hi, want[d].second);
        }
    }
}

TEST(GcdaLr, CorpusAQueries) {
    fixture f(tu::corpus_a());
    auto idx = lr_index::build(f.g, f.coll.t());
    EXPECT_EQ(idx.query("ta", f.coll, f.text, f.g), (doc_freq{{1, 1}, {2, 2}}));
    EXPECT_EQ(idx.query("tat", f.coll, f.text, f.g), (doc_freq{{2, 1}}));
    EXPECT_TRUE(idx.query("g", f.coll, f.text, f.g).empty());
}

TEST(GcdaLr, QueriesMatchOracle) {
    std::mt19937_64 rng(23);
    for (auto kind : {sa_provider_kind::plain, sa_provider_kind::grammar_diff}) {
        collection coll(tu::random_docs(rng, 6, 30, 90, tu::kDna));
        auto s = build_suffix_structures(coll);
        auto g = da_grammar(s);
        auto text = rindex_set::build(coll, suffix_array(coll.concat()), kind);
        auto idx = lr_index::build(g, coll.t());
        for (int k = 0; k < 100; ++k) {
            auto p = tu::random_string(rng, 1 + k % 6, tu::kDna);
            ASSERT_EQ(idx.query(p, coll, text, g), oracle_doc_freq(coll, p)) << p;
        }
    }
}

TEST(GcdaLr, SerializationRoundTrip) {
    std::mt19937_64 rng(24);
    fixture f(collection(tu::random_docs(rng, 5, 20, 40, tu::kDna)));
    auto idx = lr_index::build(f.g, f.coll.t());
    byte_writer w;
    idx.serialize(w);
    byte_reader r(w.data());
    auto back = lr_index::load(r, f.g);
    byte_writer w2;
    back.serialize(w2);
    EXPECT_EQ(w.data(), w2.data());
}
