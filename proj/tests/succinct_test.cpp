#include <random>

#include <gtest/gtest.h>

#include <docfreq/succinct.hpp>

using namespace docfreq;

namespace {

bit_vector from_string(const std::string& bits) {
    std::vector<std::size_t> ones;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i] == '1')
            ones.push_back(i + 1);
    return bit_vector::from_positions(bits.size(), ones);
}

}  // namespace

TEST(BitVector, SmallExamples) {
    auto b = from_string("01101");
    EXPECT_EQ(b.rank1(3), 2u);
    EXPECT_EQ(b.select1(3), 5u);
    EXPECT_EQ(b.rank0(5), 2u);
    EXPECT_EQ(b.select0(2), 4u);
    EXPECT_FALSE(b[1]);
    EXPECT_TRUE(b[2]);
}

TEST(BitVector, Errors) {
    auto b = from_string("01101");
    try {
        b.select1(4);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::select_overflow);
    }
    try {
        b.rank1(6);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::out_of_range);
    }
}

TEST(BitVector, RandomAgainstCounting) {
    std::mt19937_64 rng(1);
    for (double density : {0.01, 0.5, 0.97}) {
        std::size_t n = 5000 + rng() % 3000;
        std::bernoulli_distribution coin(density);
        std::vector<bool> bits(n + 1);
        std::vector<std::size_t> ones;
        for (std::size_t i = 1; i <= n; ++i)
            if ((bits[i] = coin(rng)))
                ones.push_back(i);
        auto b = bit_vector::from_positions(n, ones);
        std::size_t r = 0, z = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            if (bits[i]) {
                ++r;
                ASSERT_EQ(b.select1(r), i);
            } else {
                ++z;
                ASSERT_EQ(b.select0(z), i);
            }
            ASSERT_EQ(b.rank1(i), r);
            ASSERT_EQ(b.rank0(i), i - r);
            // select1(rank1(i)) <= i < select1(rank1(i)+1)
            if (r > 0) {
                ASSERT_LE(b.select1(r), i);
            }
            if (r < b.ones()) {
                ASSERT_GT(b.select1(r + 1), i);
            }
        }
    }
}

TEST(Rmq, SmallExamples) {
    rmq_min<int> mn({0, 0, 1, 2});
    rmq_max<int> mx({0, 0, 1, 2});
    EXPECT_EQ(mn.query(1, 4), 1u);
    EXPECT_EQ(mn.query(3, 4), 3u);
    EXPECT_EQ(mx.query(1, 4), 4u);
    try {
        mn.query(3, 2);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::empty_range);
    }
}

TEST(Rmq, RandomRangesAgainstScan) {
    std::mt19937_64 rng(2);
    for (int rep = 0; rep < 4; ++rep) {
        std::size_t n = 1 + rng() % 3000;
        std::vector<int> a(n);
        for (auto& x : a)
            x = static_cast<int>(rng() % (rep % 2 ? 5 : 1000));
        rmq_min<int> mn(a);
        rmq_max<int> mx(a);
        for (int q = 0; q < 10000; ++q) {
            std::size_t l = 1 + rng() % n, r = 1 + rng() % n;
            if (l > r)
                std::swap(l, r);
            std::size_t bmin = l, bmax = l;
            for (std::size_t i = l; i <= r; ++i) {
                if (a[i - 1] < a[bmin - 1])
                    bmin = i;
                if (a[i - 1] > a[bmax - 1])
                    bmax = i;
            }
            ASSERT_EQ(mn.query(l, r), bmin);
            ASSERT_EQ(mx.query(l, r), bmax);
        }
    }
}

TEST(WaveletTree, SmallExamples) {
    wavelet_tree wt({1, 2, 2, 1, 2});
    EXPECT_EQ(wt.rank(2, 4), 2u);
    EXPECT_EQ(wt.rank(1, 5), 2u);
    EXPECT_EQ(wt.rank(3, 5), 0u);
    EXPECT_EQ(wt.access(3), 2u);
    EXPECT_EQ(wt.select(1, 2), 4u);
    EXPECT_THROW(wt.rank(1, 6), error);
}

TEST(WaveletTree, RandomAgainstCounting) {
    std::mt19937_64 rng(3);
    for (std::uint32_t sigma : {1u, 2u, 7u, 16u, 100u}) {
        std::size_t n = 2000;
        std::vector<std::uint32_t> seq(n);
        for (auto& x : seq)
            x = 1 + static_cast<std::uint32_t>(rng() % sigma);
        wavelet_tree wt(seq);
        std::vector<std::size_t> cnt(sigma + 2, 0);
        for (std::size_t i = 1; i <= n; ++i) {
            ASSERT_EQ(wt.access(i), seq[i - 1]);
            ++cnt[seq[i - 1]];
            std::uint32_t c = 1 + static_cast<std::uint32_t>(rng() % (sigma + 1));
            ASSERT_EQ(wt.rank(c, i), cnt[c]);
        }
    }
}
