#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "sst/entropy.hpp"
#include "sst/errors.hpp"
#include "support/brute_force.hpp"

namespace sst {
namespace {

Sequence seq(std::vector<Symbol> symbols, std::size_t ns) {
    return Sequence(std::move(symbols), ns);
}

TEST(Histogram, CountsConstantSequence) {
    const Histogram h = histogram(seq({0, 0, 0, 0}, 3));
    EXPECT_EQ(h.counts, (std::vector<std::uint64_t>{4, 0, 0}));
    EXPECT_EQ(h.total, 4u);
}

TEST(Histogram, CountsSmallSequences) {
    EXPECT_EQ(histogram(seq({0, 1}, 2)).counts, (std::vector<std::uint64_t>{1, 1}));
    const Histogram h = histogram(seq({0, 0, 1}, 2));
    EXPECT_EQ(h.counts, (std::vector<std::uint64_t>{2, 1}));
    EXPECT_EQ(h.total, 3u);
}

TEST(Histogram, RejectsEmptyAndOutOfRange) {
    EXPECT_THROW(static_cast<void>(histogram(seq({}, 3))), DomainError);
    EXPECT_THROW(seq({0, 3}, 3), DomainError);
    EXPECT_THROW(seq({0}, 1), DomainError);
}

TEST(EntropyLengthProduct, WorkedValues) {
    EXPECT_EQ(entropy_length_product(seq({0, 0, 0, 0}, 3)).bits, 0.0);
    EXPECT_EQ(entropy_length_product(seq({0, 1}, 2)).bits, 2.0);
    // 3*log2(3) - 2, checked with an independent script.
    EXPECT_NEAR(entropy_length_product(seq({0, 0, 1}, 2)).bits, 2.754887502163469, 1e-12);
    EXPECT_NEAR(info_content(histogram(seq({0, 0, 1}, 2))).bits, 2.754887502163469, 1e-12);
}

TEST(EntropyLengthProduct, ConstantGivesPositiveZero) {
    const double bits = entropy_length_product(seq({2, 2, 2}, 3)).bits;
    EXPECT_EQ(bits, 0.0);
    EXPECT_FALSE(std::signbit(bits));
}

TEST(EntropyLengthProduct, TwoFormsAgreeOnRandomSequences) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> ns_dist(2, 64);
    std::uniform_int_distribution<std::size_t> len_dist(1, 10000);
    for (int i = 0; i < 300; ++i) {
        const std::size_t ns = ns_dist(rng);
        const std::size_t len = len_dist(rng);
        const Sequence s(testing::random_symbols(rng, ns, len), ns);
        const double positional = entropy_length_product(s).bits;
        const double closed = info_content(histogram(s)).bits;
        EXPECT_NEAR(positional, closed, 1e-9 * std::max(1.0, closed)) << "ns=" << ns;
    }
}

TEST(EntropyLengthProduct, MatchesBruteForcePositionalScan) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const std::size_t ns = 2 + rng() % 10;
        const auto symbols = testing::random_symbols(rng, ns, 1 + rng() % 60);
        const double expected = testing::positional_info(symbols);
        EXPECT_NEAR(entropy_length_product(Sequence(symbols, ns)).bits, expected,
                    1e-9 * std::max(1.0, expected));
    }
}

TEST(EntropyLengthProduct, PermutationAndRelabelingInvariance) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const std::size_t ns = 2 + rng() % 30;
        auto symbols = testing::random_symbols(rng, ns, 1 + rng() % 500);
        const Sequence original(symbols, ns);

        auto shuffled = symbols;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        std::vector<Symbol> relabel(ns);
        std::iota(relabel.begin(), relabel.end(), Symbol{0});
        std::shuffle(relabel.begin(), relabel.end(), rng);
        auto renamed = symbols;
        for (auto& a : renamed) {
            a = relabel[a];
        }

        const double closed = info_content(histogram(original)).bits;
        // The closed form is evaluated in a canonical order: exact equality.
        EXPECT_EQ(info_content(histogram(Sequence(shuffled, ns))).bits, closed);
        EXPECT_EQ(info_content(histogram(Sequence(renamed, ns))).bits, closed);

        const double positional = entropy_length_product(original).bits;
        const double tol = 1e-9 * std::max(1.0, positional);
        EXPECT_NEAR(entropy_length_product(Sequence(shuffled, ns)).bits, positional, tol);
        EXPECT_NEAR(entropy_length_product(Sequence(renamed, ns)).bits, positional, tol);
    }
}

TEST(EntropyLengthProduct, Bounds) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        const std::size_t ns = 2 + rng() % 63;
        const std::size_t len = 1 + rng() % 2000;
        const Sequence s(testing::random_symbols(rng, ns, len), ns);
        const double bits = info_content(histogram(s)).bits;
        const bool constant = std::all_of(s.symbols().begin(), s.symbols().end(),
                                          [&](Symbol a) { return a == s[0]; });
        EXPECT_GE(bits, 0.0);
        EXPECT_LE(bits, static_cast<double>(len) * std::log2(static_cast<double>(ns)) * (1 + 1e-12));
        EXPECT_EQ(bits == 0.0, constant);
    }
    // Uniform type class reaches the upper bound.
    EXPECT_NEAR(info_content(histogram(seq({0, 1, 2, 3}, 4))).bits, 8.0, 1e-12);
}

TEST(PairwiseSum, MatchesExactIntegerSum) {
    std::vector<double> values(1000);
    std::iota(values.begin(), values.end(), 1.0);
    EXPECT_EQ(pairwise_sum(values), 500500.0);
    EXPECT_EQ(pairwise_sum({}), 0.0);
}

}  // namespace
}  // namespace sst
