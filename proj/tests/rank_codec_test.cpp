#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "sst/errors.hpp"
#include "sst/rank_codec.hpp"
#include "sst/source.hpp"
#include "support/brute_force.hpp"

namespace sst {
namespace {

RankState state_with(std::vector<std::uint64_t> counts) { return RankState::from_counts(counts); }

std::vector<Digit> digits_of(std::vector<Symbol> symbols, std::size_t ns) {
    const DigitStream d = to_digits(Sequence(std::move(symbols), ns));
    return {d.digits().begin(), d.digits().end()};
}

std::vector<Symbol> symbols_of(std::vector<Digit> digits, std::size_t ns) {
    const Sequence s = from_digits(DigitStream(std::move(digits), ns));
    return {s.symbols().begin(), s.symbols().end()};
}

TEST(RankOfSymbol, Examples) {
    EXPECT_EQ(rank_of_symbol(state_with({0, 0, 0}), 2), 2u);
    EXPECT_EQ(rank_of_symbol(state_with({1, 0, 1}), 0), 0u);
    EXPECT_EQ(rank_of_symbol(state_with({0, 1}), 0), 1u);
}

TEST(SymbolOfRank, Examples) {
    EXPECT_EQ(symbol_of_rank(state_with({0, 0, 0}), 2), 2u);
    EXPECT_EQ(symbol_of_rank(state_with({1, 0, 1}), 0), 0u);
    EXPECT_EQ(symbol_of_rank(state_with({0, 1}), 0), 1u);
}

TEST(RankState, OutOfRangeArguments) {
    const RankState s(3);
    EXPECT_THROW(static_cast<void>(s.rank_of_symbol(3)), DomainError);
    EXPECT_THROW(static_cast<void>(s.symbol_of_rank(3)), DomainError);
    EXPECT_THROW(RankState(1), DomainError);
}

TEST(RankState, IncrementalOrderMatchesDefinition) {
    std::mt19937_64 rng(21);
    for (int round = 0; round < 50; ++round) {
        const std::size_t ns = 2 + rng() % 40;
        RankState state(ns);
        std::vector<std::uint64_t> counts(ns, 0);
        for (int step = 0; step < 300; ++step) {
            // Skewed updates to exercise long moves and many ties.
            const Symbol a = static_cast<Symbol>((rng() % 4 == 0) ? rng() % ns : rng() % 3 % ns);
            state.update(a);
            ++counts[a];
            std::set<Digit> seen;
            for (Symbol b = 0; b < ns; ++b) {
                const Digit r = state.rank_of_symbol(b);
                ASSERT_EQ(r, testing::reference_rank(counts, b));
                ASSERT_EQ(state.symbol_of_rank(r), b);
                seen.insert(r);
            }
            ASSERT_EQ(seen.size(), ns);
        }
        const RankState rebuilt = RankState::from_counts(counts);
        for (Symbol b = 0; b < ns; ++b) {
            EXPECT_EQ(rebuilt.rank_of_symbol(b), state.rank_of_symbol(b));
        }
    }
}

TEST(ToDigits, Examples) {
    EXPECT_EQ(digits_of({0, 0, 0}, 3), (std::vector<Digit>{0, 0, 0}));
    EXPECT_EQ(digits_of({2, 2, 2}, 3), (std::vector<Digit>{2, 0, 0}));
    EXPECT_EQ(digits_of({0, 1, 1}, 2), (std::vector<Digit>{0, 1, 1}));
}

TEST(FromDigits, Examples) {
    EXPECT_EQ(symbols_of({0, 0, 0}, 3), (std::vector<Symbol>{0, 0, 0}));
    EXPECT_EQ(symbols_of({2, 0, 0}, 3), (std::vector<Symbol>{2, 2, 2}));
    EXPECT_EQ(symbols_of({0, 2, 0, 0}, 3), (std::vector<Symbol>{0, 2, 0, 0}));
}

TEST(Codec, ErrorPaths) {
    EXPECT_THROW(static_cast<void>(to_digits(Sequence({}, 3))), DomainError);
    EXPECT_THROW(DigitStream({0, 3}, 3), DomainError);
    EXPECT_THROW(static_cast<void>(from_digits(DigitStream({}, 3))), DomainError);
}

TEST(Codec, RoundTripBothDirectionsRandom) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> ns_dist(2, 64);
    std::uniform_int_distribution<std::size_t> len_dist(1, 10000);
    for (int i = 0; i < 200; ++i) {
        const std::size_t ns = ns_dist(rng);
        const std::size_t len = len_dist(rng);
        const Sequence s(testing::random_symbols(rng, ns, len), ns);
        ASSERT_EQ(from_digits(to_digits(s)), s);
        const DigitStream d(testing::random_symbols(rng, ns, len), ns);
        ASSERT_EQ(to_digits(from_digits(d)), d);
    }
}

TEST(Codec, ExhaustiveBijectionOnSmallSpaces) {
    for (std::size_t ns = 2; ns <= 4; ++ns) {
        for (std::size_t len = 1; len <= 7; ++len) {
            const auto all = testing::enumerate_all(ns, len);
            std::set<std::vector<Digit>> images;
            for (const auto& symbols : all) {
                const DigitStream d = to_digits(Sequence(symbols, ns));
                images.emplace(d.digits().begin(), d.digits().end());
            }
            // Injective into a set of the same size: onto.
            ASSERT_EQ(images.size(), all.size()) << "ns=" << ns << " len=" << len;
        }
    }
}

TEST(Codec, DigitZeroDominatesOnSkewedSource) {
    const SourceSpec spec{40, 400, 0.5};
    std::vector<std::uint64_t> digit_counts(spec.ns, 0);
    for (std::uint64_t trial = 0; trial < 1000; ++trial) {
        const DigitStream digits = to_digits(sample(spec, Seed{2024}, trial));
        for (Digit d : digits.digits()) {
            ++digit_counts[d];
        }
    }
    const auto top = std::max_element(digit_counts.begin() + 1, digit_counts.end());
    EXPECT_GT(digit_counts[0], *top);
}

TEST(Codec, OrderEvaluationsAreLinear) {
    std::mt19937_64 rng(8);
    for (std::size_t ns : {2u, 8u, 64u}) {
        for (std::size_t len : {1u, 100u, 10000u}) {
            const Sequence s(testing::random_symbols(rng, ns, len), ns);
            CodecStats enc;
            const DigitStream d = to_digits(s, &enc);
            CodecStats dec;
            static_cast<void>(from_digits(d, &dec));
            EXPECT_LE(enc.order_evaluations, 2 * len * ns);
            EXPECT_LE(dec.order_evaluations, 2 * len * ns);
        }
    }
}

}  // namespace
}  // namespace sst
