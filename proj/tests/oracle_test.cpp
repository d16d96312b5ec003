#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "sst/errors.hpp"
#include "sst/oracle.hpp"
#include "support/brute_force.hpp"

namespace sst {
namespace {

// Exact values from brute force over all 9 and 27 sequences:
// 6 of 9 length-2 sequences carry 2 bits; the best 9 length-3 sequences are the
// 3 constants plus 6 of type (2,1) at 3*log2(3) - 2 bits.
constexpr double kAvgSource_3_2_1 = 12.0 / 9.0;
const double kAvgShaped_3_2_1 = 6.0 * (3.0 * std::log2(3.0) - 2.0) / 9.0;  // 1.8365916681...

TEST(SortedSpace, Examples) {
    const SortedSpace s32 = sorted_space(3, 2);
    EXPECT_EQ(s32.at(0), Sequence({0, 0}, 3));
    EXPECT_EQ(s32.at(1), Sequence({1, 1}, 3));
    EXPECT_EQ(s32.at(2), Sequence({2, 2}, 3));

    const SortedSpace s21 = sorted_space(2, 1);
    ASSERT_EQ(s21.size(), 2u);
    EXPECT_EQ(s21.at(0), Sequence({0}, 2));
    EXPECT_EQ(s21.at(1), Sequence({1}, 2));

    EXPECT_EQ(sorted_space(3, 3).at(3), Sequence({0, 0, 1}, 3));
    EXPECT_EQ(sorted_space(3, 3).rank_of(Sequence({0, 1, 2}, 3)), 21u);
}

TEST(SortedSpace, IsSortedPermutationOfFullSpace) {
    for (auto [ns, len] : {std::pair{2, 10}, {3, 6}, {4, 5}, {5, 4}}) {
        const SortedSpace space = sorted_space(ns, len);
        std::set<std::uint64_t> codes;
        for (std::uint64_t r = 0; r < space.size(); ++r) {
            codes.insert(space.code_at(r));
            if (r > 0) {
                ASSERT_LE(space.info_at(r - 1), space.info_at(r));
                if (space.info_at(r - 1) == space.info_at(r)) {
                    ASSERT_LT(space.code_at(r - 1), space.code_at(r));
                }
            }
        }
        EXPECT_EQ(codes.size(), space.size());
        EXPECT_EQ(space.size(), SpaceDescriptor::of(ns, len).size);
    }
}

TEST(SortedSpace, MatchesBruteForceOrder) {
    for (auto [ns, len] : {std::pair{3, 5}, {4, 4}, {2, 9}}) {
        const SortedSpace space = sorted_space(ns, len);
        const auto expected = testing::sorted_by_info(ns, len);
        for (std::uint64_t r = 0; r < space.size(); ++r) {
            ASSERT_EQ(space.at(r), Sequence(expected[r], ns));
        }
    }
}

TEST(SortedSpace, TooLarge) {
    EXPECT_THROW(static_cast<void>(sorted_space(2, 25)), SpaceTooLarge);
    EXPECT_THROW(static_cast<void>(sorted_space(3, 3, 26)), SpaceTooLarge);
    EXPECT_EQ(SpaceDescriptor::of(64, 20).size, std::numeric_limits<std::uint64_t>::max());
}

TEST(OracleReport, Examples) {
    const OracleReport r = oracle_report(3, 2, 1);
    EXPECT_NEAR(r.avg_source_info, 1.333333, 1e-6);
    EXPECT_NEAR(r.avg_source_info, kAvgSource_3_2_1, 1e-12);
    EXPECT_NEAR(r.avg_shaped_info, kAvgShaped_3_2_1, 1e-12);
    EXPECT_NEAR(r.avg_shaped_info, 1.836592, 1e-6);
    EXPECT_NEAR(r.optimal_gain, -0.503259, 1e-6);
    EXPECT_LT(r.optimal_gain, 0.0);

    const OracleReport tiny = oracle_report(2, 1, 1);
    EXPECT_EQ(tiny.avg_source_info, 0.0);
    EXPECT_EQ(tiny.avg_shaped_info, 0.0);
    EXPECT_EQ(tiny.optimal_gain, 0.0);
    EXPECT_EQ(tiny.success_fraction, 0.0);
}

// Second enumeration: recursion over sequences, grouping by histogram, no sorting.
double second_route_avg_shaped(std::size_t ns, std::size_t n, std::size_t k) {
    std::map<std::int64_t, std::pair<double, std::uint64_t>> levels;  // key -> (info, count)
    for (const auto& s : testing::enumerate_all(ns, n + k)) {
        auto& level = levels[testing::info_key(s)];
        level.first = testing::positional_info(s);
        ++level.second;
    }
    std::uint64_t need = 1;
    for (std::size_t i = 0; i < n; ++i) {
        need *= ns;
    }
    double total = 0.0;
    const std::uint64_t count = need;
    for (const auto& [key, level] : levels) {
        const std::uint64_t take = std::min(need, level.second);
        total += level.first * static_cast<double>(take);
        need -= take;
        if (need == 0) {
            break;
        }
    }
    return total / static_cast<double>(count);
}

double second_route_avg_source(std::size_t ns, std::size_t n) {
    double total = 0.0;
    const auto all = testing::enumerate_all(ns, n);
    for (const auto& s : all) {
        total += testing::positional_info(s);
    }
    return total / static_cast<double>(all.size());
}

TEST(OracleReport, AgreesWithSecondEnumeration) {
    for (auto [ns, n, k] : {std::tuple{3, 2, 1}, {3, 4, 1}, {3, 5, 2}, {4, 4, 1}, {2, 8, 1},
                            {5, 3, 1}, {3, 7, 1}}) {
        const OracleReport r = oracle_report(ns, n, k);
        EXPECT_NEAR(r.avg_source_info, second_route_avg_source(ns, n), 1e-9);
        EXPECT_NEAR(r.avg_shaped_info, second_route_avg_shaped(ns, n, k), 1e-9);
        EXPECT_NEAR(r.optimal_gain, r.avg_source_info - r.avg_shaped_info, 0.0);
        EXPECT_GE(r.success_fraction, 0.0);
        EXPECT_LE(r.success_fraction, 1.0);
    }
}

TEST(OracleReport, Errors) {
    EXPECT_THROW(static_cast<void>(oracle_report(3, 15, 1)), SpaceTooLarge);
    EXPECT_THROW(static_cast<void>(oracle_report(3, 2, 0)), DomainError);
}

TEST(ValidateStrategy, Examples) {
    const ValidationReport exact =
        validate_strategy(ShaperConfig{Strategy::kExactSorted, 1, 3}, 3, 2);
    EXPECT_TRUE(exact.ok) << exact.counterexample;
    EXPECT_EQ(exact.distinct_images, 9u);

    const ValidationReport adaptive =
        validate_strategy(ShaperConfig{Strategy::kAdaptiveRank, 1, 3}, 3, 3);
    EXPECT_TRUE(adaptive.ok) << adaptive.counterexample;
    EXPECT_EQ(adaptive.checked, 27u);
    EXPECT_EQ(adaptive.distinct_images, 27u);

    EXPECT_EQ(transform_adaptive(Sequence({0}, 2), 1), Sequence({0, 0}, 2));
    EXPECT_EQ(transform_adaptive(Sequence({1}, 2), 1), Sequence({0, 1}, 2));
    EXPECT_TRUE(validate_strategy(ShaperConfig{Strategy::kAdaptiveRank, 1, 2}, 2, 1).ok);
}

TEST(ValidateStrategy, ExactSortedImagesAreTheLowestTargets) {
    // Independent check of the example: image equals the first 9 of sorted_space(3, 3).
    const ExactSortedShaper shaper(3, 2, 1);
    const SortedSpace target = sorted_space(3, 3);
    std::set<std::uint64_t> lowest;
    for (std::uint64_t r = 0; r < 9; ++r) {
        lowest.insert(target.code_at(r));
    }
    std::set<std::uint64_t> images;
    for (const auto& s : testing::enumerate_all(3, 2)) {
        const Sequence y = shaper.transform(Sequence(s, 3));
        images.insert(y[0] * 9 + y[1] * 3 + y[2]);
    }
    EXPECT_EQ(images, lowest);
}

TEST(ValidateStrategy, ReportsCounterexample) {
    // Drops the first input symbol: (0,1) and (1,1) collide.
    class Lossy final : public Shaper {
    public:
        Strategy strategy() const noexcept override { return Strategy::kAdaptiveRank; }
        std::size_t order() const noexcept override { return 1; }
        Sequence transform(const Sequence& s) const override {
            std::vector<Symbol> out(s.symbols().begin(), s.symbols().end());
            out[0] = 0;
            out.insert(out.begin(), 0);
            return Sequence(out, s.ns());
        }
        std::optional<Sequence> inverse(const Sequence& y) const override {
            return Sequence(std::vector<Symbol>(y.symbols().begin() + 1, y.symbols().end()),
                            y.ns());
        }
    };
    const ValidationReport report = validate_shaper(Lossy{}, 2, 2);
    EXPECT_FALSE(report.ok);
    EXPECT_EQ(report.counterexample, "round trip failed: (1,0) -> (0,0,0) -> (0,0)");
}

}  // namespace
}  // namespace sst
