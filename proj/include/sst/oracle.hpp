#pragma once

// Exhaustive ground truth over A^L for small spaces.
//
// A^L is enumerated odometer-style in lexicographic order and stably sorted by
// information content, giving the (info, lex) order directly. Nothing here
// uses the rank codec or the enumerative type-class order; the shaping
// strategies are checked against this module, not the other way round.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sst/entropy.hpp"
#include "sst/shaping.hpp"
#include "sst/space.hpp"

namespace sst {

/// A^L in (info, lex) order. Sequences are stored as base-ns codes, most
/// significant symbol first, so numeric order on codes is lexicographic order.
class SortedSpace {
public:
    [[nodiscard]] const SpaceDescriptor& space() const noexcept { return space_; }
    [[nodiscard]] std::uint64_t size() const noexcept { return codes_.size(); }

    [[nodiscard]] Sequence at(std::uint64_t rank) const;
    [[nodiscard]] double info_at(std::uint64_t rank) const { return info_[rank]; }
    [[nodiscard]] std::uint64_t code_at(std::uint64_t rank) const { return codes_[rank]; }

    /// Linear search; for tests and small spaces.
    [[nodiscard]] std::optional<std::uint64_t> rank_of(const Sequence& s) const;

private:
    friend SortedSpace sorted_space(std::size_t, std::size_t, std::uint64_t);

    SpaceDescriptor space_;
    std::vector<std::uint32_t> codes_;
    std::vector<double> info_;
};

/// Throws SpaceTooLarge when ns^length > bound.
[[nodiscard]] SortedSpace sorted_space(std::size_t ns, std::size_t length,
                                       std::uint64_t bound = kDefaultEnumerationBound);

struct OracleReport {
    std::size_t ns = 0;
    std::size_t length = 0;  // N
    std::size_t order = 0;   // K
    double avg_source_info = 0.0;
    double avg_shaped_info = 0.0;
    double optimal_gain = 0.0;
    double success_fraction = 0.0;
};

/// Exact averages over A^N and over the ns^N lowest sequences of A^(N+K).
[[nodiscard]] OracleReport oracle_report(std::size_t ns, std::size_t length, std::size_t order,
                                         std::uint64_t bound = kDefaultEnumerationBound);

struct ValidationReport {
    Strategy strategy = Strategy::kAdaptiveRank;
    std::size_t ns = 0;
    std::size_t length = 0;
    std::size_t order = 0;
    std::uint64_t checked = 0;
    std::uint64_t distinct_images = 0;
    bool ok = false;
    std::string counterexample;  // empty when ok
};

/// Transforms every s in A^N, checking round trip and injectivity; for
/// exact-sorted also checks the image is the first ns^N sequences of the
/// target order. Stops at the first counterexample.
[[nodiscard]] ValidationReport validate_strategy(const ShaperConfig& cfg, std::size_t ns,
                                                 std::size_t length);

/// Same checks for an already constructed shaper.
[[nodiscard]] ValidationReport validate_shaper(const Shaper& shaper, std::size_t ns,
                                               std::size_t length,
                                               std::uint64_t bound = kDefaultEnumerationBound);

[[nodiscard]] std::string format_sequence(const Sequence& s);

}  // namespace sst
