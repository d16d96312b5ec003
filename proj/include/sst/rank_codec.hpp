#pragma once

// Adaptive frequency-rank digits.
//
// Each symbol is replaced by its position in an order over the alphabet that
// depends only on the symbols seen so far: higher running count first, ties
// broken by smaller symbol id, identity order before the first symbol. The
// map Sequence -> DigitStream is a length-preserving bijection, and on skewed
// sources the digits concentrate on 0, which makes the digit stream a cheap
// proxy for ordering sequences by information content.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sst/entropy.hpp"

namespace sst {

using Digit = std::uint32_t;

/// Digits d_t in [0, ns) produced by to_digits.
class DigitStream {
public:
    DigitStream(std::vector<Digit> digits, std::size_t ns);

    [[nodiscard]] std::size_t ns() const noexcept { return ns_; }
    [[nodiscard]] std::size_t size() const noexcept { return digits_.size(); }
    [[nodiscard]] std::span<const Digit> digits() const noexcept { return digits_; }
    [[nodiscard]] Digit operator[](std::size_t i) const noexcept { return digits_[i]; }

    friend bool operator==(const DigitStream&, const DigitStream&) = default;

private:
    std::size_t ns_;
    std::vector<Digit> digits_;
};

/// Number of symbol-order evaluations performed, for complexity probes.
struct CodecStats {
    std::uint64_t order_evaluations = 0;
};

/// Running counts plus the total order they induce on the alphabet.
///
/// The order is kept materialised (order_ / position_) and repaired after each
/// update by moving the updated symbol forward, so rank and symbol lookups are
/// O(1) and an update costs at most ns comparisons.
class RankState {
public:
    explicit RankState(std::size_t ns);

    /// Builds a state from explicit running counts.
    static RankState from_counts(std::span<const std::uint64_t> counts);

    [[nodiscard]] std::size_t ns() const noexcept { return counts_.size(); }
    [[nodiscard]] std::span<const std::uint64_t> counts() const noexcept { return counts_; }

    [[nodiscard]] Digit rank_of_symbol(Symbol a) const;
    [[nodiscard]] Symbol symbol_of_rank(Digit d) const;

    /// Increments the count of `a` and restores the order.
    void update(Symbol a);

    [[nodiscard]] std::uint64_t order_evaluations() const noexcept { return evaluations_; }

private:
    [[nodiscard]] bool precedes(Symbol x, Symbol y) const noexcept;

    std::vector<std::uint64_t> counts_;
    std::vector<Symbol> order_;     // rank -> symbol
    std::vector<Digit> position_;   // symbol -> rank
    std::uint64_t evaluations_ = 0;
};

[[nodiscard]] Digit rank_of_symbol(const RankState& state, Symbol a);
[[nodiscard]] Symbol symbol_of_rank(const RankState& state, Digit d);

/// Throws DomainError on an empty sequence.
[[nodiscard]] DigitStream to_digits(const Sequence& s, CodecStats* stats = nullptr);

/// Exact inverse of to_digits.
[[nodiscard]] Sequence from_digits(const DigitStream& d, CodecStats* stats = nullptr);

}  // namespace sst
