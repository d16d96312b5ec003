#pragma once

// Enumerative ranking of A^L in the order keyed by (information content, lex).
//
// Sequences sharing a histogram (a type class) share their information
// content, so the order is a sequence of levels, one per distinct info value,
// each the union of one or more type classes interleaved lexicographically.
// Ranking and unranking walk the positions left to right and count, for each
// candidate symbol, the completions that land in the current level using the
// multinomial size of every surviving class. Nothing is enumerated per
// sequence; the cost is O(L * ns * |classes in level|) per call.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sst/entropy.hpp"
#include "sst/space.hpp"

namespace sst {

class TypeClassOrder {
public:
    /// Throws SpaceTooLarge when ns^length exceeds `bound`.
    TypeClassOrder(std::size_t ns, std::size_t length,
                   std::uint64_t bound = kDefaultEnumerationBound);

    [[nodiscard]] std::size_t ns() const noexcept { return ns_; }
    [[nodiscard]] std::size_t length() const noexcept { return length_; }
    [[nodiscard]] std::uint64_t size() const noexcept { return size_; }
    [[nodiscard]] std::size_t level_count() const noexcept { return levels_.size(); }

    /// Position of `s` in the order. `s` must have this order's ns and length.
    [[nodiscard]] std::uint64_t rank(const Sequence& s) const;

    /// Sequence at position `r`; throws DomainError when r >= size().
    [[nodiscard]] Sequence unrank(std::uint64_t r) const;

private:
    struct Level {
        double info = 0.0;
        std::uint64_t first_rank = 0;
        std::uint64_t size = 0;
        std::vector<std::uint8_t> classes;  // flattened count vectors, ns entries each
    };

    [[nodiscard]] std::uint64_t multinomial(const std::uint8_t* counts) const;
    [[nodiscard]] const Level& level_containing(std::uint64_t r) const;

    std::size_t ns_;
    std::size_t length_;
    std::uint64_t size_;
    std::vector<Level> levels_;  // ascending info
    std::vector<std::vector<std::uint64_t>> binomial_;
};

}  // namespace sst
