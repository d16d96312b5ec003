#pragma once

// Sequences over a finite alphabet and their zero-order information content,
//   N*H0(s) = -sum_i log2(count(s_i) / N)
// measured in bits.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sst {

using Symbol = std::uint32_t;

/// Alphabet {0, ..., ns-1}. ns >= 2.
class Alphabet {
public:
    explicit Alphabet(std::size_t ns);

    [[nodiscard]] std::size_t size() const noexcept { return ns_; }
    [[nodiscard]] bool contains(std::uint64_t a) const noexcept { return a < ns_; }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::size_t ns_;
};

/// An ordered list of symbols, each in [0, ns).
class Sequence {
public:
    Sequence(std::vector<Symbol> symbols, std::size_t ns);

    [[nodiscard]] std::size_t ns() const noexcept { return alphabet_.size(); }
    [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
    [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
    [[nodiscard]] bool empty() const noexcept { return symbols_.empty(); }
    [[nodiscard]] std::span<const Symbol> symbols() const noexcept { return symbols_; }
    [[nodiscard]] Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }

    friend bool operator==(const Sequence&, const Sequence&) = default;

private:
    Alphabet alphabet_;
    std::vector<Symbol> symbols_;
};

/// Per-symbol occurrence counts of one sequence.
struct Histogram {
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;

    friend bool operator==(const Histogram&, const Histogram&) = default;
};

/// Information content in bits.
struct InfoContent {
    double bits = 0.0;

    friend auto operator<=>(const InfoContent&, const InfoContent&) = default;
};

/// Throws DomainError on an empty sequence.
[[nodiscard]] Histogram histogram(const Sequence& s);

/// Positional form: sum over positions of -log2(count(s_i)/L), summed left to right.
[[nodiscard]] InfoContent entropy_length_product(const Sequence& s);

/// Closed form L*log2(L) - sum_a c_a*log2(c_a), zero counts skipped.
///
/// Counts are visited in descending order, so the result is bit-identical for
/// every histogram of the same type class (any permutation of the counts).
/// This is the key used wherever sequences are ordered by information content.
[[nodiscard]] InfoContent info_content(const Histogram& h);

/// Closed form from a raw count vector; same canonical evaluation order.
[[nodiscard]] InfoContent info_content(std::span<const std::uint64_t> counts);

/// Sum of values by recursive halving. Result depends only on the order of `values`.
[[nodiscard]] double pairwise_sum(std::span<const double> values) noexcept;

}  // namespace sst
