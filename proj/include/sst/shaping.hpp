#pragma once

// Shaping functions f: A^N -> A^(N+K) and their inverses.
//
// Two strategies share one interface:
//   adaptive-rank  prepend K zero digits to the adaptive rank digits of s and
//                  decode; O((N+K) * ns), image = sequences whose first K
//                  digits are 0 (a fraction ns^-K of A^(N+K)).
//   exact-sorted   map the rank of s in the (info, lex) order on A^N to the
//                  sequence of the same rank in A^(N+K); exhaustive spaces only.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>

#include "sst/entropy.hpp"
#include "sst/space.hpp"
#include "sst/type_class_order.hpp"

namespace sst {

enum class Strategy { kAdaptiveRank, kExactSorted };

[[nodiscard]] std::string_view to_string(Strategy strategy) noexcept;

/// Parses "adaptive-rank" or "exact-sorted"; throws DomainError otherwise.
[[nodiscard]] Strategy parse_strategy(std::string_view name);

struct ShaperConfig {
    Strategy strategy = Strategy::kAdaptiveRank;
    std::size_t order = 1;  // shaping order K
    std::size_t ns = 2;
    std::uint64_t enumeration_bound = kDefaultEnumerationBound;

    /// Throws DomainError for K < 1 or ns < 2.
    void validate() const;
};

struct ShapingOutcome {
    Sequence output;
    InfoContent input_info;
    InfoContent output_info;
    double gain_bits = 0.0;
    bool success = false;
};

class Shaper {
public:
    virtual ~Shaper() = default;

    [[nodiscard]] virtual Strategy strategy() const noexcept = 0;
    [[nodiscard]] virtual std::size_t order() const noexcept = 0;

    [[nodiscard]] virtual Sequence transform(const Sequence& s) const = 0;

    /// nullopt when y is outside the image.
    [[nodiscard]] virtual std::optional<Sequence> inverse(const Sequence& y) const = 0;

    [[nodiscard]] virtual bool is_in_image(const Sequence& y) const {
        return inverse(y).has_value();
    }
};

class AdaptiveRankShaper final : public Shaper {
public:
    explicit AdaptiveRankShaper(std::size_t order);

    [[nodiscard]] Strategy strategy() const noexcept override { return Strategy::kAdaptiveRank; }
    [[nodiscard]] std::size_t order() const noexcept override { return order_; }
    [[nodiscard]] Sequence transform(const Sequence& s) const override;
    [[nodiscard]] std::optional<Sequence> inverse(const Sequence& y) const override;
    [[nodiscard]] bool is_in_image(const Sequence& y) const override;

private:
    std::size_t order_;
};

/// Holds the source and target orders for one (ns, N, K); read-only after construction.
class ExactSortedShaper final : public Shaper {
public:
    ExactSortedShaper(std::size_t ns, std::size_t length, std::size_t order,
                      std::uint64_t bound = kDefaultEnumerationBound);

    [[nodiscard]] Strategy strategy() const noexcept override { return Strategy::kExactSorted; }
    [[nodiscard]] std::size_t order() const noexcept override { return order_; }
    [[nodiscard]] Sequence transform(const Sequence& s) const override;
    [[nodiscard]] std::optional<Sequence> inverse(const Sequence& y) const override;

    [[nodiscard]] const TypeClassOrder& source_order() const noexcept { return source_; }
    [[nodiscard]] const TypeClassOrder& target_order() const noexcept { return target_; }

private:
    std::size_t order_;
    TypeClassOrder source_;
    TypeClassOrder target_;
};

/// Shaper for inputs of length `length` under `cfg`.
[[nodiscard]] std::unique_ptr<Shaper> make_shaper(const ShaperConfig& cfg, std::size_t length);

[[nodiscard]] Sequence transform_adaptive(const Sequence& s, std::size_t order);
[[nodiscard]] std::optional<Sequence> inverse_adaptive(const Sequence& y, std::size_t order);
[[nodiscard]] bool is_in_image(const Sequence& y, std::size_t order);

[[nodiscard]] Sequence transform_exact_sorted(const Sequence& s, std::size_t order,
                                              std::uint64_t bound = kDefaultEnumerationBound);
[[nodiscard]] std::optional<Sequence> inverse_exact_sorted(
    const Sequence& y, std::size_t order, std::uint64_t bound = kDefaultEnumerationBound);

[[nodiscard]] ShapingOutcome shape_and_measure(const Sequence& s, const Shaper& shaper);
[[nodiscard]] ShapingOutcome shape_and_measure(const Sequence& s, const ShaperConfig& cfg);

}  // namespace sst
