#include "sst/shaping.hpp"

#include <algorithm>
#include <string>

#include "sst/errors.hpp"
#include "sst/rank_codec.hpp"

namespace sst {

namespace {

void require_order(std::size_t order) {
    if (order < 1) {
        throw DomainError("shaping order K must be at least 1");
    }
}

void require_longer_than_order(const Sequence& y, std::size_t order) {
    if (y.size() <= order) {
        throw DomainError("shaped sequence of length " + std::to_string(y.size()) +
                          " must be longer than K = " + std::to_string(order));
    }
}

}  // namespace

std::string_view to_string(Strategy strategy) noexcept {
    switch (strategy) {
        case Strategy::kAdaptiveRank:
            return "adaptive-rank";
        case Strategy::kExactSorted:
            return "exact-sorted";
    }
    return "unknown";
}

Strategy parse_strategy(std::string_view name) {
    if (name == "adaptive-rank" || name == "adaptive") {
        return Strategy::kAdaptiveRank;
    }
    if (name == "exact-sorted") {
        return Strategy::kExactSorted;
    }
    throw DomainError("unknown strategy '" + std::string(name) + "'");
}

void ShaperConfig::validate() const {
    require_order(order);
    static_cast<void>(Alphabet(ns));
}

// --- adaptive-rank ----------------------------------------------------------

AdaptiveRankShaper::AdaptiveRankShaper(std::size_t order) : order_(order) {
    require_order(order);
}

Sequence AdaptiveRankShaper::transform(const Sequence& s) const {
    const DigitStream digits = to_digits(s);
    std::vector<Digit> shaped(order_, Digit{0});
    shaped.insert(shaped.end(), digits.digits().begin(), digits.digits().end());
    return from_digits(DigitStream(std::move(shaped), s.ns()));
}

std::optional<Sequence> AdaptiveRankShaper::inverse(const Sequence& y) const {
    require_longer_than_order(y, order_);
    const DigitStream digits = to_digits(y);
    const auto all = digits.digits();
    if (!std::all_of(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(order_),
                     [](Digit d) { return d == 0; })) {
        return std::nullopt;
    }
    std::vector<Digit> rest(all.begin() + static_cast<std::ptrdiff_t>(order_), all.end());
    return from_digits(DigitStream(std::move(rest), y.ns()));
}

bool AdaptiveRankShaper::is_in_image(const Sequence& y) const {
    require_longer_than_order(y, order_);
    RankState state(y.ns());
    for (std::size_t i = 0; i < order_; ++i) {
        if (state.rank_of_symbol(y[i]) != 0) {
            return false;
        }
        state.update(y[i]);
    }
    return true;
}

Sequence transform_adaptive(const Sequence& s, std::size_t order) {
    return AdaptiveRankShaper(order).transform(s);
}

std::optional<Sequence> inverse_adaptive(const Sequence& y, std::size_t order) {
    return AdaptiveRankShaper(order).inverse(y);
}

bool is_in_image(const Sequence& y, std::size_t order) {
    return AdaptiveRankShaper(order).is_in_image(y);
}

// --- exact-sorted -----------------------------------------------------------

ExactSortedShaper::ExactSortedShaper(std::size_t ns, std::size_t length, std::size_t order,
                                     std::uint64_t bound)
    : order_((require_order(order), order)),
      source_(ns, length, bound),
      target_(ns, length + order, bound) {}

Sequence ExactSortedShaper::transform(const Sequence& s) const {
    return target_.unrank(source_.rank(s));
}

std::optional<Sequence> ExactSortedShaper::inverse(const Sequence& y) const {
    require_longer_than_order(y, order_);
    const std::uint64_t r = target_.rank(y);
    if (r >= source_.size()) {
        return std::nullopt;
    }
    return source_.unrank(r);
}

Sequence transform_exact_sorted(const Sequence& s, std::size_t order, std::uint64_t bound) {
    if (s.empty()) {
        throw DomainError("cannot shape an empty sequence");
    }
    return ExactSortedShaper(s.ns(), s.size(), order, bound).transform(s);
}

std::optional<Sequence> inverse_exact_sorted(const Sequence& y, std::size_t order,
                                             std::uint64_t bound) {
    require_order(order);
    require_longer_than_order(y, order);
    return ExactSortedShaper(y.ns(), y.size() - order, order, bound).inverse(y);
}

// --- shared -----------------------------------------------------------------

std::unique_ptr<Shaper> make_shaper(const ShaperConfig& cfg, std::size_t length) {
    cfg.validate();
    switch (cfg.strategy) {
        case Strategy::kAdaptiveRank:
            return std::make_unique<AdaptiveRankShaper>(cfg.order);
        case Strategy::kExactSorted:
            return std::make_unique<ExactSortedShaper>(cfg.ns, length, cfg.order,
                                                       cfg.enumeration_bound);
    }
    throw DomainError("unknown strategy");
}

ShapingOutcome shape_and_measure(const Sequence& s, const Shaper& shaper) {
    Sequence output = shaper.transform(s);
    const InfoContent input_info = entropy_length_product(s);
    const InfoContent output_info = entropy_length_product(output);
    return ShapingOutcome{
        std::move(output),
        input_info,
        output_info,
        input_info.bits - output_info.bits,
        output_info.bits < input_info.bits,
    };
}

ShapingOutcome shape_and_measure(const Sequence& s, const ShaperConfig& cfg) {
    if (s.ns() != cfg.ns) {
        throw DomainError("sequence alphabet size " + std::to_string(s.ns()) +
                          " does not match configured ns " + std::to_string(cfg.ns));
    }
    if (s.empty()) {
        throw DomainError("cannot shape an empty sequence");
    }
    return shape_and_measure(s, *make_shaper(cfg, s.size()));
}

}  // namespace sst
