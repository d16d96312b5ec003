#include "sst/type_class_order.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "sst/errors.hpp"

namespace sst {

namespace {

// Visits every count vector of `parts` non-negative entries summing to `total`,
// in lexicographic order of the vectors.
template <typename Visit>
void for_each_composition(std::vector<std::uint8_t>& counts, std::size_t index,
                          std::size_t remaining, Visit&& visit) {
    if (index + 1 == counts.size()) {
        counts[index] = static_cast<std::uint8_t>(remaining);
        visit(counts);
        return;
    }
    for (std::size_t c = 0; c <= remaining; ++c) {
        counts[index] = static_cast<std::uint8_t>(c);
        for_each_composition(counts, index + 1, remaining - c, visit);
    }
}

}  // namespace

TypeClassOrder::TypeClassOrder(std::size_t ns, std::size_t length, std::uint64_t bound)
    : ns_(ns), length_(length) {
    const SpaceDescriptor space = SpaceDescriptor::of(ns, length);
    space.require_enumerable(bound);
    if (length == 0) {
        throw DomainError("type-class order needs length >= 1");
    }
    if (length > 255) {
        throw SpaceTooLarge("type-class order supports lengths up to 255");
    }
    size_ = space.size;

    binomial_.assign(length + 1, std::vector<std::uint64_t>(length + 1, 0));
    for (std::size_t n = 0; n <= length; ++n) {
        binomial_[n][0] = 1;
        for (std::size_t k = 1; k <= n; ++k) {
            binomial_[n][k] = binomial_[n - 1][k - 1] + (k <= n - 1 ? binomial_[n - 1][k] : 0);
        }
    }

    std::map<double, Level> by_info;
    std::vector<std::uint64_t> wide(ns);
    std::vector<std::uint8_t> counts(ns);
    for_each_composition(counts, 0, length, [&](const std::vector<std::uint8_t>& c) {
        std::copy(c.begin(), c.end(), wide.begin());
        const double info = info_content(wide).bits;
        Level& level = by_info[info];
        level.info = info;
        level.size += multinomial(c.data());
        level.classes.insert(level.classes.end(), c.begin(), c.end());
    });

    std::uint64_t next = 0;
    levels_.reserve(by_info.size());
    for (auto& [info, level] : by_info) {
        level.first_rank = next;
        next += level.size;
        levels_.push_back(std::move(level));
    }
}

std::uint64_t TypeClassOrder::multinomial(const std::uint8_t* counts) const {
    std::uint64_t result = 1;
    std::size_t placed = 0;
    for (std::size_t a = 0; a < ns_; ++a) {
        placed += counts[a];
        result *= binomial_[placed][counts[a]];
    }
    return result;
}

const TypeClassOrder::Level& TypeClassOrder::level_containing(std::uint64_t r) const {
    auto it = std::upper_bound(levels_.begin(), levels_.end(), r,
                               [](std::uint64_t value, const Level& level) {
                                   return value < level.first_rank;
                               });
    return *std::prev(it);
}

std::uint64_t TypeClassOrder::rank(const Sequence& s) const {
    if (s.ns() != ns_ || s.size() != length_) {
        throw DomainError("sequence of length " + std::to_string(s.size()) + " over " +
                          std::to_string(s.ns()) + " symbols does not belong to A^" +
                          std::to_string(length_) + " over " + std::to_string(ns_) + " symbols");
    }
    const double info = info_content(histogram(s)).bits;
    auto level_it = std::lower_bound(levels_.begin(), levels_.end(), info,
                                     [](const Level& level, double v) { return level.info < v; });
    const Level& level = *level_it;

    // completions[j]: sequences of class j that extend the current prefix.
    const std::size_t class_count = level.classes.size() / ns_;
    std::vector<std::uint64_t> completions(class_count);
    std::vector<std::uint8_t> residual(level.classes);
    for (std::size_t j = 0; j < class_count; ++j) {
        completions[j] = multinomial(&residual[j * ns_]);
    }

    std::uint64_t r = level.first_rank;
    for (std::size_t i = 0; i < length_; ++i) {
        const std::uint64_t remaining = length_ - i;
        const Symbol current = s[i];
        for (std::size_t j = 0; j < class_count; ++j) {
            if (completions[j] == 0) {
                continue;
            }
            std::uint8_t* left = &residual[j * ns_];
            for (Symbol c = 0; c < current; ++c) {
                r += completions[j] * left[c] / remaining;
            }
            completions[j] = completions[j] * left[current] / remaining;
            if (left[current] > 0) {
                --left[current];
            }
        }
    }
    return r;
}

Sequence TypeClassOrder::unrank(std::uint64_t r) const {
    if (r >= size_) {
        throw DomainError("rank " + std::to_string(r) + " outside order of size " +
                          std::to_string(size_));
    }
    const Level& level = level_containing(r);
    r -= level.first_rank;

    const std::size_t class_count = level.classes.size() / ns_;
    std::vector<std::uint64_t> completions(class_count);
    std::vector<std::uint8_t> residual(level.classes);
    for (std::size_t j = 0; j < class_count; ++j) {
        completions[j] = multinomial(&residual[j * ns_]);
    }

    std::vector<Symbol> symbols(length_);
    for (std::size_t i = 0; i < length_; ++i) {
        const std::uint64_t remaining = length_ - i;
        Symbol chosen = 0;
        for (Symbol c = 0; c < ns_; ++c) {
            std::uint64_t with_c = 0;
            for (std::size_t j = 0; j < class_count; ++j) {
                with_c += completions[j] * residual[j * ns_ + c] / remaining;
            }
            if (r < with_c) {
                chosen = c;
                break;
            }
            r -= with_c;
        }
        symbols[i] = chosen;
        for (std::size_t j = 0; j < class_count; ++j) {
            std::uint8_t& left = residual[j * ns_ + chosen];
            completions[j] = completions[j] * left / remaining;
            if (left > 0) {
                --left;
            }
        }
    }
    return Sequence(std::move(symbols), ns_);
}

}  // namespace sst
