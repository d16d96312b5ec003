#include "sst/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "sst/errors.hpp"

namespace sst {

Alphabet::Alphabet(std::size_t ns) : ns_(ns) {
    if (ns < 2) {
        throw DomainError("alphabet size must be at least 2, got " + std::to_string(ns));
    }
}

Sequence::Sequence(std::vector<Symbol> symbols, std::size_t ns)
    : alphabet_(ns), symbols_(std::move(symbols)) {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (!alphabet_.contains(symbols_[i])) {
            throw DomainError("symbol " + std::to_string(symbols_[i]) + " at position " +
                              std::to_string(i) + " is outside [0, " + std::to_string(ns) + ")");
        }
    }
}

Histogram histogram(const Sequence& s) {
    if (s.empty()) {
        throw DomainError("histogram of an empty sequence");
    }
    Histogram h{std::vector<std::uint64_t>(s.ns(), 0), s.size()};
    for (Symbol a : s.symbols()) {
        ++h.counts[a];
    }
    return h;
}

InfoContent entropy_length_product(const Sequence& s) {
    const Histogram h = histogram(s);
    const double length = static_cast<double>(h.total);
    double bits = 0.0;
    for (Symbol a : s.symbols()) {
        bits -= std::log2(static_cast<double>(h.counts[a]) / length);
    }
    // -log2(1) is -0.0 for constant sequences; report +0.
    return InfoContent{bits + 0.0};
}

InfoContent info_content(std::span<const std::uint64_t> counts) {
    std::vector<std::uint64_t> sorted(counts.begin(), counts.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::uint64_t total = 0;
    double weighted = 0.0;
    for (std::uint64_t c : sorted) {
        if (c == 0) {
            break;
        }
        total += c;
        const double x = static_cast<double>(c);
        weighted += x * std::log2(x);
    }
    if (total == 0) {
        throw DomainError("information content of an empty histogram");
    }
    const double length = static_cast<double>(total);
    const double bits = length * std::log2(length) - weighted;
    // Rounding can leave a tiny negative residue for near-constant inputs.
    return InfoContent{bits > 0.0 ? bits : 0.0};
}

InfoContent info_content(const Histogram& h) {
    return info_content(std::span<const std::uint64_t>(h.counts));
}

double pairwise_sum(std::span<const double> values) noexcept {
    constexpr std::size_t kBlock = 8;
    if (values.size() <= kBlock) {
        double acc = 0.0;
        for (double v : values) {
            acc += v;
        }
        return acc;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace sst
