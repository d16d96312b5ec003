#pragma once

// Seeded i.i.d. source: symbol ns-1 has probability pmax, every other symbol
// (1 - pmax) / (ns - 1). Trial i draws from its own substream derived from
// (master seed, i), so results do not depend on scheduling or worker count.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "sst/entropy.hpp"

namespace sst {

struct SourceSpec {
    std::size_t ns = 2;
    std::size_t length = 1;  // N
    double pmax = 0.5;

    /// Throws DomainError for ns < 2, N < 1 or pmax outside (0, 1).
    void validate() const;

    /// Probability of each symbol; the last entry is pmax.
    [[nodiscard]] std::vector<double> probabilities() const;

    friend bool operator==(const SourceSpec&, const SourceSpec&) = default;
};

struct Seed {
    std::uint64_t master = 0;

    friend bool operator==(const Seed&, const Seed&) = default;
};

/// SplitMix64 finaliser.
[[nodiscard]] std::uint64_t mix64(std::uint64_t x) noexcept;

/// Generator for one trial; the engine's output is fixed by the standard.
[[nodiscard]] std::mt19937_64 substream(Seed seed, std::uint64_t trial);

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
[[nodiscard]] double uniform01(std::mt19937_64& engine);

/// Inverse-CDF sampler over a fixed probability vector.
class SymbolSampler {
public:
    explicit SymbolSampler(const std::vector<double>& probabilities);

    [[nodiscard]] Symbol operator()(std::mt19937_64& engine) const;

private:
    std::vector<double> cumulative_;
};

/// N i.i.d. symbols for trial `trial`; identical inputs give identical output.
[[nodiscard]] Sequence sample(const SourceSpec& spec, Seed seed, std::uint64_t trial);

}  // namespace sst
