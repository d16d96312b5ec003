#include "sst/source.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sst/errors.hpp"

namespace sst {

void SourceSpec::validate() const {
    static_cast<void>(Alphabet(ns));
    if (length < 1) {
        throw DomainError("sequence length must be at least 1");
    }
    if (!(pmax > 0.0 && pmax < 1.0)) {
        throw DomainError("pmax must lie in (0, 1), got " + std::to_string(pmax));
    }
}

std::vector<double> SourceSpec::probabilities() const {
    validate();
    std::vector<double> p(ns, (1.0 - pmax) / static_cast<double>(ns - 1));
    p.back() = pmax;
    return p;
}

std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 substream(Seed seed, std::uint64_t trial) {
    return std::mt19937_64(mix64(mix64(seed.master) ^ mix64(trial + 0x632be59bd9b4e019ULL)));
}

double uniform01(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

SymbolSampler::SymbolSampler(const std::vector<double>& probabilities) {
    if (probabilities.empty()) {
        throw DomainError("empty probability vector");
    }
    cumulative_.reserve(probabilities.size());
    double acc = 0.0;
    for (double p : probabilities) {
        if (!(p >= 0.0)) {
            throw DomainError("negative probability");
        }
        acc += p;
        cumulative_.push_back(acc);
    }
}

Symbol SymbolSampler::operator()(std::mt19937_64& engine) const {
    const double u = uniform01(engine);
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    // Rounding in the running sum can leave the last bound a hair below 1.
    if (it == cumulative_.end()) {
        return static_cast<Symbol>(cumulative_.size() - 1);
    }
    return static_cast<Symbol>(it - cumulative_.begin());
}

Sequence sample(const SourceSpec& spec, Seed seed, std::uint64_t trial) {
    const SymbolSampler draw(spec.probabilities());
    std::mt19937_64 engine = substream(seed, trial);
    std::vector<Symbol> symbols(spec.length);
    for (Symbol& a : symbols) {
        a = draw(engine);
    }
    return Sequence(std::move(symbols), spec.ns);
}

}  // namespace sst
