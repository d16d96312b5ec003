#include "sst/rank_codec.hpp"

#include <numeric>
#include <string>

#include "sst/errors.hpp"

namespace sst {

DigitStream::DigitStream(std::vector<Digit> digits, std::size_t ns)
    : ns_(Alphabet(ns).size()), digits_(std::move(digits)) {
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (digits_[i] >= ns_) {
            throw DomainError("digit " + std::to_string(digits_[i]) + " at position " +
                              std::to_string(i) + " is outside [0, " + std::to_string(ns) + ")");
        }
    }
}

RankState::RankState(std::size_t ns)
    : counts_(Alphabet(ns).size(), 0), order_(ns), position_(ns) {
    std::iota(order_.begin(), order_.end(), Symbol{0});
    std::iota(position_.begin(), position_.end(), Digit{0});
}

RankState RankState::from_counts(std::span<const std::uint64_t> counts) {
    RankState state(counts.size());
    state.counts_.assign(counts.begin(), counts.end());
    // Insertion sort on the (count desc, id asc) key.
    for (std::size_t i = 1; i < state.order_.size(); ++i) {
        const Symbol x = state.order_[i];
        std::size_t j = i;
        while (j > 0 && state.precedes(x, state.order_[j - 1])) {
            state.order_[j] = state.order_[j - 1];
            --j;
        }
        state.order_[j] = x;
    }
    for (std::size_t r = 0; r < state.order_.size(); ++r) {
        state.position_[state.order_[r]] = static_cast<Digit>(r);
    }
    state.evaluations_ = 0;
    return state;
}

bool RankState::precedes(Symbol x, Symbol y) const noexcept {
    return counts_[x] > counts_[y] || (counts_[x] == counts_[y] && x < y);
}

Digit RankState::rank_of_symbol(Symbol a) const {
    if (a >= ns()) {
        throw DomainError("symbol " + std::to_string(a) + " outside alphabet of size " +
                          std::to_string(ns()));
    }
    return position_[a];
}

Symbol RankState::symbol_of_rank(Digit d) const {
    if (d >= ns()) {
        throw DomainError("digit " + std::to_string(d) + " outside alphabet of size " +
                          std::to_string(ns()));
    }
    return order_[d];
}

void RankState::update(Symbol a) {
    if (a >= ns()) {
        throw DomainError("symbol " + std::to_string(a) + " outside alphabet of size " +
                          std::to_string(ns()));
    }
    ++counts_[a];
    // Symbols that now rank below `a` form a contiguous run directly in front of it.
    Digit pos = position_[a];
    while (pos > 0) {
        ++evaluations_;
        const Symbol prev = order_[pos - 1];
        if (!precedes(a, prev)) {
            break;
        }
        order_[pos] = prev;
        position_[prev] = pos;
        --pos;
    }
    order_[pos] = a;
    position_[a] = pos;
}

Digit rank_of_symbol(const RankState& state, Symbol a) { return state.rank_of_symbol(a); }

Symbol symbol_of_rank(const RankState& state, Digit d) { return state.symbol_of_rank(d); }

DigitStream to_digits(const Sequence& s, CodecStats* stats) {
    if (s.empty()) {
        throw DomainError("to_digits of an empty sequence");
    }
    RankState state(s.ns());
    std::vector<Digit> digits;
    digits.reserve(s.size());
    for (Symbol a : s.symbols()) {
        digits.push_back(state.rank_of_symbol(a));
        state.update(a);
    }
    if (stats != nullptr) {
        stats->order_evaluations += state.order_evaluations() + s.size();
    }
    return DigitStream(std::move(digits), s.ns());
}

Sequence from_digits(const DigitStream& d, CodecStats* stats) {
    if (d.size() == 0) {
        throw DomainError("from_digits of an empty digit stream");
    }
    RankState state(d.ns());
    std::vector<Symbol> symbols;
    symbols.reserve(d.size());
    for (Digit digit : d.digits()) {
        const Symbol a = state.symbol_of_rank(digit);
        symbols.push_back(a);
        state.update(a);
    }
    if (stats != nullptr) {
        stats->order_evaluations += state.order_evaluations() + d.size();
    }
    return Sequence(std::move(symbols), d.ns());
}

}  // namespace sst
