#include "sst/space.hpp"

#include <limits>
#include <string>

#include "sst/entropy.hpp"
#include "sst/errors.hpp"

namespace sst {

SpaceDescriptor SpaceDescriptor::of(std::size_t ns, std::size_t length) {
    const Alphabet alphabet(ns);
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < length; ++i) {
        if (size > kMax / alphabet.size()) {
            size = kMax;
            break;
        }
        size *= alphabet.size();
    }
    return SpaceDescriptor{ns, length, size};
}

void SpaceDescriptor::require_enumerable(std::uint64_t bound) const {
    if (!enumerable(bound)) {
        throw SpaceTooLarge("space of " + std::to_string(ns) + "^" + std::to_string(length) +
                            " sequences exceeds the enumeration bound " + std::to_string(bound));
    }
}

}  // namespace sst
