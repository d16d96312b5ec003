#pragma once

#include <cstddef>
#include <cstdint>

namespace sst {

/// Default cap on ns^L for anything that enumerates A^L.
inline constexpr std::uint64_t kDefaultEnumerationBound = std::uint64_t{1} << 24;

/// The set A^L of all sequences of length L over ns symbols.
struct SpaceDescriptor {
    std::size_t ns = 0;
    std::size_t length = 0;
    std::uint64_t size = 0;  // ns^L, saturated at UINT64_MAX

    /// Throws DomainError when ns < 2.
    [[nodiscard]] static SpaceDescriptor of(std::size_t ns, std::size_t length);

    [[nodiscard]] bool enumerable(std::uint64_t bound = kDefaultEnumerationBound) const noexcept {
        return size <= bound;
    }

    /// Throws SpaceTooLarge when size > bound.
    void require_enumerable(std::uint64_t bound = kDefaultEnumerationBound) const;
};

}  // namespace sst
