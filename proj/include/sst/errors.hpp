#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sst {

/// Input outside the domain of an operation (bad symbol, bad digit, bad parameter).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive operation would exceed its enumeration bound.
class SpaceTooLarge : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A sequence is outside the image of a shaping function.
class NotInImage : public std::runtime_error {
public:
    NotInImage() : std::runtime_error("not in image") {}
};

/// Inverse(transform(s)) differed from s. Always a correctness bug.
class RoundTripError : public std::runtime_error {
public:
    explicit RoundTripError(std::size_t trial)
        : std::runtime_error("Error, sequence not equal to the initial sequence (trial " +
                             std::to_string(trial) + ")"),
          trial_(trial) {}

    [[nodiscard]] std::size_t trial() const noexcept { return trial_; }

private:
    std::size_t trial_;
};

}  // namespace sst
