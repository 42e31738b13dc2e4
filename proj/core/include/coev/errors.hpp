#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coev {

/// Operands belong to different history spaces. Cross-space masks are never
/// coerced; reuse of a mask against the wrong space is rejected outright.
class SpaceMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A requested enumeration would exceed the hard size caps.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input document. `offset` is a byte position into the input when
/// one is known, npos otherwise.
class ParseError : public std::runtime_error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    explicit ParseError(const std::string& message, std::size_t offset = npos)
        : std::runtime_error(message), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace coev
