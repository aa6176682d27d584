#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace hlab {

/// Base class for every domain error raised by the library. The CLI maps
/// these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unsorted, repeated or out-of-range subset elements.
class MalformedSubsetError : public Error {
public:
    using Error::Error;
};

/// Vertex subset too small to carry an edge.
class DegenerateSubsetError : public Error {
public:
    using Error::Error;
};

/// A bounded exhaustive routine was asked to go past its configured size.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

class ParameterError : public Error {
public:
    using Error::Error;
};

/// Exact enumeration would exceed the mask-space cap.
class FeasibilityError : public Error {
public:
    using Error::Error;
};

class ConstructionError : public Error {
public:
    using Error::Error;
};

/// Arithmetic result does not fit the requested integer width.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Malformed text input. `offset()` is the byte position of the problem
/// when it is known.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, std::optional<std::size_t> offset = std::nullopt)
        : Error(offset ? what + " (at byte " + std::to_string(*offset) + ")" : what), detail_(what), offset_(offset)
    {
    }

    auto offset() const noexcept -> std::optional<std::size_t> { return offset_; }

    /// The message without the byte-offset suffix.
    auto detail() const noexcept -> const std::string& { return detail_; }

private:
    std::string detail_;
    std::optional<std::size_t> offset_;
};

} // namespace hlab
