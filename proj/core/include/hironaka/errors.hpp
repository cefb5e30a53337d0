#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hironaka {

/// Base class of every error raised by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// Malformed textual input: expressions, centers, scripts.
class parse_error : public error {
public:
    parse_error(const std::string& what_arg, std::size_t position)
        : error(what_arg), position_(position) {}

    /// 1-based character position of the offending token.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// An operation was invoked outside its domain: invalid surface,
/// non-permitted center, division by zero, and friends.
class precondition_error : public error {
public:
    using error::error;
};

/// An iteration cap was exhausted before the procedure finished.
class step_cap_error : public error {
public:
    using error::error;
};

/// Internal bookkeeping went wrong; indicates a bug, not a user mistake.
class invariant_error : public error {
public:
    using error::error;
};

/// Raised by near_points when the strict transform keeps the multiplicity
/// along the whole exceptional line, so no finite direction set exists.
class degenerate_line_error : public precondition_error {
public:
    using precondition_error::precondition_error;
};

} // namespace hironaka
