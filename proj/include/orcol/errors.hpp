#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orcol {

/// Malformed graph input. `line()` is 1-based; 0 means "end of input".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A configured enumeration, term or evaluation cap would be exceeded.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace orcol
