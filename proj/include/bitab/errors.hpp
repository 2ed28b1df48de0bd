#pragma once

#include <stdexcept>
#include <string>

namespace bitab {

/// Malformed graph input. `line` is 1-based, or 0 when not line-oriented.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// An exhaustive routine refused to run because its input exceeds a configured cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace bitab
