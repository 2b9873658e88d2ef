#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pants {

struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AssemblyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EnumerationCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SwapError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed artifact; line and column are 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

  private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        if (line == 0) return "parse error: " + what;
        return "parse error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
    }
    std::size_t line_;
    std::size_t column_;
};

}  // namespace pants
