#ifndef ALTDIMAP_ERROR_HPP
#define ALTDIMAP_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace altdimap {

/** Bad input or a request outside an operation's domain. */
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/** A broken internal invariant. Never expected to fire. */
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace altdimap

#endif
