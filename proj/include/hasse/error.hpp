#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace hasse {

// Base class for every failure that is a property of the input rather than a
// bug in the library. The CLI maps these to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Raised when structure constants (or a proposed morphism) fail a law. The
// witness holds the offending basis indices; unused slots are npos.
class LawError : public Error {
 public:
  enum class Law { associativity, unit, centrality, multiplicativity, unitality, group };
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  LawError(Law law, std::array<std::size_t, 3> witness, const std::string& what)
      : Error(what), law_(law), witness_(witness) {}

  Law law() const noexcept { return law_; }
  const std::array<std::size_t, 3>& witness() const noexcept { return witness_; }

 private:
  Law law_;
  std::array<std::size_t, 3> witness_;
};

// An internal invariant failed. Never expected; signals a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {
inline void ensure(bool ok, const char* what) {
  if (!ok) throw InternalError(what);
}
}  // namespace detail

}  // namespace hasse
