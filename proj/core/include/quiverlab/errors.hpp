#ifndef QUIVERLAB_ERRORS_HPP
#define QUIVERLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quiverlab {

/// Error raised while reading quiver files, words or per-vertex assignments.
/// Each failure mode carries a distinct kind so callers can tell them apart.
class ParseError : public std::runtime_error {
public:
  enum class Kind {
    Syntax,
    DuplicateId,
    UnknownVertex,
    UnknownArrow,
    InvalidId,
  };

  ParseError(Kind kind, const std::string& message, int line = 0, int column = 0)
      : std::runtime_error(message), m_kind(kind), m_line(line), m_column(column) {}

  Kind kind() const { return m_kind; }
  int line() const { return m_line; }
  int column() const { return m_column; }

  static const char* kind_name(Kind k) {
    switch (k) {
      case Kind::Syntax: return "syntax";
      case Kind::DuplicateId: return "duplicate-id";
      case Kind::UnknownVertex: return "unknown-vertex";
      case Kind::UnknownArrow: return "unknown-arrow";
      case Kind::InvalidId: return "invalid-id";
    }
    return "syntax";
  }

private:
  Kind m_kind;
  int m_line;
  int m_column;
};

/// Violation of an operation precondition or a mathematical domain rule
/// (dimension mismatch, reflecting at a loop vertex, lambda·alpha != 0, ...).
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace quiverlab

#endif
