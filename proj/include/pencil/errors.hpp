#pragma once

#include <stdexcept>
#include <string>

namespace pencil {

/// Precondition violated by the caller (zero polynomial, size mismatch, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The request is well-formed but outside what the library computes
/// (e.g. rank over Q of a pencil with singular blocks).
class ScopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Never expected in practice.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Field { Q, R, C };

inline const char* to_string(Field f) {
  switch (f) {
    case Field::Q: return "Q";
    case Field::R: return "R";
    case Field::C: return "C";
  }
  return "?";
}

inline Field parse_field(const std::string& s) {
  if (s == "Q") return Field::Q;
  if (s == "R") return Field::R;
  if (s == "C") return Field::C;
  throw DomainError("unknown field '" + s + "' (expected Q, R or C)");
}

}  // namespace pencil
