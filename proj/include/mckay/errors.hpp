#pragma once

#include <stdexcept>
#include <string>

namespace mckay {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (generator specs, documents, rationals).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A document parsed but violates its schema; `where` is a field path.
class SchemaError : public ParseError {
 public:
  SchemaError(const std::string& where, const std::string& what)
      : ParseError(where + ": " + what), where_(where) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

class NotSublattice : public Error {
 public:
  using Error::Error;
};

class ElementNotInGroup : public Error {
 public:
  using Error::Error;
};

class NotNormalizing : public Error {
 public:
  using Error::Error;
};

class StabilizerNotSubgroup : public Error {
 public:
  using Error::Error;
};

class NotSpecialLinear : public Error {
 public:
  using Error::Error;
};

class NotInvariant : public Error {
 public:
  using Error::Error;
};

class NotInvariantTriangulation : public Error {
 public:
  using Error::Error;
};

class DegenerateOrbit : public Error {
 public:
  using Error::Error;
};

class InconsistentSheet : public Error {
 public:
  using Error::Error;
};

class MissingValue : public Error {
 public:
  using Error::Error;
};

}  // namespace mckay
