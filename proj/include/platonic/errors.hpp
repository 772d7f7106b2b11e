#pragma once

#include <stdexcept>
#include <string>

namespace platonic {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatchError : public Error {
public:
  using Error::Error;
};

class NotASubgroupError : public Error {
public:
  using Error::Error;
};

class NotNormalError : public Error {
public:
  using Error::Error;
};

/// Raised when an operation requires an equivelar surface but vertex
/// degrees are not all equal.
class NotRegularError : public Error {
public:
  using Error::Error;
};

class MalformedSurfaceError : public Error {
public:
  using Error::Error;
};

/// The projection of a deck transformation to the base surface depended on
/// the chosen cover copy of a face.
class ProjectionInconsistentError : public Error {
public:
  using Error::Error;
};

class NotInRotationGroupError : public Error {
public:
  using Error::Error;
};

/// The cover admits no consistent deck transformation for some sheet, or the
/// sheet action is larger than the sheet count; the cover is not normal.
class NormalityFailureError : public Error {
public:
  using Error::Error;
};

class UnknownNameError : public Error {
public:
  using Error::Error;
};

class InvalidSizeError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

/// A loaded surface violates a structural invariant.  Carries the name of
/// the invariant and the offending (face, slot) location when applicable.
class ValidationError : public Error {
public:
  ValidationError(std::string invariant, int face, int slot, const std::string& message)
      : Error(message), invariant_(std::move(invariant)), face_(face), slot_(slot) {}

  const std::string& invariant() const { return invariant_; }
  int face() const { return face_; }
  int slot() const { return slot_; }

private:
  std::string invariant_;
  int face_;
  int slot_;
};

namespace detail {

/// Always-on internal invariant check.  These guard facts the library itself
/// establishes; a failure indicates a bug, not bad input.
inline void check(bool condition, const std::string& what) {
  if (!condition) throw std::logic_error("internal invariant violated: " + what);
}

}  // namespace detail

}  // namespace platonic
