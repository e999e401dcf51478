#pragma once

#include <stdexcept>
#include <string>

namespace shimura {

/// Base class for every domain error thrown by the library. Usage errors
/// (bad arguments to the CLI, malformed JSON) are reported separately by
/// the frontends.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct FieldSpecMismatch : Error {
  FieldSpecMismatch() : Error("operands belong to different fields") {}
};

/// Raised by the field-element parser; `position` is a byte offset into
/// the input text.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

struct DeterminantNotOne : Error {
  DeterminantNotOne() : Error("matrix determinant is not 1") {}
};

struct IdentityHasNoCircle : Error {
  IdentityHasNoCircle() : Error("identity has no isometry circle") {}
};

struct NonHomotheticUpperTriangular : Error {
  NonHomotheticUpperTriangular()
      : Error("upper triangular non-homothety has no isometry circle here "
              "(group must be cocompact)") {}
};

struct LambdaNotGreaterThanOne : Error {
  LambdaNotGreaterThanOne() : Error("homothety factor must exceed 1") {}
};

struct EmptyDomain : Error {
  EmptyDomain() : Error("fundamental domain is empty or degenerate") {}
};

struct BoundaryHit : Error {
  BoundaryHit() : Error("iterate landed on a region boundary; "
                        "choose a different base point") {}
};

struct NonTermination : Error {
  NonTermination() : Error("iteration limit exceeded") {}
};

struct NotDeckTransformation : Error {
  NotDeckTransformation()
      : Error("input matrix is not an element of the group") {}
};

struct NotDegreeZero : Error {
  NotDegreeZero() : Error("divisor has nonzero degree") {}
};

struct PDividesLevel : Error {
  PDividesLevel() : Error("p divides the level; unsupported case") {}
};

struct ViewportDegenerate : Error {
  ViewportDegenerate() : Error("render viewport is degenerate") {}
};

struct RenderDepthExceeded : Error {
  RenderDepthExceeded() : Error("translate depth exceeds the cap of 4") {}
};

}  // namespace shimura
