#pragma once

#include <stdexcept>
#include <string>

namespace syz {

// Every failure raised by the library derives from Error so callers can map
// categories onto exit codes without string matching.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs that violate a documented precondition (mixed fields, ring mismatch,
/// non-homogeneous generators, unparsable text, ...).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// A configured cap (S-pairs, degree, combinatorial size) was exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// The graded data needed for a request was not populated far enough.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// A presentation is not complete through the degrees a request touches.
class IncompletePresentation : public Error {
 public:
  using Error::Error;
};

/// A Betti table window is too narrow to decide the requested quantity.
class RangeTooSmall : public Error {
 public:
  using Error::Error;
};

/// Projection centers kept failing the isomorphism test.
class RetriesExhausted : public Error {
 public:
  using Error::Error;
};

/// A bounded search finished without finding a witness.
class NotFound : public Error {
 public:
  using Error::Error;
};

/// The cohomology oracle has no closed form for the request.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// H^1(L^j) = 0 for j >= 2 could not be certified for a fixture.
class VanishingCertificateMissing : public Error {
 public:
  using Error::Error;
};

}  // namespace syz
