#pragma once

#include <stdexcept>
#include <string>

namespace courant {

/// Base of every error the library throws on contract violations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ChartMismatch : public Error {
 public:
  explicit ChartMismatch(const std::string& where)
      : Error("chart mismatch in " + where) {}
};

class RankMismatch : public Error {
 public:
  explicit RankMismatch(const std::string& where)
      : Error("rank mismatch in " + where) {}
};

/// Structure data that violates a construction invariant (asymmetric or
/// singular pairing, wrong table shape, ...).
class InvalidStructure : public Error {
 public:
  using Error::Error;
};

class NonClosedTwist : public Error {
 public:
  NonClosedTwist() : Error("twisting 3-form is not closed") {}
};

class MixedBidegree : public Error {
 public:
  using Error::Error;
};

class NotOrthogonal : public Error {
 public:
  NotOrthogonal() : Error("split frames are not mutually orthogonal") {}
  explicit NotOrthogonal(const std::string& detail) : Error(detail) {}
};

class DegenerateRestriction : public Error {
 public:
  DegenerateRestriction() : Error("pairing restricted to a split frame is degenerate") {}
  explicit DegenerateRestriction(const std::string& detail) : Error(detail) {}
};

class BadComplementCertificate : public Error {
 public:
  using Error::Error;
};

class NotIntegrable : public Error {
 public:
  using Error::Error;
};

class NotFlat : public Error {
 public:
  NotFlat() : Error("regular data is not flat: the 4-form C does not vanish") {}
};

class IncompatibleData : public Error {
 public:
  using Error::Error;
};

class NoConsistentNormalization : public Error {
 public:
  NoConsistentNormalization() : Error("no candidate normalization satisfies the axioms") {}
};

class AmbiguousNormalization : public Error {
 public:
  AmbiguousNormalization() : Error("several candidate normalizations satisfy the axioms") {}
};

}  // namespace courant
