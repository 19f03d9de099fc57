#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nakayama {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract user input (bad sequence, bad grading, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ZeroDenominator : public Error {
 public:
  ZeroDenominator() : Error("ZeroDenominator") {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error("DimensionMismatch: " + what) {}
};

class NotSquare : public Error {
 public:
  NotSquare() : Error("NotSquare") {}
};

class NotDivisible : public Error {
 public:
  NotDivisible() : Error("NotDivisible: polynomial division left a remainder") {}
};

class PoleAtPoint : public Error {
 public:
  explicit PoleAtPoint(const std::string& point) : Error("PoleAtPoint: t = " + point) {}
};

/// An admissibility constraint fails at a 1-based index.
class NotAdmissible : public InvalidInput {
 public:
  explicit NotAdmissible(std::size_t index)
      : InvalidInput("NotAdmissible at index " + std::to_string(index)), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class NonPositiveGrading : public InvalidInput {
 public:
  NonPositiveGrading() : InvalidInput("NonPositiveGrading: every arrow degree must be >= 1") {}
};

class ZeroTotalDegree : public InvalidInput {
 public:
  ZeroTotalDegree() : InvalidInput("ZeroTotalDegree") {}
};

class NotALeaf : public InvalidInput {
 public:
  explicit NotALeaf(int vertex)
      : InvalidInput("NotALeaf: vertex " + std::to_string(vertex) + " has a preimage under gamma") {}
};

class FiniteProjectiveDimension : public InvalidInput {
 public:
  explicit FiniteProjectiveDimension(int vertex)
      : InvalidInput("FiniteProjectiveDimension: pd S_" + std::to_string(vertex) + " is finite") {}
};

// The following signal a broken invariant inside the library. They are
// never expected on valid input.

class NonUniformCycles : public Error {
 public:
  explicit NonUniformCycles(const std::string& what) : Error("NonUniformCycles: " + what) {}
};

class CrossCheckFailure : public Error {
 public:
  explicit CrossCheckFailure(const std::string& what) : Error("CrossCheckFailure: " + what) {}
};

class MismatchBug : public Error {
 public:
  explicit MismatchBug(const std::string& what) : Error("MismatchBug: " + what) {}
};

}  // namespace nakayama
