#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace logitlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Index or strategy outside its radix.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Array lengths that do not match the profile space.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// State space larger than the configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// A theorem or generator hypothesis is violated by the inputs.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class GraphError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

class NotReversibleError : public Error {
 public:
  NotReversibleError(const std::string& what, double violation)
      : Error(what), violation_(violation) {}
  double violation() const { return violation_; }

 private:
  double violation_;
};

/// Raised by extract_potential. The witness is a closed walk of state
/// indices around which the utility increments do not sum to zero.
class NotPotentialError : public Error {
 public:
  NotPotentialError(const std::string& what, std::vector<std::size_t> cycle,
                    double violation)
      : Error(what), cycle_(std::move(cycle)), violation_(violation) {}
  const std::vector<std::size_t>& cycle() const { return cycle_; }
  double violation() const { return violation_; }

 private:
  std::vector<std::size_t> cycle_;
  double violation_;
};

/// Mixing-time iteration hit its step cap before reaching epsilon.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, std::size_t cap, double distance)
      : Error(what), cap_(cap), distance_(distance) {}
  std::size_t cap() const { return cap_; }
  double distance_at_cap() const { return distance_; }

 private:
  std::size_t cap_;
  double distance_;
};

enum class ParseErrorKind { syntax, schema, semantic };

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, const std::string& what,
             std::size_t byte_offset = 0)
      : Error(what), kind_(kind), offset_(byte_offset) {}
  ParseErrorKind kind() const { return kind_; }
  std::size_t byte_offset() const { return offset_; }

 private:
  ParseErrorKind kind_;
  std::size_t offset_;
};

}  // namespace logitlab
