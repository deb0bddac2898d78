#pragma once

#include <stdexcept>
#include <string>

#include "hypermoment/multi_index.hpp"
#include "hypermoment/scalar.hpp"

namespace hypermoment {

// Caller violated a precondition: dimension mismatch, foreign base
// hypergroup, malformed input file.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A linearization coefficient c(x, y, w) turned out negative, so the family
// does not define a hypergroup.
class RejectionError : public std::runtime_error {
 public:
  RejectionError(MultiIndex x, MultiIndex y, MultiIndex w, Rational value);

  const MultiIndex& x() const { return x_; }
  const MultiIndex& y() const { return y_; }
  const MultiIndex& w() const { return w_; }
  const Rational& value() const { return value_; }

 private:
  MultiIndex x_;
  MultiIndex y_;
  MultiIndex w_;
  Rational value_;
};

// The sampled rank of a variety did not stabilize within the box policy.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hypermoment
