#include "hypermoment/recurrence.hpp"

#include <string>

#include "hypermoment/errors.hpp"

namespace hypermoment {

Recurrence1D::Recurrence1D(std::vector<Rational> a, std::vector<Rational> b,
                           std::vector<Rational> c, std::optional<Tail> tail)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), tail_(std::move(tail)) {
  if (a_.size() != b_.size() || a_.size() != c_.size()) {
    throw UsageError("recurrence prefixes a, b, c must have equal length");
  }
  if (a_.empty() && !tail_) {
    throw UsageError("recurrence needs at least one coefficient triple");
  }
  if (tail_ && tail_->from > a_.size()) {
    throw UsageError("recurrence tail starts at " + std::to_string(tail_->from) +
                     " but the prefix only covers " + std::to_string(a_.size()) +
                     " indices");
  }
  for (std::size_t n = 0; n < a_.size(); ++n) validate_triple(a_[n], b_[n], c_[n], n);
  if (tail_) {
    validate_triple(tail_->a, tail_->b, tail_->c, std::max<std::size_t>(a_.size(), 1));
    if (a_.empty() && sgn(tail_->c) != 0) {
      throw UsageError("recurrence requires c_0 = 0");
    }
  }
}

void Recurrence1D::validate_triple(const Rational& a, const Rational& b,
                                   const Rational& c, std::size_t n) const {
  if (sgn(a) <= 0) {
    throw UsageError("recurrence requires a_n > 0; a_" + std::to_string(n) +
                     " = " + to_string(a));
  }
  if (a + b + c != 1) {
    throw UsageError("recurrence requires a_n + b_n + c_n = 1 at n = " +
                     std::to_string(n));
  }
  if (n == 0 && sgn(c) != 0) throw UsageError("recurrence requires c_0 = 0");
}

Recurrence1D Recurrence1D::chebyshev() {
  const Rational half(1, 2);
  return Recurrence1D({Rational(1)}, {Rational(0)}, {Rational(0)},
                      Tail{half, Rational(0), half, 1});
}

std::optional<std::size_t> Recurrence1D::last_index() const {
  if (tail_) return std::nullopt;
  return a_.size() - 1;
}

const Rational& Recurrence1D::pick(const std::vector<Rational>& prefix,
                                   Rational Tail::*field, std::size_t n) const {
  if (n < prefix.size()) return prefix[n];
  if (tail_ && n >= tail_->from) return (*tail_).*field;
  throw UsageError("recurrence coefficient index " + std::to_string(n) +
                   " is beyond the supplied prefix");
}

}  // namespace hypermoment
