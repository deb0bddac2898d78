#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "hypermoment/detail/univariate_family.hpp"
#include "hypermoment/multi_index.hpp"
#include "hypermoment/multi_poly.hpp"
#include "hypermoment/recurrence.hpp"

namespace hypermoment {

class Measure;

// A discrete polynomial hypergroup on ℕ^d: the elements are multi-indices,
// the identity is o = (0,…,0), the involution is the identity map and
// δ_x * δ_y is given by the linearization coefficients of the basis
// polynomials Q_x.
//
// Every hypergroup here is a product of one-variable families, so Q_x is
// the tensor product of the factor polynomials and linearization
// coefficients factor coordinatewise. Values are cheap handles onto shared
// immutable state; caches inside are filled at most once per entry.
class Hypergroup {
 public:
  enum class Kind { recurrence1d, product, chebyshev };

  // Certifies every c(k, l, n) with k, l ≤ certify_up_to as nonnegative.
  // Throws RejectionError with the first negative coefficient found.
  static Hypergroup from_recurrence(Recurrence1D recurrence,
                                    std::size_t certify_up_to);
  // d-fold product of the Chebyshev hypergroup of the first kind.
  static Hypergroup chebyshev(std::size_t dim);
  static Hypergroup product(std::span<const Hypergroup> factors);
  static Hypergroup product(const Hypergroup& h1, const Hypergroup& h2);

  std::size_t dimension() const;
  Kind kind() const;
  // Defined for Kind::recurrence1d only.
  const Recurrence1D& recurrence() const;
  // Operands of Kind::product, as given.
  const std::vector<Hypergroup>& operands() const;
  std::size_t certified_box() const;

  MultiIndex identity() const { return MultiIndex(dimension()); }
  MultiIndex involution(const MultiIndex& x) const { return x; }

  // Q_x; Q_o = 1.
  const MultiPoly& basis_poly(const MultiIndex& x) const;
  // Leading coefficient of Q_x at the monomial z^x.
  Rational leading_coefficient(const MultiIndex& x) const;

  // δ_x * δ_y. Throws RejectionError if a coefficient is negative.
  Measure linearization(const MultiIndex& x, const MultiIndex& y) const;
  // Same measure without the sign check, for verification sweeps.
  Measure linearization_unchecked(const MultiIndex& x, const MultiIndex& y) const;

  // One-variable factors, in coordinate order.
  std::size_t factor_count() const;
  const detail::UnivariateFamily& factor(std::size_t i) const;

  void check_element(const MultiIndex& x) const;

  // Same construction and same one-variable families.
  friend bool operator==(const Hypergroup& a, const Hypergroup& b);

 private:
  struct Impl;
  explicit Hypergroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

}  // namespace hypermoment
