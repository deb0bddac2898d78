#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <utility>

#include "hypermoment/multi_index.hpp"
#include "hypermoment/scalar.hpp"

namespace hypermoment {

// Sparse polynomial in d variables with exact Gaussian-rational
// coefficients. Terms are kept in graded lexicographic order and zero
// coefficients are never stored.
class MultiPoly {
 public:
  using Terms = std::map<MultiIndex, Scalar>;

  explicit MultiPoly(std::size_t dim) : dim_(dim) {}

  static MultiPoly constant(std::size_t dim, const Scalar& c);
  static MultiPoly monomial(const MultiIndex& alpha, const Scalar& c = 1);
  // z_i
  static MultiPoly variable(std::size_t dim, std::size_t i);

  std::size_t dimension() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // -1 for the zero polynomial.
  long total_degree() const;
  Scalar coefficient(const MultiIndex& alpha) const;
  // Largest monomial in graded lexicographic order. Requires !is_zero().
  const Terms::value_type& leading() const { return *terms_.rbegin(); }

  void add_term(const MultiIndex& alpha, const Scalar& c);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Scalar& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
  friend MultiPoly operator*(const Scalar& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  void check_dimension(const MultiPoly& other) const;

  std::size_t dim_;
  Terms terms_;
};

// ∂^α p
MultiPoly derive(const MultiPoly& p, const MultiIndex& alpha);

Scalar evaluate(const MultiPoly& p, std::span<const Scalar> point);
std::complex<double> evaluate(const MultiPoly& p,
                              std::span<const std::complex<double>> point);

// (p ⊗ q)(z, w) = p(z)·q(w), a polynomial in dim p + dim q variables.
MultiPoly tensor(const MultiPoly& p, const MultiPoly& q);

std::string to_string(const MultiPoly& p);

}  // namespace hypermoment
