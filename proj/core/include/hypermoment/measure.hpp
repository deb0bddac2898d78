#pragma once

#include <map>

#include "hypermoment/hypergroup.hpp"
#include "hypermoment/multi_index.hpp"
#include "hypermoment/multi_poly.hpp"
#include "hypermoment/scalar.hpp"

namespace hypermoment {

class HFunction;

// Finitely supported measure on a hypergroup: an element of the measure
// algebra. Zero weights are never stored.
class Measure {
 public:
  using Weights = std::map<MultiIndex, Scalar>;

  explicit Measure(Hypergroup base) : base_(std::move(base)) {}

  static Measure point_mass(const Hypergroup& base, const MultiIndex& x,
                            const Scalar& weight = 1);

  const Hypergroup& base() const { return base_; }
  const Weights& weights() const { return weights_; }
  bool is_zero() const { return weights_.empty(); }
  std::size_t support_size() const { return weights_.size(); }
  Scalar weight(const MultiIndex& x) const;
  Scalar total_mass() const;

  void add(const MultiIndex& x, const Scalar& w);

  // μ̌; the involution is the identity on every hypergroup built here.
  Measure involution() const { return *this; }

  Measure& operator+=(const Measure& other);
  Measure& operator-=(const Measure& other);
  Measure& operator*=(const Scalar& c);
  friend Measure operator+(Measure a, const Measure& b) { return a += b; }
  friend Measure operator-(Measure a, const Measure& b) { return a -= b; }
  friend Measure operator*(Measure a, const Scalar& c) { return a *= c; }
  friend Measure operator*(const Scalar& c, Measure a) { return a *= c; }

  friend bool operator==(const Measure& a, const Measure& b) {
    return a.weights_ == b.weights_ && a.base_ == b.base_;
  }

 private:
  void check_base(const Measure& other) const;

  Hypergroup base_;
  Weights weights_;
};

// μ * ν = Σ μ(x)ν(y)·(δ_x * δ_y)
Measure convolve(const Measure& mu, const Measure& nu);

// ∫ f dμ = Σ μ(x) f(x)
Scalar pair(const HFunction& f, const Measure& mu);

// Fourier–Laplace transform μ̂ = Σ μ(x) Q_x, a polynomial in d variables.
MultiPoly fourier(const Measure& mu);

// Coefficients c_x with Σ c_x Q_x = p, found by a triangular solve on
// leading monomials.
Measure expand_in_basis(const MultiPoly& p, const Hypergroup& h);

// The unique measure whose transform is p.
Measure inverse_fourier(const MultiPoly& p, const Hypergroup& h);

// δ_y - m(y)·δ_o; convolving it against f yields x ↦ f(x*y) - m(y) f(x).
// m must be an exponential.
Measure mod_diff_measure(const HFunction& m, const MultiIndex& y);

std::string to_string(const Measure& mu);

}  // namespace hypermoment
