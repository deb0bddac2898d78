#pragma once

#include <compare>
#include <map>
#include <span>
#include <vector>

#include "hypermoment/hypergroup.hpp"
#include "hypermoment/multi_index.hpp"
#include "hypermoment/multi_poly.hpp"
#include "hypermoment/scalar.hpp"

namespace hypermoment {

using Point = std::vector<Scalar>;

// The function x ↦ [∂^order Q_x](point).
struct Atom {
  MultiIndex order;
  Point point;

  friend bool operator==(const Atom&, const Atom&) = default;
  // Graded lexicographic on the order, then the point.
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);
};

std::string to_string(const Atom& atom);

// A function on the hypergroup written as a finite combination of atoms,
// Σ c_j·[∂^{α_j} Q_·](λ_j). Terms with equal (α, λ) are merged and zero
// coefficients dropped, so two HFunctions are equal as functions on ℕ^d
// exactly when their term maps coincide: distinct atoms are linearly
// independent because the Q_x span the polynomial ring.
class HFunction {
 public:
  using Terms = std::map<Atom, Scalar>;

  explicit HFunction(Hypergroup base) : base_(std::move(base)) {}

  static HFunction atom(const Hypergroup& base, const MultiIndex& order,
                        const Point& point, const Scalar& coeff = 1);

  const Hypergroup& base() const { return base_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Largest |α| over the terms; 0 for the zero function.
  std::uint64_t max_order() const;

  void add_term(const Atom& atom, const Scalar& coeff);

  HFunction& operator+=(const HFunction& other);
  HFunction& operator-=(const HFunction& other);
  HFunction& operator*=(const Scalar& c);
  friend HFunction operator+(HFunction a, const HFunction& b) { return a += b; }
  friend HFunction operator-(HFunction a, const HFunction& b) { return a -= b; }
  friend HFunction operator*(HFunction a, const Scalar& c) { return a *= c; }
  friend HFunction operator*(const Scalar& c, HFunction a) { return a *= c; }

  friend bool operator==(const HFunction& a, const HFunction& b) {
    return a.terms_ == b.terms_ && a.base_ == b.base_;
  }

 private:
  void check_base(const HFunction& other) const;

  Hypergroup base_;
  Terms terms_;
};

std::string to_string(const HFunction& f);

Scalar evaluate(const HFunction& f, const MultiIndex& x);

// x ↦ Q_x(λ)
HFunction exponential(const Hypergroup& h, const Point& lambda);

// Σ_i a_i·[∂_i Q_·](λ), an m-sine function for m = exponential(λ).
HFunction sine(const Hypergroup& h, std::span<const Scalar> a, const Point& lambda);

// x ↦ [P(∂) Q_x](λ) for a constant-coefficient operator P.
HFunction apply_pdo(const MultiPoly& p, const Point& lambda, const Hypergroup& h);

// x ↦ f(x*y), expanded with the Leibniz rule
//   [∂^α(Q_x Q_y)](λ) = Σ_{β≤α} C(α,β) [∂^β Q_x](λ)·[∂^{α-β} Q_y](λ).
HFunction translate(const HFunction& f, const MultiIndex& y);

// True when f is a single atom (0, λ) with coefficient 1.
bool is_exponential(const HFunction& f);
// λ of an exponential; throws UsageError otherwise.
const Point& exponential_point(const HFunction& m);

// Δ_{m;y_1,…,y_n} * f, applied innermost-last. The operators commute.
HFunction mod_diff(const HFunction& f, const HFunction& m,
                   std::span<const MultiIndex> ys);

// The family f_α = [∂^α Q_·](λ), α ≤ cap. It satisfies
//   f_α(x*y) = Σ_{β≤α} C(α,β) f_β(x) f_{α-β}(y).
struct MomentFamily {
  Hypergroup base;
  Point point;
  MultiIndex cap;
  std::map<MultiIndex, HFunction> members;

  const HFunction& member(const MultiIndex& alpha) const;
};

MomentFamily moment_family(const Hypergroup& h, const Point& lambda,
                           const MultiIndex& cap);

}  // namespace hypermoment
