#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hypermoment/scalar.hpp"

namespace hypermoment {

// Three-term recurrence x·P_n = a_n·P_{n+1} + b_n·P_n + c_n·P_{n-1},
// P_0 = 1, P_{-1} = 0.
//
// Coefficients come as an explicit prefix plus an optional constant tail:
// index n < prefix length reads the prefix, index n ≥ tail.from reads the
// tail. Requires tail.from ≤ prefix length so every index is covered.
// Validation enforces a_n > 0, a_n + b_n + c_n = 1 (hence P_n(1) = 1) and
// c_0 = 0.
class Recurrence1D {
 public:
  struct Tail {
    Rational a;
    Rational b;
    Rational c;
    std::size_t from = 0;
    friend bool operator==(const Tail&, const Tail&) = default;
  };

  Recurrence1D(std::vector<Rational> a, std::vector<Rational> b,
               std::vector<Rational> c, std::optional<Tail> tail = std::nullopt);

  // a_0 = 1, b_0 = c_0 = 0; a_n = c_n = 1/2, b_n = 0 for n ≥ 1.
  static Recurrence1D chebyshev();

  const Rational& a(std::size_t n) const { return pick(a_, &Tail::a, n); }
  const Rational& b(std::size_t n) const { return pick(b_, &Tail::b, n); }
  const Rational& c(std::size_t n) const { return pick(c_, &Tail::c, n); }

  // Largest n with coefficients defined; std::nullopt when a tail exists.
  std::optional<std::size_t> last_index() const;

  const std::vector<Rational>& prefix_a() const { return a_; }
  const std::vector<Rational>& prefix_b() const { return b_; }
  const std::vector<Rational>& prefix_c() const { return c_; }
  const std::optional<Tail>& tail() const { return tail_; }

  friend bool operator==(const Recurrence1D&, const Recurrence1D&) = default;

 private:
  const Rational& pick(const std::vector<Rational>& prefix,
                       Rational Tail::*field, std::size_t n) const;
  void validate_triple(const Rational& a, const Rational& b, const Rational& c,
                       std::size_t n) const;

  std::vector<Rational> a_;
  std::vector<Rational> b_;
  std::vector<Rational> c_;
  std::optional<Tail> tail_;
};

}  // namespace hypermoment
