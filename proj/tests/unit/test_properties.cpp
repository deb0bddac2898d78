// Randomized invariants, seeded.
#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "hypermoment/hfunction.hpp"
#include "hypermoment/measure.hpp"
#include "hypermoment/recurrence.hpp"
#include "hypermoment/random.hpp"

using namespace hypermoment;
using testing::q;

namespace {

struct Gen {
  SplitMix64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  long uniform(long lo, long hi) { return lo + static_cast<long>(rng.below(static_cast<std::uint64_t>(hi - lo + 1))); }
  Scalar rational() { return q(uniform(-20, 20), uniform(1, 12)); }
  MultiIndex element(std::size_t d, long n) {
    MultiIndex x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = static_cast<MultiIndex::value_type>(uniform(0, n));
    return x;
  }
  Measure measure(const Hypergroup& h, int points, long n) {
    Measure mu(h);
    for (int i = 0; i < points; ++i) mu.add(element(h.dimension(), n), rational());
    return mu;
  }
  Point point(std::size_t d) {
    Point p;
    for (std::size_t i = 0; i < d; ++i) p.push_back(rational());
    return p;
  }
};

const Hypergroup& mixed() {
  using V = std::vector<Rational>;
  static const Hypergroup h = Hypergroup::product(
      Hypergroup::chebyshev(1),
      Hypergroup::from_recurrence(
          Recurrence1D(V{1}, V{0}, V{0}, Recurrence1D::Tail{Rational(2, 3), 0, Rational(1, 3), 1}), 10));
  return h;
}

}  // namespace

TEST_CASE("convolution is a commutative associative bilinear product") {
  Gen g(11);
  for (int t = 0; t < 15; ++t) {
    const auto& h = mixed();
    const auto a = g.measure(h, 2, 3), b = g.measure(h, 2, 3), c = g.measure(h, 2, 3);
    const auto s = g.rational();
    CHECK(convolve(a, b) == convolve(b, a));
    CHECK(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
    CHECK(convolve(a + s * b, c) == convolve(a, c) + s * convolve(b, c));
    CHECK(convolve(a, Measure::point_mass(h, h.identity())) == a);
    // Linearizations are probability measures.
    const auto x = g.element(2, 4), y = g.element(2, 4);
    CHECK(h.linearization(x, y).total_mass() == q(1));
  }
}

TEST_CASE("the Fourier map is a ring homomorphism") {
  Gen g(12);
  for (int t = 0; t < 15; ++t) {
    const auto& h = mixed();
    const auto a = g.measure(h, 3, 3), b = g.measure(h, 3, 3);
    CHECK(fourier(convolve(a, b)) == fourier(a) * fourier(b));
    CHECK(fourier(a + b) == fourier(a) + fourier(b));
    CHECK(inverse_fourier(fourier(a), h) == a);
  }
}

TEST_CASE("pairing with exponentials is multiplicative") {
  Gen g(13);
  for (int t = 0; t < 10; ++t) {
    const auto& h = mixed();
    const auto m = exponential(h, g.point(2));
    const auto a = g.measure(h, 2, 3), b = g.measure(h, 2, 3);
    CHECK(pair(m, convolve(a, b)) == pair(m, a) * pair(m, b));
  }
}

TEST_CASE("derivative atoms satisfy the Leibniz rule under convolution") {
  // <f_alpha, a*b> = sum over beta <= alpha of binom(alpha, beta) <f_beta, a><f_{alpha-beta}, b>
  Gen g(14);
  const auto h = Hypergroup::chebyshev(2);
  for (int t = 0; t < 8; ++t) {
    const auto lm = g.point(2);
    const MultiIndex alpha = g.element(2, 2);
    const auto a = g.measure(h, 2, 3), b = g.measure(h, 2, 3);
    Scalar rhs = q(0);
    for (const auto& beta : lower_set(alpha)) {
      const Scalar binom(Rational(binomial(alpha, beta)));
      rhs = rhs + binom * pair(HFunction::atom(h, beta, lm), a) * pair(HFunction::atom(h, alpha - beta, lm), b);
    }
    CHECK(pair(HFunction::atom(h, alpha, lm), convolve(a, b)) == rhs);
  }
}

TEST_CASE("translation agrees with pairing against a linearization") {
  Gen g(15);
  const auto& h = mixed();
  for (int t = 0; t < 10; ++t) {
    const auto f = q(2) * HFunction::atom(h, g.element(2, 2), g.point(2)) + exponential(h, g.point(2));
    const auto x = g.element(2, 4), y = g.element(2, 4);
    CHECK(evaluate(translate(f, y), x) == pair(f, h.linearization(x, y)));
  }
}

TEST_CASE("basis expansion inverts evaluation of the basis") {
  Gen g(16);
  const auto& h = mixed();
  for (int t = 0; t < 10; ++t) {
    MultiPoly p(2);
    for (int i = 0; i < 4; ++i) p.add_term(g.element(2, 4), g.rational());
    const auto mu = expand_in_basis(p, h);
    MultiPoly back(2);
    for (const auto& [x, w] : mu.weights()) back += w * h.basis_poly(x);
    CHECK(back == p);
  }
}
