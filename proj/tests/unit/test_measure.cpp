#include <doctest.h>

#include "helpers.hpp"
#include "hypermoment/errors.hpp"
#include "hypermoment/hfunction.hpp"
#include "hypermoment/measure.hpp"

using namespace hypermoment;
using testing::q;

TEST_CASE("convolution") {
  const auto h = Hypergroup::chebyshev(1);
  const auto d = [&](unsigned n) { return Measure::point_mass(h, MultiIndex{n}); };
  CHECK(convolve(d(1), d(1)) == q(1, 2) * d(0) + q(1, 2) * d(2));
  const Measure mu = q(3) * d(2) - q(1, 7) * d(5);
  CHECK(convolve(d(0), mu) == mu);
  const auto h2 = Hypergroup::chebyshev(2);
  CHECK(convolve(Measure::point_mass(h2, MultiIndex{1, 0}), Measure::point_mass(h2, MultiIndex{0, 1})) ==
        Measure::point_mass(h2, MultiIndex{1, 1}));
  CHECK_THROWS_AS(convolve(mu, Measure::point_mass(h2, MultiIndex{0, 0})), UsageError);
}

TEST_CASE("measure bookkeeping") {
  const auto h = Hypergroup::chebyshev(1);
  Measure mu(h);
  mu.add(MultiIndex{3}, q(1, 2));
  mu.add(MultiIndex{3}, q(-1, 2));
  CHECK(mu.is_zero());
  mu.add(MultiIndex{1}, q(2));
  mu.add(MultiIndex{4}, q(-3));
  CHECK(mu.total_mass() == q(-1));
  CHECK(mu.involution() == mu);
  CHECK(to_string(mu).find("(4)") != std::string::npos);
}

TEST_CASE("fourier transform") {
  const auto h = Hypergroup::chebyshev(1);
  CHECK(fourier(Measure::point_mass(h, MultiIndex{0})) == MultiPoly::constant(1, 1));
  CHECK(fourier(Measure::point_mass(h, MultiIndex{5})) == h.basis_poly(MultiIndex{5}));
  Measure mu(h);
  mu.add(MultiIndex{0}, q(1, 2));
  mu.add(MultiIndex{2}, q(1, 2));
  CHECK(fourier(mu) == MultiPoly::monomial(MultiIndex{2}));
  CHECK(inverse_fourier(MultiPoly::monomial(MultiIndex{2}), h) == mu);
  CHECK(inverse_fourier(MultiPoly::constant(1, 1), h) == Measure::point_mass(h, MultiIndex{0}));
  CHECK(expand_in_basis(h.basis_poly(MultiIndex{7}), h) == Measure::point_mass(h, MultiIndex{7}));
}

TEST_CASE("x squared in the chebyshev basis") {
  const auto h = Hypergroup::chebyshev(1);
  const auto x = MultiPoly::variable(1, 0);
  const Measure m = expand_in_basis(x * x, h);
  CHECK(m.weight(MultiIndex{0}) == q(1, 2));
  CHECK(m.weight(MultiIndex{1}) == q(0));
  CHECK(m.weight(MultiIndex{2}) == q(1, 2));
}

TEST_CASE("pairing") {
  const auto h = Hypergroup::chebyshev(2);
  const Point lambda{q(1, 3), q(-2, 5)};
  const auto m = exponential(h, lambda);
  const MultiIndex x{2, 1}, y{3, 3};
  CHECK(pair(m, Measure::point_mass(h, x)) == evaluate(m, x));
  CHECK(pair(m, h.linearization(x, y)) == evaluate(m, x) * evaluate(m, y));
  const auto one = exponential(h, Point{q(1), q(1)});
  CHECK(pair(one, h.linearization(x, y)) == q(1));
}

TEST_CASE("modified difference measures") {
  const auto h = Hypergroup::chebyshev(1);
  const auto m = exponential(h, Point{q(2, 3)});
  CHECK(mod_diff_measure(m, MultiIndex{0}).is_zero());
  const auto one = exponential(h, Point{q(1)});
  CHECK(mod_diff_measure(one, MultiIndex{4}) ==
        Measure::point_mass(h, MultiIndex{4}) - Measure::point_mass(h, MultiIndex{0}));
  CHECK_THROWS_AS(mod_diff_measure(q(2) * m, MultiIndex{1}), UsageError);

  // ∫ f d(δ_x * Δ) = f(x*y) − m(y) f(x)
  const auto f = HFunction::atom(h, MultiIndex{2}, Point{q(2, 3)}, q(5));
  const MultiIndex x{3}, y{2};
  const Measure delta = mod_diff_measure(m, y);
  const Scalar via_measure = pair(f, convolve(Measure::point_mass(h, x), delta));
  CHECK(via_measure == evaluate(mod_diff(f, m, std::vector<MultiIndex>{y}), x));
}
