#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "hypermoment/equations.hpp"
#include "hypermoment/errors.hpp"
#include "hypermoment/recurrence.hpp"

using namespace hypermoment;
using testing::q;

namespace {
SweepOptions exact_box(std::size_t box, std::size_t jobs = 1) {
  SweepOptions o;
  o.box = box;
  o.jobs = jobs;
  return o;
}
}  // namespace

TEST_CASE("exponential law") {
  const auto h = Hypergroup::chebyshev(2);
  const Point lm{q(-7, 11), q(4, 3)};
  const auto r = check_exponential(exponential(h, lm), exact_box(8));
  CHECK(r.passed);
  CHECK(r.max_residual == 0.0);
  CHECK(r.checked == 81 * 81 + 1);

  const auto d = check_exponential(q(2) * exponential(h, lm), exact_box(3));
  CHECK_FALSE(d.passed);
  REQUIRE(d.witness);

  const auto h1 = Hypergroup::chebyshev(1);
  const auto c = check_exponential(exponential(h1, Point{Scalar(Rational(1, 2), Rational(2, 3))}), exact_box(10));
  CHECK(c.passed);
}

TEST_CASE("exponential law on a non-chebyshev family") {
  using V = std::vector<Rational>;
  const Recurrence1D r(V{1}, V{0}, V{0}, Recurrence1D::Tail{Rational(3, 5), 0, Rational(2, 5), 1});
  const auto h = Hypergroup::product(Hypergroup::from_recurrence(r, 8), Hypergroup::chebyshev(1));
  CHECK(check_exponential(exponential(h, Point{q(2, 9), q(-1, 3)}), exact_box(6)).passed);
}

TEST_CASE("sine law and a mismatched exponential") {
  const auto h = Hypergroup::chebyshev(2);
  const Point lm{q(2, 7), q(-3, 5)};
  const auto s = HFunction::atom(h, MultiIndex{1, 0}, lm);
  CHECK(check_sine(s, exponential(h, lm), exact_box(8)).passed);
  const auto bad = check_sine(s, exponential(h, Point{q(1, 7), q(-3, 5)}), exact_box(8));
  CHECK_FALSE(bad.passed);
  REQUIRE(bad.witness);
  CHECK(bad.witness->lhs != bad.witness->rhs);
}

TEST_CASE("moment identity") {
  const auto h = Hypergroup::chebyshev(2);
  const auto fam = moment_family(h, Point{q(5, 12), q(-1, 9)}, MultiIndex{2, 2});
  CHECK(check_moment(fam, exact_box(6)).passed);
  CHECK(check_moment(fam, exact_box(6, 3)).passed);
  const auto h1 = Hypergroup::chebyshev(1);
  CHECK(check_moment(moment_family(h1, Point{q(3, 10)}, MultiIndex{4}), exact_box(10)).passed);
}

TEST_CASE("parallel sweeps report the same counterexample") {
  const auto h = Hypergroup::chebyshev(2);
  const auto s = HFunction::atom(h, MultiIndex{0, 1}, Point{q(2, 7), q(-3, 5)});
  const auto m = exponential(h, Point{q(2, 7), q(-2, 5)});
  const auto one = check_sine(s, m, exact_box(5, 1));
  const auto four = check_sine(s, m, exact_box(5, 4));
  REQUIRE(one.witness);
  REQUIRE(four.witness);
  CHECK(one.witness->x == four.witness->x);
  CHECK(one.witness->ys == four.witness->ys);
}

TEST_CASE("floating mode") {
  const auto h = Hypergroup::chebyshev(2);
  SweepOptions o = exact_box(6);
  o.mode = Mode::floating;
  const auto r = check_moment(moment_family(h, Point{q(1, 3), q(1, 4)}, MultiIndex{1, 1}), o);
  CHECK(r.passed);
  CHECK(r.max_residual < 1e-9);
  const auto bad = check_exponential(q(3, 2) * exponential(h, Point{q(1, 3), q(1, 4)}), o);
  CHECK_FALSE(bad.passed);
  o.tolerance = 0;
  CHECK_THROWS_AS(check_exponential(exponential(h, Point{q(1), q(1)}), o), UsageError);
}

TEST_CASE("degree check") {
  const auto h = Hypergroup::chebyshev(2);
  const Point lm{q(4, 9), q(7, 8)};
  const auto m = exponential(h, lm);
  const auto f = HFunction::atom(h, MultiIndex{1, 1}, lm);
  SweepOptions o = exact_box(5);
  o.trials = 4;
  CHECK(check_degree(f, m, 2, o).passed);
  CHECK_FALSE(check_degree(f, m, 1, o).passed);
}

TEST_CASE("monomial degree") {
  const auto h = Hypergroup::chebyshev(2);
  const Point lm{q(4, 9), q(7, 8)};
  const auto m = exponential(h, lm);
  const auto zero = monomial_degree(m, m, 6, 4, 8);
  REQUIRE(zero.degree);
  CHECK(*zero.degree == 0);
  const auto s = sine(h, std::vector<Scalar>{q(2), q(-1)}, lm);
  CHECK(monomial_degree(s, m, 6, 4, 8).degree == 1u);
  const auto f = HFunction::atom(h, MultiIndex{2, 1}, lm);
  const auto r = monomial_degree(f, m, 6, 4, 8);
  CHECK(r.degree == 3u);
  CHECK(r.symbolic_upper);
  CHECK(r.lower_witness.size() == 3);
  // An atom at another point is never annihilated.
  const auto other = HFunction::atom(h, MultiIndex{0, 0}, Point{q(1, 9), q(7, 8)});
  CHECK_FALSE(monomial_degree(other, m, 6, 3, 4).degree);
  CHECK_THROWS_AS(monomial_degree(f, m, 6, 3, 0), UsageError);
}
