#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "hypermoment/errors.hpp"
#include "hypermoment/synthesis.hpp"

using namespace hypermoment;
using testing::q;

TEST_CASE("variety dimensions") {
  const auto h1 = Hypergroup::chebyshev(1);
  const Point l1{q(3, 7)};
  CHECK(variety_basis(exponential(h1, l1)).dim == 1);
  const auto v1 = variety_basis(HFunction::atom(h1, MultiIndex{1}, l1));
  CHECK(v1.dim == 2);
  CHECK(v1.stable);
  CHECK(v1.box == 4 * 2 + 4);

  const auto h2 = Hypergroup::chebyshev(2);
  const Point l2{q(3, 7), q(-5, 6)};
  CHECK(variety_basis(HFunction::atom(h2, MultiIndex{1, 1}, l2)).dim == 4);
  CHECK(variety_basis(HFunction::atom(h2, MultiIndex{2, 1}, l2)).dim == 6);
  CHECK(variety_basis(HFunction::atom(h2, MultiIndex{2, 2}, l2)).dim == 9);
  // A directional derivative spans only itself and the exponential.
  const auto dir = HFunction::atom(h2, MultiIndex{1, 0}, l2) + HFunction::atom(h2, MultiIndex{0, 1}, l2);
  CHECK(variety_basis(dir).dim == 2);
  CHECK(variety_basis(HFunction(h2)).dim == 0);
}

TEST_CASE("membership") {
  const auto h = Hypergroup::chebyshev(2);
  const Point lm{q(3, 7), q(-5, 6)};
  const auto f = HFunction::atom(h, MultiIndex{1, 1}, lm);
  const auto v = variety_basis(f);
  const auto self = contains(v, f);
  CHECK(self.member);
  for (const auto& beta : lower_set(MultiIndex{1, 1})) CHECK(contains(v, HFunction::atom(h, beta, lm)).member);
  CHECK_FALSE(contains(v, HFunction::atom(h, MultiIndex{2, 0}, lm)).member);

  const auto m = exponential(h, lm);
  const auto vm = variety_basis(m);
  CHECK_FALSE(contains(vm, HFunction::atom(h, MultiIndex{1, 0}, lm)).member);
  const auto c = contains(vm, q(5) * m);
  REQUIRE(c.member);
  CHECK(c.coefficients[0] == q(5));
  CHECK_THROWS_AS(contains(vm, exponential(Hypergroup::chebyshev(1), Point{q(1)})), UsageError);
}

TEST_CASE("sine dimension") {
  const auto h2 = Hypergroup::chebyshev(2);
  const Point lm{q(3, 7), q(-5, 6)};
  const auto m = exponential(h2, lm);
  CHECK(sine_dimension(variety_basis(m), m) == 0);
  CHECK(sine_dimension(variety_basis(HFunction::atom(h2, MultiIndex{1, 1}, lm)), m) == 2);
  CHECK(sine_dimension(variety_basis(HFunction::atom(h2, MultiIndex{1, 0}, lm)), m) == 1);
  const auto h1 = Hypergroup::chebyshev(1);
  const Point l1{q(2, 9)};
  CHECK(sine_dimension(variety_basis(HFunction::atom(h1, MultiIndex{2}, l1)), exponential(h1, l1)) == 1);
  CHECK_THROWS_AS(sine_dimension(variety_basis(m), exponential(h2, Point{q(1), q(1)})), UsageError);
  // The two sine generators are independent: at x = (0,1), y = (1,0).
  const auto s1 = HFunction::atom(h2, MultiIndex{1, 0}, lm);
  const auto s2 = HFunction::atom(h2, MultiIndex{0, 1}, lm);
  CHECK(evaluate(s1, MultiIndex{0, 1}) == q(0));
  CHECK_FALSE(evaluate(s2, MultiIndex{0, 1}) == q(0));
  CHECK_FALSE(evaluate(s1, MultiIndex{1, 0}) == q(0));
  CHECK(evaluate(s2, MultiIndex{1, 0}) == q(0));
}

TEST_CASE("decomposition") {
  const auto h = Hypergroup::chebyshev(2);
  const Point lm{q(3, 7), q(-5, 6)};
  const auto m = exponential(h, lm);
  const auto e = moment_span_decompose(m, lm);
  REQUIRE(e.atoms.size() == 1);
  CHECK(e.coefficients[0] == q(1));
  CHECK(e.residual == 0);

  const auto s = sine(h, std::vector<Scalar>{q(3), q(-5)}, lm);
  const auto d = moment_span_decompose(s, lm);
  REQUIRE(d.atoms.size() == 4);
  CHECK(d.residual == 0);
  CHECK(d.unique);
  for (std::size_t j = 0; j < d.atoms.size(); ++j) {
    if (d.atoms[j] == MultiIndex{1, 0}) CHECK(d.coefficients[j] == q(3));
    if (d.atoms[j] == MultiIndex{0, 1}) CHECK(d.coefficients[j] == q(-5));
    if (d.atoms[j].total() != 1) CHECK(d.coefficients[j] == q(0));
  }
  CHECK_THROWS_AS(moment_span_decompose(s, Point{q(1), q(1)}), UsageError);
}

TEST_CASE("a forced small box that cannot stabilize is inconclusive") {
  const auto h = Hypergroup::chebyshev(1);
  VarietyOptions o;
  o.box = 1;
  o.margin = 0;
  CHECK_THROWS_AS(variety_basis(HFunction::atom(h, MultiIndex{3}, Point{q(1, 5)}), o), InconclusiveError);
}

TEST_CASE("exponentials in a variety") {
  const auto h = Hypergroup::chebyshev(1);
  const Point a{q(1, 3)}, b{q(-2, 5)}, c{q(4, 7)};
  const auto v = variety_basis(exponential(h, a) + exponential(h, b));
  CHECK(v.dim == 2);
  const auto found = exponentials_in_variety(v, {a, b, c});
  REQUIRE(found.size() == 2);
  CHECK(found[0] == a);
  CHECK(found[1] == b);
  CHECK(exponentials_in_variety(variety_basis(exponential(h, a)), {a}) == std::vector<Point>{a});
}
