#include <doctest.h>

#include "hypermoment/errors.hpp"
#include "hypermoment/recurrence.hpp"

using namespace hypermoment;

TEST_CASE("chebyshev recurrence") {
  const auto r = Recurrence1D::chebyshev();
  CHECK(r.a(0) == 1);
  CHECK(r.c(0) == 0);
  CHECK(r.a(7) == Rational(1, 2));
  CHECK(r.b(7) == 0);
  CHECK(r.c(1000) == Rational(1, 2));
  CHECK_FALSE(r.last_index());
}

TEST_CASE("validation") {
  using V = std::vector<Rational>;
  CHECK_THROWS_AS(Recurrence1D(V{1, 0}, V{0, 1}, V{0, 0}), UsageError);            // a_1 = 0
  CHECK_THROWS_AS(Recurrence1D(V{1, Rational(1, 2)}, V{0, 0}, V{0, 0}), UsageError);  // sum != 1
  CHECK_THROWS_AS(Recurrence1D(V{Rational(1, 2)}, V{0}, V{Rational(1, 2)}), UsageError);  // c_0 != 0
  CHECK_THROWS_AS(Recurrence1D(V{1}, V{0}, V{0, 0}), UsageError);  // lengths differ
  CHECK_THROWS_AS(Recurrence1D(V{1}, V{0}, V{0},
                               Recurrence1D::Tail{Rational(1, 2), 0, Rational(1, 2), 3}),
                  UsageError);  // gap between prefix and tail

  const Recurrence1D finite(V{1, Rational(1, 2)}, V{0, 0}, V{0, Rational(1, 2)});
  CHECK(finite.last_index() == 1u);
  CHECK_THROWS_AS(finite.a(2), UsageError);
}
