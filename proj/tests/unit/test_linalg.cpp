#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "hypermoment/linalg.hpp"

using namespace hypermoment;
using testing::q;

TEST_CASE("rank") {
  Matrix m(3, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
  m(2, 0) = q(1, 2); m(2, 1) = 0; m(2, 2) = 1;
  CHECK(rank(m) == 2);
  CHECK(rank(Matrix(2, 5)) == 0);
}

TEST_CASE("exact solve") {
  Matrix a(2, 2);
  a(0, 0) = 2; a(0, 1) = 1;
  a(1, 0) = 1; a(1, 1) = 3;
  const std::vector<Scalar> b{q(3), q(4)};
  const auto s = solve(a, b);
  REQUIRE(s);
  CHECK(s->unique);
  CHECK(s->x[0] == q(1));
  CHECK(s->x[1] == q(1));

  Matrix singular(2, 2);
  singular(0, 0) = 1; singular(0, 1) = 1;
  singular(1, 0) = 2; singular(1, 1) = 2;
  CHECK_FALSE(solve(singular, std::vector<Scalar>{q(1), q(3)}));
  const auto free = solve(singular, std::vector<Scalar>{q(1), q(2)});
  REQUIRE(free);
  CHECK_FALSE(free->unique);
  CHECK(free->x[0] + free->x[1] == q(1));
}

TEST_CASE("row basis membership") {
  RowBasis basis(3);
  CHECK(basis.insert(std::vector<Scalar>{q(1), q(0), q(1)}));
  CHECK(basis.insert(std::vector<Scalar>{q(0), q(1), q(1)}));
  CHECK_FALSE(basis.insert(std::vector<Scalar>{q(2), q(3), q(5)}));
  CHECK(basis.rank() == 2);
  const auto c = basis.coordinates(std::vector<Scalar>{q(2), q(-1), q(1)});
  REQUIRE(c);
  CHECK((*c)[0] == q(2));
  CHECK((*c)[1] == q(-1));
  CHECK_FALSE(basis.coordinates(std::vector<Scalar>{q(0), q(0), q(1)}));
}
