#include <doctest.h>

#include <algorithm>

#include "hypermoment/multi_index.hpp"

using namespace hypermoment;

TEST_CASE("basic multi-index algebra") {
  const MultiIndex a{2, 1}, b{1, 1};
  CHECK(a.total() == 3);
  CHECK(b.componentwise_le(a));
  CHECK_FALSE(a.componentwise_le(b));
  CHECK(a - b == MultiIndex{1, 0});
  CHECK_THROWS(b - a);
  CHECK(a + b == MultiIndex{3, 2});
  CHECK(concat(a, MultiIndex{5}) == MultiIndex{2, 1, 5});
  CHECK(MultiIndex::unit(3, 1) == MultiIndex{0, 1, 0});
  CHECK(to_string(a) == "(2,1)");
}

TEST_CASE("graded lexicographic order") {
  CHECK(MultiIndex{0, 2} > MultiIndex{1, 0});
  CHECK(MultiIndex{2, 0} > MultiIndex{1, 1});
  CHECK(MultiIndex{1, 1} > MultiIndex{0, 2});
  const auto s = simplex(2, 2);
  CHECK(std::is_sorted(s.begin(), s.end()));
  CHECK(s.size() == 6);
  CHECK(s.front() == MultiIndex{0, 0});
}

TEST_CASE("binomials and factorials") {
  CHECK(binomial(MultiIndex{4, 2}, MultiIndex{2, 1}) == 12);
  CHECK(binomial(MultiIndex{1, 2}, MultiIndex{2, 0}) == 0);
  CHECK(factorial(MultiIndex{3, 2}) == 12);
}

TEST_CASE("lower sets and cubes") {
  const auto l = lower_set(MultiIndex{2, 1});
  CHECK(l.size() == 6);
  CHECK(std::is_sorted(l.begin(), l.end()));
  for (const auto& b : l) CHECK(b.componentwise_le(MultiIndex{2, 1}));

  const auto c = cube(2, 3);
  CHECK(c.size() == 16);
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(cube_offset(c[i], 4) == i);
  CHECK(c[1] == MultiIndex{0, 1});
  CHECK(cube(3, 0).size() == 1);
}
