#include <doctest.h>

#include "hypermoment/axioms.hpp"
#include "hypermoment/errors.hpp"
#include "hypermoment/measure.hpp"
#include "hypermoment/recurrence.hpp"

using namespace hypermoment;

TEST_CASE("chebyshev passes every check") {
  const auto r1 = verify_axioms(Hypergroup::chebyshev(1), 12);
  CHECK(r1.passed());
  REQUIRE(r1.find("closed-form"));
  CHECK(r1.find("associativity")->checked == 13 * 13 * 13);
  const auto r2 = verify_axioms(Hypergroup::chebyshev(2), 5);
  CHECK(r2.passed());
  CHECK(r2.checks.size() == 9);
}

TEST_CASE("associativity falls back to sampling") {
  AxiomOptions options;
  options.associativity_limit = 100;
  options.seed = 7;
  const auto r = verify_axioms(Hypergroup::chebyshev(1), 8, options);
  CHECK(r.find("associativity")->checked == 100);
  CHECK(r.find("associativity")->detail.find("sampled") != std::string::npos);
}

TEST_CASE("non-chebyshev families skip the closed form") {
  using V = std::vector<Rational>;
  const Recurrence1D r(V{1}, V{0}, V{0}, Recurrence1D::Tail{Rational(3, 5), 0, Rational(2, 5), 1});
  const auto report = verify_axioms(Hypergroup::from_recurrence(r, 6), 6);
  CHECK(report.passed());
  CHECK(report.find("closed-form") == nullptr);
}

TEST_CASE("negative coefficients become report entries") {
  using V = std::vector<Rational>;
  const Recurrence1D r(V{1, Rational(9, 10)}, V{0, Rational(-1, 5)}, V{0, Rational(3, 10)},
                       Recurrence1D::Tail{Rational(1, 2), 0, Rational(1, 2), 2});
  // Certification on a zero box only touches the identity product.
  const auto h = Hypergroup::from_recurrence(r, 0);
  const auto report = verify_axioms(h, 3);
  CHECK_FALSE(report.passed());
  const auto* check = report.find("nonnegativity");
  REQUIRE(check);
  CHECK_FALSE(check->passed);
  CHECK(check->detail.find("-1/5") != std::string::npos);
  CHECK(report.find("mass")->passed);
}

TEST_CASE("chebyshev_convolution merges coinciding points") {
  const auto h = Hypergroup::chebyshev(2);
  const auto mu = chebyshev_convolution(h, MultiIndex{2, 0}, MultiIndex{2, 3});
  CHECK(mu.weight(MultiIndex{0, 3}) == Scalar(Rational(1, 2)));
  CHECK(mu.weight(MultiIndex{4, 3}) == Scalar(Rational(1, 2)));
  CHECK(mu.support_size() == 2);
}
