#pragma once

#include <complex>
#include <cstdint>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "hypermoment/recurrence.hpp"
#include "hypermoment/scalar.hpp"

namespace hypermoment::detail {

// c(k, l, n) for lo ≤ n < lo + coeffs.size(); zero elsewhere.
struct LinearizationRow {
  std::size_t lo = 0;
  std::vector<Rational> coeffs;
  // Same row over a common denominator: coeffs[i] = numerators[i]/denominator.
  Integer denominator = 1;
  std::vector<Integer> numerators;
  // Positions i with coeffs[i] != 0.
  std::vector<std::uint32_t> nonzero;
};

// One orthogonal family P_n generated by a three-term recurrence, with
// lazily filled caches for the polynomials and their linearization rows.
// Caches are guarded by a mutex; every entry is computed at most once.
class UnivariateFamily {
 public:
  explicit UnivariateFamily(Recurrence1D recurrence)
      : recurrence_(std::move(recurrence)) {}

  const Recurrence1D& recurrence() const { return recurrence_; }

  // Dense coefficients of P_n, constant term first.
  std::shared_ptr<const std::vector<Rational>> poly(std::size_t n) const;

  // Coefficients of P_k·P_l in the basis (P_n), computed through the
  // recurrence rather than by polynomial multiplication. No sign check.
  std::shared_ptr<const LinearizationRow> linearization(std::size_t k,
                                                        std::size_t l) const;

  // table[n][j] = P_n^{(j)}(point) for n ≤ n_max, j ≤ order.
  std::vector<std::vector<Scalar>> derivative_table(const Scalar& point,
                                                    std::size_t n_max,
                                                    std::size_t order) const;
  std::vector<std::vector<std::complex<double>>> derivative_table(
      std::complex<double> point, std::size_t n_max, std::size_t order) const;

 private:
  void extend_polys(std::size_t n) const;

  Recurrence1D recurrence_;
  mutable std::mutex mutex_;
  mutable std::vector<std::shared_ptr<const std::vector<Rational>>> polys_;
  mutable std::map<std::pair<std::size_t, std::size_t>,
                   std::shared_ptr<const LinearizationRow>>
      rows_;
};

}  // namespace hypermoment::detail
