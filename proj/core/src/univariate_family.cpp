#include "hypermoment/detail/univariate_family.hpp"

namespace hypermoment::detail {

namespace {

// x·Σ_n v_n P_n = Σ_n v_n (a_n P_{n+1} + b_n P_n + c_n P_{n-1}).
std::vector<Rational> multiply_by_x(const Recurrence1D& r,
                                    const std::vector<Rational>& v) {
  std::vector<Rational> out(v.size() + 1);
  for (std::size_t n = 0; n < v.size(); ++n) {
    if (sgn(v[n]) == 0) continue;
    out[n + 1] += v[n] * r.a(n);
    out[n] += v[n] * r.b(n);
    if (n > 0) out[n - 1] += v[n] * r.c(n);
  }
  return out;
}

std::shared_ptr<const LinearizationRow> make_row(const std::vector<Rational>& dense) {
  auto row = std::make_shared<LinearizationRow>();
  std::size_t lo = 0;
  std::size_t hi = dense.size();
  while (lo < hi && sgn(dense[lo]) == 0) ++lo;
  while (hi > lo && sgn(dense[hi - 1]) == 0) --hi;
  row->lo = lo;
  row->coeffs.assign(dense.begin() + lo, dense.begin() + hi);
  for (const auto& q : row->coeffs) {
    mpz_lcm(row->denominator.get_mpz_t(), row->denominator.get_mpz_t(),
            q.get_den_mpz_t());
  }
  row->numerators.reserve(row->coeffs.size());
  for (const auto& q : row->coeffs) {
    row->numerators.push_back(q.get_num() * (row->denominator / q.get_den()));
  }
  for (std::size_t i = 0; i < row->coeffs.size(); ++i) {
    if (sgn(row->coeffs[i]) != 0) row->nonzero.push_back(static_cast<std::uint32_t>(i));
  }
  return row;
}

}  // namespace

void UnivariateFamily::extend_polys(std::size_t n) const {
  if (polys_.empty()) {
    polys_.push_back(std::make_shared<const std::vector<Rational>>(1, Rational(1)));
  }
  while (polys_.size() <= n) {
    // P_{m+1} = ((x - b_m) P_m - c_m P_{m-1}) / a_m
    const std::size_t m = polys_.size() - 1;
    const auto& pm = *polys_[m];
    std::vector<Rational> next(pm.size() + 1);
    for (std::size_t i = 0; i < pm.size(); ++i) {
      next[i + 1] += pm[i];
      next[i] -= recurrence_.b(m) * pm[i];
    }
    if (m > 0) {
      const auto& prev = *polys_[m - 1];
      for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= recurrence_.c(m) * prev[i];
    }
    const Rational inv = 1 / recurrence_.a(m);
    for (auto& q : next) q *= inv;
    polys_.push_back(std::make_shared<const std::vector<Rational>>(std::move(next)));
  }
}

std::shared_ptr<const std::vector<Rational>> UnivariateFamily::poly(std::size_t n) const {
  std::lock_guard lock(mutex_);
  extend_polys(n);
  return polys_[n];
}

std::shared_ptr<const LinearizationRow> UnivariateFamily::linearization(
    std::size_t k, std::size_t l) const {
  std::lock_guard lock(mutex_);
  if (auto it = rows_.find({k, l}); it != rows_.end()) return it->second;

  // Walk up in k with l fixed:
  //   P_{j+1} P_l = (x·(P_j P_l) - b_j P_j P_l - c_j P_{j-1} P_l) / a_j.
  // Resume from the highest cached pair below k.
  std::size_t j = 0;
  std::vector<Rational> prev;     // P_{j-1} P_l
  std::vector<Rational> current;  // P_j P_l
  auto dense = [](const LinearizationRow& row) {
    std::vector<Rational> v(row.lo + row.coeffs.size());
    for (std::size_t i = 0; i < row.coeffs.size(); ++i) v[row.lo + i] = row.coeffs[i];
    return v;
  };
  for (std::size_t s = k; s >= 1; --s) {
    auto hi = rows_.find({s, l});
    auto lo = rows_.find({s - 1, l});
    if (hi != rows_.end() && lo != rows_.end()) {
      j = s;
      current = dense(*hi->second);
      prev = dense(*lo->second);
      break;
    }
  }
  if (j == 0) {
    current.assign(l + 1, Rational(0));
    current[l] = 1;
    rows_.emplace(std::pair{std::size_t{0}, l}, make_row(current));
  }
  while (j < k) {
    std::vector<Rational> next = multiply_by_x(recurrence_, current);
    for (std::size_t n = 0; n < current.size(); ++n) {
      next[n] -= recurrence_.b(j) * current[n];
    }
    if (j > 0) {
      for (std::size_t n = 0; n < prev.size(); ++n) next[n] -= recurrence_.c(j) * prev[n];
    }
    const Rational inv = 1 / recurrence_.a(j);
    for (auto& q : next) q *= inv;
    prev = std::move(current);
    current = std::move(next);
    ++j;
    rows_.emplace(std::pair{j, l}, make_row(current));
  }
  return rows_.at({k, l});
}

namespace {

template <typename T, typename Coeff>
std::vector<std::vector<T>> derivative_table_impl(const Recurrence1D& r, const T& point,
                                                  std::size_t n_max, std::size_t order,
                                                  Coeff coeff) {
  // Differentiating the recurrence j times:
  //   a_n P_{n+1}^{(j)} = (x - b_n) P_n^{(j)} + j P_n^{(j-1)} - c_n P_{n-1}^{(j)}.
  std::vector<std::vector<T>> table(n_max + 1, std::vector<T>(order + 1, T(0)));
  table[0][0] = T(1);
  for (std::size_t n = 0; n < n_max; ++n) {
    const T a = coeff(r.a(n));
    const T b = coeff(r.b(n));
    const T c = coeff(r.c(n));
    for (std::size_t j = 0; j <= order; ++j) {
      T v = (point - b) * table[n][j];
      if (j > 0) v += T(static_cast<long>(j)) * table[n][j - 1];
      if (n > 0) v -= c * table[n - 1][j];
      table[n + 1][j] = v / a;
    }
  }
  return table;
}

}  // namespace

std::vector<std::vector<Scalar>> UnivariateFamily::derivative_table(
    const Scalar& point, std::size_t n_max, std::size_t order) const {
  return derivative_table_impl<Scalar>(recurrence_, point, n_max, order,
                                       [](const Rational& q) { return Scalar(q); });
}

std::vector<std::vector<std::complex<double>>> UnivariateFamily::derivative_table(
    std::complex<double> point, std::size_t n_max, std::size_t order) const {
  return derivative_table_impl<std::complex<double>>(
      recurrence_, point, n_max, order,
      [](const Rational& q) { return std::complex<double>(q.get_d(), 0.0); });
}

}  // namespace hypermoment::detail
