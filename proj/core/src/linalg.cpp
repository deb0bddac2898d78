#include "hypermoment/linalg.hpp"

#include <utility>

#include "hypermoment/errors.hpp"

namespace hypermoment {

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t pivot_limit) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_limit && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    }
    const Scalar inv = Scalar(1) / m(r, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar f = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (!m(r, k).is_zero()) m(i, k) -= f * m(r, k);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix m) { return rref(m, m.cols()).size(); }

std::optional<LinearSolution> solve(const Matrix& a, std::span<const Scalar> b) {
  if (b.size() != a.rows()) {
    throw UsageError("right-hand side length does not match matrix rows");
  }
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = rref(aug, a.cols());
  for (std::size_t i = pivots.size(); i < aug.rows(); ++i) {
    if (!aug(i, a.cols()).is_zero()) return std::nullopt;
  }
  LinearSolution sol;
  sol.x.assign(a.cols(), Scalar());
  sol.unique = pivots.size() == a.cols();
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    sol.x[pivots[i]] = aug(i, a.cols());
  }
  return sol;
}

void RowBasis::reduce(std::vector<Scalar>& v, std::vector<Scalar>& removed) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Row& row = rows_[r];
    if (v[row.pivot].is_zero()) continue;
    const Scalar f = v[row.pivot] / row.values[row.pivot];
    for (std::size_t k = 0; k < width_; ++k) {
      if (!row.values[k].is_zero()) v[k] -= f * row.values[k];
    }
    for (std::size_t j = 0; j < row.combination.size(); ++j) {
      if (!row.combination[j].is_zero()) removed[j] += f * row.combination[j];
    }
  }
}

bool RowBasis::insert(std::span<const Scalar> v) {
  if (v.size() != width_) throw UsageError("row width mismatch");
  std::vector<Scalar> work(v.begin(), v.end());
  const std::size_t index = rows_.size();
  std::vector<Scalar> removed(index + 1);
  reduce(work, removed);
  std::size_t pivot = 0;
  while (pivot < width_ && work[pivot].is_zero()) ++pivot;
  if (pivot == width_) return false;
  // work = v - Σ removed_j·row_j, with row_j expressed through inserted vectors.
  std::vector<Scalar> combination(index + 1);
  for (std::size_t j = 0; j < index; ++j) combination[j] = -removed[j];
  combination[index] = 1;
  for (auto& row : rows_) row.combination.resize(index + 1);
  rows_.push_back({std::move(work), pivot, std::move(combination)});
  return true;
}

std::optional<std::vector<Scalar>> RowBasis::coordinates(
    std::span<const Scalar> v) const {
  if (v.size() != width_) throw UsageError("row width mismatch");
  std::vector<Scalar> work(v.begin(), v.end());
  std::vector<Scalar> removed(rows_.size());
  reduce(work, removed);
  for (const auto& x : work) {
    if (!x.is_zero()) return std::nullopt;
  }
  return removed;
}

}  // namespace hypermoment
