#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hypermoment/scalar.hpp"

namespace hypermoment {

// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::size_t rank(Matrix m);

struct LinearSolution {
  std::vector<Scalar> x;
  // False when the system has free variables; those are set to zero.
  bool unique = true;
};

// Solves A·x = b exactly. std::nullopt when the system is inconsistent.
std::optional<LinearSolution> solve(const Matrix& a, std::span<const Scalar> b);

// Row space built one vector at a time. Each stored row is reduced against
// its predecessors, so a query can be reduced in insertion order. Every
// stored row also remembers its expression in the inserted vectors, which
// turns membership into coordinates.
class RowBasis {
 public:
  explicit RowBasis(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }

  // Inserts v when it is independent of the current rows. Returns whether it
  // was inserted; dependent vectors leave the basis untouched.
  bool insert(std::span<const Scalar> v);

  // Coordinates of v with respect to the inserted vectors, or std::nullopt
  // when v lies outside their span.
  std::optional<std::vector<Scalar>> coordinates(std::span<const Scalar> v) const;

 private:
  struct Row {
    std::vector<Scalar> values;
    std::size_t pivot;
    // values = Σ combination[j]·(j-th inserted vector)
    std::vector<Scalar> combination;
  };

  // Reduces v in place; accumulates the multiples of stored rows removed.
  void reduce(std::vector<Scalar>& v, std::vector<Scalar>& removed) const;

  std::size_t width_;
  std::vector<Row> rows_;
};

}  // namespace hypermoment
