#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "hypermoment/hfunction.hpp"
#include "hypermoment/hypergroup.hpp"

namespace hypermoment {

// Evaluates atoms on a box by tabulating P_n^{(j)}(λ_i) per factor with the
// differentiated recurrence, so [∂^α Q_x](λ) = Π_i P_{x_i}^{(α_i)}(λ_i)
// becomes a product of table lookups. Not thread-safe; use one per thread.
class AtomEvaluator {
 public:
  // Supports elements with every coordinate ≤ n_max.
  AtomEvaluator(Hypergroup base, std::size_t n_max)
      : base_(std::move(base)), n_max_(n_max) {}

  std::size_t n_max() const { return n_max_; }

  Scalar operator()(const Atom& atom, const MultiIndex& x);
  Scalar operator()(const HFunction& f, const MultiIndex& x);

 private:
  const std::vector<std::vector<Scalar>>& table(std::size_t factor,
                                                const Scalar& point,
                                                std::size_t order);

  Hypergroup base_;
  std::size_t n_max_;
  std::map<std::pair<std::size_t, Scalar>, std::vector<std::vector<Scalar>>> tables_;
};

// Floating counterpart used by the tolerance-based sweeps.
class FloatAtomEvaluator {
 public:
  FloatAtomEvaluator(Hypergroup base, std::size_t n_max)
      : base_(std::move(base)), n_max_(n_max) {}

  std::complex<double> operator()(const Atom& atom, const MultiIndex& x);
  std::complex<double> operator()(const HFunction& f, const MultiIndex& x);

 private:
  Hypergroup base_;
  std::size_t n_max_;
  std::map<std::pair<std::size_t, Scalar>, std::vector<std::vector<std::complex<double>>>>
      tables_;
};

}  // namespace hypermoment
