#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypermoment/hfunction.hpp"

namespace hypermoment {

enum class Mode { exact, floating };

struct SweepOptions {
  // x and y range over {0..box}^d.
  std::size_t box = 8;
  Mode mode = Mode::exact;
  // Relative tolerance for Mode::floating.
  double tolerance = 1e-9;
  std::size_t jobs = 1;
  std::uint64_t seed = 0;
  // Random y-tuples drawn by the degree check.
  std::size_t trials = 16;
};

struct Counterexample {
  std::string equation;
  MultiIndex x;
  std::vector<MultiIndex> ys;
  std::string lhs;
  std::string rhs;
};

struct EquationReport {
  std::string kind;
  Mode mode = Mode::exact;
  bool passed = true;
  // Number of (equation, x, y) instances evaluated.
  std::size_t checked = 0;
  // Largest relative residual; always 0 in exact mode.
  double max_residual = 0.0;
  std::optional<Counterexample> witness;
};

// m(x*y) = m(x)·m(y) and m(o) = 1.
EquationReport check_exponential(const HFunction& m, const SweepOptions& options);

// s(x*y) = s(x)·m(y) + s(y)·m(x).
EquationReport check_sine(const HFunction& s, const HFunction& m,
                          const SweepOptions& options);

// f_α(x*y) = Σ_{β≤α} C(α,β) f_β(x) f_{α-β}(y) for every member.
EquationReport check_moment(const MomentFamily& family, const SweepOptions& options);

// Δ_{m;y_1,…,y_{n+1}} * f vanishes on the box for `trials` random tuples.
EquationReport check_degree(const HFunction& f, const HFunction& m, std::size_t n,
                            const SweepOptions& options);

struct DegreeResult {
  // Smallest n ≤ n_max with Δ_{m;y_1..y_{n+1}} * f ≡ 0 for every tuple.
  std::optional<std::size_t> degree;
  // The vanishing at `degree` follows from the term structure: every term
  // sits at m's point and has order ≤ degree.
  bool symbolic_upper = false;
  // A degree-tuple on which the degree-fold difference is a nonzero
  // function; certifies that no smaller n works. Empty when degree is 0.
  std::vector<MultiIndex> lower_witness;
};

DegreeResult monomial_degree(const HFunction& f, const HFunction& m, std::size_t box,
                             std::size_t n_max, std::size_t trials,
                             std::uint64_t seed = 0);

}  // namespace hypermoment
