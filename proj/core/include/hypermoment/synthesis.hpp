#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "hypermoment/hfunction.hpp"
#include "hypermoment/linalg.hpp"

namespace hypermoment {

// Translate span of a seed function, sampled on {0..box}^d.
struct Variety {
  Hypergroup base;
  std::size_t box = 0;
  // y for each generator translate(seed, y), after dropping symbolic duplicates.
  std::vector<MultiIndex> shifts;
  std::vector<HFunction> generators;
  // Generators kept by the exact rank scan, in scan order.
  std::vector<HFunction> basis;
  std::size_t dim = 0;
  // Rank of the generators in atom coordinates.
  std::size_t symbolic_dim = 0;
  // Sampled rank agreed at box and box + margin, and with symbolic_dim.
  bool stable = false;
  // Row space of the sampled basis values.
  std::shared_ptr<const RowBasis> sampled;
};

struct VarietyOptions {
  // Initial box; std::nullopt selects 4·(closure atom count) + 4.
  std::optional<std::size_t> box;
  std::size_t margin = 4;
};

// τ(f) through translates by every y with |y|∞ ≤ max order + 1. The box
// doubles once if the rank moves between box and box + margin; after that
// InconclusiveError.
Variety variety_basis(const HFunction& f, const VarietyOptions& options = {});

struct Membership {
  bool member = false;
  // Coefficients over V.basis when member.
  std::vector<Scalar> coefficients;
};

// Exact solve against the sampled basis, confirmed symbolically.
Membership contains(const Variety& v, const HFunction& g);

// dim of { s ∈ V : s(x*y) = s(x)m(y) + s(y)m(x) }. The equation is imposed
// on atom-tensor coefficients, which are linearly independent as functions
// of (x, y). Throws UsageError when m is not an exponential in V.
std::size_t sine_dimension(const Variety& v, const HFunction& m);

struct Decomposition {
  HFunction seed;
  Point point;
  // Orders β ≤ cap in graded-lex order; atom j is [∂^β Q_·](point).
  std::vector<MultiIndex> atoms;
  std::vector<Scalar> coefficients;
  // Whether f_β lies in τ(seed).
  std::vector<bool> in_variety;
  // ‖seed − Σ c_j f_{β_j}‖ summed over term coefficients; 0 on success.
  Rational residual;
  // False when the sampled system left free variables (set to zero).
  bool unique = true;
  Variety variety;
};

// Writes f, whose terms all sit at lambda, over the moment functions
// f_β = [∂^β Q_·](λ) with β up to the per-coordinate maximum term order.
Decomposition moment_span_decompose(const HFunction& f, const Point& lambda,
                                    const VarietyOptions& options = {});

// Candidates λ' with exponential(λ') ∈ V, in input order.
std::vector<Point> exponentials_in_variety(const Variety& v,
                                           const std::vector<Point>& candidates);

}  // namespace hypermoment
