#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hypermoment/hypergroup.hpp"
#include "hypermoment/measure.hpp"

namespace hypermoment {

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  // First failure, or a note on how the check was sampled.
  std::string detail;
};

struct AxiomReport {
  std::size_t box = 0;
  std::vector<AxiomCheck> checks;

  bool passed() const;
  const AxiomCheck* find(std::string_view name) const;
};

struct AxiomOptions {
  // Associativity is exhaustive over the box when it has at most this many
  // triples and sampled with `seed` otherwise.
  std::size_t associativity_limit = 20000;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
};

// Checks, in this order, on the box {0..box}^d:
//   degree-basis   Q_x has total degree |x| and leading monomial z^x, |x| ≤ box
//   normalization  Q_x(1,…,1) = 1, Q_o = 1
//   nonnegativity  c(x,y,w) ≥ 0
//   mass           Σ_w c(x,y,w) = 1
//   support        w_i ∈ [|x_i - y_i|, x_i + y_i]
//   identity       δ_o * δ_x = δ_x
//   commutativity  δ_x * δ_y = δ_y * δ_x
//   associativity  (δ_x * δ_y) * δ_z = δ_x * (δ_y * δ_z)
//   closed-form    Chebyshev hypergroups only: the product of
//                  ½(δ_|k-m| + δ_{k+m}) over the coordinates
// Failures become report entries; nothing throws on a failed check.
AxiomReport verify_axioms(const Hypergroup& h, std::size_t box,
                          const AxiomOptions& options = {});

// Π_i ½(δ_{|x_i - y_i|} + δ_{x_i + y_i}), with coinciding points merged.
Measure chebyshev_convolution(const Hypergroup& h, const MultiIndex& x,
                              const MultiIndex& y);

bool is_chebyshev(const Hypergroup& h);

}  // namespace hypermoment
