#include "hypermoment/equations.hpp"

#include <algorithm>
#include <complex>

#include "hypermoment/errors.hpp"
#include "hypermoment/evaluator.hpp"
#include "hypermoment/measure.hpp"
#include "hypermoment/parallel.hpp"
#include "hypermoment/random.hpp"

namespace hypermoment {

namespace {

// lhs(x*y) = Σ coeff·left(x)·right(y), tables indexed into a function list.
struct FunctionalEquation {
  std::string label;
  std::size_t lhs;
  struct Product {
    Integer coeff;
    std::size_t left;
    std::size_t right;
  };
  std::vector<Product> rhs;
};

// Per-factor linearization rows for k, l ≤ box.
struct FactorRows {
  std::size_t width;
  std::vector<std::shared_ptr<const detail::LinearizationRow>> rows;
  const detail::LinearizationRow& at(std::size_t k, std::size_t l) const {
    return *rows[k * width + l];
  }
};

std::vector<FactorRows> collect_rows(const Hypergroup& h, std::size_t box) {
  std::vector<FactorRows> out;
  for (std::size_t i = 0; i < h.factor_count(); ++i) {
    FactorRows fr{box + 1, {}};
    for (std::size_t k = 0; k <= box; ++k)
      for (std::size_t l = 0; l <= box; ++l) fr.rows.push_back(h.factor(i).linearization(k, l));
    out.push_back(std::move(fr));
  }
  return out;
}

// Visits the support of δ_x * δ_y as offsets in the side^d cube. Before
// each visit at[i] holds the factor row position of coordinate i.
template <typename Visit>
void for_each_support(const std::vector<FactorRows>& rows, const MultiIndex& x,
                      const MultiIndex& y, std::size_t side, std::vector<std::size_t>& pos,
                      std::vector<std::size_t>& at,
                      std::vector<const detail::LinearizationRow*>& current, Visit visit) {
  const std::size_t d = rows.size();
  for (std::size_t i = 0; i < d; ++i) {
    current[i] = &rows[i].at(x[i], y[i]);
    if (current[i]->nonzero.empty()) return;
    pos[i] = 0;
  }
  while (true) {
    std::size_t offset = 0;
    for (std::size_t i = 0; i < d; ++i) {
      at[i] = current[i]->nonzero[pos[i]];
      offset = offset * side + current[i]->lo + at[i];
    }
    visit(offset);
    std::size_t i = d;
    while (true) {
      if (i == 0) return;
      --i;
      if (++pos[i] < current[i]->nonzero.size()) break;
      pos[i] = 0;
    }
  }
}

struct ChunkResult {
  std::size_t checked = 0;
  double max_residual = 0.0;
  std::optional<Counterexample> witness;
};

std::string exact_value_of(const std::vector<HFunction>& functions, AtomEvaluator& eval,
                           const FunctionalEquation& eq, const MultiIndex& x,
                           const MultiIndex& y, bool left_side) {
  const Hypergroup& h = functions.front().base();
  if (left_side) {
    Scalar v;
    const Measure xy = h.linearization_unchecked(x, y);
    for (const auto& [w, c] : xy.weights()) {
      v += c * eval(functions[eq.lhs], w);
    }
    return to_string(v);
  }
  Scalar v;
  for (const auto& p : eq.rhs) {
    v += Scalar(Rational(p.coeff)) * eval(functions[p.left], x) * eval(functions[p.right], y);
  }
  return to_string(v);
}

EquationReport sweep_exact(const std::vector<HFunction>& functions,
                           const std::vector<FunctionalEquation>& equations,
                           const SweepOptions& options, std::string kind) {
  const Hypergroup& h = functions.front().base();
  const std::size_t d = h.dimension();
  const std::size_t box = options.box;
  const std::size_t side = 2 * box + 1;
  const auto points = cube(d, side - 1);
  const auto elements = cube(d, box);

  // Values over a common denominator L: value = table/L.
  AtomEvaluator eval(h, side - 1);
  std::vector<std::vector<Scalar>> values(functions.size());
  bool real = true;
  Integer common = 1;
  for (std::size_t f = 0; f < functions.size(); ++f) {
    values[f].reserve(points.size());
    for (const auto& w : points) {
      Scalar v = eval(functions[f], w);
      mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), v.re().get_den_mpz_t());
      if (!v.is_real()) {
        real = false;
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), v.im().get_den_mpz_t());
      }
      values[f].push_back(std::move(v));
    }
  }
  std::vector<std::vector<Integer>> re(functions.size()), im(functions.size());
  for (std::size_t f = 0; f < functions.size(); ++f) {
    re[f].reserve(points.size());
    for (const auto& v : values[f]) {
      re[f].push_back(v.re().get_num() * (common / v.re().get_den()));
      if (!real) im[f].push_back(v.im().get_num() * (common / v.im().get_den()));
    }
  }
  values.clear();

  const auto rows = collect_rows(h, box);
  std::vector<std::size_t> element_offset(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    element_offset[i] = cube_offset(elements[i], side);
  }

  auto chunks = parallel_chunks(elements.size(), options.jobs, [&](std::size_t begin,
                                                                   std::size_t end) {
    ChunkResult local;
    std::vector<std::size_t> pos(d), at(d);
    std::vector<const detail::LinearizationRow*> current(d);
    std::vector<std::size_t> support;
    std::vector<Integer> nums;
    Integer den, num, lhs_re, lhs_im, rhs_re, rhs_im, t1, t2;
    for (std::size_t a = begin; a < end && !local.witness; ++a) {
      const MultiIndex& x = elements[a];
      const std::size_t xo = element_offset[a];
      for (std::size_t b = 0; b < elements.size() && !local.witness; ++b) {
        const MultiIndex& y = elements[b];
        const std::size_t yo = element_offset[b];
        support.clear();
        std::size_t n_terms = 0;
        for_each_support(rows, x, y, side, pos, at, current, [&](std::size_t offset) {
          if (nums.size() <= n_terms) nums.emplace_back();
          num = 1;
          for (std::size_t i = 0; i < d; ++i) num *= current[i]->numerators[at[i]];
          nums[n_terms++] = num;
          support.push_back(offset);
        });
        den = 1;
        for (std::size_t i = 0; i < d; ++i) den *= current[i]->denominator;

        for (const auto& eq : equations) {
          ++local.checked;
          lhs_re = 0;
          lhs_im = 0;
          for (std::size_t t = 0; t < n_terms; ++t) {
            mpz_addmul(lhs_re.get_mpz_t(), nums[t].get_mpz_t(), re[eq.lhs][support[t]].get_mpz_t());
            if (!real) {
              mpz_addmul(lhs_im.get_mpz_t(), nums[t].get_mpz_t(),
                         im[eq.lhs][support[t]].get_mpz_t());
            }
          }
          lhs_re *= common;
          if (!real) lhs_im *= common;
          rhs_re = 0;
          rhs_im = 0;
          for (const auto& p : eq.rhs) {
            const auto& lr = re[p.left][xo];
            const auto& rr = re[p.right][yo];
            if (real) {
              t1 = lr * rr;
              mpz_addmul(rhs_re.get_mpz_t(), p.coeff.get_mpz_t(), t1.get_mpz_t());
            } else {
              const auto& li = im[p.left][xo];
              const auto& ri = im[p.right][yo];
              t1 = lr * rr - li * ri;
              t2 = lr * ri + li * rr;
              mpz_addmul(rhs_re.get_mpz_t(), p.coeff.get_mpz_t(), t1.get_mpz_t());
              mpz_addmul(rhs_im.get_mpz_t(), p.coeff.get_mpz_t(), t2.get_mpz_t());
            }
          }
          rhs_re *= den;
          if (!real) rhs_im *= den;
          if (lhs_re != rhs_re || (!real && lhs_im != rhs_im)) {
            AtomEvaluator witness_eval(h, side - 1);
            local.witness = Counterexample{eq.label, x, {y},
                                           exact_value_of(functions, witness_eval, eq, x, y, true),
                                           exact_value_of(functions, witness_eval, eq, x, y, false)};
            break;
          }
        }
      }
    }
    return local;
  });

  EquationReport report;
  report.kind = std::move(kind);
  report.mode = Mode::exact;
  for (auto& c : chunks) {
    report.checked += c.checked;
    if (c.witness && !report.witness) report.witness = std::move(c.witness);
  }
  report.passed = !report.witness;
  return report;
}

EquationReport sweep_float(const std::vector<HFunction>& functions,
                           const std::vector<FunctionalEquation>& equations,
                           const SweepOptions& options, std::string kind) {
  const Hypergroup& h = functions.front().base();
  const std::size_t d = h.dimension();
  const std::size_t box = options.box;
  const std::size_t side = 2 * box + 1;
  const auto points = cube(d, side - 1);
  const auto elements = cube(d, box);

  FloatAtomEvaluator eval(h, side - 1);
  std::vector<std::vector<std::complex<double>>> values(functions.size());
  for (std::size_t f = 0; f < functions.size(); ++f) {
    for (const auto& w : points) values[f].push_back(eval(functions[f], w));
  }
  const auto rows = collect_rows(h, box);

  auto chunks = parallel_chunks(elements.size(), options.jobs, [&](std::size_t begin,
                                                                   std::size_t end) {
    ChunkResult local;
    std::vector<std::size_t> pos(d), at(d);
    std::vector<const detail::LinearizationRow*> current(d);
    std::vector<std::pair<std::size_t, double>> support;
    for (std::size_t a = begin; a < end; ++a) {
      const MultiIndex& x = elements[a];
      const std::size_t xo = cube_offset(x, side);
      for (const auto& y : elements) {
        const std::size_t yo = cube_offset(y, side);
        support.clear();
        for_each_support(rows, x, y, side, pos, at, current, [&](std::size_t offset) {
          double weight = 1.0;
          for (std::size_t i = 0; i < d; ++i) weight *= current[i]->coeffs[at[i]].get_d();
          support.emplace_back(offset, weight);
        });
        for (const auto& eq : equations) {
          ++local.checked;
          std::complex<double> lhs = 0.0, rhs = 0.0;
          for (const auto& [offset, weight] : support) lhs += weight * values[eq.lhs][offset];
          for (const auto& p : eq.rhs) {
            rhs += p.coeff.get_d() * values[p.left][xo] * values[p.right][yo];
          }
          const double r = relative_residual(lhs, rhs);
          local.max_residual = std::max(local.max_residual, r);
          if (r > options.tolerance && !local.witness) {
            auto fmt = [](std::complex<double> z) {
              return std::to_string(z.real()) + (z.imag() < 0 ? "-" : "+") +
                     std::to_string(std::abs(z.imag())) + "i";
            };
            local.witness = Counterexample{eq.label, x, {y}, fmt(lhs), fmt(rhs)};
          }
        }
      }
    }
    return local;
  });

  EquationReport report;
  report.kind = std::move(kind);
  report.mode = Mode::floating;
  for (auto& c : chunks) {
    report.checked += c.checked;
    report.max_residual = std::max(report.max_residual, c.max_residual);
    if (c.witness && !report.witness) report.witness = std::move(c.witness);
  }
  report.passed = !report.witness;
  return report;
}

EquationReport sweep(const std::vector<HFunction>& functions,
                     const std::vector<FunctionalEquation>& equations,
                     const SweepOptions& options, std::string kind) {
  for (const auto& f : functions) {
    if (!(f.base() == functions.front().base())) {
      throw UsageError("functions live on different hypergroups");
    }
  }
  if (options.mode == Mode::floating) {
    if (!(options.tolerance > 0)) throw UsageError("floating mode needs a positive tolerance");
    return sweep_float(functions, equations, options, std::move(kind));
  }
  return sweep_exact(functions, equations, options, std::move(kind));
}

}  // namespace

EquationReport check_exponential(const HFunction& m, const SweepOptions& options) {
  auto report = sweep({m}, {{"m", 0, {{Integer(1), 0, 0}}}}, options, "exponential");
  const MultiIndex o = m.base().identity();
  const Scalar at_identity = evaluate(m, o);
  ++report.checked;
  if (at_identity != Scalar(1) && !report.witness) {
    report.passed = false;
    report.witness = Counterexample{"m(o) = 1", o, {}, to_string(at_identity), "1"};
  }
  return report;
}

EquationReport check_sine(const HFunction& s, const HFunction& m, const SweepOptions& options) {
  exponential_point(m);
  return sweep({s, m}, {{"s", 0, {{Integer(1), 0, 1}, {Integer(1), 1, 0}}}}, options, "sine");
}

EquationReport check_moment(const MomentFamily& family, const SweepOptions& options) {
  std::vector<HFunction> functions;
  std::vector<MultiIndex> orders;
  for (const auto& [alpha, f] : family.members) {
    orders.push_back(alpha);
    functions.push_back(f);
  }
  auto index_of = [&](const MultiIndex& alpha) {
    return static_cast<std::size_t>(std::find(orders.begin(), orders.end(), alpha) -
                                    orders.begin());
  };
  std::vector<FunctionalEquation> equations;
  for (std::size_t a = 0; a < orders.size(); ++a) {
    FunctionalEquation eq{"f_" + to_string(orders[a]), a, {}};
    for (const auto& beta : lower_set(orders[a])) {
      eq.rhs.push_back({binomial(orders[a], beta), index_of(beta), index_of(orders[a] - beta)});
    }
    equations.push_back(std::move(eq));
  }
  return sweep(functions, equations, options, "moment");
}

EquationReport check_degree(const HFunction& f, const HFunction& m, std::size_t n,
                            const SweepOptions& options) {
  exponential_point(m);
  const Hypergroup& h = f.base();
  const std::size_t d = h.dimension();
  EquationReport report;
  report.kind = "degree";
  report.mode = options.mode;
  SplitMix64 rng(options.seed);
  const auto elements = cube(d, options.box);
  for (std::size_t t = 0; t < options.trials && !report.witness; ++t) {
    std::vector<MultiIndex> ys;
    for (std::size_t k = 0; k <= n; ++k) ys.push_back(random_element(rng, d, options.box));
    const HFunction g = mod_diff(f, m, ys);
    if (options.mode == Mode::floating) {
      FloatAtomEvaluator eval(h, options.box);
      for (const auto& x : elements) {
        ++report.checked;
        const auto v = eval(g, x);
        const double r = relative_residual(v, 0.0);
        report.max_residual = std::max(report.max_residual, r);
        if (r > options.tolerance && !report.witness) {
          report.witness = Counterexample{"difference", x, ys, std::to_string(std::abs(v)), "0"};
        }
      }
      continue;
    }
    if (g.is_zero()) {
      report.checked += elements.size();
      continue;
    }
    AtomEvaluator eval(h, options.box);
    for (const auto& x : elements) {
      ++report.checked;
      const Scalar v = eval(g, x);
      if (!v.is_zero()) {
        report.witness = Counterexample{"difference", x, ys, to_string(v), "0"};
        break;
      }
    }
    if (!report.witness) {
      // Nonzero as a function but vanishing on this box.
      report.witness = Counterexample{"difference (symbolic)", h.identity(), ys,
                                      to_string(g), "0"};
    }
  }
  report.passed = !report.witness;
  return report;
}

DegreeResult monomial_degree(const HFunction& f, const HFunction& m, std::size_t box,
                             std::size_t n_max, std::size_t trials, std::uint64_t seed) {
  const Point& lambda = exponential_point(m);
  if (trials == 0) throw UsageError("monomial_degree needs at least one trial");
  const Hypergroup& h = f.base();
  const std::size_t d = h.dimension();
  DegreeResult result;

  // Each Δ_{m;y} strictly lowers the order of terms at m's point, so a
  // function made only of such terms with order ≤ K is killed by K+1
  // differences.
  std::optional<std::size_t> symbolic_bound;
  if (std::all_of(f.terms().begin(), f.terms().end(),
                  [&](const auto& term) { return term.first.point == lambda; })) {
    symbolic_bound = static_cast<std::size_t>(f.max_order());
  }

  SplitMix64 rng(seed);
  // Deterministic fallback tuples built from the unit elements, which make
  // the top-order part of an n-fold difference visible.
  auto unit_tuples = [&](std::size_t length) {
    std::vector<std::vector<MultiIndex>> out;
    std::vector<std::size_t> idx(length, 0);
    while (true) {
      std::vector<MultiIndex> ys;
      for (auto i : idx) ys.push_back(MultiIndex::unit(d, i));
      out.push_back(std::move(ys));
      std::size_t k = length;
      while (true) {
        if (k == 0) return out;
        --k;
        if (++idx[k] < d) {
          for (std::size_t j = k + 1; j < length; ++j) idx[j] = idx[k];
          break;
        }
      }
    }
  };

  for (std::size_t n = 0; n <= n_max; ++n) {
    if (symbolic_bound && n >= *symbolic_bound) {
      // Spot-check the structural argument on random tuples.
      for (std::size_t t = 0; t < trials; ++t) {
        std::vector<MultiIndex> ys;
        for (std::size_t k = 0; k <= n; ++k) ys.push_back(random_element(rng, d, box));
        if (!mod_diff(f, m, ys).is_zero()) {
          throw std::logic_error("order bound contradicted by a nonzero difference");
        }
      }
      result.degree = n;
      result.symbolic_upper = true;
      return result;
    }
    // Look for an (n+1)-tuple with a nonzero difference; it rules out n.
    std::optional<std::vector<MultiIndex>> witness;
    for (std::size_t t = 0; t < trials && !witness; ++t) {
      std::vector<MultiIndex> ys;
      for (std::size_t k = 0; k <= n; ++k) ys.push_back(random_element(rng, d, box));
      if (!mod_diff(f, m, ys).is_zero()) witness = std::move(ys);
    }
    if (!witness) {
      for (auto& ys : unit_tuples(n + 1)) {
        if (!mod_diff(f, m, ys).is_zero()) {
          witness = std::move(ys);
          break;
        }
      }
    }
    if (!witness) {
      // Neither proof nor refutation for this n; report nothing rather than guess.
      return result;
    }
    result.lower_witness = std::move(*witness);
  }
  result.lower_witness.clear();
  return result;
}

}  // namespace hypermoment
