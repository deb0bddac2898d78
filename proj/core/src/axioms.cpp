#include "hypermoment/axioms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include "hypermoment/errors.hpp"
#include "hypermoment/parallel.hpp"
#include "hypermoment/random.hpp"

namespace hypermoment {

bool AxiomReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck* AxiomReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool is_chebyshev(const Hypergroup& h) {
  const auto cheb = Recurrence1D::chebyshev();
  for (std::size_t i = 0; i < h.factor_count(); ++i) {
    if (!(h.factor(i).recurrence() == cheb)) return false;
  }
  return true;
}

Measure chebyshev_convolution(const Hypergroup& h, const MultiIndex& x, const MultiIndex& y) {
  h.check_element(x);
  h.check_element(y);
  const std::size_t d = h.dimension();
  Measure out(h);
  const Rational weight(Integer(1), Integer(1ul << d));
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    MultiIndex w(d);
    for (std::size_t i = 0; i < d; ++i) {
      w[i] = (mask >> i) & 1 ? x[i] + y[i] : (x[i] > y[i] ? x[i] - y[i] : y[i] - x[i]);
    }
    out.add(w, Scalar(weight));
  }
  return out;
}

namespace {

Measure convolve_unchecked(const Measure& mu, const Measure& nu) {
  Measure out(mu.base());
  for (const auto& [x, a] : mu.weights()) {
    for (const auto& [y, b] : nu.weights()) {
      const Scalar ab = a * b;
      const Measure xy = mu.base().linearization_unchecked(x, y);
      for (const auto& [w, c] : xy.weights()) {
        out.add(w, ab * c);
      }
    }
  }
  return out;
}

void fail(AxiomCheck& check, std::string detail) {
  if (check.passed) {
    check.passed = false;
    check.detail = std::move(detail);
  }
}

// Per-chunk results of the pairwise sweep.
struct PairChecks {
  std::vector<AxiomCheck> checks;
};

std::string pair_label(const MultiIndex& x, const MultiIndex& y) {
  return "x=" + to_string(x) + " y=" + to_string(y);
}

}  // namespace

AxiomReport verify_axioms(const Hypergroup& h, std::size_t box, const AxiomOptions& options) {
  AxiomReport report;
  report.box = box;
  const std::size_t d = h.dimension();

  {
    AxiomCheck degree{"degree-basis", true, 0, {}};
    AxiomCheck normal{"normalization", true, 0, {}};
    const std::vector<Scalar> ones(d, Scalar(1));
    for (const auto& x : simplex(d, box)) {
      const MultiPoly& q = h.basis_poly(x);
      ++degree.checked;
      ++normal.checked;
      if (q.is_zero() || q.total_degree() != static_cast<long>(x.total()) ||
          q.leading().first != x) {
        fail(degree, "Q_" + to_string(x) + " is not led by z^" + to_string(x));
      }
      if (evaluate(q, ones) != Scalar(1)) {
        fail(normal, "Q_" + to_string(x) + "(1,...,1) != 1");
      }
    }
    if (h.basis_poly(h.identity()) != MultiPoly::constant(d, 1)) fail(normal, "Q_o != 1");
    report.checks.push_back(std::move(degree));
    report.checks.push_back(std::move(normal));
  }

  const auto elements = cube(d, box);
  const bool closed_form = is_chebyshev(h);
  const char* pair_names[] = {"nonnegativity", "mass", "support", "identity", "commutativity",
                              "closed-form"};
  const std::size_t pair_check_count = closed_form ? 6 : 5;

  auto chunks = parallel_chunks(elements.size(), options.jobs, [&](std::size_t begin,
                                                                    std::size_t end) {
    PairChecks local;
    for (std::size_t k = 0; k < pair_check_count; ++k) local.checks.push_back({pair_names[k], true, 0, {}});
    auto& nonneg = local.checks[0];
    auto& mass = local.checks[1];
    auto& support = local.checks[2];
    auto& identity = local.checks[3];
    auto& commut = local.checks[4];
    const MultiIndex o = h.identity();
    for (std::size_t i = begin; i < end; ++i) {
      const MultiIndex& x = elements[i];
      ++identity.checked;
      const Measure dx = Measure::point_mass(h, x);
      if (!(h.linearization_unchecked(o, x) == dx) || !(h.linearization_unchecked(x, o) == dx)) {
        fail(identity, "delta_o * delta_" + to_string(x) + " != delta_" + to_string(x));
      }
      for (const auto& y : elements) {
        const Measure xy = h.linearization_unchecked(x, y);
        ++nonneg.checked;
        ++mass.checked;
        ++support.checked;
        for (const auto& [w, c] : xy.weights()) {
          if (sgn(c.re()) < 0 || !c.is_real()) {
            fail(nonneg, "c(" + to_string(x) + ", " + to_string(y) + ", " + to_string(w) +
                             ") = " + to_string(c));
          }
          for (std::size_t j = 0; j < d; ++j) {
            const auto lo = x[j] > y[j] ? x[j] - y[j] : y[j] - x[j];
            if (w[j] < lo || w[j] > x[j] + y[j]) {
              fail(support, pair_label(x, y) + " puts mass on " + to_string(w));
            }
          }
        }
        if (xy.total_mass() != Scalar(1)) {
          fail(mass, pair_label(x, y) + " has mass " + to_string(xy.total_mass()));
        }
        ++commut.checked;
        if (!(xy == h.linearization_unchecked(y, x))) fail(commut, pair_label(x, y));
        if (closed_form) {
          auto& cf = local.checks[5];
          ++cf.checked;
          if (!(xy == chebyshev_convolution(h, x, y))) fail(cf, pair_label(x, y));
        }
      }
    }
    return local;
  });

  for (std::size_t k = 0; k < pair_check_count; ++k) {
    AxiomCheck merged{pair_names[k], true, 0, {}};
    for (const auto& chunk : chunks) {
      const auto& c = chunk.checks[k];
      merged.checked += c.checked;
      if (!c.passed) fail(merged, c.detail);
    }
    report.checks.push_back(std::move(merged));
  }
  // closed-form sits last among the pairwise checks; associativity goes
  // before it so the documented order holds.
  std::optional<AxiomCheck> closed;
  if (closed_form) {
    closed = std::move(report.checks.back());
    report.checks.pop_back();
  }

  {
    AxiomCheck assoc{"associativity", true, 0, {}};
    const double total = std::pow(static_cast<double>(elements.size()), 3.0);
    const bool exhaustive = total <= static_cast<double>(options.associativity_limit);
    std::vector<std::array<MultiIndex, 3>> triples;
    if (exhaustive) {
      for (const auto& x : elements)
        for (const auto& y : elements)
          for (const auto& z : elements) triples.push_back({x, y, z});
    } else {
      SplitMix64 rng(options.seed);
      for (std::size_t t = 0; t < options.associativity_limit; ++t) {
        triples.push_back({random_element(rng, d, box), random_element(rng, d, box),
                           random_element(rng, d, box)});
      }
      assoc.detail = "sampled " + std::to_string(options.associativity_limit) + " of " +
                     std::to_string(static_cast<unsigned long long>(total)) + " triples";
    }
    auto parts = parallel_chunks(triples.size(), options.jobs, [&](std::size_t begin,
                                                                   std::size_t end) {
      AxiomCheck local{"associativity", true, 0, {}};
      for (std::size_t i = begin; i < end; ++i) {
        const auto& [x, y, z] = triples[i];
        ++local.checked;
        const Measure left =
            convolve_unchecked(h.linearization_unchecked(x, y), Measure::point_mass(h, z));
        const Measure right =
            convolve_unchecked(Measure::point_mass(h, x), h.linearization_unchecked(y, z));
        if (!(left == right)) {
          fail(local, "x=" + to_string(x) + " y=" + to_string(y) + " z=" + to_string(z));
        }
      }
      return local;
    });
    for (const auto& p : parts) {
      assoc.checked += p.checked;
      if (!p.passed) {
        const std::string note = assoc.detail;
        fail(assoc, p.detail + (note.empty() ? "" : " (" + note + ")"));
      }
    }
    report.checks.push_back(std::move(assoc));
  }
  if (closed) report.checks.push_back(std::move(*closed));
  return report;
}

}  // namespace hypermoment
