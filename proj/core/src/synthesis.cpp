#include "hypermoment/synthesis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "hypermoment/errors.hpp"
#include "hypermoment/evaluator.hpp"

namespace hypermoment {

namespace {

// Atoms (β, λ) with β ≤ α over every term (α, λ) of f.
std::set<Atom> closure_atoms(const HFunction& f) {
  std::set<Atom> out;
  for (const auto& [atom, c] : f.terms()) {
    for (const auto& beta : lower_set(atom.order)) out.insert(Atom{beta, atom.point});
  }
  return out;
}

// Sample values of HFunctions on cube(d, box); atoms are tabulated once.
class Sampler {
 public:
  Sampler(const Hypergroup& h, std::size_t box)
      : eval_(h, box), points_(cube(h.dimension(), box)) {}

  std::size_t size() const { return points_.size(); }

  std::vector<Scalar> operator()(const HFunction& f) {
    std::vector<Scalar> out(points_.size());
    for (const auto& [atom, c] : f.terms()) {
      const auto& values = atom_values(atom);
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (!values[i].is_zero()) out[i] += c * values[i];
      }
    }
    return out;
  }

 private:
  const std::vector<Scalar>& atom_values(const Atom& atom) {
    auto it = cache_.find(atom);
    if (it != cache_.end()) return it->second;
    std::vector<Scalar> values;
    values.reserve(points_.size());
    for (const auto& x : points_) values.push_back(eval_(atom, x));
    return cache_.emplace(atom, std::move(values)).first->second;
  }

  AtomEvaluator eval_;
  std::vector<MultiIndex> points_;
  std::map<Atom, std::vector<Scalar>> cache_;
};

std::size_t symbolic_rank(const std::vector<HFunction>& functions) {
  std::set<Atom> atoms;
  for (const auto& f : functions) {
    for (const auto& [atom, c] : f.terms()) atoms.insert(atom);
  }
  if (atoms.empty()) return 0;
  std::map<Atom, std::size_t> column;
  for (const auto& a : atoms) column.emplace(a, column.size());
  Matrix m(functions.size(), atoms.size());
  for (std::size_t r = 0; r < functions.size(); ++r) {
    for (const auto& [atom, c] : functions[r].terms()) m(r, column[atom]) = c;
  }
  return rank(std::move(m));
}

struct SampledSpan {
  std::shared_ptr<RowBasis> rows;
  std::vector<std::size_t> kept;
};

SampledSpan sampled_span(const std::vector<HFunction>& generators, const Hypergroup& h,
                         std::size_t box) {
  Sampler sample(h, box);
  SampledSpan out{std::make_shared<RowBasis>(sample.size()), {}};
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (out.rows->insert(sample(generators[i]))) out.kept.push_back(i);
  }
  return out;
}

void require_same_base(const Hypergroup& a, const Hypergroup& b) {
  if (!(a == b)) throw UsageError("function and variety live on different hypergroups");
}

}  // namespace

Variety variety_basis(const HFunction& f, const VarietyOptions& options) {
  const Hypergroup& h = f.base();
  const std::size_t d = h.dimension();
  Variety v{h, 0, {}, {}, {}, 0, 0, false, nullptr};

  for (const auto& y : cube(d, f.max_order() + 1)) {
    HFunction g = translate(f, y);
    if (g.is_zero()) continue;
    if (std::find(v.generators.begin(), v.generators.end(), g) != v.generators.end()) continue;
    v.shifts.push_back(y);
    v.generators.push_back(std::move(g));
  }
  v.symbolic_dim = symbolic_rank(v.generators);

  const std::size_t initial = options.box.value_or(4 * closure_atoms(f).size() + 4);
  if (initial == 0) throw UsageError("variety box must be at least 1");
  std::size_t last_box = initial;
  for (std::size_t box : {initial, 2 * initial}) {
    last_box = box;
    auto span = sampled_span(v.generators, h, box);
    if (span.kept.size() != v.symbolic_dim) continue;
    auto wider = sampled_span(v.generators, h, box + options.margin);
    if (wider.kept.size() != span.kept.size()) continue;
    v.box = box;
    v.dim = span.kept.size();
    v.stable = true;
    for (auto i : span.kept) v.basis.push_back(v.generators[i]);
    v.sampled = std::move(span.rows);
    return v;
  }
  throw InconclusiveError("translate span rank did not stabilize up to box " +
                          std::to_string(last_box + options.margin) + "; retry with a larger box");
}

Membership contains(const Variety& v, const HFunction& g) {
  require_same_base(v.base, g.base());
  Membership out;
  if (v.dim == 0) {
    out.member = g.is_zero();
    return out;
  }
  Sampler sample(v.base, v.box);
  auto coords = v.sampled->coordinates(sample(g));
  if (!coords) return out;
  HFunction combination(v.base);
  for (std::size_t i = 0; i < v.basis.size(); ++i) combination += (*coords)[i] * v.basis[i];
  if (!(combination == g)) {
    throw InconclusiveError("sampled membership not confirmed symbolically at box " +
                            std::to_string(v.box));
  }
  out.member = true;
  out.coefficients = std::move(*coords);
  return out;
}

std::size_t sine_dimension(const Variety& v, const HFunction& m) {
  const Point& mu = exponential_point(m);
  if (!contains(v, m).member) throw UsageError("the exponential is not in the variety");
  const std::size_t n = v.basis.size();
  const std::size_t d = v.base.dimension();
  const Atom m_atom{MultiIndex(d), mu};

  std::map<std::pair<Atom, Atom>, std::vector<Scalar>> rows;
  auto add = [&](const Atom& left, const Atom& right, std::size_t col, const Scalar& c) {
    auto& row = rows.try_emplace({left, right}, n).first->second;
    row[col] += c;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [atom, c] : v.basis[i].terms()) {
      // s(x*y) through the Leibniz expansion of the translate.
      for (const auto& beta : lower_set(atom.order)) {
        add(Atom{beta, atom.point}, Atom{atom.order - beta, atom.point}, i,
            c * Scalar(Rational(binomial(atom.order, beta))));
      }
      add(atom, m_atom, i, -c);
      add(m_atom, atom, i, -c);
    }
  }
  Matrix constraints(rows.size(), n);
  std::size_t r = 0;
  for (const auto& [key, row] : rows) {
    for (std::size_t i = 0; i < n; ++i) constraints(r, i) = row[i];
    ++r;
  }
  return n - rank(std::move(constraints));
}

Decomposition moment_span_decompose(const HFunction& f, const Point& lambda,
                                    const VarietyOptions& options) {
  const Hypergroup& h = f.base();
  const std::size_t d = h.dimension();
  if (lambda.size() != d) throw UsageError("point has the wrong dimension");
  MultiIndex cap(d);
  for (const auto& [atom, c] : f.terms()) {
    if (atom.point != lambda) {
      throw UsageError("seed has a term at a point other than the requested one");
    }
    for (std::size_t i = 0; i < d; ++i) cap[i] = std::max(cap[i], atom.order[i]);
  }

  Decomposition out{f, lambda, lower_set(cap), {}, {}, 0, true, variety_basis(f, options)};
  const Variety& v = out.variety;

  std::vector<HFunction> members;
  for (const auto& beta : out.atoms) {
    members.push_back(HFunction::atom(h, beta, lambda));
    out.in_variety.push_back(contains(v, members.back()).member);
  }

  Sampler sample(h, v.box);
  Matrix a(cube(d, v.box).size(), members.size());
  for (std::size_t j = 0; j < members.size(); ++j) {
    const auto column = sample(members[j]);
    for (std::size_t i = 0; i < column.size(); ++i) a(i, j) = column[i];
  }
  auto solution = solve(a, sample(f));

  HFunction residual = f;
  if (solution) {
    out.coefficients = std::move(solution->x);
    out.unique = solution->unique;
    for (std::size_t j = 0; j < members.size(); ++j) {
      residual -= out.coefficients[j] * members[j];
    }
  } else {
    out.coefficients.assign(members.size(), Scalar());
    out.unique = false;
  }
  for (const auto& [atom, c] : residual.terms()) out.residual += c.norm1();
  return out;
}

std::vector<Point> exponentials_in_variety(const Variety& v,
                                           const std::vector<Point>& candidates) {
  std::vector<Point> out;
  for (const auto& lambda : candidates) {
    if (contains(v, exponential(v.base, lambda)).member) out.push_back(lambda);
  }
  return out;
}

}  // namespace hypermoment
