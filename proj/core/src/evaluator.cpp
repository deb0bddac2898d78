#include "hypermoment/evaluator.hpp"

#include <algorithm>

#include "hypermoment/errors.hpp"

namespace hypermoment {

namespace {

void check_atom(const Hypergroup& base, const Atom& atom, const MultiIndex& x) {
  base.check_element(x);
  if (atom.order.size() != base.dimension() || atom.point.size() != base.dimension()) {
    throw UsageError("atom " + to_string(atom) + " does not match hypergroup dimension " +
                     std::to_string(base.dimension()));
  }
}

template <typename Table, typename Make>
const Table& cached_table(std::map<std::pair<std::size_t, Scalar>, Table>& tables,
                          std::size_t factor, const Scalar& point, std::size_t order,
                          Make make) {
  auto key = std::pair{factor, point};
  auto it = tables.find(key);
  if (it != tables.end() && it->second.front().size() > order) return it->second;
  std::size_t want = order;
  if (it != tables.end()) want = std::max(want, it->second.front().size() - 1);
  auto& slot = tables[key];
  slot = make(want);
  return slot;
}

}  // namespace

const std::vector<std::vector<Scalar>>& AtomEvaluator::table(std::size_t factor,
                                                             const Scalar& point,
                                                             std::size_t order) {
  return cached_table(tables_, factor, point, order, [&](std::size_t want) {
    return base_.factor(factor).derivative_table(point, n_max_, want);
  });
}

Scalar AtomEvaluator::operator()(const Atom& atom, const MultiIndex& x) {
  check_atom(base_, atom, x);
  if (x.max_entry() > n_max_) {
    n_max_ = std::max<std::size_t>(2 * n_max_, x.max_entry());
    tables_.clear();
  }
  Scalar value = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& t = table(i, atom.point[i], atom.order[i]);
    value *= t[x[i]][atom.order[i]];
    if (value.is_zero()) break;
  }
  return value;
}

Scalar AtomEvaluator::operator()(const HFunction& f, const MultiIndex& x) {
  Scalar sum;
  for (const auto& [atom, c] : f.terms()) sum += c * (*this)(atom, x);
  return sum;
}

std::complex<double> FloatAtomEvaluator::operator()(const Atom& atom, const MultiIndex& x) {
  check_atom(base_, atom, x);
  if (x.max_entry() > n_max_) {
    n_max_ = std::max<std::size_t>(2 * n_max_, x.max_entry());
    tables_.clear();
  }
  std::complex<double> value = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& t = cached_table(tables_, i, atom.point[i], atom.order[i], [&](std::size_t want) {
      return base_.factor(i).derivative_table(atom.point[i].to_complex(), n_max_, want);
    });
    value *= t[x[i]][atom.order[i]];
  }
  return value;
}

std::complex<double> FloatAtomEvaluator::operator()(const HFunction& f, const MultiIndex& x) {
  std::complex<double> sum = 0.0;
  for (const auto& [atom, c] : f.terms()) sum += c.to_complex() * (*this)(atom, x);
  return sum;
}

}  // namespace hypermoment
