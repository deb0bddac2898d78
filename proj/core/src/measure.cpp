#include "hypermoment/measure.hpp"

#include "hypermoment/errors.hpp"
#include "hypermoment/evaluator.hpp"
#include "hypermoment/hfunction.hpp"

namespace hypermoment {

Measure Measure::point_mass(const Hypergroup& base, const MultiIndex& x, const Scalar& weight) {
  Measure mu(base);
  mu.add(x, weight);
  return mu;
}

Scalar Measure::weight(const MultiIndex& x) const {
  auto it = weights_.find(x);
  return it == weights_.end() ? Scalar() : it->second;
}

Scalar Measure::total_mass() const {
  Scalar sum;
  for (const auto& [x, w] : weights_) sum += w;
  return sum;
}

void Measure::add(const MultiIndex& x, const Scalar& w) {
  base_.check_element(x);
  if (w.is_zero()) return;
  auto [it, inserted] = weights_.try_emplace(x, w);
  if (!inserted) {
    it->second += w;
    if (it->second.is_zero()) weights_.erase(it);
  }
}

void Measure::check_base(const Measure& other) const {
  if (!(base_ == other.base_)) throw UsageError("measures live on different hypergroups");
}

Measure& Measure::operator+=(const Measure& other) {
  check_base(other);
  for (const auto& [x, w] : other.weights_) add(x, w);
  return *this;
}

Measure& Measure::operator-=(const Measure& other) {
  check_base(other);
  for (const auto& [x, w] : other.weights_) add(x, -w);
  return *this;
}

Measure& Measure::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    weights_.clear();
    return *this;
  }
  for (auto& [x, w] : weights_) w *= c;
  return *this;
}

Measure convolve(const Measure& mu, const Measure& nu) {
  if (!(mu.base() == nu.base())) throw UsageError("measures live on different hypergroups");
  Measure out(mu.base());
  for (const auto& [x, a] : mu.weights()) {
    for (const auto& [y, b] : nu.weights()) {
      const Scalar ab = a * b;
      const Measure xy = mu.base().linearization(x, y);
      for (const auto& [w, c] : xy.weights()) out.add(w, ab * c);
    }
  }
  return out;
}

Scalar pair(const HFunction& f, const Measure& mu) {
  if (!(f.base() == mu.base())) throw UsageError("function and measure live on different hypergroups");
  std::size_t n_max = 0;
  for (const auto& [x, w] : mu.weights()) n_max = std::max<std::size_t>(n_max, x.max_entry());
  AtomEvaluator eval(f.base(), n_max);
  Scalar sum;
  for (const auto& [x, w] : mu.weights()) sum += w * eval(f, x);
  return sum;
}

MultiPoly fourier(const Measure& mu) {
  MultiPoly p(mu.base().dimension());
  for (const auto& [x, w] : mu.weights()) p += mu.base().basis_poly(x) * w;
  return p;
}

Measure expand_in_basis(const MultiPoly& p, const Hypergroup& h) {
  if (p.dimension() != h.dimension()) {
    throw UsageError("polynomial dimension " + std::to_string(p.dimension()) +
                     " does not match hypergroup dimension " + std::to_string(h.dimension()));
  }
  // Q_α has leading monomial z^α and only smaller monomials besides it, so
  // peeling off the graded-lex largest monomial terminates.
  Measure out(h);
  MultiPoly rest = p;
  while (!rest.is_zero()) {
    const auto [alpha, c] = rest.leading();
    const MultiPoly& q = h.basis_poly(alpha);
    if (q.leading().first != alpha) {
      throw std::logic_error("basis polynomial Q_" + to_string(alpha) +
                             " is not led by z^" + to_string(alpha));
    }
    const Scalar coeff = c / q.leading().second;
    out.add(alpha, coeff);
    rest -= q * coeff;
  }
  return out;
}

Measure inverse_fourier(const MultiPoly& p, const Hypergroup& h) { return expand_in_basis(p, h); }

Measure mod_diff_measure(const HFunction& m, const MultiIndex& y) {
  const Point& lambda = exponential_point(m);
  const Hypergroup& h = m.base();
  Measure out = Measure::point_mass(h, y);
  out.add(h.identity(), -evaluate(exponential(h, lambda), y));
  return out;
}

std::string to_string(const Measure& mu) {
  if (mu.is_zero()) return "0";
  std::string out;
  for (const auto& [x, w] : mu.weights()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(w) + ")*delta" + to_string(x);
  }
  return out;
}

}  // namespace hypermoment
