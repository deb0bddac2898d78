#include "hypermoment/hfunction.hpp"

#include "hypermoment/errors.hpp"
#include "hypermoment/evaluator.hpp"

namespace hypermoment {

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
  if (auto c = a.order <=> b.order; c != 0) return c;
  return a.point <=> b.point;
}

std::string to_string(const Atom& atom) {
  std::string out = "d^" + to_string(atom.order) + " Q(";
  for (std::size_t i = 0; i < atom.point.size(); ++i) {
    if (i) out += ",";
    out += to_string(atom.point[i]);
  }
  return out + ")";
}

HFunction HFunction::atom(const Hypergroup& base, const MultiIndex& order,
                          const Point& point, const Scalar& coeff) {
  HFunction f(base);
  f.add_term(Atom{order, point}, coeff);
  return f;
}

std::uint64_t HFunction::max_order() const {
  std::uint64_t top = 0;
  for (const auto& [atom, c] : terms_) top = std::max(top, atom.order.total());
  return top;
}

void HFunction::add_term(const Atom& atom, const Scalar& coeff) {
  if (atom.order.size() != base_.dimension() || atom.point.size() != base_.dimension()) {
    throw UsageError("term " + to_string(atom) + " does not match hypergroup dimension " +
                     std::to_string(base_.dimension()));
  }
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(atom, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void HFunction::check_base(const HFunction& other) const {
  if (!(base_ == other.base_)) throw UsageError("functions live on different hypergroups");
}

HFunction& HFunction::operator+=(const HFunction& other) {
  check_base(other);
  for (const auto& [atom, c] : other.terms_) add_term(atom, c);
  return *this;
}

HFunction& HFunction::operator-=(const HFunction& other) {
  check_base(other);
  for (const auto& [atom, c] : other.terms_) add_term(atom, -c);
  return *this;
}

HFunction& HFunction::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [atom, coeff] : terms_) coeff *= c;
  return *this;
}

std::string to_string(const HFunction& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [atom, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")*" + to_string(atom);
  }
  return out;
}

Scalar evaluate(const HFunction& f, const MultiIndex& x) {
  AtomEvaluator eval(f.base(), x.max_entry());
  return eval(f, x);
}

namespace {

void check_point(const Hypergroup& h, const Point& lambda) {
  if (lambda.size() != h.dimension()) {
    throw UsageError("point has " + std::to_string(lambda.size()) +
                     " coordinates, hypergroup has dimension " +
                     std::to_string(h.dimension()));
  }
}

}  // namespace

HFunction exponential(const Hypergroup& h, const Point& lambda) {
  check_point(h, lambda);
  return HFunction::atom(h, h.identity(), lambda);
}

HFunction sine(const Hypergroup& h, std::span<const Scalar> a, const Point& lambda) {
  check_point(h, lambda);
  if (a.size() != h.dimension()) throw UsageError("sine direction has wrong length");
  HFunction s(h);
  for (std::size_t i = 0; i < a.size(); ++i) {
    s.add_term(Atom{MultiIndex::unit(h.dimension(), i), lambda}, a[i]);
  }
  return s;
}

HFunction apply_pdo(const MultiPoly& p, const Point& lambda, const Hypergroup& h) {
  check_point(h, lambda);
  if (p.dimension() != h.dimension()) {
    throw UsageError("differential operator dimension does not match hypergroup");
  }
  HFunction f(h);
  for (const auto& [alpha, c] : p.terms()) f.add_term(Atom{alpha, lambda}, c);
  return f;
}

HFunction translate(const HFunction& f, const MultiIndex& y) {
  f.base().check_element(y);
  AtomEvaluator eval(f.base(), y.max_entry());
  HFunction out(f.base());
  for (const auto& [atom, c] : f.terms()) {
    for (const auto& beta : lower_set(atom.order)) {
      const Scalar factor =
          eval(Atom{atom.order - beta, atom.point}, y) * Scalar(Rational(binomial(atom.order, beta)));
      if (factor.is_zero()) continue;
      out.add_term(Atom{beta, atom.point}, c * factor);
    }
  }
  return out;
}

bool is_exponential(const HFunction& f) {
  if (f.terms().size() != 1) return false;
  const auto& [atom, c] = *f.terms().begin();
  return atom.order.is_zero() && c == Scalar(1);
}

const Point& exponential_point(const HFunction& m) {
  if (!is_exponential(m)) {
    throw UsageError("expected an exponential x -> Q_x(lambda), got " + to_string(m));
  }
  return m.terms().begin()->first.point;
}

HFunction mod_diff(const HFunction& f, const HFunction& m, std::span<const MultiIndex> ys) {
  const Point& lambda = exponential_point(m);
  if (!(f.base() == m.base())) throw UsageError("functions live on different hypergroups");
  if (ys.empty()) throw UsageError("modified difference needs at least one y");
  HFunction current = f;
  for (auto it = ys.rbegin(); it != ys.rend(); ++it) {
    const Scalar my = evaluate(exponential(f.base(), lambda), *it);
    HFunction next = translate(current, *it);
    next -= current * my;
    current = std::move(next);
    if (current.is_zero()) break;
  }
  return current;
}

const HFunction& MomentFamily::member(const MultiIndex& alpha) const {
  auto it = members.find(alpha);
  if (it == members.end()) {
    throw UsageError("moment family has no member " + to_string(alpha));
  }
  return it->second;
}

MomentFamily moment_family(const Hypergroup& h, const Point& lambda, const MultiIndex& cap) {
  check_point(h, lambda);
  h.check_element(cap);
  MomentFamily family{h, lambda, cap, {}};
  for (const auto& alpha : lower_set(cap)) {
    family.members.emplace(alpha, HFunction::atom(h, alpha, lambda));
  }
  return family;
}

}  // namespace hypermoment
