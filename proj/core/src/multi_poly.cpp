#include "hypermoment/multi_poly.hpp"

#include <algorithm>
#include <type_traits>
#include <vector>

#include "hypermoment/errors.hpp"

namespace hypermoment {

MultiPoly MultiPoly::constant(std::size_t dim, const Scalar& c) {
  MultiPoly p(dim);
  p.add_term(MultiIndex(dim), c);
  return p;
}

MultiPoly MultiPoly::monomial(const MultiIndex& alpha, const Scalar& c) {
  MultiPoly p(alpha.size());
  p.add_term(alpha, c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t dim, std::size_t i) {
  return monomial(MultiIndex::unit(dim, i));
}

long MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<long>(leading().first.total());
}

Scalar MultiPoly::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Scalar() : it->second;
}

void MultiPoly::add_term(const MultiIndex& alpha, const Scalar& c) {
  if (alpha.size() != dim_) {
    throw UsageError("monomial " + to_string(alpha) + " does not have dimension " +
                     std::to_string(dim_));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_dimension(const MultiPoly& other) const {
  if (dim_ != other.dim_) {
    throw UsageError("polynomial dimension mismatch: " + std::to_string(dim_) +
                     " vs " + std::to_string(other.dim_));
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_dimension(other);
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_dimension(other);
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_dimension(b);
  MultiPoly out(a.dim_);
  for (const auto& [alpha, ca] : a.terms_) {
    for (const auto& [beta, cb] : b.terms_) {
      out.add_term(alpha + beta, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [alpha, c] : out.terms_) c = -c;
  return out;
}

MultiPoly derive(const MultiPoly& p, const MultiIndex& alpha) {
  if (alpha.size() != p.dimension()) {
    throw UsageError("derivative order " + to_string(alpha) +
                     " does not match polynomial dimension " +
                     std::to_string(p.dimension()));
  }
  MultiPoly out(p.dimension());
  for (const auto& [gamma, c] : p.terms()) {
    if (!alpha.componentwise_le(gamma)) continue;
    // γ!/(γ-α)!
    Integer falling = 1;
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      for (auto k = gamma[i] - alpha[i] + 1; k <= gamma[i]; ++k) falling *= k;
    }
    out.add_term(gamma - alpha, c * Scalar(Rational(falling)));
  }
  return out;
}

namespace {

template <typename T>
T evaluate_impl(const MultiPoly& p, std::span<const T> point) {
  if (point.size() != p.dimension()) {
    throw UsageError("evaluation point has " + std::to_string(point.size()) +
                     " coordinates, polynomial has dimension " +
                     std::to_string(p.dimension()));
  }
  if (p.is_zero()) return T(0);
  // Powers of each coordinate up to the largest exponent in use.
  std::vector<std::vector<T>> powers(p.dimension());
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    MultiIndex::value_type top = 0;
    for (const auto& [alpha, c] : p.terms()) top = std::max(top, alpha[i]);
    powers[i].reserve(top + 1);
    powers[i].push_back(T(1));
    for (MultiIndex::value_type k = 1; k <= top; ++k) {
      powers[i].push_back(powers[i].back() * point[i]);
    }
  }
  T sum(0);
  for (const auto& [alpha, c] : p.terms()) {
    T term = [&] {
      if constexpr (std::is_same_v<T, Scalar>) {
        return c;
      } else {
        return c.to_complex();
      }
    }();
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i]) term *= powers[i][alpha[i]];
    }
    sum += term;
  }
  return sum;
}

}  // namespace

Scalar evaluate(const MultiPoly& p, std::span<const Scalar> point) {
  return evaluate_impl<Scalar>(p, point);
}

std::complex<double> evaluate(const MultiPoly& p,
                              std::span<const std::complex<double>> point) {
  return evaluate_impl<std::complex<double>>(p, point);
}

MultiPoly tensor(const MultiPoly& p, const MultiPoly& q) {
  MultiPoly out(p.dimension() + q.dimension());
  for (const auto& [alpha, ca] : p.terms()) {
    for (const auto& [beta, cb] : q.terms()) {
      out.add_term(concat(alpha, beta), ca * cb);
    }
  }
  return out;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(it->second) + ")";
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (it->first[i] == 0) continue;
      out += "*z" + std::to_string(i + 1);
      if (it->first[i] > 1) out += "^" + std::to_string(it->first[i]);
    }
  }
  return out;
}

}  // namespace hypermoment
