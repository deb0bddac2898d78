#include "hypermoment/hypergroup.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "hypermoment/errors.hpp"
#include "hypermoment/measure.hpp"

namespace hypermoment {

struct Hypergroup::Impl {
  Kind kind = Kind::recurrence1d;
  std::size_t dim = 0;
  std::optional<Recurrence1D> recurrence;
  std::vector<Hypergroup> operands;
  std::size_t certified = 0;
  std::vector<std::shared_ptr<const detail::UnivariateFamily>> factors;

  mutable std::mutex mutex;
  mutable std::map<MultiIndex, std::shared_ptr<const MultiPoly>> basis;
};

namespace {

std::shared_ptr<const detail::UnivariateFamily> chebyshev_family() {
  static const auto family =
      std::make_shared<const detail::UnivariateFamily>(Recurrence1D::chebyshev());
  return family;
}

}  // namespace

Hypergroup Hypergroup::from_recurrence(Recurrence1D recurrence,
                                       std::size_t certify_up_to) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::recurrence1d;
  impl->dim = 1;
  impl->certified = certify_up_to;
  impl->factors.push_back(std::make_shared<const detail::UnivariateFamily>(recurrence));
  impl->recurrence = std::move(recurrence);
  const auto& family = *impl->factors.front();
  for (std::size_t k = 0; k <= certify_up_to; ++k) {
    for (std::size_t l = 0; l <= certify_up_to; ++l) {
      const auto row = family.linearization(k, l);
      for (std::size_t i = 0; i < row->coeffs.size(); ++i) {
        if (sgn(row->coeffs[i]) < 0) {
          using V = MultiIndex::value_type;
          throw RejectionError(MultiIndex{static_cast<V>(k)}, MultiIndex{static_cast<V>(l)},
                               MultiIndex{static_cast<V>(row->lo + i)}, row->coeffs[i]);
        }
      }
    }
  }
  return Hypergroup(std::move(impl));
}

Hypergroup Hypergroup::chebyshev(std::size_t dim) {
  if (dim == 0) throw UsageError("Chebyshev hypergroup needs dimension >= 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::chebyshev;
  impl->dim = dim;
  impl->factors.assign(dim, chebyshev_family());
  return Hypergroup(std::move(impl));
}

Hypergroup Hypergroup::product(std::span<const Hypergroup> factors) {
  if (factors.empty()) throw UsageError("product needs at least one factor");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::product;
  impl->operands.assign(factors.begin(), factors.end());
  for (const auto& h : factors) {
    impl->dim += h.dimension();
    impl->factors.insert(impl->factors.end(), h.impl_->factors.begin(),
                         h.impl_->factors.end());
  }
  return Hypergroup(std::move(impl));
}

Hypergroup Hypergroup::product(const Hypergroup& h1, const Hypergroup& h2) {
  const Hypergroup both[] = {h1, h2};
  return product(both);
}

std::size_t Hypergroup::dimension() const { return impl_->dim; }
Hypergroup::Kind Hypergroup::kind() const { return impl_->kind; }

const Recurrence1D& Hypergroup::recurrence() const {
  if (!impl_->recurrence) throw UsageError("hypergroup is not a one-variable recurrence");
  return *impl_->recurrence;
}

const std::vector<Hypergroup>& Hypergroup::operands() const { return impl_->operands; }
std::size_t Hypergroup::certified_box() const { return impl_->certified; }
std::size_t Hypergroup::factor_count() const { return impl_->factors.size(); }

const detail::UnivariateFamily& Hypergroup::factor(std::size_t i) const {
  return *impl_->factors.at(i);
}

void Hypergroup::check_element(const MultiIndex& x) const {
  if (x.size() != dimension()) {
    throw UsageError("element " + to_string(x) + " does not belong to a hypergroup of dimension " +
                     std::to_string(dimension()));
  }
}

const MultiPoly& Hypergroup::basis_poly(const MultiIndex& x) const {
  check_element(x);
  std::lock_guard lock(impl_->mutex);
  if (auto it = impl_->basis.find(x); it != impl_->basis.end()) return *it->second;
  MultiPoly q = MultiPoly::constant(0, 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto dense = impl_->factors[i]->poly(x[i]);
    MultiPoly p(1);
    for (std::size_t k = 0; k < dense->size(); ++k) {
      p.add_term(MultiIndex{static_cast<MultiIndex::value_type>(k)}, Scalar((*dense)[k]));
    }
    q = tensor(q, p);
  }
  auto [it, inserted] = impl_->basis.emplace(x, std::make_shared<const MultiPoly>(std::move(q)));
  return *it->second;
}

Rational Hypergroup::leading_coefficient(const MultiIndex& x) const {
  check_element(x);
  Rational lead = 1;
  for (std::size_t i = 0; i < x.size(); ++i) lead *= impl_->factors[i]->poly(x[i])->back();
  return lead;
}

Measure Hypergroup::linearization_unchecked(const MultiIndex& x, const MultiIndex& y) const {
  check_element(x);
  check_element(y);
  const std::size_t d = dimension();
  std::vector<std::shared_ptr<const detail::LinearizationRow>> rows(d);
  for (std::size_t i = 0; i < d; ++i) rows[i] = impl_->factors[i]->linearization(x[i], y[i]);

  Measure out(*this);
  for (const auto& row : rows) {
    if (row->coeffs.empty()) return out;
  }
  // Odometer over the factor supports.
  std::vector<std::size_t> pos(d, 0);
  MultiIndex w(d);
  while (true) {
    Rational weight = 1;
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t k = rows[i]->nonzero[pos[i]];
      w[i] = static_cast<MultiIndex::value_type>(rows[i]->lo + k);
      weight *= rows[i]->coeffs[k];
    }
    out.add(w, Scalar(std::move(weight)));
    std::size_t i = d;
    while (true) {
      if (i == 0) return out;
      --i;
      if (++pos[i] < rows[i]->nonzero.size()) break;
      pos[i] = 0;
    }
  }
}

Measure Hypergroup::linearization(const MultiIndex& x, const MultiIndex& y) const {
  Measure mu = linearization_unchecked(x, y);
  for (const auto& [w, c] : mu.weights()) {
    if (sgn(c.re()) < 0) throw RejectionError(x, y, w, c.re());
  }
  return mu;
}

bool operator==(const Hypergroup& a, const Hypergroup& b) {
  if (a.impl_ == b.impl_) return true;
  if (a.impl_->factors.size() != b.impl_->factors.size()) return false;
  for (std::size_t i = 0; i < a.impl_->factors.size(); ++i) {
    const auto& fa = a.impl_->factors[i];
    const auto& fb = b.impl_->factors[i];
    if (fa != fb && !(fa->recurrence() == fb->recurrence())) return false;
  }
  return true;
}

RejectionError::RejectionError(MultiIndex x, MultiIndex y, MultiIndex w, Rational value)
    : std::runtime_error("negative linearization coefficient c(" + to_string(x) + ", " +
                         to_string(y) + ", " + to_string(w) + ") = " + to_string(value)),
      x_(std::move(x)),
      y_(std::move(y)),
      w_(std::move(w)),
      value_(std::move(value)) {}

}  // namespace hypermoment
