#include "hypermoment/multi_index.hpp"

#include <algorithm>
#include <numeric>

#include "hypermoment/errors.hpp"

namespace hypermoment {

MultiIndex MultiIndex::unit(std::size_t dim, std::size_t i) {
  MultiIndex e(dim);
  e.entries_.at(i) = 1;
  return e;
}

std::uint64_t MultiIndex::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0});
}

MultiIndex::value_type MultiIndex::max_entry() const {
  return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

bool MultiIndex::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](value_type v) { return v == 0; });
}

bool MultiIndex::componentwise_le(const MultiIndex& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (entries_[i] > other.entries_[i]) return false;
  }
  return true;
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& other) {
  if (size() != other.size()) {
    throw UsageError("multi-index dimension mismatch in addition");
  }
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
  if (!b.componentwise_le(a)) {
    throw UsageError("multi-index subtraction " + to_string(a) + " - " +
                     to_string(b) + " leaves ℕ^d");
  }
  MultiIndex r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r.entries_[i] -= b.entries_[i];
  return r;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.total() <=> b.total(); c != 0) return c;
  return a.entries_ <=> b.entries_;
}

MultiIndex concat(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r = a;
  r.entries_.insert(r.entries_.end(), b.entries_.begin(), b.entries_.end());
  return r;
}

std::string to_string(const MultiIndex& alpha) {
  std::string out = "(";
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(alpha[i]);
  }
  return out + ")";
}

Integer binomial(const MultiIndex& alpha, const MultiIndex& beta) {
  if (!beta.componentwise_le(alpha)) return 0;
  Integer result = 1;
  Integer factor;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    mpz_bin_uiui(factor.get_mpz_t(), alpha[i], beta[i]);
    result *= factor;
  }
  return result;
}

Integer factorial(const MultiIndex& alpha) {
  Integer result = 1;
  Integer factor;
  for (auto a : alpha) {
    mpz_fac_ui(factor.get_mpz_t(), a);
    result *= factor;
  }
  return result;
}

namespace {

// Every β ≤ upper in odometer order (last coordinate fastest).
std::vector<MultiIndex> odometer(const MultiIndex& upper) {
  std::vector<MultiIndex> out;
  MultiIndex current(upper.size());
  while (true) {
    out.push_back(current);
    std::size_t i = upper.size();
    while (true) {
      if (i == 0) return out;
      --i;
      if (current[i] < upper[i]) {
        ++current[i];
        break;
      }
      current[i] = 0;
    }
  }
}

}  // namespace

std::vector<MultiIndex> lower_set(const MultiIndex& upper) {
  auto out = odometer(upper);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MultiIndex> cube(std::size_t dim, std::size_t n) {
  return odometer(MultiIndex(std::vector<MultiIndex::value_type>(
      dim, static_cast<MultiIndex::value_type>(n))));
}

std::size_t cube_offset(const MultiIndex& x, std::size_t side) {
  std::size_t offset = 0;
  for (auto v : x) offset = offset * side + v;
  return offset;
}

std::vector<MultiIndex> simplex(std::size_t dim, std::size_t n) {
  std::vector<MultiIndex> out;
  for (auto& alpha : cube(dim, n)) {
    if (alpha.total() <= n) out.push_back(std::move(alpha));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hypermoment
