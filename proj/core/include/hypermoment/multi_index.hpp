#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "hypermoment/scalar.hpp"

namespace hypermoment {

// A point of ℕ^d. Doubles as a derivative order α and as a hypergroup
// element; both live on the same lattice.
class MultiIndex {
 public:
  using value_type = std::uint32_t;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t dim) : entries_(dim, 0) {}
  MultiIndex(std::initializer_list<value_type> entries) : entries_(entries) {}
  explicit MultiIndex(std::vector<value_type> entries)
      : entries_(std::move(entries)) {}

  static MultiIndex unit(std::size_t dim, std::size_t i);

  std::size_t size() const { return entries_.size(); }
  value_type operator[](std::size_t i) const { return entries_[i]; }
  value_type& operator[](std::size_t i) { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<value_type>& entries() const { return entries_; }

  // |α|
  std::uint64_t total() const;
  value_type max_entry() const;
  bool is_zero() const;

  // Componentwise partial order β ≤ α.
  bool componentwise_le(const MultiIndex& other) const;

  MultiIndex& operator+=(const MultiIndex& other);
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) {
    return a += b;
  }
  // Requires b ≤ a componentwise.
  friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  // Graded lexicographic: total degree first, then lexicographic with the
  // first coordinate most significant.
  friend std::strong_ordering operator<=>(const MultiIndex& a,
                                          const MultiIndex& b);

  // Concatenation, used for product hypergroups.
  friend MultiIndex concat(const MultiIndex& a, const MultiIndex& b);

 private:
  std::vector<value_type> entries_;
};

std::string to_string(const MultiIndex& alpha);

// Π binomial(α_i, β_i); zero unless β ≤ α.
Integer binomial(const MultiIndex& alpha, const MultiIndex& beta);

// α! = Π α_i!
Integer factorial(const MultiIndex& alpha);

// All β ≤ upper in graded lexicographic order.
std::vector<MultiIndex> lower_set(const MultiIndex& upper);

// {0..n}^d in lexicographic (odometer) order, first coordinate slowest.
std::vector<MultiIndex> cube(std::size_t dim, std::size_t n);

// All α ∈ ℕ^d with |α| ≤ n, graded lexicographic order.
std::vector<MultiIndex> simplex(std::size_t dim, std::size_t n);

// Position of x inside the cube {0..side-1}^d under the odometer order.
std::size_t cube_offset(const MultiIndex& x, std::size_t side);

}  // namespace hypermoment
