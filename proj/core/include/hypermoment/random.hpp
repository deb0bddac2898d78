#pragma once

#include <cstdint>
#include <vector>

#include "hypermoment/multi_index.hpp"
#include "hypermoment/scalar.hpp"

namespace hypermoment {

// SplitMix64 (Steele, Lea, Flood): state advances by 0x9E3779B97F4A7C15 and
// the output is mixed with the multipliers 0xBF58476D1CE4E5B9 and
// 0x94D049BB133111EB. All randomized trials draw from this generator so runs
// are reproducible from the seed alone.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t v;
    do {
      v = (*this)();
    } while (v >= limit);
    return v % bound;
  }

  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::uint64_t state_;
};

// p/q with |p| ≤ bound and 1 ≤ q ≤ bound.
inline Rational random_rational(SplitMix64& rng, long bound = 99) {
  Rational q(Integer(static_cast<long>(rng.between(-bound, bound))),
             Integer(static_cast<long>(rng.between(1, bound))));
  q.canonicalize();
  return q;
}

inline MultiIndex random_element(SplitMix64& rng, std::size_t dim, std::size_t box) {
  MultiIndex x(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    x[i] = static_cast<MultiIndex::value_type>(rng.below(box + 1));
  }
  return x;
}

}  // namespace hypermoment
