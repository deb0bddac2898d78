#pragma once

#include "hypermoment/scalar.hpp"

namespace testing {

inline hypermoment::Scalar q(long p, long d = 1) {
  hypermoment::Rational r(p, static_cast<unsigned long>(d));
  r.canonicalize();
  return hypermoment::Scalar(r);
}

}  // namespace testing
