#ifndef L1LANDSCAPE_TESTS_SUPPORT_HPP_
#define L1LANDSCAPE_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "l1landscape/linalg.h"
#include "l1landscape/stationarity.h"

namespace testing_support {

using l1landscape::Vector;

inline Vector gaussian(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
  std::normal_distribution<double> nd(0.0, scale);
  Vector v(n);
  for (double& x : v) x = nd(rng);
  return v;
}

inline Vector uniform(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> ud(lo, hi);
  Vector v(n);
  for (double& x : v) x = ud(rng);
  return v;
}

// Ground truth with entries bounded away from zero and, with probability
// `zero_prob`, exact zeros.
inline Vector ground_truth(std::mt19937_64& rng, std::size_t n, double zero_prob = 0.0) {
  std::uniform_real_distribution<double> mag(0.3, 2.0);
  std::bernoulli_distribution neg(0.5), zero(zero_prob);
  Vector v(n);
  bool any = false;
  for (double& x : v) {
    x = zero(rng) ? 0.0 : (neg(rng) ? -mag(rng) : mag(rng));
    any = any || x != 0.0;
  }
  if (!any) v[0] = 1.0;
  return v;
}

// A point of the spurious set, obtained by projecting a Gaussian sample.
inline Vector spurious_point(std::mt19937_64& rng, const Vector& ustar) {
  return l1landscape::project_to_spurious_set(gaussian(rng, ustar.size(), 1.5), ustar).point;
}

// Small integer-valued data make every residual entry exact in binary, so
// ties are genuine and not rounding artifacts.
inline Vector small_integers(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  Vector v(n);
  for (double& x : v) x = d(rng);
  return v;
}

}  // namespace testing_support

#endif  // L1LANDSCAPE_TESTS_SUPPORT_HPP_
