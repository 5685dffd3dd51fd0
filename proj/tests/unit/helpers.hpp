#pragma once

#include <doctest.h>

#include <cmath>
#include <random>

#include "extremal_disc/complex.hpp"

namespace testing {

using xdisc::Complex;

inline void check_close(Complex got, Complex want, double tol) {
  INFO("got " << got << ", want " << want);
  CHECK(std::abs(got - want) <= tol);
}

/// Uniform point of the disc of radius r.
inline Complex disc_point(std::mt19937_64& rng, double r = 1.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double rad = r * std::sqrt(u(rng));
  return std::polar(rad, 2.0 * M_PI * u(rng));
}

inline Complex circle_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
  return std::polar(1.0, u(rng));
}

}  // namespace testing
