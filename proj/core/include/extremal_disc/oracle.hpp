#pragma once

// Sampling-based verification. Every sup/max is reduced deterministically:
// the result depends on (seed, n) only, never on the thread count.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "extremal_disc/domains.hpp"
#include "extremal_disc/geodesics.hpp"
#include "extremal_disc/leftinv.hpp"

namespace xdisc {

struct VerificationReport {
  std::string check;
  double max_residual = 0.0;
  double threshold = 0.0;
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;
  bool pass = false;
  CVec worst_point;
  bool closed_ball = false;
};

struct DistinctReport {
  bool distinct = false;
  double sup_difference = 0.0;
  double threshold = 1e-3;
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;
  CVec worst_point;
};

struct EqualityReport {
  double lb = 0.0;
  double ub = 0.0;
  bool pass = false;
};

inline constexpr double kTolIdentity = 1e-9;
inline constexpr double kTolDistinct = 1e-3;

/// Threads used by the reductions: EXTREMAL_DISC_THREADS when set, otherwise
/// the hardware concurrency.
unsigned thread_count();

/// Largest value of fn(i) over i < n with the smallest index among ties.
/// Exceptions thrown by fn propagate after all workers finish.
std::pair<double, std::size_t> parallel_max(std::size_t n, const std::function<double(std::size_t)>& fn);

/// Sunflower grid of n points in the disc of radius r_max.
CVec lambda_grid(std::size_t n, double r_max = 0.95);

/// pass iff sup|F| < 1, or sup|F| ≤ 1 + 1e−12 for closed-ball families.
VerificationReport verify_into_disc(const LeftInverseSpec& f, const DomainTag& tag, std::size_t n,
                                    std::uint64_t seed);
VerificationReport verify_into_disc(const LeftInverseSpec& f, const std::vector<CVec>& points,
                                    std::uint64_t seed = 0);

/// max over the grid of |F(f(λ)) − λ|; pass iff ≤ threshold.
VerificationReport verify_left_inverse(const LeftInverseSpec& f, const GeodesicSpec& g, std::size_t grid_n,
                                       double threshold = kTolIdentity);
VerificationReport verify_left_inverse(const LeftInverseSpec& f, const GeodesicSpec& g, const CVec& grid,
                                       double threshold = kTolIdentity);

DistinctReport distinct_maps(const LeftInverseSpec& f1, const LeftInverseSpec& f2, const DomainTag& tag,
                             std::size_t n, std::uint64_t seed, double threshold = kTolDistinct);
DistinctReport distinct_maps(const LeftInverseSpec& f1, const LeftInverseSpec& f2,
                             const std::vector<CVec>& points, double threshold = kTolDistinct);

/// p(F(w), F(z)).
double caratheodory_lb(const LeftInverseSpec& f, const CVec& w, const CVec& z);
/// p(λ₁, λ₂), the bound supplied by the disc through f(λ₁), f(λ₂).
double lempert_ub_from_geodesic(const GeodesicSpec& g, Complex l1, Complex l2);
/// lb at (f(λ₁), f(λ₂)) against ub; pass iff |lb − ub| ≤ tol.
EqualityReport equality_check(const GeodesicSpec& g, const LeftInverseSpec& f, Complex l1, Complex l2,
                              double tol = kTolIdentity);

}  // namespace xdisc
