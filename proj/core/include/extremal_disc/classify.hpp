#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "extremal_disc/geodesics.hpp"
#include "extremal_disc/leftinv.hpp"
#include "extremal_disc/oracle.hpp"

namespace xdisc {

enum class Verdict { Unique, NonUnique, InvalidSpec };

const char* to_string(Verdict v) noexcept;

struct Classification {
  Verdict verdict = Verdict::InvalidSpec;
  std::string reason;                        // InvalidSpec only
  std::vector<LeftInverseSpec> witnesses;
  std::vector<double> residuals;             // per witness, max |F(f(λ)) − λ|
  double min_pairwise_difference = 0.0;      // NonUnique with ≥ 2 witnesses
  std::optional<GeodesicSpec> geodesic;      // what the witnesses invert
  std::optional<DomainTag> domain;
  std::string note;
};

struct ClassifyOptions {
  double equality = 1e-9;        // equality-manifold tolerance
  double identity = kTolIdentity;
  double distinct = kTolDistinct;
  std::size_t grid = 200;
  std::size_t omega_grid = 4096;
  std::size_t distinct_samples = 4096;
  std::uint64_t seed = 42;
  int witness_count = 4;         // witnesses shipped for continuum families
};

/// (1 + ταω̄)²/τ is real and positive: |Im| ≤ 1e−9 and Re > 1e−9.
bool psi_admissible(Complex tau, Complex alpha, Complex omega);

/// One connected piece of the admissible set on the circle.
struct OmegaCluster {
  double theta = 0.0;            // refined angle of ω
  double lo = 0.0, hi = 0.0;     // bracketing arc
  Complex omega{};
  bool tangent = false;          // touching rather than crossing
};

/// Scans a uniform grid of T for zeros of Im Q with Re Q > 0,
/// Q(ω) = (1 + ταω̄)²/τ. Crossings are bisected and tangencies refined by
/// golden-section search, both to 1e−6 in angle; zeros closer than that are
/// merged.
std::vector<OmegaCluster> admissible_omega_set(Complex tau, Complex alpha, std::size_t grid_size);

Classification classify_g2(const G2GeodesicSpec& spec, const ClassifyOptions& opt = {});
Classification classify_e(const EGeodesicSpec& spec, const ClassifyOptions& opt = {});
/// Model domain {|z| + b|w|^k < 1}; k absent means infinite type.
Classification reinhardt_classify(std::optional<int> k, double b, const ClassifyOptions& opt = {});

struct ConvexCertificate {
  enum class Verdict { Unique, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  Complex witness_lambda{};
  int rank = 0;
};

using GeodesicFn = std::function<CVec(Complex)>;

/// Throws EndpointMismatch unless every fʲ(0) = w and fʲ(σ) = z within 1e−10.
ConvexCertificate convex_uniqueness_certificate(const std::vector<GeodesicFn>& geodesics, const CVec& w,
                                                const CVec& z, Complex sigma, const CVec& lambda_grid,
                                                double rel_threshold = 1e-8);

/// |σ|² < max(|B(σ)|, |B(−σ)|) with B(λ) = λ(λ−α)/(1−ᾱλ).
bool nondeg_3pt(Complex alpha, Complex sigma);

}  // namespace xdisc
