#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extremal_disc/complex.hpp"

namespace xdisc {

/// A point (s, p) of ℂ²; lies in the symmetrized bidisc G₂ when both roots
/// of λ² − sλ + p are in the open disc.
struct PointG2 {
  Complex s{}, p{};
};

/// A point (x₁, x₂, x₃) of ℂ³, candidate member of the tetrablock E.
struct PointE {
  Complex x1{}, x2{}, x3{};
};

enum class DomainKind { Disc, Bidisc, Ball2, G2, Tetrablock, RII, ReinhardtModel };

/// Reinhardt model {|z| + b·|w|^k < 1}. An absent k stands for infinite type,
/// modelled by the flat profile {|z| + b·exp(1 − 1/|w|²) < 1, |w| < 1}.
struct DomainTag {
  DomainKind kind = DomainKind::Disc;
  std::optional<int> k{};
  double b = 1.0;

  static DomainTag of(DomainKind kind) { return {kind, std::nullopt, 1.0}; }
  static DomainTag reinhardt(std::optional<int> k, double b);

  /// Number of complex coordinates of a sample point.
  int dimension() const noexcept;
  std::string name() const;
};

std::optional<DomainTag> parse_domain(const std::string& text);

/// Both roots of λ² − sλ + p.
std::array<Complex, 2> g2_roots(const PointG2& pt);

bool in_g2(const PointG2& pt);
bool in_e(const PointE& pt);
/// Operator norm below one; throws InvalidSpec for a non-symmetric matrix.
bool in_rii(const Mat2& m);
bool in_bidisc(Complex z1, Complex z2) noexcept;
bool in_ball2(Complex z1, Complex z2) noexcept;
bool in_reinhardt_model(std::optional<int> k, double b, Complex z, Complex w);
/// {|z₁| + A‖z′‖² < 1}: the bound satisfied near the boundary circle by the
/// normalized strongly linearly convex model domains.
bool in_slc_model(double A, const CVec& z);

/// Membership for a coordinate tuple laid out as documented on `sample`.
bool contains(const DomainTag& tag, const CVec& point);

PointG2 pi_sym(Complex l1, Complex l2);
PointE pi_cover(const Mat2& m);

/// (s, p) ↦ (ωs/2, s/2, ωp), |ω| = 1.
PointE g2_embed_e(Complex omega, const PointG2& pt);
/// x ↦ (x₁ + ωx₂, ωx₃), |ω| ≤ 1.
PointG2 e_project_g2(Complex omega, const PointE& pt);

PointE sigma_swap(const PointE& pt);

bool on_royal_g2(const PointG2& pt, double tol);
bool on_royal_e(const PointE& pt, double tol);

CVec to_coords(const PointG2& pt);
CVec to_coords(const PointE& pt);
PointG2 g2_from(const CVec& c);
PointE e_from(const CVec& c);

/// splitmix64 step; sub-stream i of seed s is seeded with splitmix64(s + i·φ64).
std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Deterministic samples from `tag`. The draw is sequential from one stream,
/// so the first n points of a request for m ≥ n points equal the n-point
/// request. Coordinates:
///   Disc [λ]; Bidisc, Ball2 [z₁, z₂]; G2 [s, p]; Tetrablock [x₁, x₂, x₃];
///   RII [m₁₁, m₁₂, m₂₂] (symmetric); ReinhardtModel [z, w].
std::vector<CVec> sample(const DomainTag& tag, std::size_t n, std::uint64_t seed);

std::vector<Mat2> sample_rii(std::size_t n, std::uint64_t seed);
std::vector<PointG2> sample_g2(std::size_t n, std::uint64_t seed);
std::vector<PointE> sample_e(std::size_t n, std::uint64_t seed);
/// Points of D × ℂ^{dim−1} satisfying the model bound for A.
std::vector<CVec> sample_slc_model(double A, int dim, std::size_t n, std::uint64_t seed);

}  // namespace xdisc
