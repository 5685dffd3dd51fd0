#pragma once

// Scalar complex arithmetic on the unit disc: Möbius maps, the degree-two
// Blaschke family B(λ) = λ(λ−α)/(1−ᾱλ), the Poincaré distance, quadratic root
// selection and closed-form 2×2 matrix algebra.

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "extremal_disc/error.hpp"

namespace xdisc {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

inline constexpr Complex kI{0.0, 1.0};

/// Module tolerances. Every operation that compares against a threshold
/// accepts an instance; the defaults are the documented constants.
struct Tolerances {
  double unimodular = 1e-12;      // | |τ| − 1 |
  double double_root = 1e-9;      // relative discriminant threshold
  double psd = 1e-10;             // Hermitian / PSD slack
  double quad_residual = 1e-10;   // relative residual of a returned root
};

bool is_finite(Complex z) noexcept;
bool in_open_disc(Complex z) noexcept;

/// e^{iθ}
Complex cis(double theta) noexcept;

/// λ ↦ τ(λ−α)/(1−ᾱλ) with |τ| = 1 and |α| < 1.
struct MoebiusSpec {
  Complex tau{1.0, 0.0};
  Complex alpha{0.0, 0.0};

  static MoebiusSpec identity() { return {}; }
  static MoebiusSpec rotation(Complex tau) { return {tau, 0.0}; }
};

void validate(const MoebiusSpec& m, const Tolerances& tol = {});

/// Evaluates without a domain check; the formula is defined off the pole.
Complex moebius_apply(const MoebiusSpec& m, Complex lambda) noexcept;

/// Evaluates on the open disc; throws DomainError when |λ| ≥ 1.
Complex moebius_eval(const MoebiusSpec& m, Complex lambda);

MoebiusSpec moebius_inverse(const MoebiusSpec& m) noexcept;

/// outer ∘ inner, renormalized to the (τ, α) form.
MoebiusSpec moebius_compose(const MoebiusSpec& outer, const MoebiusSpec& inner);

/// Recovers the automorphism agreeing with g at 0 and at `probe`. Returns
/// nullopt when the two values are inconsistent with any automorphism
/// (|τ| deviates from 1 by more than `unimodular_slack`).
std::optional<MoebiusSpec> fit_automorphism(Complex g0, Complex probe,
                                            Complex g_probe,
                                            double unimodular_slack = 1e-8);

struct FixedPoints {
  std::array<Complex, 2> roots{};
  int count = 0;              // distinct finite roots reported
  bool double_root = false;   // parabolic configuration
  bool identity = false;      // τ = 1, α = 0: every point fixed
};

/// Roots of ᾱλ² + (τ−1)λ − τα = 0, i.e. the solutions of a(λ) = λ.
FixedPoints moebius_fixed_points(const MoebiusSpec& m, const Tolerances& tol = {});

/// B(λ) = λ(λ−α)/(1−ᾱλ), α ∈ D or α = 1 exactly.
struct BlaschkeSpec {
  Complex alpha{0.0, 0.0};
};

void validate(const BlaschkeSpec& b);
Complex blaschke_eval(const BlaschkeSpec& b, Complex lambda) noexcept;

/// Poincaré distance with the atanh normalization.
double poincare(Complex z1, Complex z2);

/// Pseudo-hyperbolic distance |(z1−z2)/(1−z̄2 z1)|.
double pseudo_hyperbolic(Complex z1, Complex z2);

/// Principal square root, argument in (−π, π].
inline Complex principal_sqrt(Complex z) { return std::sqrt(z); }

/// Both roots of aλ² + bλ + c (a ≠ 0), computed without cancellation.
std::array<Complex, 2> quadratic_roots(Complex a, Complex b, Complex c);

/// The unique root of aλ² + bλ + c in the open disc. `a` may be zero.
/// Throws NoRootInDisc / TwoRootsInDisc when the root is not unique.
Complex quad_root_in_disc(Complex a, Complex b, Complex c);

/// Complex 2×2 matrix, row-major.
struct Mat2 {
  Complex m11{}, m12{}, m21{}, m22{};

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 zero() { return {}; }
  static Mat2 diag(Complex a, Complex b) { return {a, 0.0, 0.0, b}; }
  static Mat2 symmetric(Complex z1, Complex a, Complex z2) { return {z1, a, a, z2}; }

  bool is_symmetric() const noexcept { return m12 == m21; }
};

Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a, const Mat2& b);
Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator*(Complex s, const Mat2& a);

Mat2 adjoint(const Mat2& a);
Complex det(const Mat2& a);
Complex trace(const Mat2& a);
Mat2 inverse(const Mat2& a);
double max_abs_diff(const Mat2& a, const Mat2& b);

/// Largest singular value.
double operator_norm(const Mat2& a);

/// Square root of a Hermitian positive semidefinite matrix via the
/// Cayley–Hamilton closed form √M = (M + √det M · I) / √(tr M + 2√det M).
Mat2 psd_sqrt(const Mat2& a, const Tolerances& tol = {});

}  // namespace xdisc
