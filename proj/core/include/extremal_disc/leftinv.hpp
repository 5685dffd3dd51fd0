#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "extremal_disc/complex.hpp"
#include "extremal_disc/domains.hpp"
#include "extremal_disc/geodesics.hpp"

namespace xdisc {

/// Ψ_ω(s, p) = (2p − ωs)/(2 − ω̄s), |ω| ≤ 1, on G₂.
struct PsiOmega {
  Complex omega{1.0, 0.0};
};

/// Φ_ω(z) = (ωz₃ − z₁)/(ωz₂ − 1), |ω| = 1, on E; `swapped` composes with σ.
struct PhiOmega {
  Complex omega{1.0, 0.0};
  bool swapped = false;
};

/// Φ̃_ω(z): the root in D of ωz₂λ² − (1 + ωz₃)λ + z₁.
struct PhiTilde {
  Complex omega{1.0, 0.0};
  bool swapped = false;
};

/// z₁/√(1 + γz₂²) on the ball.
struct BallGamma {
  Complex gamma{};
};

/// z₁/√(1 − A·z_j²) on a model domain |z₁| + A‖z′‖² < 1; j is 1-based, j ≥ 2.
struct ModelGAj {
  double a = 0.0;
  int j = 2;
};

/// z/(1 − βw^k) on {|z| + b|w|^k < 1}.
struct ReinhardtBeta {
  double beta = 0.0;
  int k = 2;
};

/// (tz₁ + (1−t)z₂ − z₁z₂h)/(1 − ((1−t)z₁ + tz₂)h) with h(z) = h₁(z₁)·h₂(z₂).
struct Retract {
  double t = 0.5;
  SelfMapSpec h1 = SelfMapSpec::constant(0.0);
  SelfMapSpec h2 = SelfMapSpec::constant(1.0);
};

/// tz₁ + (1−t)γ̄z₂, left inverse of λ ↦ (λ, γλ).
struct BidiscLinear {
  double t = 1.0;
  Complex gamma{1.0, 0.0};
};

/// Left inverse of λ ↦ π(a(λ), b(λ)) when a⁻¹∘b is parabolic; h is derived
/// from (a, b) by `parabolic_h` and stored so the record is self-contained.
struct G2Parabolic {
  MoebiusSpec a, b;
  Complex h{1.0, 0.0};
};

/// h: R_II → D̄ given by a base map after a chain of automorphisms,
/// h = base ∘ φ_{chain[n−1]} ∘ … ∘ φ_{chain[0]}.
struct RIIMapSpec {
  enum class Base { TopLeft, Constant };
  Base base = Base::TopLeft;
  Complex value{};              // Constant base only
  std::vector<Mat2> chain;

  static RIIMapSpec canonical(double beta);
  static RIIMapSpec constant(Complex c) { return {Base::Constant, c, {}}; }
};

/// F_h(z) = ½G_h(x₊) + ½G_h(x₋), x± = [[z₁, ±a], [±a, z₂]], a² = z₁z₂ − z₃.
struct TetraFh {
  double beta = 0.5;
  RIIMapSpec h = RIIMapSpec::canonical(0.5);
  bool swapped = false;
};

/// z ↦ z_index (1-based).
struct Projection {
  int index = 1;
};

struct ConstantMap {
  Complex value{};
};

using Family = std::variant<PsiOmega, PhiOmega, PhiTilde, BallGamma, ModelGAj, ReinhardtBeta, Retract,
                            BidiscLinear, G2Parabolic, TetraFh, Projection, ConstantMap>;

/// F = post ∘ family.
struct LeftInverseSpec {
  Family family;
  MoebiusSpec post{};

  static LeftInverseSpec of(Family f, MoebiusSpec post = {}) { return {std::move(f), post}; }
};

std::string family_name(const Family& f);

/// Throws InvalidSpec when a parameter leaves its admissible range.
void validate(const LeftInverseSpec& spec);

/// Domain the family is defined on, when it is one of the sampled domains.
std::optional<DomainTag> native_domain(const Family& f);

/// Families whose values may reach the unit circle inside the domain.
bool closed_ball_family(const LeftInverseSpec& spec);

Complex psi_omega(Complex omega, const PointG2& pt);
Complex phi_omega(Complex omega, const PointE& pt, bool swapped = false);
Complex phi_tilde(Complex omega, const PointE& pt, bool swapped = false);
/// 2z₁/(1 + ωz₃ + √((1+ωz₃)² − 4ωz₁z₂)), principal branch; nullopt when the
/// denominator has modulus ≤ min_den.
std::optional<Complex> phi_tilde_closed_form(Complex omega, const PointE& pt, bool swapped = false,
                                             double min_den = 1e-6);
Complex ball_inverse(Complex gamma, Complex z1, Complex z2);
/// Throws DomainError when z violates |z₁| + A‖z′‖² < 1.
Complex model_gaj(double a, int j, const CVec& z);
Complex reinhardt_inverse(double beta, int k, Complex z, Complex w);
Complex retract_map(const Retract& r, Complex z1, Complex z2);
Complex bidisc_linear_inverse(double t, Complex gamma, Complex z1, Complex z2);

/// h = (1 − τ̄_c)/(2α_c) for c = a⁻¹∘b. Throws InvalidSpec unless c is
/// parabolic (|1 − τ_c| = 2|α_c| ≠ 0 within tol).
Complex parabolic_h(const MoebiusSpec& a, const MoebiusSpec& b, double tol = 1e-9);
G2Parabolic make_g2_parabolic(const MoebiusSpec& a, const MoebiusSpec& b, double tol = 1e-9);
/// Evaluated over both assignments of the roots of λ² − sλ + p; throws
/// RootRecovery when the two disagree beyond 1e−9 (scaled).
Complex g2_parabolic_inverse(const G2Parabolic& spec, const PointG2& pt);

/// B(β) = [[0, β], [β, 0]].
Mat2 b_matrix(double beta);
/// φ_a(x) = (1−aa*)^{−1/2}(x−a)(1−a*x)^{−1}(1−a*a)^{1/2}.
Mat2 phi_a_automorphism(const Mat2& a, const Mat2& x);
Complex rii_h_eval(const RIIMapSpec& spec, const Mat2& x);
/// G_h at a symmetric x = [[z₁, a], [a, z₂]] with h evaluated to `h_value`.
Complex g_h(double beta, Complex h_value, const Mat2& x);
Complex tetra_f_h(double beta, const RIIMapSpec& h, const PointE& pt, bool swapped = false);

/// Family value before the post-composition.
Complex eval_family(const Family& f, const CVec& z);
Complex eval_left_inverse(const LeftInverseSpec& spec, const CVec& z);

}  // namespace xdisc
