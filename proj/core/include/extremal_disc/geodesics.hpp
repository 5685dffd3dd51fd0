#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "extremal_disc/complex.hpp"
#include "extremal_disc/domains.hpp"

namespace xdisc {

/// g(λ) = c·λ^m·∏(λ−aᵢ)/(1−āᵢλ), optionally followed by the disc automorphism
/// w ↦ (w − s)/(1 − s̄w). Without the shift the sup-norm over D is |c|.
struct SelfMapSpec {
  Complex scale{0.0, 0.0};
  int power = 0;
  std::vector<Complex> zeros;
  std::optional<Complex> shift;

  static SelfMapSpec constant(Complex c) { return {c, 0, {}, std::nullopt}; }
  static SelfMapSpec monomial(Complex c, int m) { return {c, m, {}, std::nullopt}; }

  Complex operator()(Complex lambda) const noexcept;

  double sup_norm() const noexcept;
  int degree() const noexcept { return power + static_cast<int>(zeros.size()); }
  bool is_constant() const noexcept { return degree() == 0 || scale == 0.0; }
  bool is_unimodular_constant(double tol = 1e-12) const noexcept;
  /// Degree-one inner map, i.e. a disc automorphism.
  bool is_automorphism(double tol = 1e-12) const noexcept;
};

void validate(const SelfMapSpec& g);

struct BlaschkeForm {
  BlaschkeSpec b;
};

struct AutoForm {
  MoebiusSpec a;
};

/// λ ↦ π(B(√λ), B(−√λ)) or λ ↦ π(λ, a(λ)).
using G2GeodesicSpec = std::variant<BlaschkeForm, AutoForm>;

/// Z(λ) = λ or Z(λ) = λ·W(λ). A unimodular constant W gives Z = uλ, which
/// behaves like the identity case.
struct ZSpec {
  bool identity = true;
  SelfMapSpec w{};

  static ZSpec id() { return {}; }
  static ZSpec times_lambda(SelfMapSpec w) { return {false, std::move(w)}; }

  Complex operator()(Complex lambda) const noexcept;
  bool identity_like(double tol = 1e-12) const noexcept;
  /// u with Z(λ) = uλ; only meaningful when identity_like().
  Complex rotation() const noexcept;
};

/// φ(λ) = (ω₁(ψ+C)/(1+C), ω₂λ(1+Cψ)/(1+C), ω₁ω₂λψ) with ψ(0) = −C.
struct Form0 {
  Complex omega1{1.0, 0.0}, omega2{1.0, 0.0};
  double c = 0.0;
  SelfMapSpec psi{};

  /// ψ = (ψ̂ − C)/(1 − Cψ̂) for ψ̂(0) = 0; for C = 1 this is ψ ≡ −1.
  static Form0 from_psi_hat(Complex omega1, Complex omega2, double c, SelfMapSpec psi_hat);
};

struct FormVA {
  double beta = 0.5;
  Complex a{1.0, 0.0}, b{}, c{}, d{1.0, 0.0};
  ZSpec z{};
};

using EGeodesicSpec = std::variant<Form0, FormVA>;

/// λ ↦ (λ, g₁(λ), …, g_k(λ)) in the polydisc D^{k+1}.
struct PolydiscGraph {
  std::vector<SelfMapSpec> g;
};

/// λ ↦ (λ, 0, …, 0) in a domain with `dim` coordinates.
struct Axis {
  int dim = 2;
};

/// λ ↦ π(a(λ), b(λ)) in G₂.
struct G2Pair {
  MoebiusSpec a, b;
};

using GeodesicSpec = std::variant<PolydiscGraph, Axis, G2GeodesicSpec, G2Pair, EGeodesicSpec>;

/// Verdict of spec validation.
struct Validity {
  bool valid = true;
  std::string reason;

  explicit operator bool() const noexcept { return valid; }
  static Validity ok() { return {}; }
  static Validity invalid(std::string why) { return {false, std::move(why)}; }
};

struct GeodesicOptions {
  double unimodular = 1e-12;
  double constraint = 1e-12;   // FormVA unitary constraints, ψ(0) = −C
  double equality = 1e-9;      // |cd|(1+β²) ≤ β slack
  double delta_guard = 1e-13;
};

Validity validate_spec(const G2GeodesicSpec& spec, const GeodesicOptions& opt = {});
Validity validate_spec(const EGeodesicSpec& spec, const GeodesicOptions& opt = {});
Validity validate_spec(const G2Pair& spec, const GeodesicOptions& opt = {});
Validity validate_spec(const GeodesicSpec& spec, const GeodesicOptions& opt = {});

PointG2 eval_g2_geodesic(const G2GeodesicSpec& spec, Complex lambda);
/// Closed form f(λ) = (2λ(1−|α|²)/(1−ᾱ²λ), λ(λ−α²)/(1−ᾱ²λ)) of the Blaschke
/// form; α = 1 gives (0, −λ). Used to cross-check the symmetric evaluation.
PointG2 g2_blaschke_closed_form(const BlaschkeSpec& b, Complex lambda);

/// Throws VanishingDenominator when |Δ(λ)| ≤ opt.delta_guard.
PointE eval_e_geodesic(const EGeodesicSpec& spec, Complex lambda, const GeodesicOptions& opt = {});
/// Form0 written in terms of ψ̂ (C < 1 only).
PointE eval_form1(const Form0& spec, Complex lambda);
/// ψ̂ = (ψ + C)/(1 + Cψ).
Complex form0_psi_hat(const Form0& spec, Complex lambda);

std::array<Complex, 2> eval_bidisc_geodesic(const SelfMapSpec& g, Complex lambda);
std::array<Complex, 2> eval_ball_geodesic(Complex lambda);

/// Coordinates of f(λ), laid out as for `sample`.
CVec eval_geodesic(const GeodesicSpec& spec, Complex lambda);

/// Target domain of a geodesic (Axis defaults to the bidisc layout).
int geodesic_dimension(const GeodesicSpec& spec);

/// |c||d|(1+β²).
double formva_cd_measure(const FormVA& spec);

}  // namespace xdisc
