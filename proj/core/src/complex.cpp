#include "extremal_disc/complex.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace xdisc {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::NoRootInDisc: return "NoRootInDisc";
    case ErrorCode::TwoRootsInDisc: return "TwoRootsInDisc";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotPositiveSemidefinite: return "NotPositiveSemidefinite";
    case ErrorCode::VanishingDenominator: return "VanishingDenominator";
    case ErrorCode::RootRecovery: return "RootRecovery";
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

bool in_open_disc(Complex z) noexcept { return std::norm(z) < 1.0; }

Complex cis(double theta) noexcept { return {std::cos(theta), std::sin(theta)}; }

namespace {

std::string fmt(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

}  // namespace

void validate(const MoebiusSpec& m, const Tolerances& tol) {
  if (!is_finite(m.tau) || !is_finite(m.alpha)) {
    fail(ErrorCode::InvalidSpec, "Moebius parameters must be finite");
  }
  if (std::abs(std::abs(m.tau) - 1.0) > tol.unimodular) {
    fail(ErrorCode::InvalidSpec, "Moebius tau must be unimodular, got " + fmt(m.tau));
  }
  if (!in_open_disc(m.alpha)) {
    fail(ErrorCode::InvalidSpec, "Moebius alpha must lie in the open disc, got " + fmt(m.alpha));
  }
}

Complex moebius_apply(const MoebiusSpec& m, Complex lambda) noexcept {
  return m.tau * (lambda - m.alpha) / (1.0 - std::conj(m.alpha) * lambda);
}

Complex moebius_eval(const MoebiusSpec& m, Complex lambda) {
  if (!in_open_disc(lambda)) {
    fail(ErrorCode::DomainError, "moebius_eval: |lambda| >= 1 at " + fmt(lambda));
  }
  return moebius_apply(m, lambda);
}

MoebiusSpec moebius_inverse(const MoebiusSpec& m) noexcept {
  // w = τ(λ−α)/(1−ᾱλ)  ⇔  λ = τ̄(w + τα)/(1 + conj(τα)w)
  return {std::conj(m.tau), -m.tau * m.alpha};
}

MoebiusSpec moebius_compose(const MoebiusSpec& outer, const MoebiusSpec& inner) {
  // λ ↦ (pλ + q)/(rλ + s) with matrix [[τ, −τα], [−ᾱ, 1]].
  auto mat = [](const MoebiusSpec& m) {
    return Mat2{m.tau, -m.tau * m.alpha, -std::conj(m.alpha), 1.0};
  };
  const Mat2 prod = mat(outer) * mat(inner);
  if (prod.m22 == 0.0 || prod.m11 == 0.0) {
    fail(ErrorCode::InvalidSpec, "moebius_compose: degenerate product");
  }
  MoebiusSpec out{prod.m11 / prod.m22, -prod.m12 / prod.m11};
  out.tau /= std::abs(out.tau);
  return out;
}

std::optional<MoebiusSpec> fit_automorphism(Complex g0, Complex probe, Complex g_probe,
                                            double unimodular_slack) {
  if (!in_open_disc(g0) || probe == 0.0) return std::nullopt;
  const Complex tau = (g_probe - g0) / (probe * (1.0 - std::conj(g0) * g_probe));
  if (!is_finite(tau) || std::abs(std::abs(tau) - 1.0) > unimodular_slack) {
    return std::nullopt;
  }
  const Complex unit = tau / std::abs(tau);
  return MoebiusSpec{unit, -std::conj(unit) * g0};
}

FixedPoints moebius_fixed_points(const MoebiusSpec& m, const Tolerances& tol) {
  validate(m, tol);
  FixedPoints out;
  const Complex a = std::conj(m.alpha);
  const Complex b = m.tau - 1.0;
  const Complex c = -m.tau * m.alpha;
  if (m.alpha == 0.0) {
    if (std::abs(b) <= tol.unimodular) {
      out.identity = true;
      return out;
    }
    out.roots[0] = 0.0;
    out.count = 1;
    return out;
  }
  const double scale = std::max({1.0, std::abs(a), std::abs(b), std::abs(c)});
  const Complex disc = b * b - 4.0 * a * c;
  if (std::abs(disc) <= tol.double_root * scale) {
    out.roots[0] = out.roots[1] = -b / (2.0 * a);
    out.count = 1;
    out.double_root = true;
    return out;
  }
  out.roots = quadratic_roots(a, b, c);
  out.count = 2;
  return out;
}

void validate(const BlaschkeSpec& b) {
  if (!is_finite(b.alpha)) fail(ErrorCode::InvalidSpec, "Blaschke alpha must be finite");
  if (!(in_open_disc(b.alpha) || b.alpha == Complex(1.0, 0.0))) {
    fail(ErrorCode::InvalidSpec, "Blaschke alpha must lie in D or equal 1, got " + fmt(b.alpha));
  }
}

Complex blaschke_eval(const BlaschkeSpec& b, Complex lambda) noexcept {
  if (b.alpha == Complex(1.0, 0.0)) return -lambda;  // λ(λ−1)/(1−λ)
  return lambda * (lambda - b.alpha) / (1.0 - std::conj(b.alpha) * lambda);
}

double pseudo_hyperbolic(Complex z1, Complex z2) {
  if (!in_open_disc(z1) || !in_open_disc(z2)) {
    fail(ErrorCode::DomainError, "poincare: arguments must lie in the open disc");
  }
  return std::abs((z1 - z2) / (1.0 - std::conj(z2) * z1));
}

double poincare(Complex z1, Complex z2) {
  const double m = pseudo_hyperbolic(z1, z2);
  return std::atanh(std::min(m, std::nextafter(1.0, 0.0)));
}

std::array<Complex, 2> quadratic_roots(Complex a, Complex b, Complex c) {
  const Complex sq = std::sqrt(b * b - 4.0 * a * c);
  // Pick the sign that avoids cancellation in b ± √disc.
  const Complex q = (std::real(std::conj(b) * sq) >= 0.0) ? -0.5 * (b + sq) : -0.5 * (b - sq);
  if (q == 0.0) return {Complex{0.0}, Complex{0.0}};
  return {q / a, c / q};
}

Complex quad_root_in_disc(Complex a, Complex b, Complex c) {
  if (a == 0.0) {
    if (b == 0.0) fail(ErrorCode::NoRootInDisc, "quad_root_in_disc: degenerate polynomial");
    const Complex r = -c / b;
    if (!in_open_disc(r)) fail(ErrorCode::NoRootInDisc, "quad_root_in_disc: linear root outside disc");
    return r;
  }
  const auto roots = quadratic_roots(a, b, c);
  const bool in0 = in_open_disc(roots[0]);
  const bool in1 = in_open_disc(roots[1]);
  if (in0 && in1) fail(ErrorCode::TwoRootsInDisc, "quad_root_in_disc: both roots in disc");
  if (!in0 && !in1) fail(ErrorCode::NoRootInDisc, "quad_root_in_disc: no root in disc");
  return in0 ? roots[0] : roots[1];
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
  return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
  return {a.m11 - b.m11, a.m12 - b.m12, a.m21 - b.m21, a.m22 - b.m22};
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
          a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

Mat2 operator*(Complex s, const Mat2& a) {
  return {s * a.m11, s * a.m12, s * a.m21, s * a.m22};
}

Mat2 adjoint(const Mat2& a) {
  return {std::conj(a.m11), std::conj(a.m21), std::conj(a.m12), std::conj(a.m22)};
}

Complex det(const Mat2& a) { return a.m11 * a.m22 - a.m12 * a.m21; }

Complex trace(const Mat2& a) { return a.m11 + a.m22; }

Mat2 inverse(const Mat2& a) {
  const Complex d = det(a);
  const double scale = std::max({std::abs(a.m11), std::abs(a.m12), std::abs(a.m21), std::abs(a.m22)});
  if (d == 0.0 || std::abs(d) <= 1e-300 + 1e-15 * scale * scale) {
    fail(ErrorCode::SingularMatrix, "inverse: singular 2x2 matrix");
  }
  return {a.m22 / d, -a.m12 / d, -a.m21 / d, a.m11 / d};
}

double max_abs_diff(const Mat2& a, const Mat2& b) {
  return std::max({std::abs(a.m11 - b.m11), std::abs(a.m12 - b.m12),
                   std::abs(a.m21 - b.m21), std::abs(a.m22 - b.m22)});
}

double operator_norm(const Mat2& a) {
  const double fro = std::norm(a.m11) + std::norm(a.m12) + std::norm(a.m21) + std::norm(a.m22);
  const double d = std::norm(det(a));
  const double disc = std::max(0.0, fro * fro - 4.0 * d);
  return std::sqrt(0.5 * (fro + std::sqrt(disc)));
}

Mat2 psd_sqrt(const Mat2& a, const Tolerances& tol) {
  if (std::abs(a.m12 - std::conj(a.m21)) > tol.psd || std::abs(a.m11.imag()) > tol.psd ||
      std::abs(a.m22.imag()) > tol.psd) {
    fail(ErrorCode::NotPositiveSemidefinite, "psd_sqrt: matrix is not Hermitian");
  }
  const double tr = a.m11.real() + a.m22.real();
  const double dt = det(a).real();
  const double half = 0.5 * tr;
  const double spread = std::sqrt(std::max(0.0, half * half - dt));
  if (half - spread < -tol.psd) {
    fail(ErrorCode::NotPositiveSemidefinite, "psd_sqrt: negative eigenvalue");
  }
  const double s = std::sqrt(std::max(0.0, dt));
  const double t = std::sqrt(std::max(0.0, tr + 2.0 * s));
  if (t == 0.0) return Mat2::zero();
  return Complex(1.0 / t) * (a + Complex(s) * Mat2::identity());
}

}  // namespace xdisc
