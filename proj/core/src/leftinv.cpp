#include "extremal_disc/leftinv.hpp"

#include <algorithm>
#include <cmath>

namespace xdisc {

namespace {

constexpr double kDenGuard = 1e-14;

Complex guarded_div(Complex num, Complex den, const char* what) {
  if (std::abs(den) <= kDenGuard) fail(ErrorCode::VanishingDenominator, what);
  return num / den;
}

PointE maybe_swap(const PointE& pt, bool swapped) { return swapped ? sigma_swap(pt) : pt; }

void need(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::InvalidSpec, what);
}

bool unimodular(Complex z) { return std::abs(std::abs(z) - 1.0) <= 1e-12; }

void need_dim(const CVec& z, std::size_t n, const char* family) {
  if (z.size() != n) {
    fail(ErrorCode::DomainError, std::string(family) + ": expected " + std::to_string(n) + " coordinates");
  }
}

}  // namespace

RIIMapSpec RIIMapSpec::canonical(double beta) {
  return {Base::TopLeft, 0.0, {b_matrix(-beta)}};
}

std::string family_name(const Family& f) {
  static const char* names[] = {"psi", "phi", "phitilde", "ball", "gaj", "reinhardt",
                                "retract", "bidisc-linear", "g2-parabolic", "fh", "projection",
                                "constant"};
  return names[f.index()];
}

void validate(const LeftInverseSpec& spec) {
  try {
    validate(spec.post);
  } catch (const Error& e) {
    fail(ErrorCode::InvalidSpec, std::string("post-composition: ") + e.what());
  }
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PsiOmega>) {
          need(std::abs(s.omega) <= 1.0 + 1e-12, "psi: |omega| must not exceed 1");
        } else if constexpr (std::is_same_v<T, PhiOmega> || std::is_same_v<T, PhiTilde>) {
          need(unimodular(s.omega), "phi: omega must be unimodular");
        } else if constexpr (std::is_same_v<T, BallGamma>) {
          need(std::abs(s.gamma) <= 1.0 + 1e-12, "ball: |gamma| must not exceed 1");
        } else if constexpr (std::is_same_v<T, ModelGAj>) {
          need(s.a >= 0.0, "gaj: A must be nonnegative");
          need(s.j >= 2, "gaj: j must index a coordinate of z'");
        } else if constexpr (std::is_same_v<T, ReinhardtBeta>) {
          need(s.beta >= 0.0, "reinhardt: beta must be nonnegative");
          need(s.k >= 1, "reinhardt: k must be positive");
        } else if constexpr (std::is_same_v<T, Retract>) {
          need(s.t >= 0.0 && s.t <= 1.0, "retract: t must lie in [0, 1]");
          validate(s.h1);
          validate(s.h2);
          need(s.h1.sup_norm() * s.h2.sup_norm() <= 1.0 + 1e-12, "retract: sup|h| must not exceed 1");
        } else if constexpr (std::is_same_v<T, BidiscLinear>) {
          need(s.t >= 0.0 && s.t <= 1.0, "bidisc-linear: t must lie in [0, 1]");
          need(unimodular(s.gamma), "bidisc-linear: gamma must be unimodular");
        } else if constexpr (std::is_same_v<T, G2Parabolic>) {
          validate(s.a);
          validate(s.b);
          const Complex h = parabolic_h(s.a, s.b);
          need(std::abs(h - s.h) <= 1e-9, "g2-parabolic: h does not match the pair (a, b)");
        } else if constexpr (std::is_same_v<T, TetraFh>) {
          need(s.beta > 0.0 && s.beta < 1.0, "fh: beta must lie in (0, 1)");
          for (const Mat2& a : s.h.chain) {
            need(a.is_symmetric() && operator_norm(a) < 1.0, "fh: chain matrices must lie in R_II");
          }
          if (s.h.base == RIIMapSpec::Base::Constant) {
            need(std::abs(s.h.value) <= 1.0 + 1e-12, "fh: constant h must lie in the closed disc");
          }
        } else if constexpr (std::is_same_v<T, Projection>) {
          need(s.index >= 1, "projection: index is 1-based");
        } else if constexpr (std::is_same_v<T, ConstantMap>) {
          need(is_finite(s.value), "constant: value must be finite");
        }
      },
      spec.family);
}

std::optional<DomainTag> native_domain(const Family& f) {
  return std::visit(
      [](const auto& s) -> std::optional<DomainTag> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PsiOmega> || std::is_same_v<T, G2Parabolic>) {
          return DomainTag::of(DomainKind::G2);
        } else if constexpr (std::is_same_v<T, PhiOmega> || std::is_same_v<T, PhiTilde> ||
                             std::is_same_v<T, TetraFh>) {
          return DomainTag::of(DomainKind::Tetrablock);
        } else if constexpr (std::is_same_v<T, BallGamma>) {
          return DomainTag::of(DomainKind::Ball2);
        } else if constexpr (std::is_same_v<T, Retract> || std::is_same_v<T, BidiscLinear>) {
          return DomainTag::of(DomainKind::Bidisc);
        } else if constexpr (std::is_same_v<T, ReinhardtBeta>) {
          return DomainTag::reinhardt(s.k, 1.0);
        } else {
          return std::nullopt;
        }
      },
      f);
}

bool closed_ball_family(const LeftInverseSpec& spec) {
  if (const auto* r = std::get_if<Retract>(&spec.family)) {
    return r->h1.sup_norm() * r->h2.sup_norm() >= 1.0 - 1e-12;
  }
  return false;
}

Complex psi_omega(Complex omega, const PointG2& pt) {
  return guarded_div(2.0 * pt.p - omega * pt.s, 2.0 - std::conj(omega) * pt.s, "psi: vanishing denominator");
}

Complex phi_omega(Complex omega, const PointE& pt, bool swapped) {
  const PointE z = maybe_swap(pt, swapped);
  return guarded_div(omega * z.x3 - z.x1, omega * z.x2 - 1.0, "phi: vanishing denominator");
}

Complex phi_tilde(Complex omega, const PointE& pt, bool swapped) {
  const PointE z = maybe_swap(pt, swapped);
  return quad_root_in_disc(omega * z.x2, -(1.0 + omega * z.x3), z.x1);
}

std::optional<Complex> phi_tilde_closed_form(Complex omega, const PointE& pt, bool swapped, double min_den) {
  const PointE z = maybe_swap(pt, swapped);
  const Complex u = 1.0 + omega * z.x3;
  const Complex den = u + principal_sqrt(u * u - 4.0 * omega * z.x1 * z.x2);
  if (std::abs(den) <= min_den) return std::nullopt;
  return 2.0 * z.x1 / den;
}

Complex ball_inverse(Complex gamma, Complex z1, Complex z2) {
  return z1 / principal_sqrt(1.0 + gamma * z2 * z2);
}

Complex model_gaj(double a, int j, const CVec& z) {
  if (j < 2 || static_cast<std::size_t>(j) > z.size()) fail(ErrorCode::DomainError, "gaj: index out of range");
  if (!in_slc_model(a, z)) fail(ErrorCode::DomainError, "gaj: point violates |z1| + A|z'|^2 < 1");
  const Complex zj = z[static_cast<std::size_t>(j - 1)];
  return z[0] / principal_sqrt(1.0 - a * zj * zj);
}

Complex reinhardt_inverse(double beta, int k, Complex z, Complex w) {
  if (beta < 0.0 || k < 1) fail(ErrorCode::InvalidSpec, "reinhardt: need beta >= 0 and k >= 1");
  return guarded_div(z, 1.0 - beta * std::pow(w, k), "reinhardt: vanishing denominator");
}

Complex retract_map(const Retract& r, Complex z1, Complex z2) {
  const Complex h = r.h1(z1) * r.h2(z2);
  const double t = r.t;
  return guarded_div(t * z1 + (1.0 - t) * z2 - z1 * z2 * h, 1.0 - ((1.0 - t) * z1 + t * z2) * h,
                     "retract: vanishing denominator");
}

Complex bidisc_linear_inverse(double t, Complex gamma, Complex z1, Complex z2) {
  return t * z1 + (1.0 - t) * std::conj(gamma) * z2;
}

Complex parabolic_h(const MoebiusSpec& a, const MoebiusSpec& b, double tol) {
  const MoebiusSpec c = moebius_compose(moebius_inverse(a), b);
  if (std::abs(c.alpha) <= tol) {
    fail(ErrorCode::InvalidSpec, "g2-parabolic: a^-1 b is a rotation, not parabolic");
  }
  const double gap = std::abs(std::abs(1.0 - c.tau) - 2.0 * std::abs(c.alpha));
  if (gap > tol) {
    fail(ErrorCode::InvalidSpec, "g2-parabolic: a(lambda) = b(lambda) has no double root on the circle");
  }
  const Complex h = (1.0 - std::conj(c.tau)) / (2.0 * c.alpha);
  return h / std::abs(h);
}

G2Parabolic make_g2_parabolic(const MoebiusSpec& a, const MoebiusSpec& b, double tol) {
  return {a, b, parabolic_h(a, b, tol)};
}

Complex g2_parabolic_inverse(const G2Parabolic& spec, const PointG2& pt) {
  const auto roots = g2_roots(pt);
  const MoebiusSpec ai = moebius_inverse(spec.a);
  const MoebiusSpec bi = moebius_inverse(spec.b);
  auto value = [&](Complex r1, Complex r2, double& den_abs) {
    const Complex u = moebius_apply(ai, r1);
    const Complex v = moebius_apply(bi, r2);
    const Complex m = 0.5 * (u + v);
    const Complex den = 1.0 - m * spec.h;
    den_abs = std::abs(den);
    return guarded_div(m - u * v * spec.h, den, "g2-parabolic: vanishing denominator");
  };
  double d1 = 0.0, d2 = 0.0;
  const Complex f1 = value(roots[0], roots[1], d1);
  const Complex f2 = value(roots[1], roots[0], d2);
  const double tol = 1e-9 * (1.0 + std::abs(f1)) / std::min({1.0, d1, d2});
  if (std::abs(f1 - f2) > tol) {
    fail(ErrorCode::RootRecovery, "g2-parabolic: root assignments disagree");
  }
  return 0.5 * (f1 + f2);
}

Mat2 b_matrix(double beta) { return Mat2::symmetric(0.0, beta, 0.0); }

Mat2 phi_a_automorphism(const Mat2& a, const Mat2& x) {
  if (!(operator_norm(a) < 1.0)) fail(ErrorCode::DomainError, "phi_a: requires |a| < 1");
  const Mat2 id = Mat2::identity();
  const Mat2 as = adjoint(a);
  const Mat2 left = inverse(psd_sqrt(id - a * as));
  const Mat2 right = psd_sqrt(id - as * a);
  return left * (x - a) * inverse(id - as * x) * right;
}

Complex rii_h_eval(const RIIMapSpec& spec, const Mat2& x) {
  if (spec.base == RIIMapSpec::Base::Constant) return spec.value;
  Mat2 y = x;
  for (const Mat2& a : spec.chain) y = phi_a_automorphism(a, y);
  return y.m11;
}

Complex g_h(double beta, Complex h, const Mat2& x) {
  const double b2 = beta * beta;
  const Complex z1 = x.m11, z2 = x.m22, a = x.m12;
  const Complex z3 = z1 * z2 - a * a;
  const Complex num = (1.0 - b2) * z1 - (z3 + 2.0 * beta * a - b2) * h;
  const Complex den = 1.0 - 2.0 * a * beta - b2 * z3 - (1.0 - b2) * z2 * h;
  return guarded_div(num, den, "g_h: vanishing denominator");
}

Complex tetra_f_h(double beta, const RIIMapSpec& h, const PointE& pt, bool swapped) {
  const PointE z = maybe_swap(pt, swapped);
  const Complex a = principal_sqrt(z.x1 * z.x2 - z.x3);
  const Mat2 xp = Mat2::symmetric(z.x1, a, z.x2);
  const Mat2 xm = Mat2::symmetric(z.x1, -a, z.x2);
  return 0.5 * (g_h(beta, rii_h_eval(h, xp), xp) + g_h(beta, rii_h_eval(h, xm), xm));
}

Complex eval_family(const Family& f, const CVec& z) {
  return std::visit(
      [&](const auto& s) -> Complex {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PsiOmega>) {
          need_dim(z, 2, "psi");
          return psi_omega(s.omega, g2_from(z));
        } else if constexpr (std::is_same_v<T, PhiOmega>) {
          need_dim(z, 3, "phi");
          return phi_omega(s.omega, e_from(z), s.swapped);
        } else if constexpr (std::is_same_v<T, PhiTilde>) {
          need_dim(z, 3, "phitilde");
          return phi_tilde(s.omega, e_from(z), s.swapped);
        } else if constexpr (std::is_same_v<T, BallGamma>) {
          need_dim(z, 2, "ball");
          return ball_inverse(s.gamma, z[0], z[1]);
        } else if constexpr (std::is_same_v<T, ModelGAj>) {
          return model_gaj(s.a, s.j, z);
        } else if constexpr (std::is_same_v<T, ReinhardtBeta>) {
          need_dim(z, 2, "reinhardt");
          return reinhardt_inverse(s.beta, s.k, z[0], z[1]);
        } else if constexpr (std::is_same_v<T, Retract>) {
          need_dim(z, 2, "retract");
          return retract_map(s, z[0], z[1]);
        } else if constexpr (std::is_same_v<T, BidiscLinear>) {
          need_dim(z, 2, "bidisc-linear");
          return bidisc_linear_inverse(s.t, s.gamma, z[0], z[1]);
        } else if constexpr (std::is_same_v<T, G2Parabolic>) {
          need_dim(z, 2, "g2-parabolic");
          return g2_parabolic_inverse(s, g2_from(z));
        } else if constexpr (std::is_same_v<T, TetraFh>) {
          need_dim(z, 3, "fh");
          return tetra_f_h(s.beta, s.h, e_from(z), s.swapped);
        } else if constexpr (std::is_same_v<T, Projection>) {
          if (s.index < 1 || static_cast<std::size_t>(s.index) > z.size()) {
            fail(ErrorCode::DomainError, "projection: index out of range");
          }
          return z[static_cast<std::size_t>(s.index - 1)];
        } else {
          return s.value;
        }
      },
      f);
}

Complex eval_left_inverse(const LeftInverseSpec& spec, const CVec& z) {
  return moebius_apply(spec.post, eval_family(spec.family, z));
}

}  // namespace xdisc
