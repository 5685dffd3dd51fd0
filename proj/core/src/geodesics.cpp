#include "extremal_disc/geodesics.hpp"

#include <cmath>
#include <sstream>

namespace xdisc {

Complex SelfMapSpec::operator()(Complex lambda) const noexcept {
  Complex g = scale;
  for (int i = 0; i < power; ++i) g *= lambda;
  for (const Complex& a : zeros) g *= (lambda - a) / (1.0 - std::conj(a) * lambda);
  if (shift) g = (g - *shift) / (1.0 - std::conj(*shift) * g);
  return g;
}

double SelfMapSpec::sup_norm() const noexcept {
  const double c = std::abs(scale);
  if (!shift) return c;
  if (is_constant()) return std::abs((scale - *shift) / (1.0 - std::conj(*shift) * scale));
  const double s = std::abs(*shift);
  return (c + s) / (1.0 + c * s);
}

bool SelfMapSpec::is_unimodular_constant(double tol) const noexcept {
  if (!is_constant()) return false;
  return std::abs(std::abs((*this)(0.0)) - 1.0) <= tol;
}

bool SelfMapSpec::is_automorphism(double tol) const noexcept {
  return degree() == 1 && std::abs(std::abs(scale) - 1.0) <= tol;
}

void validate(const SelfMapSpec& g) {
  if (!is_finite(g.scale)) fail(ErrorCode::InvalidSpec, "self-map scale must be finite");
  if (std::abs(g.scale) > 1.0 + 1e-12) fail(ErrorCode::InvalidSpec, "self-map scale must satisfy |c| <= 1");
  if (g.power < 0) fail(ErrorCode::InvalidSpec, "self-map monomial power must be nonnegative");
  for (const Complex& a : g.zeros) {
    if (!is_finite(a) || !in_open_disc(a)) {
      fail(ErrorCode::InvalidSpec, "self-map Blaschke zeros must lie in the open disc");
    }
  }
  if (g.shift && (!is_finite(*g.shift) || !in_open_disc(*g.shift))) {
    fail(ErrorCode::InvalidSpec, "self-map shift must lie in the open disc");
  }
}

Complex ZSpec::operator()(Complex lambda) const noexcept {
  return identity ? lambda : lambda * w(lambda);
}

bool ZSpec::identity_like(double tol) const noexcept {
  return identity || w.is_unimodular_constant(tol);
}

Complex ZSpec::rotation() const noexcept {
  if (identity) return 1.0;
  const Complex u = w(0.0);
  return u / std::abs(u);
}

Form0 Form0::from_psi_hat(Complex omega1, Complex omega2, double c, SelfMapSpec psi_hat) {
  Form0 out{omega1, omega2, c, std::move(psi_hat)};
  if (c >= 1.0) {
    out.psi = SelfMapSpec::constant(-1.0);
  } else if (c > 0.0) {
    if (out.psi.shift) fail(ErrorCode::InvalidSpec, "psi_hat must not carry a shift");
    out.psi.shift = Complex(c, 0.0);
  }
  return out;
}

namespace {

std::string num(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

bool unimodular(Complex z, double tol) { return std::abs(std::abs(z) - 1.0) <= tol; }

Validity check_selfmap(const SelfMapSpec& g, const std::string& what) {
  try {
    validate(g);
  } catch (const Error& e) {
    return Validity::invalid(what + ": " + e.what());
  }
  return Validity::ok();
}

}  // namespace

Validity validate_spec(const G2GeodesicSpec& spec, const GeodesicOptions& opt) {
  if (const auto* bf = std::get_if<BlaschkeForm>(&spec)) {
    try {
      validate(bf->b);
    } catch (const Error& e) {
      return Validity::invalid(e.what());
    }
    return Validity::ok();
  }
  const auto& a = std::get<AutoForm>(spec).a;
  try {
    validate(a, Tolerances{opt.unimodular});
  } catch (const Error& e) {
    return Validity::invalid(e.what());
  }
  const double lhs = std::abs(1.0 - a.tau);
  const double rhs = 2.0 * std::abs(a.alpha);
  if (lhs > rhs + opt.equality) {
    return Validity::invalid("automorphism has a fixed point inside the disc: |1-tau| = " + num(lhs) +
                             " > 2|alpha| = " + num(rhs));
  }
  return Validity::ok();
}

Validity validate_spec(const G2Pair& spec, const GeodesicOptions& opt) {
  try {
    validate(spec.a, Tolerances{opt.unimodular});
    validate(spec.b, Tolerances{opt.unimodular});
  } catch (const Error& e) {
    return Validity::invalid(e.what());
  }
  return Validity::ok();
}

Validity validate_spec(const EGeodesicSpec& spec, const GeodesicOptions& opt) {
  if (const auto* f0 = std::get_if<Form0>(&spec)) {
    if (!unimodular(f0->omega1, opt.unimodular) || !unimodular(f0->omega2, opt.unimodular)) {
      return Validity::invalid("form0: omega1, omega2 must be unimodular");
    }
    if (!(f0->c >= 0.0 && f0->c <= 1.0)) return Validity::invalid("form0: C must lie in [0, 1]");
    if (auto v = check_selfmap(f0->psi, "form0 psi"); !v) return v;
    if (f0->psi.sup_norm() > 1.0 + opt.constraint) return Validity::invalid("form0: sup|psi| > 1");
    const Complex p0 = f0->psi(0.0);
    if (std::abs(p0 + f0->c) > opt.constraint) {
      return Validity::invalid("form0: psi(0) must equal -C, got psi(0) = " + num(p0.real()) + "+" +
                               num(p0.imag()) + "i");
    }
    return Validity::ok();
  }
  const auto& va = std::get<FormVA>(spec);
  if (!(va.beta > 0.0 && va.beta < 1.0)) return Validity::invalid("formva: beta must lie in (0, 1)");
  for (Complex v : {va.a, va.b, va.c, va.d}) {
    if (!is_finite(v)) return Validity::invalid("formva: a, b, c, d must be finite");
  }
  if (std::abs(std::norm(va.a) + std::norm(va.b) - 1.0) > opt.constraint) {
    return Validity::invalid("formva: |a|^2 + |b|^2 must equal 1");
  }
  if (std::abs(std::norm(va.c) + std::norm(va.d) - 1.0) > opt.constraint) {
    return Validity::invalid("formva: |c|^2 + |d|^2 must equal 1");
  }
  if (std::abs(va.a * std::conj(va.c) + va.b * std::conj(va.d)) > opt.constraint) {
    return Validity::invalid("formva: a*conj(c) + b*conj(d) must vanish");
  }
  if (!va.z.identity) {
    if (auto v = check_selfmap(va.z.w, "formva W"); !v) return v;
    if (!va.z.identity_like(opt.unimodular)) {
      if (va.z.w.sup_norm() > 1.0 + opt.constraint) return Validity::invalid("formva: sup|W| > 1");
      const double m = formva_cd_measure(va);
      if (m > va.beta + opt.equality) {
        return Validity::invalid("formva: strict Z requires |c||d|(1+beta^2) <= beta, got " + num(m) +
                                 " > " + num(va.beta));
      }
    }
  }
  return Validity::ok();
}

Validity validate_spec(const GeodesicSpec& spec, const GeodesicOptions& opt) {
  return std::visit(
      [&](const auto& s) -> Validity {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PolydiscGraph>) {
          for (const auto& g : s.g) {
            if (auto v = check_selfmap(g, "graph"); !v) return v;
          }
          return Validity::ok();
        } else if constexpr (std::is_same_v<T, Axis>) {
          return s.dim >= 1 ? Validity::ok() : Validity::invalid("axis: dim must be positive");
        } else {
          return validate_spec(s, opt);
        }
      },
      spec);
}

double formva_cd_measure(const FormVA& spec) {
  return std::abs(spec.c) * std::abs(spec.d) * (1.0 + spec.beta * spec.beta);
}

PointG2 eval_g2_geodesic(const G2GeodesicSpec& spec, Complex lambda) {
  if (!in_open_disc(lambda)) fail(ErrorCode::DomainError, "g2 geodesic: |lambda| >= 1");
  if (const auto* bf = std::get_if<BlaschkeForm>(&spec)) {
    const Complex mu = principal_sqrt(lambda);
    const Complex u = blaschke_eval(bf->b, mu);
    const Complex v = blaschke_eval(bf->b, -mu);
    return pi_sym(u, v);
  }
  const auto& a = std::get<AutoForm>(spec).a;
  return pi_sym(lambda, moebius_apply(a, lambda));
}

PointG2 g2_blaschke_closed_form(const BlaschkeSpec& b, Complex lambda) {
  if (b.alpha == Complex(1.0, 0.0)) return {0.0, -lambda};
  const Complex a2c = std::conj(b.alpha * b.alpha);
  const Complex den = 1.0 - a2c * lambda;
  return {2.0 * lambda * (1.0 - std::norm(b.alpha)) / den, lambda * (lambda - b.alpha * b.alpha) / den};
}

Complex form0_psi_hat(const Form0& spec, Complex lambda) {
  const Complex psi = spec.psi(lambda);
  return (psi + spec.c) / (1.0 + spec.c * psi);
}

PointE eval_form1(const Form0& spec, Complex lambda) {
  if (spec.c >= 1.0) fail(ErrorCode::DomainError, "form1 requires C < 1");
  const double c = spec.c;
  const Complex ph = form0_psi_hat(spec, lambda);
  const Complex den = 1.0 - c * ph;
  return {spec.omega1 * (1.0 - c) * ph / den, spec.omega2 * lambda * (1.0 - c) / den,
          spec.omega1 * spec.omega2 * lambda * (ph - c) / den};
}

PointE eval_e_geodesic(const EGeodesicSpec& spec, Complex lambda, const GeodesicOptions& opt) {
  if (!in_open_disc(lambda)) fail(ErrorCode::DomainError, "tetrablock geodesic: |lambda| >= 1");
  if (const auto* f0 = std::get_if<Form0>(&spec)) {
    const double c = f0->c;
    const Complex psi = f0->psi(lambda);
    return {f0->omega1 * (psi + c) / (1.0 + c), f0->omega2 * lambda * (1.0 + c * psi) / (1.0 + c),
            f0->omega1 * f0->omega2 * lambda * psi};
  }
  const auto& s = std::get<FormVA>(spec);
  const double beta = s.beta;
  const double b2 = beta * beta;
  const Complex z = s.z(lambda);
  const Complex A = s.a * s.a * lambda + s.b * s.b * z;
  const Complex B = s.a * s.c * lambda + s.b * s.d * z;
  const Complex C = s.c * s.c * lambda + s.d * s.d * z;
  const Complex delta = (1.0 + beta * B) * (1.0 + beta * B) - A * C * b2;
  if (std::abs(delta) <= opt.delta_guard) {
    fail(ErrorCode::VanishingDenominator, "formva: Delta(lambda) vanishes");
  }
  return {A * (1.0 - b2) / delta, C * (1.0 - b2) / delta, (A * C - (B + beta) * (B + beta)) / delta};
}

std::array<Complex, 2> eval_bidisc_geodesic(const SelfMapSpec& g, Complex lambda) {
  return {lambda, g(lambda)};
}

std::array<Complex, 2> eval_ball_geodesic(Complex lambda) { return {lambda, 0.0}; }

CVec eval_geodesic(const GeodesicSpec& spec, Complex lambda) {
  return std::visit(
      [&](const auto& s) -> CVec {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PolydiscGraph>) {
          CVec out{lambda};
          for (const auto& g : s.g) out.push_back(g(lambda));
          return out;
        } else if constexpr (std::is_same_v<T, Axis>) {
          CVec out(static_cast<std::size_t>(s.dim), 0.0);
          out[0] = lambda;
          return out;
        } else if constexpr (std::is_same_v<T, G2GeodesicSpec>) {
          return to_coords(eval_g2_geodesic(s, lambda));
        } else if constexpr (std::is_same_v<T, G2Pair>) {
          return to_coords(pi_sym(moebius_apply(s.a, lambda), moebius_apply(s.b, lambda)));
        } else {
          return to_coords(eval_e_geodesic(s, lambda));
        }
      },
      spec);
}

int geodesic_dimension(const GeodesicSpec& spec) {
  return std::visit(
      [](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PolydiscGraph>) {
          return 1 + static_cast<int>(s.g.size());
        } else if constexpr (std::is_same_v<T, Axis>) {
          return s.dim;
        } else if constexpr (std::is_same_v<T, EGeodesicSpec>) {
          return 3;
        } else {
          return 2;
        }
      },
      spec);
}

}  // namespace xdisc
