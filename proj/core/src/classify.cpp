#include "extremal_disc/classify.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace xdisc {

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Unique: return "unique";
    case Verdict::NonUnique: return "non-unique";
    case Verdict::InvalidSpec: return "invalid-spec";
  }
  return "unknown";
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAngleTol = 1e-6;

Complex admissibility_q(Complex tau, Complex alpha, double theta) {
  const Complex w = 1.0 + tau * alpha * std::conj(cis(theta));
  return w * w / tau;
}

Classification invalid(std::string reason) {
  Classification c;
  c.verdict = Verdict::InvalidSpec;
  c.reason = std::move(reason);
  return c;
}

/// Fills residuals and the pairwise distinctness gap.
void finish(Classification& c, const ClassifyOptions& opt) {
  c.residuals.clear();
  const CVec grid = lambda_grid(opt.grid);
  for (const auto& w : c.witnesses) {
    c.residuals.push_back(verify_left_inverse(w, *c.geodesic, grid, opt.identity).max_residual);
  }
  if (c.witnesses.size() >= 2 && c.domain) {
    const auto pts = sample(*c.domain, opt.distinct_samples, opt.seed);
    double gap = INFINITY;
    for (std::size_t i = 0; i < c.witnesses.size(); ++i) {
      for (std::size_t j = i + 1; j < c.witnesses.size(); ++j) {
        gap = std::min(gap, distinct_maps(c.witnesses[i], c.witnesses[j], pts, opt.distinct).sup_difference);
      }
    }
    c.min_pairwise_difference = gap;
  }
}

/// The automorphism m with m = g∘f, fitted at 0 and a probe; F = m⁻¹∘family.
std::optional<LeftInverseSpec> normalize_witness(const Family& family, const GeodesicSpec& geo,
                                                 const ClassifyOptions& opt) {
  LeftInverseSpec spec = LeftInverseSpec::of(family);
  const Complex probe{0.5, 0.0};
  Complex g0, g1;
  try {
    g0 = eval_left_inverse(spec, eval_geodesic(geo, 0.0));
    g1 = eval_left_inverse(spec, eval_geodesic(geo, probe));
  } catch (const Error&) {
    return std::nullopt;
  }
  const auto m = fit_automorphism(g0, probe, g1);
  if (!m) return std::nullopt;
  spec.post = moebius_inverse(*m);
  if (!verify_left_inverse(spec, geo, opt.grid, opt.identity).pass) return std::nullopt;
  return spec;
}

std::vector<Complex> unit_circle_grid(int n) {
  std::vector<Complex> out;
  for (int k = 0; k < n; ++k) out.push_back(cis(kTwoPi * k / n));
  return out;
}

Classification royal_g2(const GeodesicSpec& geo, const ClassifyOptions& opt) {
  Classification c;
  c.verdict = Verdict::NonUnique;
  c.geodesic = geo;
  c.domain = DomainTag::of(DomainKind::G2);
  for (Complex w : unit_circle_grid(opt.witness_count)) {
    c.witnesses.push_back(LeftInverseSpec::of(PsiOmega{w}, MoebiusSpec::rotation(-std::conj(w))));
  }
  c.note = "every -conj(w) Psi_w with |w| = 1 is a left inverse; a grid of them is listed";
  return c;
}

}  // namespace

bool psi_admissible(Complex tau, Complex alpha, Complex omega) {
  const Complex w = 1.0 + tau * alpha * std::conj(omega);
  const Complex q = w * w / tau;
  return std::abs(q.imag()) <= 1e-9 && q.real() > 1e-9;
}

std::vector<OmegaCluster> admissible_omega_set(Complex tau, Complex alpha, std::size_t grid_size) {
  const std::size_t n = std::max<std::size_t>(grid_size, 8);
  const double h = kTwoPi / static_cast<double>(n);
  std::vector<double> im(n), re(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex q = admissibility_q(tau, alpha, h * static_cast<double>(i));
    im[i] = q.imag();
    re[i] = q.real();
  }
  auto imq = [&](double th) { return admissibility_q(tau, alpha, th).imag(); };
  std::vector<OmegaCluster> found;
  std::vector<bool> crossing(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    double lo = h * static_cast<double>(i), hi = lo + h;
    double root;
    if (im[i] == 0.0) {
      root = lo;
    } else if (im[i] * im[j] < 0.0) {
      double flo = im[i];
      while (hi - lo > kAngleTol * 1e-3) {
        const double mid = 0.5 * (lo + hi);
        const double fm = imq(mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      root = 0.5 * (lo + hi);
    } else {
      continue;
    }
    crossing[i] = true;
    if (admissibility_q(tau, alpha, root).real() > 1e-9) {
      found.push_back({root, h * static_cast<double>(i), h * static_cast<double>(i) + h, cis(root), false});
    }
  }
  // Tangencies: strict local minima of |Im Q| away from crossings.
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t prev = (i + n - 1) % n, next = (i + 1) % n;
    const double m = std::abs(im[i]);
    if (!(m <= std::abs(im[prev]) && m < std::abs(im[next]))) continue;
    if (crossing[prev] || crossing[i]) continue;
    double a = h * (static_cast<double>(i) - 1.0), b = h * (static_cast<double>(i) + 1.0);
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = std::abs(imq(x1)), f2 = std::abs(imq(x2));
    while (b - a > 1e-12) {
      if (f1 < f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - phi * (b - a);
        f1 = std::abs(imq(x1));
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + phi * (b - a);
        f2 = std::abs(imq(x2));
      }
    }
    const double th = 0.5 * (a + b);
    const Complex q = admissibility_q(tau, alpha, th);
    if (std::abs(q.imag()) <= 1e-9 && q.real() > 1e-9) {
      double t = std::fmod(th, kTwoPi);
      if (t < 0.0) t += kTwoPi;
      found.push_back({t, h * (static_cast<double>(i) - 1.0), h * (static_cast<double>(i) + 1.0), cis(t), true});
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.theta < y.theta; });
  std::vector<OmegaCluster> merged;
  for (const auto& c : found) {
    if (!merged.empty() && c.theta - merged.back().theta <= kAngleTol) {
      merged.back().hi = std::max(merged.back().hi, c.hi);
      merged.back().tangent = true;
      continue;
    }
    merged.push_back(c);
  }
  if (merged.size() >= 2 && merged.front().theta + kTwoPi - merged.back().theta <= kAngleTol) {
    merged.front().tangent = true;
    merged.pop_back();
  }
  return merged;
}

Classification classify_g2(const G2GeodesicSpec& spec, const ClassifyOptions& opt) {
  GeodesicOptions gopt;
  gopt.equality = opt.equality;
  if (auto v = validate_spec(spec, gopt); !v) return invalid(v.reason);
  const GeodesicSpec geo = spec;

  if (const auto* bf = std::get_if<BlaschkeForm>(&spec)) {
    const Complex alpha = bf->b.alpha;
    if (alpha == 0.0) {
      auto c = royal_g2(geo, opt);
      finish(c, opt);
      return c;
    }
    Classification c;
    c.geodesic = geo;
    c.domain = DomainTag::of(DomainKind::G2);
    if (alpha == Complex(1.0, 0.0)) {
      c.verdict = Verdict::NonUnique;
      const Complex omegas[] = {0.0, 1.0, -1.0, {0.0, 0.5}, {-0.3, -0.4}};
      const int count = std::clamp(opt.witness_count, 2, 5);
      for (int i = 0; i < count; ++i) {
        c.witnesses.push_back(LeftInverseSpec::of(PsiOmega{omegas[i]}, MoebiusSpec::rotation(-1.0)));
      }
      c.note = "every -Psi_w with |w| <= 1 is a left inverse; a sample of them is listed";
    } else {
      c.verdict = Verdict::Unique;
      const Complex w = alpha * alpha / std::norm(alpha);
      c.witnesses.push_back(LeftInverseSpec::of(PsiOmega{w}, MoebiusSpec::rotation(-std::conj(w))));
    }
    finish(c, opt);
    return c;
  }

  const MoebiusSpec a = std::get<AutoForm>(spec).a;
  if (std::abs(a.alpha) <= opt.equality && std::abs(1.0 - a.tau) <= opt.equality) {
    auto c = royal_g2(geo, opt);
    c.note = "a is the identity, so f is the royal disc; " + c.note;
    finish(c, opt);
    return c;
  }
  Classification c;
  c.geodesic = geo;
  c.domain = DomainTag::of(DomainKind::G2);
  const double gap = std::abs(1.0 - a.tau) - 2.0 * std::abs(a.alpha);
  if (std::abs(gap) <= opt.equality) {
    c.verdict = Verdict::Unique;
    c.witnesses.push_back(LeftInverseSpec::of(make_g2_parabolic(MoebiusSpec::identity(), a)));
    finish(c, opt);
    return c;
  }
  c.verdict = Verdict::NonUnique;
  // 1 + ταω̄ = t√τ with t real and |t√τ − 1| = |α|.
  const Complex rt = principal_sqrt(a.tau);
  const double re = rt.real();
  const double disc = std::max(0.0, re * re - 1.0 + std::norm(a.alpha));
  for (double t : {re + std::sqrt(disc), re - std::sqrt(disc)}) {
    Complex w = std::conj((t * rt - 1.0) / (a.tau * a.alpha));
    w /= std::abs(w);
    if (auto wit = normalize_witness(PsiOmega{w}, geo, opt)) c.witnesses.push_back(*wit);
  }
  if (c.witnesses.size() < 2) {
    c.note = "fewer than two admissible Psi_w could be normalized to left inverses";
  }
  finish(c, opt);
  return c;
}

namespace {

/// Φ_ω (or Φ_ω∘σ) composed with φ is a ratio of two quadratics in λ; it is
/// an automorphism exactly when they share a root. The resultant is a
/// polynomial of degree ≤ 4 in ω, recovered from its values at the 8th roots
/// of unity.
std::vector<Complex> formva_phi_candidates(const FormVA& s, bool swapped) {
  const Complex u = s.z.rotation();
  Complex p = s.a * s.a + s.b * s.b * u;
  const Complex q = s.a * s.c + s.b * s.d * u;
  Complex r = s.c * s.c + s.d * s.d * u;
  if (swapped) std::swap(p, r);
  const double beta = s.beta, b2 = beta * beta;
  auto res = [&](Complex w) {
    const Complex n2 = w * (p * r - q * q), n1 = -(2.0 * w * q * beta + p * (1.0 - b2)), n0 = -w * b2;
    const Complex d2 = b2 * (q * q - p * r), d1 = 2.0 * beta * q - w * r * (1.0 - b2), d0 = 1.0;
    const Complex x = n2 * d0 - n0 * d2;
    return x * x - (n2 * d1 - n1 * d2) * (n1 * d0 - n0 * d1);
  };
  constexpr int kPts = 8;
  std::array<Complex, kPts> vals;
  for (int j = 0; j < kPts; ++j) vals[j] = res(cis(kTwoPi * j / kPts));
  std::array<Complex, 5> coef{};
  double cmax = 0.0;
  for (int k = 0; k <= 4; ++k) {
    Complex acc = 0.0;
    for (int j = 0; j < kPts; ++j) acc += vals[j] * std::conj(cis(kTwoPi * j * k / kPts));
    coef[k] = acc / static_cast<double>(kPts);
    cmax = std::max(cmax, std::abs(coef[k]));
  }
  std::vector<Complex> out;
  if (cmax == 0.0) return out;
  int deg = 4;
  while (deg > 0 && std::abs(coef[deg]) <= 1e-13 * cmax) --deg;
  if (deg == 0) return out;
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -coef[i] / coef[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  for (int i = 0; i < deg; ++i) {
    const Complex w = es.eigenvalues()[i];
    if (std::abs(std::abs(w) - 1.0) <= 1e-6) out.push_back(w / std::abs(w));
  }
  return out;
}

Classification classify_form0(const Form0& s, const ClassifyOptions& opt) {
  Classification c;
  c.geodesic = GeodesicSpec{EGeodesicSpec{s}};
  c.domain = DomainTag::of(DomainKind::Tetrablock);
  const Complex w1 = s.omega1, w2 = s.omega2;
  const auto sigma_witness =
      LeftInverseSpec::of(PhiOmega{std::conj(w1), true}, MoebiusSpec::rotation(std::conj(w2)));
  if (s.c <= opt.equality) {
    c.verdict = Verdict::NonUnique;
    c.witnesses = {sigma_witness, LeftInverseSpec::of(Projection{2}, MoebiusSpec::rotation(std::conj(w2)))};
    c.note = "C = 0: the disc lies in the royal variety";
  } else if (s.c >= 1.0 - opt.equality) {
    c.verdict = Verdict::NonUnique;
    const auto rot = MoebiusSpec::rotation(std::conj(w1 * w2));
    c.witnesses = {LeftInverseSpec::of(PhiOmega{1.0, false}, rot), LeftInverseSpec::of(PhiOmega{1.0, true}, rot)};
    c.note = "C = 1: f(l) = (0, 0, -w1 w2 l)";
  } else if (s.psi.is_automorphism()) {
    c.verdict = Verdict::NonUnique;
    const Complex probe{0.5, 0.0};
    Complex u = form0_psi_hat(s, probe) / probe;
    u /= std::abs(u);
    c.witnesses = {LeftInverseSpec::of(PhiOmega{u * std::conj(w2), false}, MoebiusSpec::rotation(std::conj(w1 * u))),
                   sigma_witness};
    c.note = "psi is a disc automorphism";
  } else {
    c.verdict = Verdict::Unique;
    c.witnesses = {sigma_witness};
  }
  finish(c, opt);
  return c;
}

Classification classify_formva(const FormVA& s, const ClassifyOptions& opt) {
  Classification c;
  c.geodesic = GeodesicSpec{EGeodesicSpec{s}};
  c.domain = DomainTag::of(DomainKind::Tetrablock);
  if (s.z.identity_like()) {
    c.verdict = Verdict::NonUnique;
    for (bool swapped : {false, true}) {
      for (Complex w : formva_phi_candidates(s, swapped)) {
        auto wit = normalize_witness(PhiOmega{w, swapped}, *c.geodesic, opt);
        if (!wit) continue;
        bool fresh = true;
        for (const auto& prev : c.witnesses) {
          if (!distinct_maps(prev, *wit, DomainTag::of(DomainKind::Tetrablock), 512, opt.seed, opt.distinct).distinct) {
            fresh = false;
          }
        }
        if (fresh) c.witnesses.push_back(*wit);
      }
    }
    if (c.witnesses.size() < 2) {
      return invalid("formva with Z(l) = u l: fewer than two Phi-type left inverses exist, so the map is not a "
                     "geodesic of the stated form");
    }
    c.note = "Z(l) = u l: left inverses from the Phi_w family";
    finish(c, opt);
    return c;
  }
  const double m = formva_cd_measure(s);
  if (std::abs(m - s.beta) <= opt.equality) {
    c.verdict = Verdict::Unique;
    c.note = "equality |c||d|(1+beta^2) = beta; no closed-form left inverse is constructed";
    finish(c, opt);
    return c;
  }
  c.verdict = Verdict::NonUnique;
  const double tiny = 1e-12;
  const auto fh = RIIMapSpec::canonical(s.beta);
  if (std::abs(s.b) <= tiny && std::abs(s.c) <= tiny) {
    const auto rot = MoebiusSpec::rotation(std::conj(s.a * s.a));
    c.witnesses = {LeftInverseSpec::of(PhiTilde{1.0, false}, rot), LeftInverseSpec::of(TetraFh{s.beta, fh, false}, rot)};
  } else if (std::abs(s.a) <= tiny && std::abs(s.d) <= tiny) {
    const auto rot = MoebiusSpec::rotation(std::conj(s.c * s.c));
    c.witnesses = {LeftInverseSpec::of(PhiTilde{1.0, true}, rot), LeftInverseSpec::of(TetraFh{s.beta, fh, true}, rot)};
  } else {
    c.note = "|c||d|(1+beta^2) < beta with cd != 0: left inverses are not unique, but the reduction to the "
             "normalized form (b = c = 0) is not constructed, so no witnesses are listed";
  }
  finish(c, opt);
  return c;
}

}  // namespace

Classification classify_e(const EGeodesicSpec& spec, const ClassifyOptions& opt) {
  GeodesicOptions gopt;
  gopt.equality = opt.equality;
  if (auto v = validate_spec(spec, gopt); !v) return invalid(v.reason);
  if (const auto* f0 = std::get_if<Form0>(&spec)) return classify_form0(*f0, opt);
  return classify_formva(std::get<FormVA>(spec), opt);
}

Classification reinhardt_classify(std::optional<int> k, double b, const ClassifyOptions& opt) {
  if (!(b > 0.0)) return invalid("reinhardt: b must be positive");
  if (k && *k < 1) return invalid("reinhardt: k must be positive");
  Classification c;
  c.geodesic = GeodesicSpec{Axis{2}};
  c.domain = DomainTag{DomainKind::ReinhardtModel, k, b};
  if (!k) {
    c.verdict = Verdict::Unique;
    c.witnesses = {LeftInverseSpec::of(Projection{1})};
    c.note = "infinite type: the projection z is the left inverse";
  } else {
    c.verdict = Verdict::NonUnique;
    for (double f : {0.0, 0.25, 0.5, 0.75, 0.99}) {
      c.witnesses.push_back(LeftInverseSpec::of(ReinhardtBeta{f * b, *k}));
    }
    c.note = "finite type: z/(1 - beta w^k) for every 0 <= beta < b";
  }
  finish(c, opt);
  return c;
}

ConvexCertificate convex_uniqueness_certificate(const std::vector<GeodesicFn>& geodesics, const CVec& w,
                                                const CVec& z, Complex sigma, const CVec& grid,
                                                double rel_threshold) {
  const std::size_t n = geodesics.size();
  if (n < 2) fail(ErrorCode::InvalidSpec, "certificate: need at least two geodesics");
  auto close = [](const CVec& x, const CVec& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (std::abs(x[i] - y[i]) > 1e-10) return false;
    }
    return true;
  };
  for (std::size_t j = 0; j < n; ++j) {
    if (!close(geodesics[j](0.0), w) || !close(geodesics[j](sigma), z)) {
      fail(ErrorCode::EndpointMismatch, "certificate: geodesic " + std::to_string(j + 1) +
                                            " does not pass through both points");
    }
  }
  const auto dim = static_cast<Eigen::Index>(w.size());
  ConvexCertificate cert;
  for (Complex lambda : grid) {
    std::vector<CVec> vals;
    for (const auto& f : geodesics) vals.push_back(f(lambda));
    Eigen::MatrixXcd m(dim, static_cast<Eigen::Index>(n - 1));
    for (std::size_t j = 0; j + 1 < n; ++j) {
      for (Eigen::Index i = 0; i < dim; ++i) {
        m(i, static_cast<Eigen::Index>(j)) = vals[j][static_cast<std::size_t>(i)] - vals[n - 1][static_cast<std::size_t>(i)];
      }
    }
    const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues();
    const double scale = std::max(1.0, sv.size() ? sv(0) : 0.0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      if (sv(i) > rel_threshold * scale) ++rank;
    }
    cert.rank = std::max(cert.rank, rank);
    if (rank == static_cast<int>(n - 1)) {
      cert.verdict = ConvexCertificate::Verdict::Unique;
      cert.witness_lambda = lambda;
      cert.rank = rank;
      return cert;
    }
  }
  return cert;
}

bool nondeg_3pt(Complex alpha, Complex sigma) {
  const BlaschkeSpec b{alpha};
  return std::norm(sigma) < std::max(std::abs(blaschke_eval(b, sigma)), std::abs(blaschke_eval(b, -sigma)));
}

}  // namespace xdisc
