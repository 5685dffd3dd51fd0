#include <doctest.h>

#include "derived_values.hpp"
#include "helpers.hpp"

#include "extremal_disc/classify.hpp"

using namespace xdisc;
using testing::check_close;

namespace {

const double kS02 = std::sqrt(0.2), kS08 = std::sqrt(0.8);

FormVA formva(double beta, Complex a, Complex b, Complex c, Complex d, ZSpec z) {
  FormVA f;
  f.beta = beta;
  f.a = a;
  f.b = b;
  f.c = c;
  f.d = d;
  f.z = std::move(z);
  return f;
}

ZSpec strict_z() { return ZSpec::times_lambda(SelfMapSpec::monomial(0.5, 1)); }

/// Every witness left-inverts the geodesic and attains the Caratheodory bound.
void check_sound(const Classification& c) {
  REQUIRE(c.geodesic.has_value());
  REQUIRE(c.residuals.size() == c.witnesses.size());
  const CVec grid = lambda_grid(200);
  for (std::size_t i = 0; i < c.witnesses.size(); ++i) {
    const auto rep = verify_left_inverse(c.witnesses[i], *c.geodesic, grid, 1e-9);
    CHECK(rep.pass);
    CHECK(c.residuals[i] <= 1e-9);
    for (auto [l1, l2] : {std::pair<Complex, Complex>{0.1, 0.4}, {Complex{-0.3, 0.5}, Complex{0.6, -0.2}}}) {
      CHECK(equality_check(*c.geodesic, c.witnesses[i], l1, l2).pass);
    }
  }
  if (c.verdict == Verdict::NonUnique && c.witnesses.size() >= 2) {
    CHECK(c.min_pairwise_difference > 1e-3);
  }
}

}  // namespace

TEST_CASE("psi_admissible examples") {
  CHECK(psi_admissible(1.0, 0.5, 1.0));
  CHECK(psi_admissible(1.0, 0.5, -1.0));
  CHECK_FALSE(psi_admissible(1.0, 0.5, kI));
}

TEST_CASE("admissible_omega_set examples") {
  const auto two = admissible_omega_set(1.0, 0.5, 4096);
  REQUIRE(static_cast<int>(two.size()) == derived::kAdmissibleCountTau1);
  bool plus = false, minus = false;
  for (const auto& c : two) {
    plus = plus || std::abs(c.omega - 1.0) < 1e-6;
    minus = minus || std::abs(c.omega + 1.0) < 1e-6;
  }
  CHECK(plus);
  CHECK(minus);

  const auto one = admissible_omega_set(cis(M_PI / 3), 0.5, 4096);
  REQUIRE(one.size() == 1);
  CHECK(one[0].tangent);
  CHECK(one[0].theta == doctest::Approx(derived::kAdmissibleTheta).epsilon(1e-6));

  CHECK(admissible_omega_set(1.0, 1e-4, 4096).size() >= 2);
}

TEST_CASE("classify_g2 examples") {
  const auto u = classify_g2(BlaschkeForm{{0.3}});
  CHECK(u.verdict == Verdict::Unique);
  CHECK(u.witnesses.size() == 1);
  check_sound(u);

  const auto royal = classify_g2(BlaschkeForm{{0.0}});
  CHECK(royal.verdict == Verdict::NonUnique);
  CHECK(royal.witnesses.size() >= 2);
  check_sound(royal);

  const auto one = classify_g2(BlaschkeForm{{1.0}});
  CHECK(one.verdict == Verdict::NonUnique);
  check_sound(one);

  CHECK(derived::kAbsOneMinusCisPi6 < 0.6);
  const auto hyp = classify_g2(AutoForm{{cis(M_PI / 6), 0.3}});
  CHECK(hyp.verdict == Verdict::NonUnique);
  CHECK(hyp.witnesses.size() >= 2);
  check_sound(hyp);

  const auto par = classify_g2(AutoForm{{cis(M_PI / 3), 0.5}});
  CHECK(par.verdict == Verdict::Unique);
  REQUIRE(par.witnesses.size() == 1);
  CHECK(std::holds_alternative<G2Parabolic>(par.witnesses[0].family));
  check_sound(par);

  const auto bad = classify_g2(AutoForm{{-1.0, 0.3}});
  CHECK(bad.verdict == Verdict::InvalidSpec);
  CHECK_FALSE(bad.reason.empty());
  CHECK(classify_g2(AutoForm{}).verdict == Verdict::NonUnique);
}

TEST_CASE("classify_e: Form0 regimes") {
  const auto c0 = classify_e(Form0::from_psi_hat(cis(0.4), cis(-0.2), 0.0, SelfMapSpec::monomial(0.5, 1)));
  CHECK(c0.verdict == Verdict::NonUnique);
  check_sound(c0);

  const auto c1 = classify_e(Form0::from_psi_hat(kI, cis(1.0), 1.0, SelfMapSpec::monomial(1.0, 1)));
  CHECK(c1.verdict == Verdict::NonUnique);
  check_sound(c1);

  const auto strict = classify_e(Form0::from_psi_hat(1.0, 1.0, 0.5, SelfMapSpec::monomial(0.5, 2)));
  CHECK(strict.verdict == Verdict::Unique);
  check_sound(strict);

  const auto aut = classify_e(Form0::from_psi_hat(cis(0.3), cis(0.9), 0.5, SelfMapSpec::monomial(cis(0.5), 1)));
  CHECK(aut.verdict == Verdict::NonUnique);
  check_sound(aut);

  CHECK(classify_e(Form0{1.0, 1.0, 0.5, SelfMapSpec::constant(0.0)}).verdict == Verdict::InvalidSpec);
}

TEST_CASE("classify_e: FormVA regimes") {
  const auto eq = classify_e(formva(0.5, kS02, kS08, kS08, -kS02, strict_z()));
  CHECK(eq.verdict == Verdict::Unique);
  check_sound(eq);

  const auto z0 = classify_e(formva(0.5, 1.0, 0.0, 0.0, 1.0, ZSpec::times_lambda(SelfMapSpec::constant(0.0))));
  CHECK(z0.verdict == Verdict::NonUnique);
  REQUIRE(z0.witnesses.size() >= 2);
  CHECK(z0.min_pairwise_difference >= 0.05);
  check_sound(z0);

  const auto swapped = classify_e(formva(0.5, 0.0, 1.0, 1.0, 0.0, strict_z()));
  CHECK(swapped.verdict == Verdict::NonUnique);
  check_sound(swapped);

  const auto id = classify_e(formva(0.5, kS02, kS08, kS08, -kS02, ZSpec::id()));
  CHECK(id.verdict == Verdict::NonUnique);
  CHECK(id.witnesses.size() >= 2);
  check_sound(id);

  const auto rot = classify_e(formva(0.3, 1.0, 0.0, 0.0, 1.0, ZSpec::times_lambda(SelfMapSpec::constant(cis(2.0)))));
  CHECK(rot.verdict == Verdict::NonUnique);
  check_sound(rot);

  // |cd|(1+beta^2) strictly between 0 and beta: non-unique, but no witness
  // construction is available for this position.
  const double t = 0.3;
  const auto mid = classify_e(formva(0.5, std::cos(t), std::sin(t), -std::sin(t), std::cos(t), strict_z()));
  CHECK(mid.verdict == Verdict::NonUnique);
  CHECK_FALSE(mid.note.empty());

  CHECK(classify_e(formva(0.5, 1.0, 0.0, 0.0, 0.5, strict_z())).verdict == Verdict::InvalidSpec);
}

TEST_CASE("property: FormVA verdict ignores unimodular rescaling") {
  std::mt19937_64 rng(41);
  const std::vector<FormVA> bases = {
      formva(0.5, kS02, kS08, kS08, -kS02, strict_z()),
      formva(0.5, 1.0, 0.0, 0.0, 1.0, strict_z()),
      formva(0.4, std::cos(0.2), std::sin(0.2), -std::sin(0.2), std::cos(0.2), strict_z()),
      formva(0.5, kS02, kS08, kS08, -kS02, ZSpec::id()),
  };
  for (const auto& base : bases) {
    const Verdict v = classify_e(base).verdict;
    for (int i = 0; i < 5; ++i) {
      FormVA f = base;
      const Complex u1 = testing::circle_point(rng), u2 = testing::circle_point(rng);
      f.a *= u1;
      f.b *= u1;
      f.c *= u2;
      f.d *= u2;
      REQUIRE(validate_spec(EGeodesicSpec{f}).valid);
      REQUIRE(classify_e(f).verdict == v);
    }
  }
}

TEST_CASE("property: AutoForm verdict matches the admissible-omega count") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  while (checked < 100) {
    const Complex tau = testing::circle_point(rng);
    const Complex alpha = std::polar(u(rng), 2.0 * M_PI * u(rng));
    const double gap = 2.0 * std::abs(alpha) - std::abs(1.0 - tau);
    if (gap < 1e-3 || std::abs(alpha) >= 0.999) continue;
    ++checked;
    const bool predicate = admissible_omega_set(tau, alpha, 4096).size() >= 2;
    REQUIRE((classify_g2(AutoForm{{tau, alpha}}).verdict == Verdict::NonUnique) == predicate);
  }
}

TEST_CASE("convex_uniqueness_certificate") {
  const double sigma = 0.6;
  auto g = [&](Complex l) { return 0.5 * l * (l - sigma) / (1.0 - sigma * l); };
  const GeodesicFn f1 = [](Complex l) { return CVec{l, 0.0}; };
  const GeodesicFn f2 = [&](Complex l) { return CVec{l, g(l)}; };
  const auto c = convex_uniqueness_certificate({f1, f2}, {0.0, 0.0}, {sigma, 0.0}, sigma, {0.0, sigma, 0.3});
  CHECK(c.verdict == ConvexCertificate::Verdict::Unique);
  CHECK(c.rank == 1);
  check_close(c.witness_lambda, 0.3, 0.0);
  CHECK(std::abs(g(0.3) - derived::kCertSecondCoord03) < 1e-15);

  const auto same = convex_uniqueness_certificate({f1, f1}, {0.0, 0.0}, {sigma, 0.0}, sigma, lambda_grid(100));
  CHECK(same.verdict == ConvexCertificate::Verdict::Inconclusive);

  const GeodesicFn h1 = [](Complex l) { return CVec{l, 0.0, 0.0}; };
  const GeodesicFn h2 = [&](Complex l) { return CVec{l, g(l), 0.0}; };
  const GeodesicFn h3 = [&](Complex l) { return CVec{l, 0.0, g(l)}; };
  const auto three =
      convex_uniqueness_certificate({h1, h2, h3}, {0.0, 0.0, 0.0}, {sigma, 0.0, 0.0}, sigma, lambda_grid(100));
  CHECK(three.verdict == ConvexCertificate::Verdict::Unique);
  CHECK(three.rank == 2);

  const GeodesicFn off = [](Complex l) { return CVec{l, 0.1}; };
  CHECK_THROWS_AS(convex_uniqueness_certificate({f1, off}, {0.0, 0.0}, {sigma, 0.0}, sigma, lambda_grid(10)), Error);
}

TEST_CASE("property: the certificate is never Unique for coinciding geodesics") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 50; ++i) {
    const Complex c = 0.9 * testing::disc_point(rng);
    const GeodesicFn f = [c](Complex l) { return CVec{l, c * l * l}; };
    const auto r = convex_uniqueness_certificate({f, f, f}, f(0.0), f(0.5), 0.5, lambda_grid(64));
    REQUIRE(r.verdict == ConvexCertificate::Verdict::Inconclusive);
  }
}

TEST_CASE("reinhardt_classify") {
  const auto two = reinhardt_classify(2, 1.0);
  CHECK(two.verdict == Verdict::NonUnique);
  REQUIRE(two.witnesses.size() >= 2);
  bool has0 = false, has05 = false;
  for (const auto& w : two.witnesses) {
    const double beta = std::get<ReinhardtBeta>(w.family).beta;
    has0 = has0 || beta == 0.0;
    has05 = has05 || beta == 0.5;
    CHECK(beta < 1.0);
  }
  CHECK(has0);
  CHECK(has05);
  check_sound(two);

  const auto inf = reinhardt_classify(std::nullopt, 1.0);
  CHECK(inf.verdict == Verdict::Unique);
  REQUIRE(inf.witnesses.size() == 1);
  CHECK(std::holds_alternative<Projection>(inf.witnesses[0].family));

  const auto lin = reinhardt_classify(1, 0.5);
  CHECK(lin.verdict == Verdict::NonUnique);
  for (const auto& w : lin.witnesses) CHECK(std::get<ReinhardtBeta>(w.family).beta < 0.5);
}

TEST_CASE("nondeg_3pt") {
  CHECK(nondeg_3pt(0.3, 0.5));
  CHECK(derived::kNondegMax > 0.25);
  const Complex s{0.2, 0.3};
  CHECK(nondeg_3pt(s, s) == (std::norm(s) < std::abs(blaschke_eval({s}, -s))));
}
