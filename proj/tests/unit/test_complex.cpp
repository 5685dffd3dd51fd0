#include <doctest.h>

#include "derived_values.hpp"
#include "helpers.hpp"

#include "extremal_disc/complex.hpp"

using namespace xdisc;
using testing::check_close;

TEST_CASE("moebius_eval examples") {
  check_close(moebius_eval({1.0, 0.0}, {0.3, 0.1}), {0.3, 0.1}, 1e-15);
  check_close(moebius_eval({1.0, 0.5}, 0.5), 0.0, 1e-15);
  check_close(moebius_eval({kI, 0.5}, 0.0), derived::kMoebiusTauIAlphaHalfAt0, 1e-15);
}

TEST_CASE("moebius_eval rejects points off the disc") {
  CHECK_THROWS_AS(moebius_eval({}, 1.0), Error);
  CHECK_THROWS_AS(moebius_eval({}, {0.8, 0.8}), Error);
}

TEST_CASE("MoebiusSpec validation") {
  CHECK_NOTHROW(validate(MoebiusSpec{cis(0.4), 0.9}));
  CHECK_THROWS_AS(validate(MoebiusSpec{1.1, 0.0}), Error);
  CHECK_THROWS_AS(validate(MoebiusSpec{1.0, 1.0}), Error);
}

TEST_CASE("moebius_fixed_points") {
  SUBCASE("parabolic: one double root on the circle") {
    const auto fp = moebius_fixed_points({cis(M_PI / 3), 0.5});
    CHECK(fp.double_root);
    check_close(fp.roots[0], derived::kParabolicFixedPoint, 1e-9);
    CHECK(std::abs(std::abs(fp.roots[0]) - 1.0) < 1e-9);
  }
  SUBCASE("hyperbolic: roots +-1") {
    const auto fp = moebius_fixed_points({1.0, 0.5});
    CHECK_FALSE(fp.double_root);
    CHECK(fp.count == 2);
    const double a = std::abs(fp.roots[0] - 1.0) < 1e-12 ? 0 : 1;
    check_close(fp.roots[static_cast<int>(a)], 1.0, 1e-12);
    check_close(fp.roots[1 - static_cast<int>(a)], -1.0, 1e-12);
  }
  SUBCASE("elliptic: a root inside the disc") {
    const auto fp = moebius_fixed_points({-1.0, 0.3});
    const double m = std::min(std::abs(fp.roots[0]), std::abs(fp.roots[1]));
    CHECK(m == doctest::Approx(derived::kEllipticInnerRootModulus).epsilon(1e-12));
  }
  SUBCASE("identity") { CHECK(moebius_fixed_points({}).identity); }
}

TEST_CASE("poincare") {
  CHECK(poincare(0.0, 0.5) == doctest::Approx(std::atanh(0.5)).epsilon(1e-15));
  CHECK(poincare({0.2, 0.3}, {0.2, 0.3}) == 0.0);
  CHECK(poincare(0.3, -0.3) == doctest::Approx(derived::kPoincare03m03).epsilon(1e-14));
}

TEST_CASE("quad_root_in_disc") {
  check_close(quad_root_in_disc(0.0, -1.0, 0.4), 0.4, 1e-15);
  check_close(quad_root_in_disc(1.0, -2.5, 1.0), derived::kQuadInDiscRoot, 1e-14);
  try {
    quad_root_in_disc(1.0, 0.0, -0.25);
    FAIL("expected TwoRootsInDisc");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TwoRootsInDisc);
  }
  try {
    quad_root_in_disc(1.0, 0.0, -4.0);
    FAIL("expected NoRootInDisc");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoRootInDisc);
  }
}

TEST_CASE("Mat2 examples") {
  CHECK(operator_norm(Mat2::identity()) == doctest::Approx(1.0));
  CHECK(operator_norm(Mat2{0.0, 0.5, 0.5, 0.0}) == doctest::Approx(0.5).epsilon(1e-15));
  const Mat2 r = psd_sqrt(Mat2::diag(4.0, 9.0));
  CHECK(max_abs_diff(r, Mat2::diag(2.0, 3.0)) < 1e-14);
  CHECK_THROWS_AS(inverse(Mat2{1.0, 2.0, 2.0, 4.0}), Error);
  CHECK_THROWS_AS(psd_sqrt(Mat2::diag(1.0, -1.0)), Error);
}

TEST_CASE("property: moebius maps the disc into itself and inverts") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    const MoebiusSpec m{testing::circle_point(rng), testing::disc_point(rng, 0.99)};
    const Complex l = testing::disc_point(rng, 0.999);
    const Complex v = moebius_eval(m, l);
    REQUIRE(std::abs(v) < 1.0);
    REQUIRE(std::abs(moebius_eval(moebius_inverse(m), v) - l) <= 1e-12 * (1.0 + 1.0 / (1.0 - std::abs(m.alpha))));
  }
}

TEST_CASE("property: moebius_compose agrees with pointwise composition") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 1000; ++i) {
    const MoebiusSpec a{testing::circle_point(rng), testing::disc_point(rng, 0.9)};
    const MoebiusSpec b{testing::circle_point(rng), testing::disc_point(rng, 0.9)};
    const Complex l = testing::disc_point(rng, 0.9);
    REQUIRE(std::abs(moebius_eval(moebius_compose(a, b), l) - moebius_eval(a, moebius_eval(b, l))) < 1e-11);
  }
}

TEST_CASE("property: fit_automorphism recovers a map from two values") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    const MoebiusSpec a{testing::circle_point(rng), testing::disc_point(rng, 0.9)};
    const Complex probe{0.37, -0.21};
    const auto fit = fit_automorphism(moebius_eval(a, 0.0), probe, moebius_eval(a, probe));
    REQUIRE(fit.has_value());
    REQUIRE(std::abs(fit->tau - a.tau) < 1e-9);
    REQUIRE(std::abs(fit->alpha - a.alpha) < 1e-9);
  }
}

TEST_CASE("property: poincare triangle inequality") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 1000; ++i) {
    const Complex a = testing::disc_point(rng), b = testing::disc_point(rng), c = testing::disc_point(rng);
    REQUIRE(poincare(a, c) <= poincare(a, b) + poincare(b, c) + 1e-10);
  }
}

TEST_CASE("property: quad_root_in_disc residual") {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 1000; ++i) {
    // One root inside, one outside.
    const Complex r1 = testing::disc_point(rng, 0.95);
    const Complex r2 = 1.1 / testing::disc_point(rng, 0.9);
    const Complex lead = testing::disc_point(rng) + 0.2;
    const Complex a = lead, b = -lead * (r1 + r2), c = lead * r1 * r2;
    const Complex r = quad_root_in_disc(a, b, c);
    REQUIRE(std::abs(a * r * r + b * r + c) <= 1e-10 * (std::abs(a) + std::abs(b) + std::abs(c)));
  }
}

TEST_CASE("property: psd_sqrt squares back") {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 1000; ++i) {
    const Mat2 x{testing::disc_point(rng), testing::disc_point(rng), testing::disc_point(rng),
                 testing::disc_point(rng)};
    const Mat2 m = x * adjoint(x);
    const Mat2 r = psd_sqrt(m);
    REQUIRE(max_abs_diff(r * r, m) < 1e-10);
  }
}

TEST_CASE("Blaschke evaluation") {
  CHECK(std::abs(blaschke_eval({1.0}, 0.4) + 0.4) < 1e-15);
  check_close(blaschke_eval({0.0}, {0.3, 0.2}), Complex{0.3, 0.2} * Complex{0.3, 0.2}, 1e-15);
  CHECK_THROWS_AS(validate(BlaschkeSpec{{0.6, 0.8}}), Error);
}
