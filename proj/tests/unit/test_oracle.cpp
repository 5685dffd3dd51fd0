#include <doctest.h>

#include <cstdlib>

#include "derived_values.hpp"
#include "helpers.hpp"

#include "extremal_disc/oracle.hpp"

using namespace xdisc;

namespace {

GeodesicSpec formva_z0(double beta) {
  FormVA f;
  f.beta = beta;
  f.z = ZSpec::times_lambda(SelfMapSpec::constant(0.0));
  return EGeodesicSpec{f};
}

}  // namespace

TEST_CASE("verify_into_disc examples") {
  const auto psi = verify_into_disc(LeftInverseSpec::of(PsiOmega{Complex{0.6, 0.3}}),
                                    DomainTag::of(DomainKind::G2), 100000, 1);
  CHECK(psi.pass);
  CHECK(psi.max_residual < 1.0);
  CHECK(psi.sample_count == 100000);
  CHECK(psi.seed == 1);
  CHECK(psi.worst_point.size() == 2);

  const auto one = verify_into_disc(LeftInverseSpec::of(ConstantMap{1.0}), DomainTag::of(DomainKind::Disc), 10, 1);
  CHECK_FALSE(one.pass);
  CHECK(one.max_residual == 1.0);

  const auto retract = verify_into_disc(LeftInverseSpec::of(Retract{0.5, SelfMapSpec::constant(1.0)}),
                                        DomainTag::of(DomainKind::Bidisc), 100000, 2);
  CHECK(retract.pass);
  CHECK(retract.closed_ball);
}

TEST_CASE("verify_into_disc reports the failing sample on errors") {
  // G_{A,j} rejects points outside its model domain; the bidisc has some.
  try {
    verify_into_disc(LeftInverseSpec::of(ModelGAj{5.0, 2}), DomainTag::of(DomainKind::Bidisc), 1000, 3);
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainError);
    CHECK(std::string(e.what()).find("at sample") != std::string::npos);
  }
}

TEST_CASE("verify_left_inverse examples") {
  const auto a = verify_left_inverse(LeftInverseSpec::of(PhiTilde{1.0}), formva_z0(0.5), 200);
  CHECK(a.pass);
  CHECK(a.max_residual <= 1e-12);
  const auto b = verify_left_inverse(LeftInverseSpec::of(PsiOmega{1.0}, {-1.0, 0.0}),
                                     G2GeodesicSpec{BlaschkeForm{{0.0}}}, 200);
  CHECK(b.pass);
  // The first coordinate of this geodesic is (1 - beta^2) l, so z1 misses by beta^2 |l|.
  const auto c = verify_left_inverse(LeftInverseSpec::of(Projection{1}), formva_z0(0.5), 200);
  CHECK_FALSE(c.pass);
  REQUIRE(c.worst_point.size() == 1);
  CHECK(c.max_residual == doctest::Approx(0.25 * std::abs(c.worst_point[0])).epsilon(1e-12));
}

TEST_CASE("distinct_maps examples") {
  const auto a = distinct_maps(LeftInverseSpec::of(TetraFh{0.5, RIIMapSpec::canonical(0.5)}),
                               LeftInverseSpec::of(PhiTilde{1.0}), DomainTag::of(DomainKind::Tetrablock), 10000, 4);
  CHECK(a.distinct);
  const auto same = distinct_maps(LeftInverseSpec::of(PhiTilde{1.0}), LeftInverseSpec::of(PhiTilde{1.0}),
                                  DomainTag::of(DomainKind::Tetrablock), 10000, 4);
  CHECK_FALSE(same.distinct);
  CHECK(same.sup_difference == 0.0);
  const auto ball = distinct_maps(LeftInverseSpec::of(BallGamma{0.0}), LeftInverseSpec::of(BallGamma{1.0}),
                                  DomainTag::of(DomainKind::Ball2), 10000, 4);
  CHECK(ball.distinct);
  const auto at = distinct_maps(LeftInverseSpec::of(BallGamma{0.0}), LeftInverseSpec::of(BallGamma{1.0}),
                                std::vector<CVec>{{0.5, 0.5}});
  CHECK(at.sup_difference == doctest::Approx(derived::kBallGap_05_05).epsilon(1e-13));
}

TEST_CASE("Caratheodory and Lempert bounds") {
  const GeodesicSpec axis = Axis{2};
  const auto e = equality_check(axis, LeftInverseSpec::of(Projection{1}), 0.0, 0.5);
  CHECK(e.lb == doctest::Approx(std::atanh(0.5)).epsilon(1e-15));
  CHECK(e.ub == doctest::Approx(std::atanh(0.5)).epsilon(1e-15));
  CHECK(e.pass);
  const auto r = equality_check(G2GeodesicSpec{BlaschkeForm{{0.0}}}, LeftInverseSpec::of(PsiOmega{1.0}, {-1.0, 0.0}),
                                0.1, 0.4, 1e-10);
  CHECK(r.pass);
  const auto z = equality_check(axis, LeftInverseSpec::of(Projection{2}), 0.2, 0.7);
  CHECK(z.lb == 0.0);
  CHECK(z.lb < z.ub);
  CHECK_FALSE(z.pass);
}

TEST_CASE("property: reductions are independent of the thread count") {
  const auto f = LeftInverseSpec::of(PhiTilde{cis(0.7)});
  const auto tag = DomainTag::of(DomainKind::Tetrablock);
  setenv("EXTREMAL_DISC_THREADS", "1", 1);
  CHECK(thread_count() == 1);
  const auto one = verify_into_disc(f, tag, 50000, 5);
  setenv("EXTREMAL_DISC_THREADS", "7", 1);
  CHECK(thread_count() == 7);
  const auto seven = verify_into_disc(f, tag, 50000, 5);
  unsetenv("EXTREMAL_DISC_THREADS");
  CHECK(one.max_residual == seven.max_residual);
  CHECK(one.worst_point == seven.worst_point);
}

TEST_CASE("property: doubling n never decreases the sup") {
  const auto f = LeftInverseSpec::of(BallGamma{Complex{0.0, 0.8}});
  const auto tag = DomainTag::of(DomainKind::Ball2);
  double prev = 0.0;
  for (std::size_t n = 1000; n <= 64000; n *= 2) {
    const double sup = verify_into_disc(f, tag, n, 6).max_residual;
    REQUIRE(sup >= prev);
    prev = sup;
  }
}

TEST_CASE("lambda_grid") {
  const CVec g = lambda_grid(200);
  CHECK(g.size() == 200);
  for (const auto& l : g) CHECK(std::abs(l) <= 0.95);
  CHECK(lambda_grid(200) == g);
}
