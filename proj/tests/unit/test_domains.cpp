#include <doctest.h>

#include "derived_values.hpp"
#include "helpers.hpp"

#include "extremal_disc/domains.hpp"

using namespace xdisc;
using testing::check_close;

TEST_CASE("in_g2 examples") {
  CHECK(in_g2({0.0, 0.0}));
  CHECK(in_g2({1.8, 0.81}));
  CHECK_FALSE(in_g2({2.0, 1.0}));
}

TEST_CASE("in_e examples") {
  CHECK(in_e({0.0, 0.0, 0.0}));
  CHECK_FALSE(in_e({1.0, 0.0, 0.0}));
  CHECK(derived::kInELhs_03_0_m025 < 1.0);
  CHECK(in_e({0.3, 0.0, -0.25}));
}

TEST_CASE("in_rii examples") {
  CHECK(in_rii(Mat2::zero()));
  CHECK(in_rii(Mat2::symmetric(0.0, 0.5, 0.0)));
  CHECK_FALSE(in_rii(Mat2::diag(1.0, 0.0)));
  CHECK_THROWS_AS(in_rii(Mat2{0.0, 0.1, 0.2, 0.0}), Error);
}

TEST_CASE("symmetrization and covering maps") {
  const PointG2 p = pi_sym(0.5, -0.5);
  check_close(p.s, 0.0, 0.0);
  check_close(p.p, -0.25, 0.0);
  const PointE e = pi_cover(Mat2::diag(0.4, 0.0));
  check_close(e.x1, 0.4, 0.0);
  check_close(e.x2, 0.0, 0.0);
  check_close(e.x3, 0.0, 0.0);
  const PointE f = pi_cover(Mat2::symmetric(0.3, 0.5, 0.0));
  check_close(f.x1, 0.3, 1e-16);
  check_close(f.x3, -0.25, 1e-16);
}

TEST_CASE("G2 <-> E embeddings") {
  const PointE e = g2_embed_e(1.0, {0.0, -0.25});
  check_close(e.x1, 0.0, 0.0);
  check_close(e.x2, 0.0, 0.0);
  check_close(e.x3, -0.25, 0.0);
  const PointG2 q = e_project_g2(0.0, {0.1, 0.2, 0.3});
  check_close(q.s, 0.1, 0.0);
  check_close(q.p, 0.0, 0.0);
  const PointG2 r = e_project_g2(1.0, {0.3, 0.0, -0.25});
  check_close(r.s, 0.3, 0.0);
  check_close(r.p, -0.25, 0.0);
  CHECK(derived::kProjectRootMax < 1.0);
  CHECK(in_g2(r));
  CHECK_THROWS_AS(g2_embed_e(0.5, {}), Error);
  CHECK_THROWS_AS(e_project_g2(1.5, {}), Error);
}

TEST_CASE("royal predicates") {
  CHECK(on_royal_g2({0.6, 0.09}, 1e-12));
  CHECK_FALSE(on_royal_g2({0.0, -0.25}, 1e-12));
  CHECK(derived::kInELhs_02_05_01 < 1.0);
  CHECK(on_royal_e({0.2, 0.5, 0.1}, 1e-12));
}

TEST_CASE("domain names parse back") {
  for (const auto* name : {"disc", "bidisc", "ball2", "g2", "tetrablock", "rii"}) {
    const auto tag = parse_domain(name);
    REQUIRE(tag.has_value());
    CHECK(tag->name() == name);
  }
  const auto r = parse_domain("reinhardt:k=inf,b=0.5");
  REQUIRE(r.has_value());
  CHECK_FALSE(r->k.has_value());
  CHECK(r->b == 0.5);
  CHECK_FALSE(parse_domain("annulus").has_value());
}

TEST_CASE("samplers: small examples") {
  const auto d = sample(DomainTag::of(DomainKind::Disc), 3, 7);
  REQUIRE(d.size() == 3);
  for (const auto& p : d) CHECK(std::abs(p[0]) < 1.0);
}

TEST_CASE("property: every sample lies in its domain") {
  const std::vector<DomainTag> tags = {
      DomainTag::of(DomainKind::Disc),       DomainTag::of(DomainKind::Bidisc), DomainTag::of(DomainKind::Ball2),
      DomainTag::of(DomainKind::G2),         DomainTag::of(DomainKind::Tetrablock),
      DomainTag::of(DomainKind::RII),        DomainTag::reinhardt(2, 1.0),      DomainTag::reinhardt(1, 0.5),
      DomainTag::reinhardt(std::nullopt, 1.0)};
  for (const auto& tag : tags) {
    CAPTURE(tag.name());
    const auto pts = sample(tag, 10000, 1);
    REQUIRE(pts.size() == 10000);
    for (const auto& p : pts) {
      REQUIRE(static_cast<int>(p.size()) == tag.dimension());
      REQUIRE(contains(tag, p));
    }
  }
}

TEST_CASE("property: samples are deterministic and prefix-stable") {
  const auto tag = DomainTag::of(DomainKind::Tetrablock);
  const auto a = sample(tag, 500, 9);
  const auto b = sample(tag, 1000, 9);
  const auto c = sample(tag, 500, 10);
  for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(a[i] == b[i]);
  CHECK(a[0] != c[0]);
}

TEST_CASE("property: pushforwards land in G2 and E") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100000; ++i) {
    const Complex l1 = testing::disc_point(rng, 0.999999), l2 = testing::disc_point(rng, 0.999999);
    REQUIRE(in_g2(pi_sym(l1, l2)));
  }
  for (const auto& m : sample_rii(20000, 22)) {
    REQUIRE(in_rii(m));
    REQUIRE(in_e(pi_cover(m)));
  }
}

TEST_CASE("property: embeddings respect the domains") {
  const auto g2 = sample_g2(2000, 23);
  const auto e = sample_e(2000, 24);
  for (int k = 0; k < 16; ++k) {
    const Complex w = cis(2.0 * M_PI * k / 16.0);
    for (const auto& p : g2) REQUIRE(in_e(g2_embed_e(w, p)));
    for (double r : {0.0, 0.5, 1.0}) {
      for (const auto& x : e) REQUIRE(in_g2(e_project_g2(r * w, x)));
    }
  }
}

TEST_CASE("property: in_g2 matches the root criterion and royal consistency") {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 10000; ++i) {
    const PointG2 p{2.5 * testing::disc_point(rng), 1.5 * testing::disc_point(rng)};
    const auto r = g2_roots(p);
    REQUIRE(in_g2(p) == (std::abs(r[0]) < 1.0 && std::abs(r[1]) < 1.0));
    const Complex l = testing::disc_point(rng, 0.999);
    REQUIRE(on_royal_g2(pi_sym(l, l), 1e-12));
  }
}

TEST_CASE("model domain sampler respects the bound") {
  for (const auto& z : sample_slc_model(0.5, 3, 5000, 26)) REQUIRE(in_slc_model(0.5, z));
}
