#include <catch2/catch_amalgamated.hpp>

#include "liema/catalog.hpp"
#include "liema/quadrature.hpp"

using namespace liema;

TEST_CASE("f-tuples form a partition of unity") {
  std::uint64_t ctr = 0;
  auto u = [&] { return 2.0 * counter_uniform(71, ctr++) - 1.0; };
  for (SetName nm : {SetName::simplex, SetName::ball, SetName::quadrant_disk}) {
    const CatalogSet s = make_catalog_set(nm, 2);
    for (int i = 0; i < 50; ++i) {
      const cvec z = {cplx(u(), u()), cplx(u(), u())};
      cplx sum = 0;
      for (const auto& f : f_values(s, z)) sum += f;
      CHECK(std::abs(sum - 1.0) < 1e-12);
    }
  }
  const CatalogSet torus = make_catalog_set(SetName::torus, 3);
  for (int i = 0; i < 50; ++i) {
    const cvec z = {cplx(u(), u()), cplx(u(), u()), cplx(u(), u())};
    cplx sum = 0;
    for (const auto& f : f_values(torus, z)) sum += f;
    CHECK(std::abs(sum - 1.0) < 1e-11);
  }
  // Projective tuples sum to <z,z>^k on C^{n+1}.
  for (SetName nm : {SetName::rp_n, SetName::quadrant_plane_p2}) {
    const CatalogSet s = make_catalog_set(nm, 2);
    for (int i = 0; i < 50; ++i) {
      const cvec z = {cplx(u(), u()), cplx(u(), u()), cplx(u(), u())};
      cplx sum = 0;
      for (const auto& f : eval_map(s.f_tuple, z).value) sum += f;
      CHECK(std::abs(sum - bilinear(z, z)) < 1e-12);
    }
  }
}

TEST_CASE("membership on chart points") {
  const CatalogSet simplex = make_catalog_set(SetName::simplex, 2);
  CHECK(membership(simplex, {cplx(0.2, 0), cplx(0.3, 0)}, 1e-9));
  CHECK(!membership(simplex, {cplx(0.6, 0), cplx(0.5, 0)}, 1e-9));
  CHECK(!membership(simplex, {cplx(0.2, 0.1), cplx(0.3, 0)}, 1e-9));
  const CatalogSet qd = make_catalog_set(SetName::quadrant_disk, 2);
  CHECK(membership(qd, {cplx(0.3, 0), cplx(0.2, 0)}, 1e-9));
  CHECK(!membership(qd, {cplx(0.3, 0), cplx(-0.2, 0)}, 1e-9));
  CHECK(!membership(qd, {cplx(0.9, 0), cplx(0.9, 0)}, 1e-9));  // r > 1
}

TEST_CASE("extremal-function candidate vanishes on K and grows logarithmically") {
  const CatalogSet simplex = make_catalog_set(SetName::simplex, 2);
  CHECK(psi(simplex, {cplx(0.2, 0), cplx(0.3, 0)}) ==
        Catch::Approx(0.0).margin(1e-12));
  CHECK(psi(simplex, {cplx(2.0, 0), cplx(0.0, 0)}) > 0.0);
  const CatalogSet ball = make_catalog_set(SetName::ball, 2);
  const cvec dir = {cplx(0.4, 0.1), cplx(-0.3, 0.2)};
  CHECK(psi_growth(simplex, dir, 1e6) == Catch::Approx(1.0).margin(1e-3));
  CHECK(psi_growth(ball, dir, 1e6) == Catch::Approx(2.0).margin(1e-3));
  // Projective flavors vanish on the real points of the chart.
  const CatalogSet rp = make_catalog_set(SetName::rp_n, 2);
  CHECK(psi(rp, {cplx(0.7, 0), cplx(-1.4, 0)}) == Catch::Approx(0.0).margin(1e-12));
  CHECK(psi(rp, {cplx(0.7, 0.5), cplx(-1.4, 0)}) > 1e-3);
}

TEST_CASE("Joukovski map and its inverse") {
  CHECK(joukovski(1.0) == 1.0);
  CHECK(joukovski_inv(1.0) == 1.0);
  for (double s : {1.0, 1.5, 3.0, 10.0})
    CHECK(joukovski(joukovski_inv(s)) == Catch::Approx(s).margin(1e-13));
  CHECK_THROWS_AS(joukovski_inv(0.5), std::invalid_argument);
}

TEST_CASE("closed-form density reference values") {
  const CatalogSet s1 = make_catalog_set(SetName::simplex, 1);
  CHECK(density(s1, {0.5}) == Catch::Approx(4.0).epsilon(1e-13));  // 2/sqrt(1/4)
  const CatalogSet b2 = make_catalog_set(SetName::ball, 2);
  CHECK(density(b2, {0.0, 0.0}) == Catch::Approx(8.0 * pi).epsilon(1e-13));
  const CatalogSet rp2 = make_catalog_set(SetName::rp_n, 2);
  CHECK(density(rp2, {0.0, 0.0}) == Catch::Approx(2.0 * pi).epsilon(1e-13));
  CHECK(density(rp2, {1.0, 0.0}) ==
        Catch::Approx(2.0 * pi / std::pow(2.0, 1.5)).epsilon(1e-13));
  const CatalogSet qd = make_catalog_set(SetName::quadrant_disk, 2);
  const double x1 = 0.3, x2 = 0.4;
  CHECK(density(qd, {x1, x2}) ==
        Catch::Approx(4.0 * std::sqrt(2.0) * pi * (x1 + x2) /
                      std::sqrt(x1 * x2 * (1 - x1 * x1 - x2 * x2)))
            .epsilon(1e-13));
}

TEST_CASE("density flags singular boundary points and rejects outsiders") {
  const CatalogSet s2 = make_catalog_set(SetName::simplex, 2);
  const DensitySample edge = sample_density(s2, {0.0, 0.3});
  CHECK(edge.inside);
  CHECK(edge.singular);
  CHECK_THROWS_WITH(sample_density(s2, {0.7, 0.7}),
                    Catch::Matchers::ContainsSubstring("outside"));
}

TEST_CASE("torus strata") {
  const CatalogSet t2 = make_catalog_set(SetName::torus, 2);
  // Fully real stratum: y = 0.
  const DensitySample real_pt = sample_density(t2, {0.2, 0.3, 0.0, 0.0});
  const double expect =
      4.0 * 2.0 * pi * pi * pi *
      std::abs(std::cos(pi * 0.2) * std::cos(pi * 0.3)) /
      (2.0 *
       std::sqrt(0.5 * (std::cos(pi * 0.2) * std::cos(pi * 0.2) +
                        std::cos(pi * 0.3) * std::cos(pi * 0.3))));
  CHECK(real_pt.density == Catch::Approx(expect).epsilon(1e-12));
  // Mixed stratum: x_2 = 1/2, y_2 != 0; requires f_0 >= 0.
  const DensitySample mixed = sample_density(t2, {0.1, 0.5, 0.0, 0.1});
  CHECK(mixed.inside);
  CHECK(mixed.density > 0.0);
  // Off-stratum point rejected.
  CHECK_THROWS_WITH(sample_density(t2, {0.2, 0.3, 0.1, 0.0}),
                    Catch::Matchers::ContainsSubstring("stratum"));
  // Deep mixed points leave K (f_0 < 0).
  CHECK_THROWS_AS(sample_density(t2, {0.1, 0.5, 0.0, 1.0}),
                  std::invalid_argument);
}

TEST_CASE("closed-form densities match the limiting form through sqrt(f)") {
  const CatalogSet sets[] = {
      make_catalog_set(SetName::simplex, 2), make_catalog_set(SetName::ball, 2),
      make_catalog_set(SetName::quadrant_disk, 2),
      make_catalog_set(SetName::rp_n, 2),
      make_catalog_set(SetName::quadrant_plane_p2, 2)};
  const std::vector<rvec> pts = {
      {0.2, 0.3}, {0.4, -0.2}, {0.5, 0.3}, {0.7, -1.1}, {0.6, 0.8}};
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(density_vs_limit_form(sets[i], pts[i]) <= 1e-6);
  CHECK_THROWS_AS(density_vs_limit_form(make_catalog_set(SetName::torus, 2),
                                        {0.1, 0.2}),
                  std::invalid_argument);
}

TEST_CASE("set names parse") {
  CHECK(set_name_from_string("ball") == SetName::ball);
  CHECK_THROWS_WITH(set_name_from_string("cube"),
                    Catch::Matchers::ContainsSubstring("cube"));
}
