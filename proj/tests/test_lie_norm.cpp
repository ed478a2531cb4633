#include <catch2/catch_amalgamated.hpp>

#include "liema/lie_norm.hpp"
#include "liema/quadrature.hpp"

using namespace liema;

TEST_CASE("reference decomposition of (1, 2i)") {
  const cvec z = {cplx(1, 0), cplx(0, 2)};
  const PolarTriple p = decompose(z);
  CHECK(p.theta == Catch::Approx(pi / 2).margin(1e-14));
  CHECK(p.a[0] == Catch::Approx(0.0).margin(1e-14));
  CHECK(p.a[1] == Catch::Approx(2.0).margin(1e-14));
  CHECK(p.b[0] == Catch::Approx(-1.0).margin(1e-14));
  CHECK(p.b[1] == Catch::Approx(0.0).margin(1e-14));
  CHECK(p.a_norm() == Catch::Approx(2.0).margin(1e-14));
  CHECK(p.b_norm() == Catch::Approx(1.0).margin(1e-14));
  CHECK(lie_norm(z) == Catch::Approx(3.0).margin(1e-13));
  // Closed forms from |zeta|^2 = 5, |<zeta,zeta>| = 3.
  const auto [na, nb] = polar_norms(z);
  CHECK(na == Catch::Approx(2.0).margin(1e-14));
  CHECK(nb == Catch::Approx(1.0).margin(1e-14));
}

TEST_CASE("real vectors decompose trivially") {
  const cvec x = {cplx(3, 0), cplx(-4, 0)};
  const PolarTriple p = decompose(x);
  CHECK(p.theta == 0.0);
  CHECK(p.b_norm() == Catch::Approx(0.0).margin(1e-15));
  CHECK(lie_norm(x) == Catch::Approx(5.0).margin(1e-13));
  CHECK(dist_CRN(x) == Catch::Approx(0.0).margin(1e-15));
  CHECK(in_CRN(x, 1e-12));
}

TEST_CASE("zero vector is rejected") {
  const cvec z = {cplx(0, 0), cplx(0, 0)};
  CHECK_THROWS_WITH(decompose(z), "zero vector has no polar decomposition");
  CHECK(lie_norm(z) == 0.0);
  CHECK_THROWS_AS(nearest_points(z), std::invalid_argument);
}

TEST_CASE("isotropic vector has a circle of nearest points") {
  const cvec z = {cplx(1, 0), cplx(0, 1)};  // <z,z> = 0
  CHECK(std::abs(bilinear(z, z)) < 1e-15);
  const PolarTriple p = decompose(z);
  CHECK(p.theta == 0.0);
  CHECK(p.a_norm() == Catch::Approx(1.0).margin(1e-14));
  CHECK(p.b_norm() == Catch::Approx(1.0).margin(1e-14));
  CHECK(dist_CRN(z) == Catch::Approx(1.0).margin(1e-14));
  const NearestPointSet np = nearest_points(z);
  REQUIRE(np.kind == NearestPointSet::Kind::circle);
  for (double t : {0.0, 0.4, 1.1, 2.9}) {
    const cvec w = np.family_point(t);
    CHECK(in_CRN(w, 1e-12));
    cvec diff(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) diff[j] = z[j] - w[j];
    CHECK(hermitian_norm(diff) == Catch::Approx(dist_CRN(z)).margin(1e-12));
  }
}

TEST_CASE("generic vector has a unique nearest point") {
  const cvec z = {cplx(1, 0.2), cplx(0.3, -0.7)};
  const NearestPointSet np = nearest_points(z);
  REQUIRE(np.kind == NearestPointSet::Kind::unique);
  CHECK(in_CRN(np.point, 1e-12));
  cvec diff(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) diff[j] = z[j] - np.point[j];
  CHECK(hermitian_norm(diff) == Catch::Approx(dist_CRN(z)).margin(1e-13));
}

TEST_CASE("random round-trips, orthogonality, and norm properties") {
  std::uint64_t ctr = 0;
  const std::uint64_t seed = 11;
  auto u = [&] { return 2.0 * counter_uniform(seed, ctr++) - 1.0; };
  for (int rep = 0; rep < 500; ++rep) {
    const std::size_t n = 2 + rep % 7;
    cvec z(n);
    for (auto& zj : z) zj = cplx(u(), u());
    const double h = hermitian_norm(z);
    if (h == 0.0) continue;
    const PolarTriple p = decompose(z);
    const cvec r = p.reconstruct();
    for (std::size_t j = 0; j < n; ++j)
      CHECK(std::abs(r[j] - z[j]) <= 1e-12 * h);
    double ab = 0;
    for (std::size_t j = 0; j < n; ++j) ab += p.a[j] * p.b[j];
    CHECK(std::abs(ab) <= 1e-12 * h * h);
    CHECK(p.b_norm() <= p.a_norm() + 1e-12 * h);
    CHECK(p.theta > -pi / 2 - 1e-15);
    CHECK(p.theta <= pi / 2 + 1e-15);
    // Norm comparisons: hermitian <= lie <= sqrt(2) hermitian.
    const double ln = lie_norm(z);
    CHECK(ln >= h - 1e-12);
    CHECK(ln <= std::sqrt(2.0) * h + 1e-12);
    // Triangle inequality against a second vector.
    cvec w(n);
    for (auto& wj : w) wj = cplx(u(), u());
    cvec sum(n);
    for (std::size_t j = 0; j < n; ++j) sum[j] = z[j] + w[j];
    CHECK(lie_norm(sum) <= lie_norm(z) + lie_norm(w) + 1e-11);
  }
}
