#include <catch2/catch_amalgamated.hpp>

#include "liema/core.hpp"
#include "liema/quadrature.hpp"

using namespace liema;

TEST_CASE("bilinear form has no conjugation") {
  const cvec z = {cplx(0, 1)};
  CHECK(bilinear(z, z) == cplx(-1, 0));
  CHECK(hdot(z, z) == cplx(1, 0));
  const cvec z2 = {cplx(1, 2), cplx(3, -1)};
  const cvec w2 = {cplx(0, 1), cplx(2, 0)};
  // (1+2i)(i) + (3-i)(2) = i - 2 + 6 - 2i = 4 - i
  CHECK(bilinear(z2, w2) == cplx(4, -1));
  CHECK(bilinear(z2, w2) == bilinear(w2, z2));
  CHECK_THROWS_AS(bilinear(z, z2), std::invalid_argument);
}

TEST_CASE("branch_sqrt picks the root nearest the target argument") {
  const cplx w(-4.0, 0.0);
  const cplx r_up = branch_sqrt(w, pi / 2);
  CHECK(std::abs(r_up - cplx(0, 2)) < 1e-14);
  const cplx r_down = branch_sqrt(w, -pi / 2);
  CHECK(std::abs(r_down - cplx(0, -2)) < 1e-14);
  CHECK(branch_sqrt(cplx(0, 0), 0.3) == cplx(0, 0));
  // Both choices square back to w.
  const cplx w2(1.7, -2.3);
  for (double t : {0.0, 1.0, 2.5, -2.5}) {
    const cplx r = branch_sqrt(w2, t);
    CHECK(std::abs(r * r - w2) < 1e-13);
    CHECK(std::abs(std::remainder(std::arg(r) - t, 2 * pi)) <= pi / 2 + 1e-12);
  }
}

TEST_CASE("determinants by LU") {
  cmat m(2, 2);
  m(0, 0) = cplx(1, 0);
  m(0, 1) = cplx(2, 0);
  m(1, 0) = cplx(3, 0);
  m(1, 1) = cplx(4, 0);
  CHECK(std::abs(det(m) - cplx(-2, 0)) < 1e-14);
  CHECK(std::abs(det(cmat::identity(5)) - cplx(1, 0)) < 1e-14);
  cmat s(2, 3);
  CHECK_THROWS_AS(det(s), std::invalid_argument);
}

TEST_CASE("bordered determinant [J|v]") {
  // J = [[0],[1]], v = (1, z): det [[0,1],[1,z]] = -1 for every z.
  cmat j(2, 1);
  j(0, 0) = 0.0;
  j(1, 0) = 1.0;
  const cvec v = {cplx(1, 0), cplx(0.3, -0.8)};
  CHECK(std::abs(bordered_det(j, v) - cplx(-1, 0)) < 1e-14);
}

TEST_CASE("hermitian eigensolver on a known matrix") {
  cmat h(2, 2);
  h(0, 0) = 2.0;
  h(0, 1) = cplx(0, -1);
  h(1, 0) = cplx(0, 1);
  h(1, 1) = 2.0;
  const EigenResult er = hermitian_eigen(h);
  REQUIRE(er.values.size() == 2);
  CHECK(er.values[0] == Catch::Approx(1.0).margin(1e-12));
  CHECK(er.values[1] == Catch::Approx(3.0).margin(1e-12));
  // Eigenvector residual and orthonormality.
  for (std::size_t k = 0; k < 2; ++k) {
    cvec v(2);
    for (std::size_t i = 0; i < 2; ++i) v[i] = er.vectors(i, k);
    const cvec hv = h * v;
    for (std::size_t i = 0; i < 2; ++i)
      CHECK(std::abs(hv[i] - er.values[k] * v[i]) < 1e-12);
    CHECK(std::abs(hdot(v, v) - cplx(1, 0)) < 1e-12);
  }
}

TEST_CASE("hermitian eigensolver rejects non-Hermitian input") {
  cmat h(2, 2);
  h(0, 1) = cplx(1, 0);
  h(1, 0) = cplx(2, 0);
  CHECK_THROWS_AS(hermitian_eigen(h), std::invalid_argument);
}

TEST_CASE("bordered-determinant eigenvalue identity on random matrices") {
  // For Hermitian D with unit kernel vector v and remaining eigenvalues
  // l_1..l_n, and any (n+1) x n matrix A:
  //   det(A* D A) = l_1...l_n |det[A|v]|^2.
  std::uint64_t ctr = 0;
  const std::uint64_t seed = 7;
  auto u = [&] { return 2.0 * counter_uniform(seed, ctr++) - 1.0; };
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 2 + rep % 3;
    // Random Hermitian, then project out its lowest eigenvector to force a
    // zero eigenvalue.
    cmat g(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      g(i, i) = u() + 3.0;
      for (std::size_t j = i + 1; j <= n; ++j) {
        g(i, j) = cplx(u(), u());
        g(j, i) = std::conj(g(i, j));
      }
    }
    const EigenResult eg = hermitian_eigen(g);
    cvec v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) v[i] = eg.vectors(i, 0);
    cmat d = g;
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= n; ++j)
        d(i, j) -= eg.values[0] * v[i] * std::conj(v[j]);
    // d now has kernel vector v; its other eigenvalues are eg.values[1..n].
    double prod = 1.0;
    for (std::size_t k = 1; k <= n; ++k) prod *= eg.values[k];
    cmat a(n + 1, n);
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = cplx(u(), u());
    const cplx lhs = det(a.adjoint() * (d * a));
    const double rhs = prod * std::norm(bordered_det(a, v));
    CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(rhs)));
  }
}
