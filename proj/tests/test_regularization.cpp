#include <catch2/catch_amalgamated.hpp>

#include "liema/quadrature.hpp"
#include "liema/regularization.hpp"

using namespace liema;

TEST_CASE("regularized family reduces to the Lie norm at eps = 0") {
  const cvec z = {cplx(1, 0.4), cplx(-0.3, 0.9), cplx(0.2, -0.1)};
  const RegularizedEval r = reg_eval(z, 0.0);
  CHECK(r.v_eps == Catch::Approx(lie_norm(z)).margin(1e-13));
  CHECK(r.h_eps == Catch::Approx(std::log(lie_norm(z))).margin(1e-13));
  // v_eps increases with eps.
  CHECK(reg_eval(z, 0.1).v_eps > r.v_eps);
  CHECK(reg_eval(z, 1.0).v_eps > reg_eval(z, 0.1).v_eps);
}

TEST_CASE("reg_eval rejects bad input") {
  CHECK_THROWS_AS(reg_eval({cplx(0, 0)}, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(reg_eval({cplx(1, 0)}, -0.5), std::invalid_argument);
}

TEST_CASE("closed-form Levi matrix matches finite differences") {
  std::uint64_t ctr = 0;
  const std::uint64_t seed = 21;
  auto u = [&] { return 2.0 * counter_uniform(seed, ctr++) - 1.0; };
  for (int rep = 0; rep < 9; ++rep) {
    const std::size_t n = 2 + rep % 3;
    cvec z(n);
    for (auto& zj : z) zj = cplx(u(), u());
    if (in_CRN(z, 1e-6)) continue;
    const double eps = (rep % 3 == 0) ? 0.01 : (rep % 3 == 1 ? 0.1 : 1.0);
    const cmat l = levi_h_eps(z, eps);
    const cmat fd =
        fd_levi([eps](const cvec& w) { return h_eps(w, eps); }, z, 1e-4);
    const double scale = l.frobenius_norm();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        CHECK(std::abs(l(i, j) - fd(i, j)) <= 1e-6 * scale);
  }
}

TEST_CASE("Levi spectrum is {0, lambda1, lambda2 repeated}") {
  const cvec z = {cplx(1, 0.2), cplx(0.4, 0.7), cplx(-0.5, 0.1), cplx(0.3, 0.3)};
  REQUIRE(!in_CRN(z, 1e-8));
  for (double eps : {0.01, 0.1, 1.0}) {
    const LeviSpectrum sp = levi_spectrum(z, eps);
    const cmat l = levi_h_eps(z, eps);
    const EigenResult er = hermitian_eigen(l);
    std::vector<double> expect = {0.0, sp.lambda1, sp.lambda2, sp.lambda2};
    std::sort(expect.begin(), expect.end());
    const double scale = l.frobenius_norm();
    for (std::size_t k = 0; k < 4; ++k)
      CHECK(std::abs(er.values[k] - expect[k]) <= 1e-9 * scale);
    // Eigenvector checks: L conj(zeta) = 0 and L v1 = lambda1 v1.
    cvec zc(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) zc[j] = std::conj(z[j]);
    const cvec lz = l * zc;
    CHECK(hermitian_norm(lz) <= 1e-12 * scale * hermitian_norm(z));
    const cvec lv1 = l * sp.v1;
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(std::abs(lv1[j] - sp.lambda1 * sp.v1[j]) <= 1e-11 * scale);
    // Degenerate determinant (maximality).
    CHECK(std::abs(det(l)) <= 1e-10 * std::pow(scale, 4.0));
  }
}

TEST_CASE("eps = 0 Levi matrix has a two-dimensional kernel off CR^N") {
  const cvec z = {cplx(1, 0.5), cplx(-0.2, 0.8), cplx(0.6, -0.3)};
  REQUIRE(!in_CRN(z, 1e-8));
  const cmat l = levi_h_eps(z, 0.0);
  const EigenResult er = hermitian_eigen(l);
  const LeviSpectrum sp = levi_spectrum(z, 0.0);
  CHECK(sp.lambda1 == 0.0);
  CHECK(std::abs(er.values[0]) <= 1e-10 * sp.lambda2);
  CHECK(std::abs(er.values[1]) <= 1e-10 * sp.lambda2);
  CHECK(er.values[2] == Catch::Approx(sp.lambda2).epsilon(1e-10));
}

TEST_CASE("Levi closed form rejects points on CR^N") {
  const cvec x = {cplx(1, 0), cplx(2, 0)};
  CHECK_THROWS_AS(levi_spectrum(x, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(levi_h_eps(x, 0.1), std::invalid_argument);
}

TEST_CASE("holomorphic gradient matches finite differences") {
  const cvec z = {cplx(0.9, 0.3), cplx(-0.4, 0.6)};
  for (double eps : {0.05, 0.3, 1.0}) {
    const cvec g = grad_h_eps(z, eps);
    const cvec gfd =
        fd_grad([eps](const cvec& w) { return h_eps(w, eps); }, z, 1e-5);
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(std::abs(g[j] - gfd[j]) < 1e-7);
  }
}

TEST_CASE("lambda1 and lambda2 closed forms") {
  const cvec z = {cplx(1, 0.2), cplx(0.3, -0.6)};
  const double eps = 0.25;
  const RegularizedEval r = reg_eval(z, eps);
  const LeviSpectrum sp = levi_spectrum(z, eps);
  const double h = hermitian_norm(z);
  CHECK(sp.lambda1 ==
        Catch::Approx(2.0 * eps * (1 + eps) * std::pow(h, 4.0) /
                      std::pow(r.phi_eps, 3.0))
            .epsilon(1e-13));
  CHECK(sp.lambda2 ==
        Catch::Approx((1 + eps) / (2.0 * r.phi_eps)).epsilon(1e-13));
}
