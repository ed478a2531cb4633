#include <catch2/catch_amalgamated.hpp>

#include "liema/poly_roots.hpp"
#include "liema/quadrature.hpp"

using namespace liema;

TEST_CASE("build_P sign pattern") {
  // n = 2: P(t) = t^3 - t^2 + q_1 t - q_0.
  const MonicPolynomial p = build_P({cplx(2, 0), cplx(3, 0)}, 2);
  REQUIRE(p.degree() == 3);
  CHECK(p.coeffs[0] == cplx(-2, 0));
  CHECK(p.coeffs[1] == cplx(3, 0));
  CHECK(p.coeffs[2] == cplx(-1, 0));
  CHECK_THROWS_AS(build_P({}, 0), std::invalid_argument);
}

TEST_CASE("companion roots with Newton polish") {
  // (t-1)(t-2)(t-3) = t^3 - 6t^2 + 11t - 6.
  MonicPolynomial p;
  p.coeffs = {cplx(-6, 0), cplx(11, 0), cplx(-6, 0)};
  const RootSet rs = roots(p);
  std::vector<double> re;
  for (const auto& r : rs.roots) {
    CHECK(std::abs(r.imag()) < 1e-10);
    re.push_back(r.real());
  }
  std::sort(re.begin(), re.end());
  CHECK(re[0] == Catch::Approx(1.0).margin(1e-10));
  CHECK(re[1] == Catch::Approx(2.0).margin(1e-10));
  CHECK(re[2] == Catch::Approx(3.0).margin(1e-10));
  for (double r : rs.residuals) CHECK(r < 1e-10);
}

TEST_CASE("synthetic division deflation") {
  MonicPolynomial p;
  p.coeffs = {cplx(-6, 0), cplx(11, 0), cplx(-6, 0)};
  const MonicPolynomial q = p.deflate(cplx(1, 0));  // t^2 - 5t + 6
  REQUIRE(q.degree() == 2);
  CHECK(std::abs(q.coeffs[0] - cplx(6, 0)) < 1e-14);
  CHECK(std::abs(q.coeffs[1] - cplx(-5, 0)) < 1e-14);
}

TEST_CASE("quadratic discriminant via Sylvester is b^2 - 4c") {
  MonicPolynomial p;
  p.coeffs = {cplx(3, 0), cplx(-2, 0)};  // t^2 - 2t + 3
  const cplx d = discriminant(p, DiscriminantMethod::sylvester);
  CHECK(std::abs(d - cplx(4 - 12, 0)) < 1e-12);
  CHECK(std::abs(discriminant(p, DiscriminantMethod::product) - d) < 1e-10);
}

TEST_CASE("quartic with positive discriminant but nonreal roots") {
  // t^4 - t^3 + (9/4) t^2 - t + 5/4, discriminant 289/16, roots {+-i, 1/2+-i}.
  MonicPolynomial p;
  p.coeffs = {cplx(1.25, 0), cplx(-1, 0), cplx(2.25, 0), cplx(-1, 0)};
  CHECK(std::abs(discriminant(p, DiscriminantMethod::product) - 289.0 / 16.0) <=
        1e-12);
  CHECK(std::abs(discriminant(p, DiscriminantMethod::sylvester) - 289.0 / 16.0) <=
        1e-12);
  const RootSet rs = roots(p);
  for (cplx want : {cplx(0, 1), cplx(0, -1), cplx(0.5, 1), cplx(0.5, -1)}) {
    double best = 1e300;
    for (const auto& r : rs.roots) best = std::min(best, std::abs(r - want));
    CHECK(best <= 1e-9);
  }
  CHECK(!in_K_roots({cplx(1.25, 0), cplx(-1, 0), cplx(2.25, 0)}, 1e-9));
}

TEST_CASE("product and Sylvester discriminants agree on random polynomials") {
  std::uint64_t ctr = 0;
  auto u = [&] { return 2.0 * counter_uniform(61, ctr++) - 1.0; };
  int done = 0;
  while (done < 200) {
    const std::size_t d = 2 + static_cast<std::size_t>((u() + 1.0) * 2.49);
    MonicPolynomial p;
    for (std::size_t k = 0; k < d; ++k) p.coeffs.push_back(cplx(u(), u()));
    const cplx dp = discriminant(p, DiscriminantMethod::product);
    if (std::abs(dp) < 1e-4) continue;
    const cplx ds = discriminant(p, DiscriminantMethod::sylvester);
    CHECK(std::abs(dp - ds) <= 1e-8 * std::abs(dp));
    ++done;
  }
}

TEST_CASE("deflated-discriminant identity and its conditioning guard") {
  MonicPolynomial p;
  p.coeffs = {cplx(-6, 0), cplx(11, 0), cplx(-6, 0)};
  CHECK(eq63_check(p) <= 1e-10);
  MonicPolynomial dbl;  // (t-1)^2
  dbl.coeffs = {cplx(1, 0), cplx(-2, 0)};
  CHECK_THROWS_AS(eq63_check(dbl), std::invalid_argument);
}

TEST_CASE("cubic nonnegative-roots criterion") {
  CHECK(cubic_discriminant(0.0, 0.0) == 0.0);
  // a = 11/36? Use the scaled cubic with roots {1/6, 1/3, 1/2}:
  // t^3 - t^2 + (11/36) t - 1/36.
  CHECK(cubic_criterion(11.0 / 36.0, 1.0 / 36.0));
  CHECK(in_K_roots({cplx(1.0 / 36.0, 0), cplx(11.0 / 36.0, 0)}, 1e-9));
  // b < 0 forces a negative root.
  CHECK(!cubic_criterion(0.1, -0.05));
  CHECK(!in_K_roots({cplx(-0.05, 0), cplx(0.1, 0)}, 1e-9));
  // Random agreement sweep away from the discriminant locus.
  std::uint64_t ctr = 0;
  auto u = [&] { return counter_uniform(62, ctr++); };
  for (int i = 0; i < 2000; ++i) {
    const double a = 1.5 * u() - 0.5;
    const double b = 1.5 * u() - 0.5;
    if (std::abs(cubic_discriminant(a, b)) < 1e-7) continue;
    CHECK(cubic_criterion(a, b) == in_K_roots({cplx(b, 0), cplx(a, 0)}, 1e-7));
  }
}

TEST_CASE("root-map Jacobian identity") {
  const PolynomialMap idmap =
      PolynomialMap::make(2, {{{1.0, {1, 0}}}, {{1.0, {0, 1}}}});
  std::uint64_t ctr = 0;
  auto u = [&] { return 2.0 * counter_uniform(63, ctr++) - 1.0; };
  int done = 0;
  while (done < 10) {
    const cvec z = {cplx(u(), u()), cplx(u(), u())};
    try {
      CHECK(lemma63_check(idmap, z) <= 1e-5);
    } catch (const std::invalid_argument&) {
      continue;
    }
    ++done;
  }
}

TEST_CASE("coefficient-chart density matches the 1-d simplex density") {
  // With q_0 = x(1-x) the roots of t^2 - t + q_0 are x and 1-x, and the
  // coefficient-chart density pulls back to 2/sqrt(x(1-x)).
  const PolynomialMap qmap =
      PolynomialMap::make(1, {{{1.0, {1}}, {-1.0, {2}}}});  // x - x^2
  const std::vector<cvec> frame = {{cplx(1, 0)}};
  for (double x : {0.1, 0.2, 0.35, 0.45}) {
    const double d = density_6_1(qmap, {cplx(x, 0)}, frame);
    CHECK(d == Catch::Approx(2.0 / std::sqrt(x * (1 - x))).epsilon(1e-10));
  }
  // Outside the nonnegative-roots region the density is rejected.
  CHECK_THROWS_AS(density_6_1(qmap, {cplx(2.0, 0)}, frame),
                  std::invalid_argument);
}
