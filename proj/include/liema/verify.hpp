// Self-contained invariant suites runnable from the CLI: each suite exercises
// one module's contracts on reproducible random samples and returns named
// pass/fail results.
#pragma once

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "liema/catalog.hpp"
#include "liema/core.hpp"
#include "liema/holo_maps.hpp"
#include "liema/lie_norm.hpp"
#include "liema/poly_roots.hpp"
#include "liema/quadrature.hpp"
#include "liema/regularization.hpp"
#include "liema/volume_forms.hpp"

namespace liema {

struct VerifyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

inline void record(std::vector<VerifyResult>& out, const std::string& name,
                   bool pass, double worst, double tol) {
  std::ostringstream os;
  os << "max residual " << worst << " (tol " << tol << ")";
  out.push_back({name, pass, os.str()});
}

inline void record_max(std::vector<VerifyResult>& out, const std::string& name,
                       double worst, double tol) {
  record(out, name, worst <= tol, worst, tol);
}

inline double uni(std::uint64_t seed, std::uint64_t& ctr) {
  return counter_uniform(seed, ctr++);
}

inline cvec random_cvec(std::size_t n, std::uint64_t seed, std::uint64_t& ctr) {
  cvec z(n);
  for (std::size_t j = 0; j < n; ++j)
    z[j] = cplx(2.0 * uni(seed, ctr) - 1.0, 2.0 * uni(seed, ctr) - 1.0);
  return z;
}

}  // namespace detail

inline std::vector<VerifyResult> verify_lie(std::uint64_t seed = 42) {
  using detail::random_cvec;
  std::vector<VerifyResult> out;
  std::uint64_t ctr = 0;
  double worst_rt = 0, worst_orth = 0, worst_ineq = 0, worst_theta = 0;
  double worst_scale = 0, worst_near = 0;
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 7);
    const cvec z = random_cvec(n, seed, ctr);
    const double h = hermitian_norm(z);
    if (h == 0.0) continue;
    const PolarTriple p = decompose(z);
    const cvec r = p.reconstruct();
    double rt = 0;
    for (std::size_t j = 0; j < n; ++j) rt += std::norm(r[j] - z[j]);
    worst_rt = std::max(worst_rt, std::sqrt(rt) / h);
    worst_orth = std::max(worst_orth, std::abs(detail::rdot(p.a, p.b)) / (h * h));
    worst_ineq = std::max(worst_ineq, (p.b_norm() - p.a_norm()) / h);
    if (p.theta <= -0.5 * pi - 1e-15 || p.theta > 0.5 * pi + 1e-15)
      worst_theta = 1.0;
    // Absolute homogeneity of the norm.
    const cplx lam(1.7, -0.4);
    cvec lz(n);
    for (std::size_t j = 0; j < n; ++j) lz[j] = lam * z[j];
    worst_scale = std::max(
        worst_scale,
        std::abs(lie_norm(lz) - std::abs(lam) * lie_norm(z)) / lie_norm(lz));
    // Nearest points realize dist and lie in the real-like set.
    const NearestPointSet np = nearest_points(z);
    const cvec w = np.kind == NearestPointSet::Kind::circle ? np.family_point(0.3)
                                                            : np.point;
    cvec diff(n);
    for (std::size_t j = 0; j < n; ++j) diff[j] = z[j] - w[j];
    worst_near = std::max(
        worst_near, std::abs(hermitian_norm(diff) - dist_CRN(z)) / (1.0 + h));
    if (!in_CRN(w, 1e-10)) worst_near = std::max(worst_near, 1.0);
  }
  detail::record_max(out, "lie: polar round-trip", worst_rt, 1e-12);
  detail::record_max(out, "lie: <a,b> orthogonality", worst_orth, 1e-12);
  detail::record_max(out, "lie: |b| <= |a|", worst_ineq, 1e-12);
  detail::record_max(out, "lie: theta in (-pi/2, pi/2]", worst_theta, 0.5);
  detail::record_max(out, "lie: absolute homogeneity", worst_scale, 1e-12);
  detail::record_max(out, "lie: nearest points realize the distance", worst_near, 1e-10);
  // Fixed reference values.
  {
    const PolarTriple p = decompose({cplx(1, 0), cplx(0, 2)});
    const double worst =
        std::max({std::abs(p.theta - 0.5 * pi), std::abs(p.a[0]),
                  std::abs(p.a[1] - 2.0), std::abs(p.b[0] + 1.0),
                  std::abs(p.b[1]),
                  std::abs(lie_norm({cplx(1, 0), cplx(0, 2)}) - 3.0)});
    detail::record_max(out, "lie: reference decomposition (1, 2i)", worst, 1e-12);
  }
  {
    double worst = 0;
    std::uint64_t c2 = 1000;
    for (int i = 0; i < 200; ++i) {
      cvec x(3);
      for (auto& xj : x) xj = 2.0 * detail::uni(seed, c2) - 1.0;
      double e = 0;
      for (const auto& xj : x) e += std::norm(xj);
      worst = std::max(worst, std::abs(lie_norm(x) - std::sqrt(e)));
    }
    detail::record_max(out, "lie: extends the Euclidean norm on R^N", worst, 1e-12);
  }
  return out;
}

inline std::vector<VerifyResult> verify_levi(std::uint64_t seed = 43) {
  using detail::random_cvec;
  std::vector<VerifyResult> out;
  std::uint64_t ctr = 0;
  const double eps_list[] = {0.01, 0.1, 1.0};
  double worst_fd = 0, worst_eig = 0, worst_det = 0, worst_grad = 0,
         worst_kernel = 0;
  for (int i = 0; i < 24; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
    cvec z = random_cvec(n, seed, ctr);
    if (in_CRN(z, 1e-6) || std::abs(bilinear(z, z)) < 1e-3) { continue; }
    const double eps = eps_list[i % 3];
    const cmat l = levi_h_eps(z, eps);
    const ScalarField f = [eps](const cvec& w) { return h_eps(w, eps); };
    const cmat fd = fd_levi(f, z, 1e-4);
    const double scale = l.frobenius_norm();
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        worst_fd = std::max(worst_fd, std::abs(l(r, c) - fd(r, c)) / scale);
    // Spectrum: {0, lambda1, lambda2 x (n-2)} and singular determinant.
    const LeviSpectrum sp = levi_spectrum(z, eps);
    const EigenResult er = hermitian_eigen(l);
    std::vector<double> expect = {0.0, sp.lambda1};
    for (std::size_t k = 0; k + 2 < n; ++k) expect.push_back(sp.lambda2);
    std::sort(expect.begin(), expect.end());
    for (std::size_t k = 0; k < n; ++k)
      worst_eig = std::max(worst_eig, std::abs(er.values[k] - expect[k]) / scale);
    worst_det = std::max(worst_det, std::abs(det(l)) /
                                        std::pow(scale, static_cast<double>(n)));
    // Gradient closed form vs finite differences.
    const cvec g = grad_h_eps(z, eps);
    const cvec gfd = fd_grad(f, z, 1e-5);
    for (std::size_t j = 0; j < n; ++j)
      worst_grad = std::max(worst_grad, std::abs(g[j] - gfd[j]));
    // eps = 0: two-dimensional kernel off CR^N.
    const cmat l0 = levi_h_eps(z, 0.0);
    const EigenResult er0 = hermitian_eigen(l0);
    const LeviSpectrum sp0 = levi_spectrum(z, 0.0);
    worst_kernel = std::max(
        worst_kernel,
        std::max(std::abs(er0.values[0]), std::abs(er0.values[1])) / sp0.lambda2);
  }
  detail::record_max(out, "levi: closed form vs finite differences", worst_fd, 1e-5);
  detail::record_max(out, "levi: spectrum {0, l1, l2^(N-2)}", worst_eig, 1e-9);
  detail::record_max(out, "levi: singular determinant (maximality)", worst_det, 1e-10);
  detail::record_max(out, "levi: gradient closed form vs finite differences",
                     worst_grad, 1e-6);
  detail::record_max(out, "levi: 2-dim kernel at eps = 0", worst_kernel, 1e-10);
  // Pullback consistency 4^n n! det(levi_pullback) = ma_density_eps.
  {
    const PolynomialMap phi = PolynomialMap::make(
        2, {{{1.0, {1, 0}}},
            {{1.0, {0, 1}}},
            {{1.0, {0, 0}}, {1.0, {1, 1}}}});
    double worst = 0;
    std::uint64_t c2 = 5000;
    for (int i = 0; i < 20; ++i) {
      const cvec z = random_cvec(2, seed, c2);
      const double eps = (i % 2 == 0) ? 0.01 : 0.1;
      const MapEval e = eval_map(phi, z);
      if (hermitian_norm(e.value) < 1e-3 || in_CRN(e.value, 1e-6)) continue;
      const double lhs = 16.0 * 2.0 * std::abs(det(levi_pullback_from_eval(e, eps)));
      const double rhs = ma_density_eps_from_eval(e, eps);
      worst = std::max(worst, std::abs(lhs - rhs) / rhs);
    }
    detail::record_max(out, "levi: pullback determinant matches the density",
                       worst, 1e-8);
  }
  return out;
}

inline std::vector<VerifyResult> verify_volume(std::uint64_t seed = 44) {
  using detail::random_cvec;
  std::vector<VerifyResult> out;
  std::uint64_t ctr = 0;
  double worst_jac = 0, worst_beta = 0, worst_ortho = 0;
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
    const cvec z = random_cvec(n, seed, ctr);
    if (in_CRN(z, 1e-6)) continue;
    const PolarTriple p = decompose(z);
    std::size_t m = 0;
    for (std::size_t j = 1; j < n; ++j)
      if (std::abs(p.a[j]) > std::abs(p.a[m])) m = j;
    const auto u = u_matrix(p.a, m);
    for (std::size_t c1 = 0; c1 < n; ++c1)
      for (std::size_t c2 = 0; c2 <= c1; ++c2) {
        const double want = c1 == c2 ? 1.0 : 0.0;
        worst_ortho = std::max(
            worst_ortho, std::abs(detail::rdot(u[c1], u[c2]) - want));
      }
    const LTildePoint q = to_beta(LPoint{p.theta, p.a, p.b}, m);
    double b2 = 0, beta2 = 0;
    for (double v : q.beta) beta2 += v * v;
    for (double v : p.b) b2 += v * v;
    worst_beta = std::max(worst_beta,
                          std::abs(std::sqrt(beta2) - std::sqrt(b2)));
    worst_jac = std::max(worst_jac, jacobian_check(q, m));
  }
  detail::record_max(out, "volume: frame orthonormality", worst_ortho, 1e-12);
  detail::record_max(out, "volume: |beta| = |b|", worst_beta, 1e-12);
  detail::record_max(out, "volume: coordinate Jacobian vs closed-form factor",
                     worst_jac, 1e-6);
  return out;
}

inline std::vector<VerifyResult> verify_poly(std::uint64_t seed = 45) {
  std::vector<VerifyResult> out;
  std::uint64_t ctr = 0;
  // Quartic with positive discriminant but nonreal roots.
  {
    MonicPolynomial p;
    p.coeffs = {1.25, -1.0, 2.25, -1.0};
    const cplx dp = discriminant(p, DiscriminantMethod::product);
    const cplx ds = discriminant(p, DiscriminantMethod::sylvester);
    const double worst = std::max(std::abs(dp - 289.0 / 16.0),
                                  std::abs(ds - 289.0 / 16.0));
    detail::record_max(out, "poly: quartic discriminant 289/16", worst, 1e-12);
    const RootSet rs = roots(p);
    const std::vector<cplx> want = {cplx(0, 1), cplx(0, -1), cplx(0.5, 1),
                                    cplx(0.5, -1)};
    double wroot = 0;
    for (const auto& w : want) {
      double best = 1e300;
      for (const auto& r : rs.roots) best = std::min(best, std::abs(r - w));
      wroot = std::max(wroot, best);
    }
    detail::record_max(out, "poly: quartic roots {i, -i, 1/2+i, 1/2-i}", wroot, 1e-9);
    detail::record(out, "poly: positive discriminant does not imply real roots",
                   !in_K_roots({1.25, -1.0, 2.25, -1.0}, 1e-9) &&
                       dp.real() > 0,
                   0.0, 0.5);
  }
  // Product vs Sylvester on random simple-rooted monics, and the deflation identity.
  {
    double worst = 0, worst63 = 0;
    int done = 0;
    while (done < 300) {
      const std::size_t d = 2 + static_cast<std::size_t>(detail::uni(seed, ctr) * 5);
      MonicPolynomial p;
      for (std::size_t k = 0; k < d; ++k)
        p.coeffs.push_back(cplx(2.0 * detail::uni(seed, ctr) - 1.0,
                                2.0 * detail::uni(seed, ctr) - 1.0));
      const cplx dp = discriminant(p, DiscriminantMethod::product);
      if (std::abs(dp) < 1e-4) continue;
      const cplx ds = discriminant(p, DiscriminantMethod::sylvester);
      worst = std::max(worst, std::abs(dp - ds) / std::abs(dp));
      try {
        worst63 = std::max(worst63, eq63_check(p));
      } catch (const std::invalid_argument&) {
        continue;
      }
      ++done;
    }
    detail::record_max(out, "poly: product vs Sylvester discriminant", worst, 1e-8);
    detail::record_max(out, "poly: deflated-discriminant identity", worst63, 1e-7);
  }
  // Cubic criterion agrees with the root-based test.
  {
    int mismatches = 0;
    for (int i = 0; i < 3000; ++i) {
      const double a = 2.0 * detail::uni(seed, ctr) - 0.5;
      const double b = 2.0 * detail::uni(seed, ctr) - 0.5;
      if (std::abs(cubic_discriminant(a, b)) < 1e-7) continue;
      if (cubic_criterion(a, b) != in_K_roots({cplx(b, 0), cplx(a, 0)}, 1e-7))
        ++mismatches;
    }
    detail::record(out, "poly: cubic nonnegative-roots criterion", mismatches == 0,
                   static_cast<double>(mismatches), 0.5);
  }
  // Root-map Jacobian identity at sample points.
  {
    const PolynomialMap qmap = PolynomialMap::make(
        2, {{{1.0, {1, 0}}}, {{1.0, {0, 1}}}});  // q = z (identity chart)
    double worst = 0;
    int done = 0;
    while (done < 20) {
      const cvec z = detail::random_cvec(2, seed, ctr);
      try {
        worst = std::max(worst, lemma63_check(qmap, z));
      } catch (const std::invalid_argument&) {
        continue;
      }
      ++done;
    }
    detail::record_max(out, "poly: root-map Jacobian = 1/sqrt|Delta|", worst, 1e-5);
  }
  return out;
}

inline std::vector<VerifyResult> verify_catalog(std::uint64_t seed = 46) {
  std::vector<VerifyResult> out;
  std::uint64_t ctr = 0;
  // f-components sum to 1 (euclidean/torus) or <z,z>^k (projective).
  {
    double worst = 0;
    const SetName euclid[] = {SetName::simplex, SetName::ball,
                              SetName::quadrant_disk};
    for (SetName nm : euclid) {
      const std::size_t n = nm == SetName::quadrant_disk ? 2 : 2;
      const CatalogSet s = make_catalog_set(nm, n);
      for (int i = 0; i < 100; ++i) {
        const cvec z = detail::random_cvec(n, seed, ctr);
        cplx sum = 0;
        for (const auto& f : f_values(s, z)) sum += f;
        worst = std::max(worst, std::abs(sum - 1.0));
      }
    }
    const CatalogSet torus = make_catalog_set(SetName::torus, 2);
    for (int i = 0; i < 100; ++i) {
      const cvec z = detail::random_cvec(2, seed, ctr);
      cplx sum = 0;
      for (const auto& f : f_values(torus, z)) sum += f;
      worst = std::max(worst, std::abs(sum - 1.0));
    }
    const SetName proj[] = {SetName::rp_n, SetName::quadrant_plane_p2};
    for (SetName nm : proj) {
      const CatalogSet s = make_catalog_set(nm, 2);
      for (int i = 0; i < 100; ++i) {
        cvec z = detail::random_cvec(3, seed, ctr);
        cplx sum = 0;
        for (const auto& f : eval_map(s.f_tuple, z).value) sum += f;
        worst = std::max(worst, std::abs(sum - bilinear(z, z)));
      }
    }
    detail::record_max(out, "catalog: f-tuple partition of unity", worst, 1e-12);
  }
  // psi vanishes on K and grows logarithmically.
  {
    double worst = 0;
    const CatalogSet simplex = make_catalog_set(SetName::simplex, 2);
    const CatalogSet ball = make_catalog_set(SetName::ball, 2);
    for (int i = 0; i < 50; ++i) {
      const double x1 = detail::uni(seed, ctr), x2 = (1.0 - x1) * detail::uni(seed, ctr);
      worst = std::max(worst, std::abs(psi(simplex, {x1, x2})));
    }
    detail::record_max(out, "catalog: psi = 0 on K", worst, 1e-9);
    const cvec dir = {cplx(0.4, 0.1), cplx(-0.3, 0.2)};
    const double slope_s = psi_growth(simplex, dir, 1e6);
    const double slope_b = psi_growth(ball, dir, 1e6);
    detail::record_max(out, "catalog: asymptotic slopes (1 simplex, 2 ball)",
                       std::max(std::abs(slope_s - 1.0), std::abs(slope_b - 2.0)),
                       1e-3);
  }
  // Total masses against hand-checkable references.
  {
    const double m1 = mass(make_catalog_set(SetName::simplex, 1),
                           MassMethod::gauss_chebyshev, 200).value;
    const double m2 = mass(make_catalog_set(SetName::simplex, 2),
                           MassMethod::tanh_sinh, 200).value;
    const double r1 = mass(make_catalog_set(SetName::rp_n, 1),
                           MassMethod::tensor_grid, 200).value;
    const double r2 = mass(make_catalog_set(SetName::rp_n, 2),
                           MassMethod::tensor_grid, 200).value;
    detail::record_max(out, "catalog: simplex n=1 mass 2*pi",
                       std::abs(m1 - 2.0 * pi), 1e-10);
    detail::record_max(out, "catalog: simplex n=2 mass 4*pi^2",
                       std::abs(m2 - 4.0 * pi * pi), 1e-6);
    detail::record_max(out, "catalog: rp_n n=1 mass 2*pi",
                       std::abs(r1 - 2.0 * pi), 1e-10);
    detail::record_max(out, "catalog: rp_n n=2 mass 4*pi^2",
                       std::abs(r2 - 4.0 * pi * pi), 1e-6);
  }
  // Cross-route densities.
  {
    double worst = 0;
    const CatalogSet sets[] = {make_catalog_set(SetName::simplex, 2),
                               make_catalog_set(SetName::ball, 2),
                               make_catalog_set(SetName::quadrant_disk, 2)};
    for (const auto& s : sets) {
      int done = 0;
      while (done < 20) {
        rvec x;
        if (s.name == SetName::simplex) {
          const double x1 = 0.05 + 0.9 * detail::uni(seed, ctr);
          x = {x1, (1.0 - x1 - 0.05) * detail::uni(seed, ctr) + 0.025};
        } else if (s.name == SetName::ball) {
          const double r = 0.05 + 0.85 * detail::uni(seed, ctr);
          const double t = 2.0 * pi * detail::uni(seed, ctr);
          x = {r * std::cos(t), r * std::sin(t)};
        } else {
          const double r = 0.1 + 0.8 * detail::uni(seed, ctr);
          const double t = 0.1 + 1.35 * detail::uni(seed, ctr);
          x = {r * std::cos(t), r * std::sin(t)};
        }
        cvec z(x.begin(), x.end());
        if (!membership(s, z, 1e-9)) continue;
        try {
          worst = std::max(worst, density_vs_limit_form(s, x));
        } catch (const std::invalid_argument&) {
          continue;
        }
        ++done;
      }
    }
    detail::record_max(out, "catalog: closed-form density vs limiting form",
                       worst, 1e-6);
  }
  return out;
}

inline std::vector<VerifyResult> verify_suite(const std::string& suite) {
  std::vector<VerifyResult> out;
  const bool all = suite == "all";
  if (all || suite == "lie") {
    auto r = verify_lie();
    out.insert(out.end(), r.begin(), r.end());
  }
  if (all || suite == "levi") {
    auto r = verify_levi();
    out.insert(out.end(), r.begin(), r.end());
  }
  if (all || suite == "volume") {
    auto r = verify_volume();
    out.insert(out.end(), r.begin(), r.end());
  }
  if (all || suite == "poly") {
    auto r = verify_poly();
    out.insert(out.end(), r.begin(), r.end());
  }
  if (all || suite == "catalog") {
    auto r = verify_catalog();
    out.insert(out.end(), r.begin(), r.end());
  }
  if (out.empty()) throw std::invalid_argument("unknown verify suite: " + suite);
  return out;
}

}  // namespace liema
