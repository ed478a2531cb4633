// The polynomial family P_z(t) = t^{n+1} - t^n + sum_k (-1)^{n+1-k} q_k t^k,
// companion-matrix root solving, discriminants (product and Sylvester
// resultant routes), the deflation identity for discriminants, the cubic
// nonnegative-roots criterion, the root-map Jacobian identity, and the
// equilibrium density on the positive-roots region.
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "liema/core.hpp"
#include "liema/holo_maps.hpp"

namespace liema {

struct MonicPolynomial {
  // p(t) = t^d + sum_{k<d} c_k t^k
  std::vector<cplx> coeffs;  // c_0 .. c_{d-1}
  std::size_t degree() const { return coeffs.size(); }

  cplx eval(cplx t) const {
    cplx r = 1.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) r = r * t + coeffs[k];
    return r;
  }
  cplx deriv(cplx t) const {
    const std::size_t d = coeffs.size();
    cplx r = static_cast<double>(d);
    for (std::size_t k = d; k-- > 1;) r = r * t + static_cast<double>(k) * coeffs[k];
    return r;
  }
  // p(t)/(t - s) by synthetic division (remainder dropped).
  MonicPolynomial deflate(cplx s) const {
    const std::size_t d = coeffs.size();
    if (d < 1) throw std::invalid_argument("deflate: degree must be >= 1");
    MonicPolynomial q;
    std::vector<cplx> b(d);
    b[d - 1] = 1.0;
    for (std::size_t k = d - 1; k-- > 0;) b[k] = coeffs[k + 1] + s * b[k + 1];
    q.coeffs.assign(b.begin(), b.end() - 1);
    return q;
  }
};

struct RootSet {
  std::vector<cplx> roots;
  std::vector<double> residuals;
};

// P_z of degree n+1 from the coefficient tuple q = (q_0, .., q_{n-1}).
inline MonicPolynomial build_P(const std::vector<cplx>& q, std::size_t n) {
  if (n < 1) throw std::invalid_argument("build_P: n must be >= 1");
  if (q.size() != n) throw std::invalid_argument("build_P: q must have n entries");
  MonicPolynomial p;
  p.coeffs.assign(n + 1, 0.0);
  p.coeffs[n] = -1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double sign = ((n + 1 - k) % 2 == 0) ? 1.0 : -1.0;
    p.coeffs[k] = sign * q[k];
  }
  return p;
}

// Frobenius companion-matrix eigenvalues with one Newton polish per root.
inline RootSet roots(const MonicPolynomial& p) {
  const std::size_t d = p.degree();
  if (d < 1) throw std::invalid_argument("roots: degree must be >= 1");
  RootSet rs;
  if (d == 1) {
    rs.roots = {-p.coeffs[0]};
  } else {
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d, d);
    for (std::size_t i = 1; i < d; ++i) c(i, i - 1) = 1.0;
    for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = -p.coeffs[i];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(c, false);
    for (std::size_t i = 0; i < d; ++i) {
      cplx r = es.eigenvalues()(i);
      const cplx dp = p.deriv(r);
      if (std::abs(dp) > 0) {
        const cplx step = p.eval(r) / dp;
        // Keep the polish only when it actually improves the residual;
        // near multiple roots the tiny derivative amplifies rounding noise
        // in p(r) into a large bogus step.
        if (std::abs(step) < 1.0 &&
            std::abs(p.eval(r - step)) <= std::abs(p.eval(r)))
          r -= step;
      }
      rs.roots.push_back(r);
    }
  }
  for (const auto& r : rs.roots) rs.residuals.push_back(std::abs(p.eval(r)));
  return rs;
}

enum class DiscriminantMethod { product, sylvester };

namespace detail {
inline cplx discriminant_product(const std::vector<cplx>& rts) {
  cplx d = 1.0;
  for (std::size_t j = 0; j < rts.size(); ++j)
    for (std::size_t k = j + 1; k < rts.size(); ++k) {
      const cplx diff = rts[j] - rts[k];
      d *= diff * diff;
    }
  return d;
}
}  // namespace detail

// Discriminant of a monic polynomial. Degree 1 has the empty-product value 1.
inline cplx discriminant(const MonicPolynomial& p, DiscriminantMethod method) {
  const std::size_t d = p.degree();
  if (d < 1) throw std::invalid_argument("discriminant: degree must be >= 1");
  if (d == 1) return 1.0;
  if (method == DiscriminantMethod::product)
    return detail::discriminant_product(roots(p).roots);
  // Sylvester matrix of p and p', size (2d-1) x (2d-1).
  std::vector<cplx> pc(d + 1);
  for (std::size_t k = 0; k < d; ++k) pc[k] = p.coeffs[k];
  pc[d] = 1.0;
  std::vector<cplx> dc(d);
  for (std::size_t k = 1; k <= d; ++k)
    dc[k - 1] = static_cast<double>(k) * pc[k];
  const std::size_t m = 2 * d - 1;
  cmat s(m, m);
  for (std::size_t r = 0; r < d - 1; ++r)
    for (std::size_t k = 0; k <= d; ++k) s(r, r + d - k) = pc[k];
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t k = 0; k < d; ++k) s(d - 1 + r, r + d - 1 - k) = dc[k];
  const cplx res = det(s);
  const double sign = ((d * (d - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
  return sign * res;
}

// Max relative residual of Delta~_j * p'(s_j)^2 = Delta over all roots.
inline double eq63_check(const MonicPolynomial& p) {
  const RootSet rs = roots(p);
  double mingap = 1e300;
  for (std::size_t j = 0; j < rs.roots.size(); ++j)
    for (std::size_t k = j + 1; k < rs.roots.size(); ++k)
      mingap = std::min(mingap, std::abs(rs.roots[j] - rs.roots[k]));
  if (mingap <= 1e-4)
    throw std::invalid_argument("eq63_check: identity ill-conditioned near multiple roots");
  const cplx delta = detail::discriminant_product(rs.roots);
  double worst = 0;
  for (std::size_t j = 0; j < rs.roots.size(); ++j) {
    std::vector<cplx> rest;
    for (std::size_t k = 0; k < rs.roots.size(); ++k)
      if (k != j) rest.push_back(rs.roots[k]);
    const cplx deflated = detail::discriminant_product(rest);
    const cplx dp = p.deriv(rs.roots[j]);
    worst = std::max(worst, std::abs(deflated * dp * dp - delta) / std::abs(delta));
  }
  return worst;
}

// True iff all roots of build_P(q) are nonnegative reals within tol.
inline bool in_K_roots(const std::vector<cplx>& q, double tol) {
  const RootSet rs = roots(build_P(q, q.size()));
  for (const auto& r : rs.roots)
    if (std::abs(r.imag()) > tol || r.real() < -tol) return false;
  return true;
}

inline double cubic_discriminant(double a, double b) {
  return a * a - 4.0 * a * a * a - 4.0 * b - 27.0 * b * b + 18.0 * a * b;
}

// Roots of t^3 - t^2 + a t - b are all nonnegative reals iff a, b, Delta >= 0.
inline bool cubic_criterion(double a, double b) {
  return a >= 0.0 && b >= 0.0 && cubic_discriminant(a, b) >= 0.0;
}

namespace detail {
// Match each root in `moved` to the nearest root of `base`; roots are simple
// and well separated under the callers' preconditions.
inline std::vector<cplx> match_roots(const std::vector<cplx>& base,
                                     const std::vector<cplx>& moved) {
  std::vector<cplx> out(base.size());
  std::vector<bool> used(moved.size(), false);
  for (std::size_t i = 0; i < base.size(); ++i) {
    std::size_t best = 0;
    double bestd = 1e300;
    for (std::size_t j = 0; j < moved.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(moved[j] - base[i]);
      if (d < bestd) { bestd = d; best = j; }
    }
    used[best] = true;
    out[i] = moved[best];
  }
  return out;
}
}  // namespace detail

// Checks |det d(f_1..f_n)/d(q_0..q_{n-1})| = 1/sqrt|Delta| at z, where the
// f_j are n of the n+1 root functions of P_z (the identity is independent of
// which root is dropped). Returns | |det| - |Delta|^{-1/2} | * |Delta|^{1/2}.
inline double lemma63_check(const PolynomialMap& qmap, const cvec& z) {
  const std::size_t n = qmap.n_out;
  if (qmap.n_in != n)
    throw std::invalid_argument("lemma63_check: qmap must map C^n -> C^n");
  const MapEval qe = eval_map(qmap, z);
  const std::vector<cplx> q0(qe.value.begin(), qe.value.end());
  const MonicPolynomial p = build_P(q0, n);
  const RootSet base = roots(p);
  const cplx delta = detail::discriminant_product(base.roots);
  if (std::abs(delta) <= 1e-6)
    throw std::invalid_argument("lemma63_check: too close to discriminant locus");
  const double h = 1e-6;
  cmat jac(n, n);  // rows: f_1..f_n (drop root 0), cols: q_k
  for (std::size_t k = 0; k < n; ++k) {
    auto qp = q0, qm = q0;
    qp[k] += h;
    qm[k] -= h;
    const auto rp = detail::match_roots(base.roots, roots(build_P(qp, n)).roots);
    const auto rm = detail::match_roots(base.roots, roots(build_P(qm, n)).roots);
    for (std::size_t j = 1; j <= n; ++j)
      jac(j - 1, k) = (rp[j] - rm[j]) / (2.0 * h);
  }
  const double dj = std::abs(det(jac));
  const double sd = std::sqrt(std::abs(delta));
  return std::abs(dj - 1.0 / sd) * sd;
}

// |n! Omega_n / sqrt(q_0 Delta)| times the frame evaluation of
// dq_0 ^ ... ^ dq_{n-1} through the exact Jacobian of qmap.
inline double density_6_1(const PolynomialMap& qmap, const cvec& z,
                          const std::vector<cvec>& frame) {
  const std::size_t n = qmap.n_out;
  if (qmap.n_in != n)
    throw std::invalid_argument("density_6_1: qmap must map C^n -> C^n");
  if (frame.size() != n)
    throw std::invalid_argument("density_6_1: frame must have n vectors");
  const MapEval qe = eval_map(qmap, z);
  const std::vector<cplx> qv(qe.value.begin(), qe.value.end());
  const cplx delta = detail::discriminant_product(roots(build_P(qv, n)).roots);
  const double q0d = (qv[0] * delta).real();
  if (q0d <= 0.0 || std::abs((qv[0] * delta).imag()) > 1e-8 * std::abs(q0d))
    throw std::invalid_argument("density_6_1: density singular or outside K interior");
  cmat w(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t t = 0; t < n; ++t) {
      cplx s = 0;
      for (std::size_t l = 0; l < n; ++l) s += qe.jacobian(k, l) * frame[t][l];
      w(k, t) = s;
    }
  double nfact = 1.0;
  for (std::size_t k = 2; k <= n; ++k) nfact *= static_cast<double>(k);
  return nfact * unit_ball_volume(n) * std::abs(det(w)) / std::sqrt(q0d);
}

}  // namespace liema
