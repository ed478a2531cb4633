// The regularizing family v_eps = (|a|^2 + eps |b|^2)^{1/2}
// + (|b|^2 + eps |a|^2)^{1/2} of the Lie norm, h_eps = log v_eps,
// its holomorphic gradient, and the closed-form Levi matrix assembled
// from the exact spectrum {0, lambda1, lambda2}.
#pragma once

#include <cmath>
#include <stdexcept>

#include "liema/core.hpp"
#include "liema/lie_norm.hpp"

namespace liema {

struct RegularizedEval {
  double A = 0;       // |a|^2
  double B = 0;       // |b|^2
  double A_eps = 0;   // A + eps*B
  double B_eps = 0;   // B + eps*A
  double phi_eps = 0; // 2 sqrt(A_eps B_eps)
  double v_eps = 0;   // sqrt(A_eps) + sqrt(B_eps)
  double h_eps = 0;   // log v_eps
  double epsilon = 0;
};

inline RegularizedEval reg_eval(const cvec& zeta, double eps) {
  if (hermitian_norm(zeta) == 0.0)
    throw std::invalid_argument("reg_eval: zeta must be nonzero");
  if (eps < 0) throw std::invalid_argument("reg_eval: epsilon must be >= 0");
  const double h2 = hermitian_norm2(zeta);
  const double q = std::abs(bilinear(zeta, zeta));
  RegularizedEval r;
  r.epsilon = eps;
  r.A = 0.5 * (h2 + q);
  r.B = std::max(0.0, 0.5 * (h2 - q));
  r.A_eps = r.A + eps * r.B;
  r.B_eps = r.B + eps * r.A;
  r.phi_eps = 2.0 * std::sqrt(r.A_eps * r.B_eps);
  r.v_eps = std::sqrt(r.A_eps) + std::sqrt(r.B_eps);
  r.h_eps = std::log(r.v_eps);
  return r;
}

inline double h_eps(const cvec& zeta, double eps) { return reg_eval(zeta, eps).h_eps; }

// Holomorphic (Wirtinger) gradient of h_eps, assembled from
// grad A_eps = e^{-i theta}(a - i eps b), grad B_eps = -i e^{-i theta}(b + i eps a).
inline cvec grad_h_eps(const cvec& zeta, double eps) {
  if (hermitian_norm(zeta) == 0.0)
    throw std::invalid_argument("grad_h_eps: zeta must be nonzero");
  const double h2 = hermitian_norm2(zeta);
  if (std::abs(bilinear(zeta, zeta)) <= 1e-13 * h2)
    throw std::invalid_argument("grad_h_eps: bilinear-degenerate point");
  const RegularizedEval r = reg_eval(zeta, eps);
  if (r.B_eps <= 0.0)
    throw std::invalid_argument("grad_h_eps: singular on CR^N at eps = 0");
  const PolarTriple p = decompose(zeta);
  const cplx phase = std::polar(1.0, -p.theta);
  const double ca = 0.5 / std::sqrt(r.A_eps);
  const double cb = 0.5 / std::sqrt(r.B_eps);
  cvec g(zeta.size());
  for (std::size_t j = 0; j < zeta.size(); ++j) {
    const cplx ga = phase * (cplx(p.a[j], 0) - cplx(0, eps) * p.b[j]);
    const cplx gb = cplx(0, -1.0) * phase * (cplx(p.b[j], 0) + cplx(0, eps) * p.a[j]);
    g[j] = (ca * ga + cb * gb) / r.v_eps;
  }
  return g;
}

// Eigenvectors are stored for the matrix convention
// L_jk = d^2 h / d zeta_j d zetabar_k, whose kernel is spanned by conj(zeta)
// and whose lambda1 eigenvector is conj(xi) = (|b| e_a + i |a| e_b)/|zeta|;
// the Levi *form* w -> sum L_jk w_j wbar_k is annihilated by zeta and takes
// its lambda1 value on xi itself.
struct LeviSpectrum {
  double lambda0 = 0;
  double lambda1 = 0;  // 2 eps (1+eps) |zeta|^4 / phi_eps^3
  double lambda2 = 0;  // (1+eps) / (2 phi_eps)
  cvec v0;             // conj(zeta)/|zeta|
  cvec v1;             // conj(xi) = (|b| e_a + i |a| e_b)/|zeta|
  std::size_t perp_dim = 0;  // N - 2, multiplicity of lambda2
};

namespace detail {
inline void require_off_CRN(const cvec& zeta, const char* what) {
  if (hermitian_norm(zeta) == 0.0 || in_CRN(zeta, 1e-12))
    throw std::invalid_argument(std::string(what) + " singular on CR^N");
}
}  // namespace detail

inline LeviSpectrum levi_spectrum(const cvec& zeta, double eps) {
  detail::require_off_CRN(zeta, "Levi closed form");
  const RegularizedEval r = reg_eval(zeta, eps);
  const PolarTriple p = decompose(zeta);
  const double na = p.a_norm();
  const double nb = p.b_norm();
  const double h = hermitian_norm(zeta);
  LeviSpectrum s;
  s.lambda1 = 2.0 * eps * (1.0 + eps) * h * h * h * h /
              (r.phi_eps * r.phi_eps * r.phi_eps);
  s.lambda2 = (1.0 + eps) / (2.0 * r.phi_eps);
  s.perp_dim = zeta.size() - 2;
  s.v0.resize(zeta.size());
  s.v1.resize(zeta.size());
  for (std::size_t j = 0; j < zeta.size(); ++j) {
    s.v0[j] = std::conj(zeta[j]) / h;
    s.v1[j] = (cplx(nb * p.a[j] / na, 0) + cplx(0, na) * (p.b[j] / nb)) / h;
  }
  return s;
}

// L = lambda1 v1 v1^* + lambda2 P with P the projector onto {a,b}^perp.
inline cmat levi_h_eps(const cvec& zeta, double eps) {
  const LeviSpectrum s = levi_spectrum(zeta, eps);
  const PolarTriple p = decompose(zeta);
  const double na = p.a_norm();
  const double nb = p.b_norm();
  const std::size_t n = zeta.size();
  cmat l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx ea_i = p.a[i] / na;
    const cplx eb_i = p.b[i] / nb;
    for (std::size_t j = 0; j < n; ++j) {
      const cplx ea_j = p.a[j] / na;
      const cplx eb_j = p.b[j] / nb;
      cplx proj = (i == j ? 1.0 : 0.0);
      proj -= ea_i * std::conj(ea_j) + eb_i * std::conj(eb_j);
      l(i, j) = s.lambda1 * s.v1[i] * std::conj(s.v1[j]) + s.lambda2 * proj;
    }
  }
  return l;
}

}  // namespace liema
