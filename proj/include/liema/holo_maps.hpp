// Polynomial holomorphic maps C^n -> C^m with exact Jacobians, the bordered
// determinant det[J_Phi|Phi], the A_Phi locus, the eps-regularized
// Monge-Ampere density, the pulled-back Levi matrix, and the limiting n-form
// on Phi^{-1}(CR^{n+1}).
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "liema/core.hpp"
#include "liema/lie_norm.hpp"
#include "liema/regularization.hpp"

namespace liema {

struct PolyTerm {
  cplx coeff;
  std::vector<int> exponents;  // length n_in
};

struct PolynomialMap {
  std::size_t n_in = 0;
  std::size_t n_out = 0;
  std::vector<std::vector<PolyTerm>> components;  // n_out components

  static PolynomialMap make(std::size_t n_in,
                            std::vector<std::vector<PolyTerm>> comps) {
    PolynomialMap m;
    m.n_in = n_in;
    m.n_out = comps.size();
    for (const auto& comp : comps)
      for (const auto& t : comp)
        if (t.exponents.size() != n_in)
          throw std::invalid_argument("PolynomialMap: exponent list length != n_in");
    m.components = std::move(comps);
    return m;
  }
};

struct MapEval {
  cvec value;     // length n_out
  cmat jacobian;  // n_out x n_in, exact term-by-term derivatives
  cplx border_det = 0;  // det[J|value] when n_out == n_in + 1
  bool has_border_det = false;
};

namespace detail {
inline cplx ipow(cplx z, int e) {
  cplx r = 1.0;
  while (e-- > 0) r *= z;
  return r;
}
}  // namespace detail

inline MapEval eval_map(const PolynomialMap& phi, const cvec& z) {
  if (z.size() != phi.n_in)
    throw std::invalid_argument("eval_map: dimension mismatch");
  MapEval e;
  e.value.assign(phi.n_out, 0.0);
  e.jacobian = cmat(phi.n_out, phi.n_in);
  for (std::size_t c = 0; c < phi.n_out; ++c) {
    for (const auto& t : phi.components[c]) {
      cplx mono = t.coeff;
      for (std::size_t j = 0; j < phi.n_in; ++j)
        mono *= detail::ipow(z[j], t.exponents[j]);
      e.value[c] += mono;
      for (std::size_t j = 0; j < phi.n_in; ++j) {
        if (t.exponents[j] == 0) continue;
        cplx d = t.coeff * static_cast<double>(t.exponents[j]);
        for (std::size_t l = 0; l < phi.n_in; ++l)
          d *= detail::ipow(z[l], l == j ? t.exponents[l] - 1 : t.exponents[l]);
        e.jacobian(c, j) += d;
      }
    }
  }
  if (phi.n_out == phi.n_in + 1) {
    e.border_det = bordered_det(e.jacobian, e.value);
    e.has_border_det = true;
  }
  return e;
}

inline bool in_A_Phi(const PolynomialMap& phi, const cvec& z, double tol) {
  if (phi.n_out != phi.n_in + 1)
    throw std::invalid_argument("in_A_Phi: requires n_out = n_in + 1");
  const MapEval e = eval_map(phi, z);
  return std::abs(e.border_det) <=
         tol * (1.0 + hermitian_norm(e.value) * e.jacobian.frobenius_norm());
}

// Density of (dd^c(h_eps o Phi))^n with respect to dV, from the map value and
// exact Jacobian.
inline double ma_density_eps_from_eval(const MapEval& e, double eps) {
  if (!e.has_border_det)
    throw std::invalid_argument("ma_density_eps: requires n_out = n_in + 1");
  if (eps <= 0) throw std::invalid_argument("ma_density_eps: epsilon must be > 0");
  if (hermitian_norm(e.value) == 0.0)
    throw std::invalid_argument("ma_density_eps: map must avoid the origin");
  const std::size_t n = e.jacobian.cols;
  const RegularizedEval r = reg_eval(e.value, eps);
  double nfact = 1.0;
  for (std::size_t k = 2; k <= n; ++k) nfact *= static_cast<double>(k);
  const double h2 = hermitian_norm(e.value) * hermitian_norm(e.value);
  return std::pow(2.0, static_cast<double>(n) + 2.0) * nfact *
         std::pow(1.0 + eps, static_cast<double>(n)) * eps * h2 *
         std::norm(e.border_det) /
         std::pow(r.phi_eps, static_cast<double>(n) + 2.0);
}

inline double ma_density_eps(const PolynomialMap& phi, const cvec& z, double eps) {
  return ma_density_eps_from_eval(eval_map(phi, z), eps);
}

// J_Phi(z)^* L_{h_eps}(Phi(z)) J_Phi(z).
// Chain rule for L_jk = d^2/dz_j dzbar_k: the pullback through a holomorphic
// map is J^T L conj(J).
inline cmat levi_pullback_from_eval(const MapEval& e, double eps) {
  const cmat l = levi_h_eps(e.value, eps);
  const std::size_t m = e.jacobian.rows, n = e.jacobian.cols;
  cmat out(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      cplx s = 0;
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q)
          s += e.jacobian(p, j) * l(p, q) * std::conj(e.jacobian(q, k));
      out(j, k) = s;
    }
  return out;
}

inline cmat levi_pullback(const PolynomialMap& phi, const cvec& z, double eps) {
  return levi_pullback_from_eval(eval_map(phi, z), eps);
}

// Evaluation of the limiting n-form
//   C_n (Phi_0^2+...+Phi_n^2)^{-(n+1)/2}
//     sum_j (-1)^{j+1} Phi_j dPhi_0 ^ ... ^ omit j ^ ... ^ dPhi_n
// on a frame of n tangent vectors; the square root is taken with the same
// argument as Phi in CR^{n+1}. Returns the signed real scalar.
inline double limit_density_from_eval(const MapEval& e,
                                      const std::vector<cvec>& frame) {
  const std::size_t n = e.jacobian.cols;
  if (e.jacobian.rows != n + 1)
    throw std::invalid_argument("limit_density: requires n_out = n_in + 1");
  if (frame.size() != n)
    throw std::invalid_argument("limit_density: frame must have n vectors");
  if (!in_CRN(e.value, 1e-8))
    throw std::invalid_argument("limit_density: Phi(z) not in CR^{n+1}");
  // dPhi_k evaluated on each frame vector.
  cmat dphi(n + 1, n);
  for (std::size_t k = 0; k <= n; ++k)
    for (std::size_t t = 0; t < n; ++t) {
      cplx s = 0;
      for (std::size_t l = 0; l < n; ++l) s += e.jacobian(k, l) * frame[t][l];
      dphi(k, t) = s;
    }
  cplx sum = 0;
  for (std::size_t j = 0; j <= n; ++j) {
    cmat minor(n, n);
    std::size_t r = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == j) continue;
      for (std::size_t t = 0; t < n; ++t) minor(r, t) = dphi(k, t);
      ++r;
    }
    const double sign = (j % 2 == 0) ? -1.0 : 1.0;  // (-1)^{j+1}
    sum += sign * e.value[j] * det(minor);
  }
  const double theta = decompose(e.value).theta;
  const cplx root = branch_sqrt(bilinear(e.value, e.value), theta);
  if (root == 0.0)
    throw std::invalid_argument("limit_density: Phi_0^2+...+Phi_n^2 vanishes");
  cplx denom = 1.0;
  for (std::size_t k = 0; k <= n; ++k) denom *= root;
  double nfact = 1.0, omega = 1.0;
  for (std::size_t k = 2; k <= n; ++k) nfact *= static_cast<double>(k);
  // Omega_n = pi^{n/2} / Gamma(n/2 + 1)
  omega = std::pow(pi, 0.5 * static_cast<double>(n)) /
          std::tgamma(0.5 * static_cast<double>(n) + 1.0);
  const double cn = ((n * (n - 1) / 2) % 2 == 0 ? 1.0 : -1.0) * nfact * omega;
  return (cn * sum / denom).real();
}

inline double limit_density(const PolynomialMap& phi, const cvec& z,
                            const std::vector<cvec>& frame) {
  const MapEval e = eval_map(phi, z);
  if (e.has_border_det) {
    const double scale =
        1.0 + hermitian_norm(e.value) * e.jacobian.frobenius_norm();
    if (std::abs(e.border_det) <= 1e-12 * scale)
      throw std::invalid_argument("limit_density: z lies in A_Phi");
  }
  return limit_density_from_eval(e, frame);
}

inline double unit_ball_volume(std::size_t n) {
  return std::pow(pi, 0.5 * static_cast<double>(n)) /
         std::tgamma(0.5 * static_cast<double>(n) + 1.0);
}

}  // namespace liema
