// The (theta, a, b) parametrization of {<zeta,zeta> != 0}, the reduced
// (theta, a, beta) coordinates built from the Gram-Schmidt frame U_a, and
// the scalar volume factor |a| - |beta|^2/|a| with its numeric-Jacobian check.
#pragma once

#include <cmath>
#include <stdexcept>

#include "liema/core.hpp"
#include "liema/lie_norm.hpp"

namespace liema {

struct LPoint {
  double theta = 0;
  rvec a;
  rvec b;
};

struct LTildePoint {
  double theta = 0;
  rvec a;
  rvec beta;  // length N-1
};

inline cvec embed(const LPoint& p) {
  const cplx phase = std::polar(1.0, p.theta);
  cvec z(p.a.size());
  for (std::size_t j = 0; j < p.a.size(); ++j) z[j] = phase * cplx(p.a[j], p.b[j]);
  return z;
}

namespace detail {
inline double rnorm(const rvec& x) {
  double s = 0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}
inline double rdot(const rvec& x, const rvec& y) {
  double s = 0;
  for (std::size_t j = 0; j < x.size(); ++j) s += x[j] * y[j];
  return s;
}
}  // namespace detail

// Orthogonal N x N matrix with last column a/|a|; the remaining columns come
// from Gram-Schmidt on e_j, j != m in ascending order. Row-major, real,
// stored as vector of columns.
inline std::vector<rvec> u_matrix(const rvec& a, std::size_t m) {
  const std::size_t n = a.size();
  if (m >= n) throw std::invalid_argument("u_matrix: index out of range");
  if (a[m] == 0.0) throw std::invalid_argument("u_matrix: a_m must be nonzero");
  const double na = detail::rnorm(a);
  std::vector<rvec> cols;
  rvec last(n);
  for (std::size_t j = 0; j < n; ++j) last[j] = a[j] / na;
  std::vector<rvec> basis = {last};
  for (std::size_t j = 0; j < n; ++j) {
    if (j == m) continue;
    rvec v(n, 0.0);
    v[j] = 1.0;
    for (const auto& u : basis) {
      const double c = detail::rdot(v, u);
      for (std::size_t i = 0; i < n; ++i) v[i] -= c * u[i];
    }
    const double nv = detail::rnorm(v);
    for (std::size_t i = 0; i < n; ++i) v[i] /= nv;
    basis.push_back(v);
    cols.push_back(v);
  }
  cols.push_back(last);
  return cols;  // N columns, last one parallel to a
}

inline LTildePoint to_beta(const LPoint& p, std::size_t m) {
  const auto u = u_matrix(p.a, m);
  const std::size_t n = p.a.size();
  rvec ub(n);
  for (std::size_t k = 0; k < n; ++k) ub[k] = detail::rdot(u[k], p.b);  // U^T b
  const double nb = detail::rnorm(p.b);
  if (std::abs(ub[n - 1]) > 1e-11 * (nb + 1.0))
    throw std::logic_error("to_beta: dropped coordinate not zero; <a,b> != 0");
  LTildePoint q;
  q.theta = p.theta;
  q.a = p.a;
  q.beta.assign(ub.begin(), ub.end() - 1);
  return q;
}

inline LTildePoint to_beta(const PolarTriple& p, std::size_t m) {
  return to_beta(LPoint{p.theta, p.a, p.b}, m);
}

inline double volume_factor(const rvec& a, const rvec& beta) {
  const double na = detail::rnorm(a);
  const double nbeta = detail::rnorm(beta);
  if (nbeta >= na)
    throw std::invalid_argument("volume_factor: requires |beta| < |a|");
  return na - nbeta * nbeta / na;
}

// |det| of the real Jacobian of (theta, a, beta) -> (Re zeta, Im zeta) by
// central differences, compared against the closed-form volume factor.
// Returns the relative error.
inline double jacobian_check(const LTildePoint& q, std::size_t m) {
  const std::size_t n = q.a.size();
  const auto eval = [&](const rvec& coords) {
    // coords = (theta, a_1..a_N, beta_1..beta_{N-1})
    rvec a(coords.begin() + 1, coords.begin() + 1 + n);
    rvec beta(coords.begin() + 1 + n, coords.end());
    const auto u = u_matrix(a, m);
    rvec b(n, 0.0);
    for (std::size_t k = 0; k + 1 < n; ++k)
      for (std::size_t i = 0; i < n; ++i) b[i] += u[k][i] * beta[k];
    LPoint p{coords[0], a, b};
    const cvec z = embed(p);
    rvec out(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      out[j] = z[j].real();
      out[n + j] = z[j].imag();
    }
    return out;
  };
  rvec coords;
  coords.push_back(q.theta);
  coords.insert(coords.end(), q.a.begin(), q.a.end());
  coords.insert(coords.end(), q.beta.begin(), q.beta.end());
  const std::size_t dim = 2 * n;
  if (coords.size() != dim)
    throw std::invalid_argument("jacobian_check: inconsistent dimensions");
  const double h = 1e-6;
  cmat jac(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    rvec plus = coords, minus = coords;
    plus[c] += h;
    minus[c] -= h;
    const rvec fp = eval(plus), fm = eval(minus);
    for (std::size_t r = 0; r < dim; ++r)
      jac(r, c) = (fp[r] - fm[r]) / (2.0 * h);
  }
  const double dj = std::abs(det(jac));
  const double factor = volume_factor(q.a, q.beta);
  return std::abs(dj - factor) / factor;
}

}  // namespace liema
