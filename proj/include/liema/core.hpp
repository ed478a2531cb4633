// Small-dimension complex linear algebra used throughout the library:
// the natural (unconjugated) bilinear form, branch-controlled square roots,
// bordered determinants via LU, and a cyclic Jacobi Hermitian eigensolver.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace liema {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;
using rvec = std::vector<double>;

inline constexpr double pi = std::numbers::pi;

// Dense row-major complex matrix. Dimensions stay tiny (N <= 16).
struct cmat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<cplx> data;

  cmat() = default;
  cmat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  cplx& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data[i * cols + j];
  }

  static cmat identity(std::size_t n) {
    cmat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  double frobenius_norm() const {
    double s = 0;
    for (const auto& z : data) s += std::norm(z);
    return std::sqrt(s);
  }

  cmat adjoint() const {
    cmat m(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
  }
};

inline cmat operator*(const cmat& a, const cmat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("cmat product: shape mismatch");
  cmat c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const cplx aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline cvec operator*(const cmat& a, const cvec& x) {
  if (a.cols != x.size()) throw std::invalid_argument("cmat*vec: shape mismatch");
  cvec y(a.rows);
  for (std::size_t i = 0; i < a.rows; ++i) {
    cplx s = 0;
    for (std::size_t j = 0; j < a.cols; ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

// <z,w> = sum_j z_j w_j, no conjugation.
inline cplx bilinear(const cvec& z, const cvec& w) {
  if (z.size() != w.size())
    throw std::invalid_argument("bilinear: dimension mismatch");
  cplx s = 0;
  for (std::size_t j = 0; j < z.size(); ++j) s += z[j] * w[j];
  return s;
}

// Squared Hermitian norm, summed directly; prefer this over squaring
// hermitian_norm when comparing against |<z,z>|, so that real vectors give
// an exact match instead of a sqrt/square rounding residual.
inline double hermitian_norm2(const cvec& z) {
  double s = 0;
  for (const auto& zj : z) s += std::norm(zj);
  return s;
}

inline double hermitian_norm(const cvec& z) {
  return std::sqrt(hermitian_norm2(z));
}

// Hermitian inner product sum_j z_j conj(w_j).
inline cplx hdot(const cvec& z, const cvec& w) {
  if (z.size() != w.size()) throw std::invalid_argument("hdot: dimension mismatch");
  cplx s = 0;
  for (std::size_t j = 0; j < z.size(); ++j) s += z[j] * std::conj(w[j]);
  return s;
}

// Square root of w whose argument lies within pi/2 of target_arg.
// The two roots differ by pi, so the choice is unambiguous.
inline cplx branch_sqrt(cplx w, double target_arg) {
  if (w == 0.0) return 0.0;
  cplx r = std::sqrt(w);
  double d = std::remainder(std::arg(r) - target_arg, 2.0 * pi);
  if (std::abs(d) > pi / 2.0) r = -r;
  return r;
}

// Determinant of a square complex matrix by LU with partial pivoting.
inline cplx det(cmat m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: matrix not square");
  const std::size_t n = m.rows;
  cplx d = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(m(i, k)) > best) { best = std::abs(m(i, k)); p = i; }
    }
    if (best == 0.0) return 0.0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      d = -d;
    }
    d *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return d;
}

// Det of [J|v] where J is (n+1) x n and v has length n+1.
inline cplx bordered_det(const cmat& j, const cvec& v) {
  if (j.rows != j.cols + 1 || v.size() != j.rows)
    throw std::invalid_argument("bordered_det: shape mismatch");
  cmat m(j.rows, j.rows);
  for (std::size_t r = 0; r < j.rows; ++r) {
    for (std::size_t c = 0; c < j.cols; ++c) m(r, c) = j(r, c);
    m(r, j.cols) = v[r];
  }
  return det(m);
}

struct EigenResult {
  std::vector<double> values;  // ascending
  cmat vectors;                // orthonormal columns, vectors(:,k) ~ values[k]
};

// Cyclic complex Jacobi rotations. Adequate for N <= 16.
inline EigenResult hermitian_eigen(const cmat& h_in) {
  if (h_in.rows != h_in.cols)
    throw std::invalid_argument("hermitian_eigen: matrix not square");
  const std::size_t n = h_in.rows;
  const double scale = h_in.frobenius_norm();
  {
    cmat diff = h_in;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) diff(i, j) -= std::conj(h_in(j, i));
    if (diff.frobenius_norm() > 1e-10 * std::max(scale, 1e-300) && scale > 0)
      throw std::invalid_argument("hermitian_eigen: input is not Hermitian");
  }
  cmat h = h_in;
  cmat v = cmat::identity(n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(h(p, q));
    off = std::sqrt(off);
    if (off <= 1e-15 * std::max(scale, 1e-300)) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = std::abs(h(p, q));
        if (apq <= 1e-18 * std::max(scale, 1e-300)) continue;
        const cplx phase = h(p, q) / apq;
        const double app = std::real(h(p, p));
        const double aqq = std::real(h(q, q));
        const double tau = (aqq - app) / (2.0 * apq);
        const double t =
            (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // G(p,p)=c, G(p,q)=s*phase, G(q,p)=-s*conj(phase), G(q,q)=c;
        // update H <- G^* H G and V <- V G.
        for (std::size_t i = 0; i < n; ++i) {
          const cplx hip = h(i, p), hiq = h(i, q);
          h(i, p) = c * hip - s * std::conj(phase) * hiq;
          h(i, q) = s * phase * hip + c * hiq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const cplx hpj = h(p, j), hqj = h(q, j);
          h(p, j) = c * hpj - s * phase * hqj;
          h(q, j) = s * std::conj(phase) * hpj + c * hqj;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const cplx vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - s * std::conj(phase) * viq;
          v(i, q) = s * phase * vip + c * viq;
        }
      }
    }
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = std::real(h(i, i));
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return diag[a] < diag[b]; });
  EigenResult res;
  res.values.resize(n);
  res.vectors = cmat(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    res.values[k] = diag[order[k]];
    for (std::size_t i = 0; i < n; ++i) res.vectors(i, k) = v(i, order[k]);
  }
  return res;
}

}  // namespace liema
