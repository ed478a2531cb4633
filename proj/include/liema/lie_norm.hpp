// Polar decomposition zeta = e^{i theta}(a + ib) with <a,b> = 0 and
// |b| <= |a|, the Lie norm |a| + |b|, distance to CR^N, and the
// nearest-point set in CR^N.
#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>

#include "liema/core.hpp"

namespace liema {

struct PolarTriple {
  double theta = 0;  // in (-pi/2, pi/2]
  rvec a;
  rvec b;

  double a_norm() const {
    double s = 0;
    for (double x : a) s += x * x;
    return std::sqrt(s);
  }
  double b_norm() const {
    double s = 0;
    for (double x : b) s += x * x;
    return std::sqrt(s);
  }

  cvec reconstruct() const {
    const cplx phase = std::polar(1.0, theta);
    cvec z(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) z[j] = phase * cplx(a[j], b[j]);
    return z;
  }
};

// theta = arg(<zeta,zeta>)/2 in (-pi/2, pi/2]; theta = 0 for isotropic zeta.
inline PolarTriple decompose(const cvec& zeta) {
  if (hermitian_norm(zeta) == 0.0)
    throw std::invalid_argument("zero vector has no polar decomposition");
  const cplx q = bilinear(zeta, zeta);
  const double theta = (q == 0.0) ? 0.0 : 0.5 * std::arg(q);
  const cplx phase = std::polar(1.0, -theta);
  PolarTriple p;
  p.theta = theta;
  p.a.resize(zeta.size());
  p.b.resize(zeta.size());
  for (std::size_t j = 0; j < zeta.size(); ++j) {
    const cplx w = phase * zeta[j];
    p.a[j] = w.real();
    p.b[j] = w.imag();
  }
  return p;
}

// |a| and |b| from the closed forms (|zeta|^2 +- |<zeta,zeta>|)/2.
inline std::pair<double, double> polar_norms(const cvec& zeta) {
  const double h2 = hermitian_norm2(zeta);
  const double q = std::abs(bilinear(zeta, zeta));
  const double a2 = 0.5 * (h2 + q);
  const double b2 = std::max(0.0, 0.5 * (h2 - q));
  return {std::sqrt(a2), std::sqrt(b2)};
}

inline double lie_norm(const cvec& zeta) {
  const double h = hermitian_norm(zeta);
  if (h == 0.0) return 0.0;
  const auto [na, nb] = polar_norms(zeta);
  const double v1 = na + nb;
  // Second closed form of the cross norm; the h^4 - q^2 radicand is
  // evaluated factored as (h^2 - q)(h^2 + q) to avoid squaring before the
  // cancellation-prone subtraction.
  const double h2 = hermitian_norm2(zeta);
  const double q = std::abs(bilinear(zeta, zeta));
  const double v2 =
      std::sqrt(h2 + std::sqrt(std::max(0.0, h2 - q) * (h2 + q)));
  // Third form in terms of xi = Re zeta, eta = Im zeta.
  double xi2 = 0, eta2 = 0, xieta = 0;
  for (const auto& z : zeta) {
    xi2 += z.real() * z.real();
    eta2 += z.imag() * z.imag();
    xieta += z.real() * z.imag();
  }
  const double v3 =
      std::sqrt(h2 + 2.0 * std::sqrt(std::max(0.0, xi2 * eta2 - xieta * xieta)));
  // Near |zeta|^2 = |<zeta,zeta>| the Gram-determinant radicands lose half
  // the mantissa to cancellation, so allow a sqrt(eps)-scaled absolute slack
  // on top of the relative agreement demanded away from that variety.
  const double tol = 1e-11 * v1 + 4e-8 * h;
  if (std::abs(v1 - v2) > tol || std::abs(v1 - v3) > tol)
    throw std::logic_error("lie_norm: closed-form expressions disagree");
  return v1;
}

inline double dist_CRN(const cvec& zeta) {
  if (hermitian_norm(zeta) == 0.0) return 0.0;
  return polar_norms(zeta).second;
}

struct NearestPointSet {
  enum class Kind { unique, circle };
  Kind kind = Kind::unique;
  cvec point;                       // present iff unique
  double theta = 0;                 // circle family data
  rvec a;                           // circle family data
  cvec source;                      // the decomposed vector

  // For the circle case: t -> (zeta + e^{2it} conj(zeta)) / 2.
  cvec family_point(double t) const {
    const cplx rot = std::polar(1.0, 2.0 * t);
    cvec p(source.size());
    for (std::size_t j = 0; j < source.size(); ++j)
      p[j] = 0.5 * (source[j] + rot * std::conj(source[j]));
    return p;
  }
};

inline NearestPointSet nearest_points(const cvec& zeta) {
  if (hermitian_norm(zeta) == 0.0)
    throw std::invalid_argument("zero vector has no nearest-point set");
  NearestPointSet s;
  s.source = zeta;
  const PolarTriple p = decompose(zeta);
  s.theta = p.theta;
  s.a = p.a;
  const double h2 = hermitian_norm2(zeta);
  if (std::abs(bilinear(zeta, zeta)) <= 1e-13 * h2) {
    s.kind = NearestPointSet::Kind::circle;
    return s;
  }
  s.kind = NearestPointSet::Kind::unique;
  const cplx phase = std::polar(1.0, p.theta);
  s.point.resize(zeta.size());
  for (std::size_t j = 0; j < zeta.size(); ++j) s.point[j] = phase * p.a[j];
  return s;
}

// Membership in the real algebraic variety |zeta|^2 = |<zeta,zeta>|.
inline bool in_CRN(const cvec& zeta, double tol) {
  if (tol <= 0) throw std::invalid_argument("in_CRN: tol must be positive");
  const double h2 = hermitian_norm2(zeta);
  const double q = std::abs(bilinear(zeta, zeta));
  return h2 - q <= tol * (h2 + 1.0);
}

}  // namespace liema
