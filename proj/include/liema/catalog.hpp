// Named compact sets with their f-tuples, Joukovski-based extremal-function
// evaluators, membership tests, and closed-form equilibrium densities.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "liema/core.hpp"
#include "liema/holo_maps.hpp"
#include "liema/lie_norm.hpp"

namespace liema {

enum class SetName { simplex, ball, quadrant_disk, rp_n, quadrant_plane_p2, torus };
enum class SetFlavor { euclidean, projective, torus };

inline SetName set_name_from_string(const std::string& s) {
  if (s == "simplex") return SetName::simplex;
  if (s == "ball") return SetName::ball;
  if (s == "quadrant_disk") return SetName::quadrant_disk;
  if (s == "rp_n") return SetName::rp_n;
  if (s == "quadrant_plane_p2") return SetName::quadrant_plane_p2;
  if (s == "torus") return SetName::torus;
  throw std::invalid_argument("unknown catalog set: " + s);
}

struct CatalogSet {
  SetName name;
  std::size_t dim = 0;  // n
  SetFlavor flavor = SetFlavor::euclidean;
  std::size_t k = 1;            // projective homogeneity f_0+..+f_n = <z,z>^k
  PolynomialMap f_tuple;        // euclidean: C^n -> C^{n+1}; projective: C^{n+1} -> C^{n+1}
  std::size_t max_degree = 0;   // growth tag for euclidean sets
};

struct DensitySample {
  rvec point;
  double density = 0;
  bool inside = false;
  bool singular = false;
};

namespace detail {
inline std::vector<int> unit_exp(std::size_t n, std::size_t j, int e) {
  std::vector<int> v(n, 0);
  v[j] = e;
  return v;
}
}  // namespace detail

inline CatalogSet make_catalog_set(SetName name, std::size_t n) {
  using detail::unit_exp;
  CatalogSet s;
  s.name = name;
  s.dim = n;
  switch (name) {
    case SetName::simplex: {
      if (n < 1) throw std::invalid_argument("simplex: dim must be >= 1");
      std::vector<std::vector<PolyTerm>> comps;
      std::vector<PolyTerm> f0 = {{1.0, std::vector<int>(n, 0)}};
      for (std::size_t j = 0; j < n; ++j) f0.push_back({-1.0, unit_exp(n, j, 1)});
      comps.push_back(f0);
      for (std::size_t j = 0; j < n; ++j)
        comps.push_back({{1.0, unit_exp(n, j, 1)}});
      s.f_tuple = PolynomialMap::make(n, comps);
      s.max_degree = 1;
      break;
    }
    case SetName::ball: {
      if (n < 1) throw std::invalid_argument("ball: dim must be >= 1");
      std::vector<std::vector<PolyTerm>> comps;
      std::vector<PolyTerm> f0 = {{1.0, std::vector<int>(n, 0)}};
      for (std::size_t j = 0; j < n; ++j) f0.push_back({-1.0, unit_exp(n, j, 2)});
      comps.push_back(f0);
      for (std::size_t j = 0; j < n; ++j)
        comps.push_back({{1.0, unit_exp(n, j, 2)}});
      s.f_tuple = PolynomialMap::make(n, comps);
      s.max_degree = 2;
      break;
    }
    case SetName::quadrant_disk: {
      if (n != 2) throw std::invalid_argument("quadrant_disk: dim must be 2");
      std::vector<int> e11 = {1, 1};
      std::vector<std::vector<PolyTerm>> comps = {
          {{1.0, {0, 0}}, {-1.0, {2, 0}}, {-1.0, {0, 2}}},
          {{1.0, {2, 0}}, {-2.0, e11}, {1.0, {0, 2}}},
          {{2.0, e11}}};
      s.f_tuple = PolynomialMap::make(2, comps);
      s.max_degree = 2;
      break;
    }
    case SetName::rp_n: {
      if (n < 1) throw std::invalid_argument("rp_n: dim must be >= 1");
      s.flavor = SetFlavor::projective;
      s.k = 1;
      std::vector<std::vector<PolyTerm>> comps;
      for (std::size_t j = 0; j <= n; ++j)
        comps.push_back({{1.0, unit_exp(n + 1, j, 2)}});
      s.f_tuple = PolynomialMap::make(n + 1, comps);
      break;
    }
    case SetName::quadrant_plane_p2: {
      if (n != 2) throw std::invalid_argument("quadrant_plane_p2: dim must be 2");
      s.flavor = SetFlavor::projective;
      s.k = 1;
      std::vector<std::vector<PolyTerm>> comps = {
          {{1.0, {2, 0, 0}}},
          {{1.0, {0, 2, 0}}, {-2.0, {0, 1, 1}}, {1.0, {0, 0, 2}}},
          {{2.0, {0, 1, 1}}}};
      s.f_tuple = PolynomialMap::make(3, comps);
      break;
    }
    case SetName::torus: {
      if (n < 1) throw std::invalid_argument("torus: dim must be >= 1");
      s.flavor = SetFlavor::torus;
      break;
    }
  }
  return s;
}

// f-tuple values at a complex point; torus uses the built-in trig tuple.
inline cvec f_values(const CatalogSet& set, const cvec& z) {
  if (set.flavor == SetFlavor::torus) {
    if (z.size() != set.dim)
      throw std::invalid_argument("f_values: torus point must have dim entries");
    const std::size_t n = set.dim;
    cvec f(n + 1, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const cplx sj = std::sin(pi * z[j]);
      const cplx cj = std::cos(pi * z[j]);
      f[j + 1] = sj * sj / static_cast<double>(n);
      f[0] += cj * cj / static_cast<double>(n);
    }
    return f;
  }
  cvec w = z;
  if (set.flavor == SetFlavor::projective && w.size() == set.dim)
    w.insert(w.begin(), 1.0);  // chart point, z_0 = 1
  return eval_map(set.f_tuple, w).value;
}

inline double joukovski(double z) { return 0.5 * (z + 1.0 / z); }

// Inverse Joukovski on [1, inf): s + sqrt(s^2 - 1).
inline double joukovski_inv(double s) {
  if (s < 1.0)
    throw std::invalid_argument("joukovski_inv: requires s >= 1");
  return s + std::sqrt(s * s - 1.0);
}

inline double psi(const CatalogSet& set, const cvec& z) {
  const cvec f = f_values(set, z);
  double sum_abs = 0;
  cplx sum = 0;
  for (const auto& fj : f) {
    sum_abs += std::abs(fj);
    sum += fj;
  }
  if (set.flavor == SetFlavor::projective) {
    cvec w = z;
    if (w.size() == set.dim) w.insert(w.begin(), 1.0);
    // Lie norm of (sqrt f_0, .., sqrt f_n): branch-free through
    // |zeta|^2 = sum |f_j| and <zeta,zeta> = sum f_j.
    const double q = std::abs(sum);
    const double lc2 =
        sum_abs + std::sqrt(std::max(0.0, sum_abs * sum_abs - q * q));
    return 0.5 * std::log(lc2) / static_cast<double>(set.k) -
           std::log(hermitian_norm(w));
  }
  return std::log(joukovski_inv(std::max(1.0, sum_abs)));
}

inline bool membership(const CatalogSet& set, const cvec& z, double tol) {
  for (const auto& fj : f_values(set, z))
    if (std::abs(fj.imag()) > tol || fj.real() < -tol) return false;
  return true;
}

namespace detail {
struct TorusStratum {
  std::vector<bool> in_J;  // per coordinate: y_j = 0 branch
  double f0 = 0;
  double trig_product = 1.0;
};

// The point is given as (x_1..x_n, y_1..y_n); each coordinate must satisfy
// y_j = 0 or x_j = 1/2 within 1e-9.
inline TorusStratum torus_stratum(const CatalogSet& set, const rvec& xy) {
  const std::size_t n = set.dim;
  if (xy.size() != 2 * n)
    throw std::invalid_argument("torus density point must be (x_1..x_n, y_1..y_n)");
  TorusStratum st;
  st.in_J.resize(n);
  double f0 = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const double x = xy[j], y = xy[n + j];
    if (std::abs(y) <= 1e-9) {
      st.in_J[j] = true;
      f0 += std::cos(pi * x) * std::cos(pi * x);
      st.trig_product *= std::abs(std::cos(pi * x));
    } else if (std::abs(x - 0.5) <= 1e-9) {
      st.in_J[j] = false;
      f0 -= std::sinh(pi * y) * std::sinh(pi * y);
      st.trig_product *= std::abs(std::sinh(pi * y));
    } else {
      throw std::invalid_argument("torus point is not on any stratum K_J");
    }
  }
  st.f0 = f0 / static_cast<double>(n);
  return st;
}
}  // namespace detail

// Closed-form equilibrium density at a real chart point inside K.
inline DensitySample sample_density(const CatalogSet& set, const rvec& x) {
  const std::size_t n = set.dim;
  DensitySample out;
  out.point = x;
  const double nfact = [&] {
    double f = 1.0;
    for (std::size_t k = 2; k <= n; ++k) f *= static_cast<double>(k);
    return f;
  }();
  const double omega = unit_ball_volume(n);
  const auto finish = [&](double radicand, double numerator) {
    if (radicand <= 0.0) {
      out.singular = true;
      out.density = 1e300;
    } else {
      out.density = numerator / std::sqrt(radicand);
    }
  };
  if (set.flavor == SetFlavor::torus) {
    const auto st = detail::torus_stratum(set, x);
    out.inside = st.f0 >= -1e-12;
    if (!out.inside) throw std::invalid_argument("density: point outside K");
    finish(st.f0, std::pow(2.0, static_cast<double>(n)) * nfact *
                      std::pow(pi, static_cast<double>(n)) * omega *
                      st.trig_product /
                      std::pow(static_cast<double>(n), 0.5 * static_cast<double>(n)));
    return out;
  }
  if (x.size() != n)
    throw std::invalid_argument("density: chart point must have n entries");
  cvec z(x.begin(), x.end());
  out.inside = membership(set, z, 1e-9);
  if (!out.inside) throw std::invalid_argument("density: point outside K");
  switch (set.name) {
    case SetName::simplex: {
      double prod = 1.0, rest = 1.0;
      for (double xi : x) {
        prod *= xi;
        rest -= xi;
      }
      finish(prod * rest, nfact * omega);
      break;
    }
    case SetName::ball: {
      double r2 = 0;
      for (double xi : x) r2 += xi * xi;
      finish(1.0 - r2, std::pow(2.0, static_cast<double>(n)) * nfact * omega);
      break;
    }
    case SetName::quadrant_disk: {
      const double r2 = x[0] * x[0] + x[1] * x[1];
      finish(x[0] * x[1] * (1.0 - r2),
             4.0 * std::sqrt(2.0) * pi * std::abs(x[0] + x[1]));
      break;
    }
    case SetName::rp_n: {
      double r2 = 0;
      for (double xi : x) r2 += xi * xi;
      out.density = nfact * omega /
                    std::pow(1.0 + r2, 0.5 * (static_cast<double>(n) + 1.0));
      break;
    }
    case SetName::quadrant_plane_p2: {
      const double r2 = x[0] * x[0] + x[1] * x[1];
      finish(x[0] * x[1],
             std::sqrt(2.0) * pi * std::abs(x[0] + x[1]) /
                 std::pow(1.0 + r2, 1.5));
      break;
    }
    case SetName::torus:
      break;  // handled above
  }
  return out;
}

inline double density(const CatalogSet& set, const rvec& x) {
  return sample_density(set, x).density;
}

// Cross-route check: the closed-form density against the limiting n-form
// evaluated through Phi = (sqrt f_0, .., sqrt f_n). Returns the relative error.
inline double density_vs_limit_form(const CatalogSet& set, const rvec& x) {
  if (set.flavor == SetFlavor::torus)
    throw std::invalid_argument("density_vs_limit_form: torus not supported");
  const std::size_t n = set.dim;
  cvec z(x.begin(), x.end());
  if (set.flavor == SetFlavor::projective) z.insert(z.begin(), 1.0);
  const MapEval fe = eval_map(set.f_tuple, z);
  MapEval phi;
  phi.value.resize(n + 1);
  phi.jacobian = cmat(n + 1, n);
  for (std::size_t j = 0; j <= n; ++j) {
    const double fj = fe.value[j].real();
    if (fj <= 1e-8 || std::abs(fe.value[j].imag()) > 1e-12)
      throw std::invalid_argument("density_vs_limit_form: requires f_j > 0 at x");
    phi.value[j] = std::sqrt(fj);
    // Chart derivatives: skip the z_0 column for projective sets.
    const std::size_t col0 = (set.flavor == SetFlavor::projective) ? 1 : 0;
    for (std::size_t l = 0; l < n; ++l)
      phi.jacobian(j, l) = fe.jacobian(j, col0 + l) / (2.0 * phi.value[j]);
  }
  std::vector<cvec> frame(n, cvec(n, 0.0));
  for (std::size_t t = 0; t < n; ++t) frame[t][t] = 1.0;
  // The euclidean extremal function is log of the *squared* Lie norm of
  // (sqrt(f_0),...,sqrt(f_n)), so its Monge-Ampere density is 2^n times the
  // limiting-form density of log|Phi|_c. The projective potential uses the
  // first power, so no rescaling is needed there.
  const double scale =
      (set.flavor == SetFlavor::euclidean) ? std::pow(2.0, double(n)) : 1.0;
  const double via_form = scale * std::abs(limit_density_from_eval(phi, frame));
  const double closed = density(set, x);
  return std::abs(via_form - closed) / closed;
}

// Asymptotic logarithmic growth rate of psi along the ray R -> psi(R z),
// estimated by the two-point slope between sqrt(R) and R. Differencing
// cancels the additive constant log(2c) that makes the one-point ratio
// psi(R z)/log R converge only like 1/log R.
inline double psi_growth(const CatalogSet& set, const cvec& z, double big_r) {
  const double r1 = std::sqrt(big_r);
  cvec w1(z.size()), w2(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) {
    w1[j] = r1 * z[j];
    w2[j] = big_r * z[j];
  }
  return (psi(set, w2) - psi(set, w1)) / (std::log(big_r) - std::log(r1));
}

}  // namespace liema
