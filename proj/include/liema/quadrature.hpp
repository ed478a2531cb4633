// Independent numerical oracles: Gauss-Chebyshev and tanh-sinh rules for the
// singular equilibrium densities, Gauss-Legendre tensor grids, reproducible
// counter-based Monte Carlo over C^n, eps -> 0 convergence studies, and
// finite-difference Levi matrices.
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liema/catalog.hpp"
#include "liema/core.hpp"
#include "liema/holo_maps.hpp"

namespace liema {

struct IntegrationResult {
  double value = 0;
  double stderr_est = 0;  // 0 for deterministic rules
  std::uint64_t nodes_or_samples = 0;
  std::string method;
};

struct ConvergenceRow {
  double epsilon = 0;
  double integral = 0;
  double stderr_est = 0;
  double reference = 0;
  double rel_error = 0;
};

// ---------- deterministic rules ----------

// Gauss-Chebyshev: int_a^b G(x) dx for G with 1/sqrt((x-a)(b-x)) endpoint
// singularities; exact when G * sqrt((x-a)(b-x)) is a low-degree polynomial.
inline double gc_integrate_singular(const std::function<double(double)>& g,
                                    double a, double b, std::size_t m) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double sum = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    const double t = std::cos((2.0 * i - 1.0) * pi / (2.0 * m));
    const double x = mid + half * t;
    sum += g(x) * std::sqrt((x - a) * (b - x));
  }
  return sum * pi / static_cast<double>(m);
}

// Plain Gauss-Chebyshev: int_{-1}^{1} p(x)/sqrt(1-x^2) dx.
inline double gc_integrate_weighted(const std::function<double(double)>& p,
                                    std::size_t m) {
  double sum = 0;
  for (std::size_t i = 1; i <= m; ++i)
    sum += p(std::cos((2.0 * i - 1.0) * pi / (2.0 * m)));
  return sum * pi / static_cast<double>(m);
}

// Double-exponential rule on (a,b); handles algebraic endpoint singularities.
inline double tanh_sinh_integrate(const std::function<double(double)>& f,
                                  double a, double b, std::size_t levels = 7) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  const double h = 1.0 / static_cast<double>(std::size_t{1} << levels);
  const double tmax = 4.0;
  double sum = 0;
  const auto node = [&](double t) {
    const double u = 0.5 * pi * std::sinh(t);
    const double x = mid + half * std::tanh(u);
    const double w = half * 0.5 * pi * std::cosh(t) / (std::cosh(u) * std::cosh(u));
    if (x <= a || x >= b || w < 1e-300 || !std::isfinite(w)) return;
    const double v = f(x);
    if (std::isfinite(v)) sum += v * w;
  };
  node(0.0);
  for (double t = h; t <= tmax; t += h) {
    node(t);
    node(-t);
  }
  return sum * h;
}

inline void gauss_legendre_nodes(std::size_t m, rvec& x, rvec& w) {
  x.resize(m);
  w.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    double t = std::cos(pi * (i + 0.75) / (m + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (std::size_t k = 2; k <= m; ++k) {
        const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = m * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[i] = t;
    double p0 = 1.0, p1 = t;
    for (std::size_t k = 2; k <= m; ++k) {
      const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    const double dp = m * (t * p1 - p0) / (t * t - 1.0);
    w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
}

inline double gl_integrate(const std::function<double(double)>& f, double a,
                           double b, std::size_t m) {
  rvec x, w;
  gauss_legendre_nodes(m, x, w);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double sum = 0;
  for (std::size_t i = 0; i < m; ++i) sum += w[i] * f(mid + half * x[i]);
  return sum * half;
}

// ---------- total masses of the catalog densities ----------

enum class MassMethod { gauss_chebyshev, tanh_sinh, tensor_grid, monte_carlo };

inline MassMethod mass_method_from_string(const std::string& s) {
  if (s == "gauss_chebyshev") return MassMethod::gauss_chebyshev;
  if (s == "tanh_sinh") return MassMethod::tanh_sinh;
  if (s == "tensor_grid") return MassMethod::tensor_grid;
  if (s == "monte_carlo") return MassMethod::monte_carlo;
  throw std::invalid_argument("unknown integration method: " + s);
}

inline IntegrationResult mass(const CatalogSet& set, MassMethod method,
                              std::size_t resolution) {
  IntegrationResult res;
  res.nodes_or_samples = resolution;
  const std::size_t n = set.dim;
  const auto dens = [&](const rvec& x) { return density(set, x); };
  switch (set.name) {
    case SetName::simplex: {
      if (method == MassMethod::gauss_chebyshev && n == 1) {
        res.method = "gauss_chebyshev";
        res.value = gc_integrate_singular([&](double x) { return dens({x}); },
                                          0.0, 1.0, resolution);
        return res;
      }
      if ((method == MassMethod::tanh_sinh || method == MassMethod::gauss_chebyshev)
          && n == 2) {
        res.method = "tanh_sinh+gauss_chebyshev";
        res.value = tanh_sinh_integrate(
            [&](double x1) {
              return gc_integrate_singular(
                  [&](double x2) { return dens({x1, x2}); }, 0.0, 1.0 - x1,
                  resolution);
            },
            0.0, 1.0);
        return res;
      }
      break;
    }
    case SetName::ball: {
      if (method == MassMethod::gauss_chebyshev && n == 1) {
        res.method = "gauss_chebyshev";
        res.value = gc_integrate_singular([&](double x) { return dens({x}); },
                                          -1.0, 1.0, resolution);
        return res;
      }
      if (method == MassMethod::tanh_sinh && n == 2) {
        res.method = "tanh_sinh";
        res.value = tanh_sinh_integrate(
            [&](double r) { return 2.0 * pi * r * dens({r, 0.0}); }, 0.0, 1.0);
        return res;
      }
      break;
    }
    case SetName::quadrant_disk: {
      if (method == MassMethod::tanh_sinh) {
        res.method = "tanh_sinh";
        // Both quadrants carry equal mass.
        res.value = 2.0 * tanh_sinh_integrate(
                              [&](double phi) {
                                return tanh_sinh_integrate(
                                    [&](double r) {
                                      return r * dens({r * std::cos(phi),
                                                       r * std::sin(phi)});
                                    },
                                    0.0, 1.0);
                              },
                              0.0, 0.5 * pi);
        return res;
      }
      break;
    }
    case SetName::rp_n: {
      if (method == MassMethod::tensor_grid && n == 1) {
        res.method = "tensor_grid";
        res.value = gl_integrate(
            [&](double u) {
              const double c = std::cos(u);
              return dens({std::tan(u)}) / (c * c);
            },
            -0.5 * pi, 0.5 * pi, resolution);
        return res;
      }
      if (method == MassMethod::tensor_grid && n == 2) {
        res.method = "tensor_grid";
        res.value = 2.0 * pi *
                    gl_integrate(
                        [&](double u) {
                          const double r = std::tan(u);
                          const double c = std::cos(u);
                          return r * dens({r, 0.0}) / (c * c);
                        },
                        0.0, 0.5 * pi, resolution);
        return res;
      }
      break;
    }
    case SetName::quadrant_plane_p2: {
      if (method == MassMethod::tanh_sinh) {
        res.method = "tanh_sinh+tensor_grid";
        res.value = 2.0 * tanh_sinh_integrate(
                              [&](double phi) {
                                return gl_integrate(
                                    [&](double u) {
                                      const double r = std::tan(u);
                                      const double c = std::cos(u);
                                      return r *
                                             dens({r * std::cos(phi),
                                                   r * std::sin(phi)}) /
                                             (c * c);
                                    },
                                    0.0, 0.5 * pi, resolution);
                              },
                              0.0, 0.5 * pi);
        return res;
      }
      break;
    }
    case SetName::torus:
      break;
  }
  throw std::invalid_argument("mass: method incompatible with this set/dim");
}

// ---------- counter-based Monte Carlo ----------

namespace detail {
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}
}  // namespace detail

// Uniform double in [0,1) from (seed, counter); scheduling-independent.
inline double counter_uniform(std::uint64_t seed, std::uint64_t counter) {
  const std::uint64_t v = detail::mix64(detail::mix64(seed) ^ counter * 0xD1342543DE82EF95ull);
  return static_cast<double>(v >> 11) * 0x1.0p-53;
}

// Smooth compactly supported bump prod_j max(0, 1 - |z_j - c_j|^2 / w^2)^3.
struct BumpFunction {
  cvec center;
  double width = 1.0;

  double operator()(const cvec& z) const {
    if (z.size() != center.size())
      throw std::invalid_argument("bump: dimension mismatch");
    double v = 1.0;
    for (std::size_t j = 0; j < z.size(); ++j) {
      const double t = 1.0 - std::norm(z[j] - center[j]) / (width * width);
      if (t <= 0.0) return 0.0;
      v *= t * t * t;
    }
    return v;
  }
};

struct Box {
  double lo = -1.0;
  double hi = 1.0;
};

// Monte Carlo estimate of int chi * ma_density_eps dV over the box (the box
// bounds apply to every real coordinate of C^n = R^{2n}).
inline IntegrationResult mc_weak_integral(const PolynomialMap& phi,
                                          const BumpFunction& chi, double eps,
                                          Box box, std::uint64_t samples,
                                          std::uint64_t seed) {
  if (eps <= 0) throw std::invalid_argument("mc_weak_integral: eps must be > 0");
  const std::size_t n = phi.n_in;
  const double span = box.hi - box.lo;
  double volume = 1.0;
  for (std::size_t d = 0; d < 2 * n; ++d) volume *= span;
  double sum = 0, sumsq = 0;
  cvec z(n);
  for (std::uint64_t i = 0; i < samples; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double x = box.lo + span * counter_uniform(seed, i * 2 * n + 2 * j);
      const double y = box.lo + span * counter_uniform(seed, i * 2 * n + 2 * j + 1);
      z[j] = cplx(x, y);
    }
    const double c = chi(z);
    double v = 0;
    if (c > 0.0) {
      const MapEval e = eval_map(phi, z);
      if (hermitian_norm(e.value) == 0.0)
        throw std::invalid_argument("mc_weak_integral: Phi vanishes at a sample point");
      v = c * ma_density_eps_from_eval(e, eps);
    }
    sum += v;
    sumsq += v * v;
  }
  const double mean = sum / static_cast<double>(samples);
  const double var =
      std::max(0.0, sumsq / static_cast<double>(samples) - mean * mean);
  IntegrationResult res;
  res.value = volume * mean;
  res.stderr_est = volume * std::sqrt(var / static_cast<double>(samples));
  res.nodes_or_samples = samples;
  res.method = "monte_carlo";
  return res;
}

// Reference for the weak limit: the limiting measure restricted to the real
// slice R^n (which is where the mass of the catalog-style maps lives),
// integrated against chi by tensor Gauss-Legendre over the bump support.
inline double weak_limit_reference(const PolynomialMap& phi,
                                   const BumpFunction& chi, Box box,
                                   std::size_t nodes_per_axis = 200) {
  const std::size_t n = phi.n_in;
  std::vector<cvec> frame(n, cvec(n, 0.0));
  for (std::size_t t = 0; t < n; ++t) frame[t][t] = 1.0;
  const auto integrand = [&](const rvec& x) -> double {
    cvec z(x.begin(), x.end());
    const double c = chi(z);
    if (c <= 0.0) return 0.0;
    try {
      const MapEval e = eval_map(phi, z);
      if (!in_CRN(e.value, 1e-8)) return 0.0;
      return c * std::abs(limit_density_from_eval(e, frame));
    } catch (const std::invalid_argument&) {
      return 0.0;  // A_Phi or off-M points carry no mass
    }
  };
  if (n == 1) {
    const double a = std::max(box.lo, chi.center[0].real() - chi.width);
    const double b = std::min(box.hi, chi.center[0].real() + chi.width);
    if (b <= a) return 0.0;
    return gl_integrate([&](double x) { return integrand({x}); }, a, b,
                        nodes_per_axis);
  }
  if (n == 2) {
    const double a1 = std::max(box.lo, chi.center[0].real() - chi.width);
    const double b1 = std::min(box.hi, chi.center[0].real() + chi.width);
    const double a2 = std::max(box.lo, chi.center[1].real() - chi.width);
    const double b2 = std::min(box.hi, chi.center[1].real() + chi.width);
    if (b1 <= a1 || b2 <= a2) return 0.0;
    return gl_integrate(
        [&](double x1) {
          return gl_integrate([&](double x2) { return integrand({x1, x2}); },
                              a2, b2, nodes_per_axis);
        },
        a1, b1, nodes_per_axis);
  }
  throw std::invalid_argument("weak_limit_reference: only n <= 2 supported");
}

inline std::vector<ConvergenceRow> convergence_study(
    const PolynomialMap& phi, const BumpFunction& chi,
    std::vector<double> eps_list, Box box, std::uint64_t samples,
    std::uint64_t seed) {
  std::sort(eps_list.begin(), eps_list.end(), std::greater<double>());
  std::vector<ConvergenceRow> rows;
  if (eps_list.empty()) return rows;
  const double reference = weak_limit_reference(phi, chi, box);
  for (double eps : eps_list) {
    const IntegrationResult r = mc_weak_integral(phi, chi, eps, box, samples, seed);
    ConvergenceRow row;
    row.epsilon = eps;
    row.integral = r.value;
    row.stderr_est = r.stderr_est;
    row.reference = reference;
    row.rel_error = std::abs(r.value - reference) / std::abs(reference);
    rows.push_back(row);
  }
  return rows;
}

// ---------- finite-difference oracles ----------

using ScalarField = std::function<double(const cvec&)>;

inline cvec shifted(const cvec& z, std::size_t j, double dx, double dy) {
  cvec w = z;
  w[j] += cplx(dx, dy);
  return w;
}

// Wirtinger gradient d/d zeta_j = (d/dx_j - i d/dy_j)/2 by central differences.
inline cvec fd_grad(const ScalarField& f, const cvec& z, double step) {
  cvec g(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) {
    const double dx =
        (f(shifted(z, j, step, 0)) - f(shifted(z, j, -step, 0))) / (2 * step);
    const double dy =
        (f(shifted(z, j, 0, step)) - f(shifted(z, j, 0, -step))) / (2 * step);
    g[j] = 0.5 * cplx(dx, -dy);
  }
  return g;
}

// Levi matrix L_jk = d^2 f / d zeta_j d zetabar_k
//   = ((d_xj d_xk + d_yj d_yk) + i (d_xj d_yk - d_yj d_xk)) f / 4
// via 4-point central stencils; Hermitized by averaging.
inline cmat fd_levi(const ScalarField& f, const cvec& z, double step) {
  const std::size_t n = z.size();
  const auto check = [&](double v) {
    if (!std::isfinite(v))
      throw std::invalid_argument("fd_levi: non-finite evaluation on stencil");
    return v;
  };
  // second derivative in two real directions (dir in {0..2n-1}: x_j or y_j)
  const auto d2 = [&](std::size_t d1, std::size_t d2i) {
    const auto offset = [&](const cvec& base, std::size_t d, double s) {
      return shifted(base, d / 2, d % 2 == 0 ? s : 0.0, d % 2 == 1 ? s : 0.0);
    };
    if (d1 == d2i) {
      const double f0 = check(f(z));
      const double fp = check(f(offset(z, d1, step)));
      const double fm = check(f(offset(z, d1, -step)));
      return (fp - 2 * f0 + fm) / (step * step);
    }
    const double fpp = check(f(offset(offset(z, d1, step), d2i, step)));
    const double fpm = check(f(offset(offset(z, d1, step), d2i, -step)));
    const double fmp = check(f(offset(offset(z, d1, -step), d2i, step)));
    const double fmm = check(f(offset(offset(z, d1, -step), d2i, -step)));
    return (fpp - fpm - fmp + fmm) / (4 * step * step);
  };
  cmat l(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const double re = d2(2 * j, 2 * k) + d2(2 * j + 1, 2 * k + 1);
      const double im = d2(2 * j, 2 * k + 1) - d2(2 * j + 1, 2 * k);
      l(j, k) = 0.25 * cplx(re, im);
    }
  // Hermitize
  cmat h(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      h(j, k) = 0.5 * (l(j, k) + std::conj(l(k, j)));
  return h;
}

}  // namespace liema
