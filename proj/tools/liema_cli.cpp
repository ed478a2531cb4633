// Command-line surface for the library: polar decomposition, Levi spectra,
// Monge-Ampere densities of map pullbacks, the compact-set catalog, total
// masses, eps -> 0 convergence tables, polynomial discriminants, and the
// runnable verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liema/catalog.hpp"
#include "liema/core.hpp"
#include "liema/holo_maps.hpp"
#include "liema/lie_norm.hpp"
#include "liema/map_io.hpp"
#include "liema/poly_roots.hpp"
#include "liema/quadrature.hpp"
#include "liema/regularization.hpp"
#include "liema/verify.hpp"

namespace {

using liema::cplx;
using liema::cvec;
using liema::rvec;

// ---------- formatting: 17 significant digits everywhere ----------

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string jstr(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Minimal ordered JSON emitter; values are pre-formatted fragments.
struct JsonObject {
  std::vector<std::pair<std::string, std::string>> fields;
  void add(const std::string& k, const std::string& fragment) {
    fields.emplace_back(k, fragment);
  }
  void add_num(const std::string& k, double v) { add(k, num(v)); }
  void add_bool(const std::string& k, bool v) { add(k, v ? "true" : "false"); }
  void add_str(const std::string& k, const std::string& v) { add(k, jstr(v)); }
  std::string dump(int indent = 2) const {
    std::string pad(indent, ' ');
    std::string out = "{\n";
    for (std::size_t i = 0; i < fields.size(); ++i) {
      out += pad + jstr(fields[i].first) + ": " + fields[i].second;
      if (i + 1 < fields.size()) out += ",";
      out += "\n";
    }
    return out + "}";
  }
};

std::string jarray_real(const rvec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += num(v[i]);
  }
  return out + "]";
}

std::string jcplx(cplx z) {
  return "{\"re\": " + num(z.real()) + ", \"im\": " + num(z.imag()) + "}";
}

std::string jarray_cplx(const cvec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += jcplx(v[i]);
  }
  return out + "]";
}

// Effective-configuration echo, shared by all commands.
std::string config_fragment(const std::vector<std::pair<std::string, std::string>>& kv) {
  JsonObject cfg;
  for (const auto& [k, v] : kv) cfg.add(k, v);
  return cfg.dump(4);
}

void csv_config_header(std::ostream& os,
                       const std::vector<std::pair<std::string, std::string>>& kv) {
  for (const auto& [k, v] : kv) os << "# " << k << "=" << v << "\n";
}

// ---------- parsing ----------

// "<float>[+|-]<float>i" with no spaces; a bare float is the real part.
cplx parse_complex(const std::string& s, const std::string& flag) {
  const auto fail = [&]() -> cplx {
    throw std::invalid_argument(flag + ": cannot parse complex literal \"" + s +
                                "\" (expected <float>[+|-]<float>i)");
  };
  if (s.empty()) return fail();
  if (s.back() != 'i') {
    std::size_t pos = 0;
    double re = 0;
    try {
      re = std::stod(s, &pos);
    } catch (...) {
      return fail();
    }
    if (pos != s.size()) return fail();
    return {re, 0.0};
  }
  const std::string body = s.substr(0, s.size() - 1);
  // The sign splitting the two floats: the last '+'/'-' that is neither the
  // leading sign nor part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') &&
        body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return fail();
  try {
    std::size_t p1 = 0, p2 = 0;
    const std::string rs = body.substr(0, split);
    const std::string is = body.substr(split);
    const double re = std::stod(rs, &p1);
    const double im = std::stod(is, &p2);
    if (p1 != rs.size() || p2 != is.size()) return fail();
    return {re, im};
  } catch (...) {
    return fail();
  }
}

template <typename T>
std::vector<T> split_map(const std::string& s, const std::string& flag,
                         T (*one)(const std::string&, const std::string&)) {
  std::vector<T> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(one(item, flag));
  if (out.empty())
    throw std::invalid_argument(flag + ": expected a comma-separated list");
  return out;
}

double parse_real(const std::string& s, const std::string& flag) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument(flag + ": cannot parse number \"" + s + "\"");
  }
}

// ---------- commands ----------

int cmd_decompose(const std::string& vector_arg) {
  const cvec z = split_map(vector_arg, "--vector", parse_complex);
  const liema::PolarTriple p = liema::decompose(z);
  JsonObject out;
  out.add("config", config_fragment({{"command", jstr("decompose")},
                                     {"vector", jstr(vector_arg)}}));
  out.add_num("theta", p.theta);
  out.add("a", jarray_real(p.a));
  out.add("b", jarray_real(p.b));
  out.add_num("lie_norm", liema::lie_norm(z));
  out.add_num("hermitian_norm", liema::hermitian_norm(z));
  out.add_num("dist_crn", liema::dist_CRN(z));
  out.add_bool("in_crn", liema::in_CRN(z, 1e-12));
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_levi(const std::string& vector_arg, double eps, bool check_fd) {
  const cvec z = split_map(vector_arg, "--vector", parse_complex);
  const liema::LeviSpectrum sp = liema::levi_spectrum(z, eps);
  const liema::cmat l = liema::levi_h_eps(z, eps);
  const liema::EigenResult er = liema::hermitian_eigen(l);
  JsonObject out;
  out.add("config",
          config_fragment({{"command", jstr("levi")},
                           {"vector", jstr(vector_arg)},
                           {"epsilon", num(eps)},
                           {"check_fd", check_fd ? "true" : "false"}}));
  out.add_num("lambda1", sp.lambda1);
  out.add_num("lambda2", sp.lambda2);
  out.add("eigenvalues", jarray_real(er.values));
  if (check_fd) {
    const liema::cmat fd = liema::fd_levi(
        [eps](const cvec& w) { return liema::h_eps(w, eps); }, z, 1e-4);
    double worst = 0;
    const double scale = l.frobenius_norm();
    for (std::size_t i = 0; i < l.rows; ++i)
      for (std::size_t j = 0; j < l.cols; ++j)
        worst = std::max(worst, std::abs(l(i, j) - fd(i, j)) / scale);
    out.add_num("fd_max_rel_error", worst);
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_ma_density(const std::string& map_path, const std::string& point_arg,
                   double eps) {
  const liema::PolynomialMap phi = liema::load_map_file(map_path);
  const cvec z = split_map(point_arg, "--point", parse_complex);
  const liema::MapEval e = liema::eval_map(phi, z);
  JsonObject out;
  out.add("config", config_fragment({{"command", jstr("ma-density")},
                                     {"map", jstr(map_path)},
                                     {"point", jstr(point_arg)},
                                     {"epsilon", num(eps)}}));
  out.add_num("density", liema::ma_density_eps_from_eval(e, eps));
  out.add("border_det", jcplx(e.border_det));
  out.add_bool("in_A_Phi", liema::in_A_Phi(phi, z, 1e-12));
  std::cout << out.dump() << "\n";
  return 0;
}

// Chart bounding box for the density grid of each set.
void grid_box(const liema::CatalogSet& set, double& lo, double& hi) {
  switch (set.name) {
    case liema::SetName::simplex: lo = 0.0; hi = 1.0; break;
    case liema::SetName::ball:
    case liema::SetName::quadrant_disk: lo = -1.0; hi = 1.0; break;
    default: lo = -2.0; hi = 2.0; break;
  }
}

int cmd_catalog(const std::string& set_arg, std::size_t dim, std::size_t grid,
                const std::string& out_path) {
  const liema::CatalogSet set =
      liema::make_catalog_set(liema::set_name_from_string(set_arg), dim);
  if (set.flavor == liema::SetFlavor::torus)
    throw std::invalid_argument("--set: torus has no chart density grid");
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::invalid_argument("--out: cannot open " + out_path);
  }
  std::ostream& os = out_path.empty() ? std::cout : file;
  const std::vector<std::pair<std::string, std::string>> cfg = {
      {"command", "catalog"}, {"set", set_arg},
      {"dim", std::to_string(dim)}, {"grid", std::to_string(grid)},
      {"out", out_path.empty() ? "(stdout)" : out_path}};
  csv_config_header(os, cfg);
  // Asymptotic growth of the extremal-function candidate along a generic ray.
  {
    cvec dir(dim);
    for (std::size_t j = 0; j < dim; ++j)
      dir[j] = cplx(0.3 + 0.1 * static_cast<double>(j), 0.2);
    for (double big_r : {1e3, 1e6})
      os << "# psi_growth_R" << static_cast<long long>(big_r) << "="
         << num(liema::psi_growth(set, dir, big_r)) << "\n";
  }
  for (std::size_t j = 1; j <= dim; ++j) os << "x" << j << ",";
  os << "density,inside\n";
  double lo = 0, hi = 1;
  grid_box(set, lo, hi);
  std::vector<std::size_t> idx(dim, 0);
  const double step = (hi - lo) / static_cast<double>(grid - 1);
  while (true) {
    rvec x(dim);
    for (std::size_t j = 0; j < dim; ++j)
      x[j] = lo + step * static_cast<double>(idx[j]);
    bool inside = true;
    double dens = std::numeric_limits<double>::quiet_NaN();
    try {
      const liema::DensitySample s = liema::sample_density(set, x);
      dens = s.density;
    } catch (const std::invalid_argument&) {
      inside = false;
    }
    for (std::size_t j = 0; j < dim; ++j) os << num(x[j]) << ",";
    os << num(dens) << "," << (inside ? 1 : 0) << "\n";
    std::size_t j = 0;
    while (j < dim && ++idx[j] == grid) idx[j++] = 0;
    if (j == dim) break;
  }
  return 0;
}

int cmd_mass(const std::string& set_arg, std::size_t dim,
             const std::string& method_arg, std::size_t nodes) {
  const liema::CatalogSet set =
      liema::make_catalog_set(liema::set_name_from_string(set_arg), dim);
  const liema::IntegrationResult r =
      liema::mass(set, liema::mass_method_from_string(method_arg), nodes);
  JsonObject out;
  out.add("config", config_fragment({{"command", jstr("mass")},
                                     {"set", jstr(set_arg)},
                                     {"dim", std::to_string(dim)},
                                     {"method", jstr(method_arg)},
                                     {"nodes", std::to_string(nodes)}}));
  out.add_num("value", r.value);
  out.add_num("stderr", r.stderr_est);
  out.add("nodes_or_samples", std::to_string(r.nodes_or_samples));
  out.add_str("method", r.method);
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_converge(const std::string& map_path, const std::string& center_arg,
                 double width, const std::string& eps_arg,
                 std::uint64_t samples, std::uint64_t seed) {
  const liema::PolynomialMap phi = liema::load_map_file(map_path);
  liema::BumpFunction chi;
  chi.center = split_map(center_arg, "--center", parse_complex);
  chi.width = width;
  if (chi.center.size() != phi.n_in)
    throw std::invalid_argument("--center: expected " +
                                std::to_string(phi.n_in) + " entries");
  const rvec eps_list = split_map(eps_arg, "--epsilons", parse_real);
  const auto rows = liema::convergence_study(
      phi, chi, {eps_list.begin(), eps_list.end()}, liema::Box{-2.0, 2.0},
      samples, seed);
  csv_config_header(std::cout, {{"command", "converge"},
                                {"map", map_path},
                                {"center", center_arg},
                                {"width", num(width)},
                                {"epsilons", eps_arg},
                                {"samples", std::to_string(samples)},
                                {"seed", std::to_string(seed)},
                                {"box", "[-2,2]"}});
  std::cout << "epsilon,integral,stderr,reference,rel_error\n";
  for (const auto& row : rows)
    std::cout << num(row.epsilon) << "," << num(row.integral) << ","
              << num(row.stderr_est) << "," << num(row.reference) << ","
              << num(row.rel_error) << "\n";
  return 0;
}

int cmd_discriminant(const std::string& coeffs_arg, const std::string& method_arg) {
  const cvec all = split_map(coeffs_arg, "--coeffs", parse_complex);
  if (all.size() < 2)
    throw std::invalid_argument("--coeffs: need degree >= 1 (at least 2 coefficients)");
  const cplx lead = all.back();
  if (lead == 0.0)
    throw std::invalid_argument("--coeffs: leading coefficient must be nonzero");
  liema::MonicPolynomial p;
  for (std::size_t k = 0; k + 1 < all.size(); ++k)
    p.coeffs.push_back(all[k] / lead);
  const liema::DiscriminantMethod method =
      method_arg == "sylvester" ? liema::DiscriminantMethod::sylvester
                                : liema::DiscriminantMethod::product;
  if (method_arg != "product" && method_arg != "sylvester")
    throw std::invalid_argument("--method: must be product or sylvester");
  const cplx d = liema::discriminant(p, method);
  const liema::RootSet rs = liema::roots(p);
  JsonObject out;
  out.add("config", config_fragment({{"command", jstr("discriminant")},
                                     {"coeffs", jstr(coeffs_arg)},
                                     {"method", jstr(method_arg)}}));
  out.add("discriminant", jcplx(d));
  out.add("roots", jarray_cplx(rs.roots));
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_verify(const std::string& suite) {
  std::cout << "# command=verify\n# suite=" << suite << "\n";
  const auto results = liema::verify_suite(suite);
  bool all_pass = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  ["
              << r.detail << "]\n";
    all_pass = all_pass && r.passed;
  }
  std::cout << (all_pass ? "all properties passed" : "some properties FAILED")
            << " (" << results.size() << " checked)\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie-norm pluripotential toolkit"};
  app.require_subcommand(1);

  std::string vector_arg, map_path, point_arg, set_arg, method_arg, out_path;
  std::string center_arg, eps_list_arg, coeffs_arg, suite_arg;
  double eps = 0.1, width = 1.0;
  bool check_fd = false;
  std::size_t dim = 1, grid = 21, nodes = 200;
  std::uint64_t samples = 1000000, seed = 42;

  auto* dec = app.add_subcommand("decompose", "Polar decomposition and Lie norm");
  dec->add_option("--vector", vector_arg, "comma-separated complex entries")->required();

  auto* lev = app.add_subcommand("levi", "Levi spectrum of the regularized family");
  lev->add_option("--vector", vector_arg)->required();
  lev->add_option("--epsilon", eps)->required();
  lev->add_flag("--check-fd", check_fd, "compare against finite differences");

  auto* mad = app.add_subcommand("ma-density", "Monge-Ampere density of a map pullback");
  mad->add_option("--map", map_path, "map description JSON file")->required();
  mad->add_option("--point", point_arg)->required();
  mad->add_option("--epsilon", eps)->required();

  auto* cat = app.add_subcommand("catalog", "Equilibrium density grid of a named set");
  cat->add_option("--set", set_arg)->required();
  cat->add_option("--dim", dim)->required();
  cat->add_option("--grid", grid)->required();
  cat->add_option("--out", out_path, "CSV output file (default stdout)");

  auto* mas = app.add_subcommand("mass", "Total mass of a catalog density");
  mas->add_option("--set", set_arg)->required();
  mas->add_option("--dim", dim)->required();
  mas->add_option("--method", method_arg)->required();
  mas->add_option("--nodes", nodes)->required();

  auto* con = app.add_subcommand("converge", "eps -> 0 weak-convergence table");
  con->add_option("--map", map_path)->required();
  con->add_option("--center", center_arg, "bump center (complex entries)")->required();
  con->add_option("--width", width)->required();
  con->add_option("--epsilons", eps_list_arg)->required();
  con->add_option("--samples", samples)->required();
  con->add_option("--seed", seed);

  auto* dis = app.add_subcommand("discriminant", "Discriminant and roots");
  dis->add_option("--coeffs", coeffs_arg, "ascending coefficients incl. leading")->required();
  std::string dmethod = "product";
  dis->add_option("--method", dmethod, "product|sylvester");

  auto* ver = app.add_subcommand("verify", "Run the module invariant suites");
  ver->add_option("--suite", suite_arg, "lie|levi|volume|poly|catalog|all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (dec->parsed()) return cmd_decompose(vector_arg);
    if (lev->parsed()) return cmd_levi(vector_arg, eps, check_fd);
    if (mad->parsed()) return cmd_ma_density(map_path, point_arg, eps);
    if (cat->parsed()) return cmd_catalog(set_arg, dim, grid, out_path);
    if (mas->parsed()) return cmd_mass(set_arg, dim, method_arg, nodes);
    if (con->parsed())
      return cmd_converge(map_path, center_arg, width, eps_list_arg, samples, seed);
    if (dis->parsed()) return cmd_discriminant(coeffs_arg, dmethod);
    if (ver->parsed()) return cmd_verify(suite_arg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
