// Command-line front end: spectrum curves, eigenfunction evaluation, inner
// products with the quadrature cross-check, distance formulas, coefficient
// bounds and the basis certificate, biorthogonal systems, L2 expansion, and
// a self-contained verification battery. All output is CSV with floats at 17
// significant digits.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fucik/analytic_products.hpp"
#include "fucik/biorthogonal.hpp"
#include "fucik/dilation_fourier.hpp"
#include "fucik/eigenfunction.hpp"
#include "fucik/errors.hpp"
#include "fucik/expansion.hpp"
#include "fucik/quadrature.hpp"
#include "fucik/spectrum.hpp"
#include "fucik/system.hpp"

namespace {

using namespace fucik;

constexpr double kPi = std::numbers::pi;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v + 0.0);  // flushes negative zero
  return buf;
}

struct OutputTarget {
  std::ofstream file;
  std::ostream* os = &std::cout;

  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw DomainError("cannot open output file: " + path);
    os = &file;
  }
};

QuadratureSpec quad_spec_from(double tol, int nodes) {
  QuadratureSpec spec;
  if (const char* env = std::getenv("FUCIK_QUAD_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0) spec.abs_tol = v;
  }
  if (tol > 0.0) spec.abs_tol = tol;
  if (nodes > 0) spec.nodes_per_segment = nodes;
  return spec;
}

Branch parse_branch(const std::string& name) {
  if (name == "alpha") return Branch::AlphaDominant;
  if (name == "beta") return Branch::BetaDominant;
  throw DomainError("branch must be 'alpha' or 'beta', got '" + name + "'");
}

int parse_int(const std::string& s, const char* what) {
  try {
    size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw DomainError(std::string("cannot parse ") + what + " from '" + s + "'");
}

double parse_double(const std::string& s, const char* what) {
  try {
    size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw DomainError(std::string("cannot parse ") + what + " from '" + s + "'");
}

// Point selection shared by eval/inner/dist: exactly one of alpha, beta,
// gamma, delta.
struct PointFlags {
  int n = 1;
  std::optional<double> alpha, beta, gamma, delta;

  FucikPoint make() const {
    const int given = int(alpha.has_value()) + int(beta.has_value()) + int(gamma.has_value()) +
                      int(delta.has_value());
    if (given != 1)
      throw DomainError("specify exactly one of --alpha, --beta, --gamma, --delta");
    if (alpha) return point_from_alpha(n, *alpha);
    if (beta) return point_from_beta(n, *beta);
    if (gamma) return point_from_dilation(n, *gamma, Branch::AlphaDominant);
    return point_from_dilation(n, *delta, Branch::BetaDominant);
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "curve index")->required();
    cmd->add_option("--alpha", alpha, "alpha parameter (> n^2/4)");
    cmd->add_option("--beta", beta, "beta parameter (> n^2/4)");
    cmd->add_option("--gamma", gamma, "dilation parameter, alpha-dominant branch");
    cmd->add_option("--delta", delta, "dilation parameter, beta-dominant branch");
  }
};

// System selection shared by biorth/expand: --diagonal, --gamma-list file,
// or repeated --perturb n:gamma[:branch]; indices not mentioned stay on the
// diagonal.
struct SystemFlags {
  bool diagonal = false;
  std::string gamma_list;
  std::vector<std::string> perturb;
  int n_max = 12;

  void attach(CLI::App* cmd) {
    cmd->add_flag("--diagonal", diagonal, "all points on the diagonal (default)");
    cmd->add_option("--gamma-list", gamma_list, "CSV file with rows n,gamma,branch");
    cmd->add_option("--perturb", perturb, "n:gamma[:branch], repeatable");
    cmd->add_option("--nmax", n_max, "largest index of the system");
  }

  FucikSystem make() const {
    FucikSystem s = FucikSystem::diagonal(n_max);
    if (!gamma_list.empty()) {
      std::ifstream in(gamma_list);
      if (!in) throw DomainError("cannot open gamma list: " + gamma_list);
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty() || !(std::isdigit(static_cast<unsigned char>(line[0])))) continue;
        std::istringstream row(line);
        std::string n_str, g_str, b_str;
        std::getline(row, n_str, ',');
        std::getline(row, g_str, ',');
        std::getline(row, b_str, ',');
        const int n = parse_int(n_str, "curve index");
        const double g = parse_double(g_str, "dilation parameter");
        s.set(point_from_dilation(n, g, b_str.empty() ? Branch::AlphaDominant : parse_branch(b_str)));
      }
    }
    for (const std::string& tok : perturb) {
      std::istringstream row(tok);
      std::string n_str, g_str, b_str;
      std::getline(row, n_str, ':');
      std::getline(row, g_str, ':');
      std::getline(row, b_str, ':');
      s.set(point_from_dilation(parse_int(n_str, "curve index"),
                                parse_double(g_str, "dilation parameter"),
                                b_str.empty() ? Branch::AlphaDominant : parse_branch(b_str)));
    }
    return s;
  }
};

// Data-only plotting support: the CSV is the artifact, the script is a
// generic gnuplot stanza pointing at it.
void write_plot_script(const std::string& script_path, const std::string& csv_path,
                       const std::string& plot_lines) {
  std::ofstream out(script_path);
  if (!out) throw DomainError("cannot open plot script file: " + script_path);
  out << "set datafile separator ','\n"
      << "csv = '" << (csv_path.empty() ? "fucik.csv" : csv_path) << "'\n"
      << "set key outside\n"
      << plot_lines << '\n';
}

void run_spectrum(std::ostream& os, int n, int count, double alpha_lo, double alpha_hi) {
  os << "n,alpha,beta,l1,l2,branch\n";
  for (const FucikPoint& p : curve_samples(n, count, alpha_lo, alpha_hi))
    os << p.n << ',' << fmt17(p.alpha) << ',' << fmt17(p.beta) << ',' << fmt17(p.l1) << ','
       << fmt17(p.l2) << ',' << to_string(p.branch) << '\n';
}

void run_eval(std::ostream& os, const FucikPoint& p, int grid) {
  if (grid < 2) throw DomainError("grid must have at least two points");
  const Eigenfunction f = Eigenfunction::build(p);
  os << "x,f,fprime\n";
  for (int i = 0; i < grid; ++i) {
    const double x = i * kPi / (grid - 1);
    os << fmt17(x) << ',' << fmt17(f(x)) << ',' << fmt17(f.derivative(x)) << '\n';
  }
}

void run_inner(std::ostream& os, const FucikPoint& p, int m, const QuadratureSpec& spec) {
  const ScalarProduct s = inner_with_cos(p, m);
  const double quad = inner_quadrature(p, m, spec);
  os << "n,m,alpha,beta,case,analytic,quadrature,delta\n";
  os << p.n << ',' << m << ',' << fmt17(p.alpha) << ',' << fmt17(p.beta) << ',' << to_string(s.tag)
     << ',' << fmt17(s.value) << ',' << fmt17(quad) << ',' << fmt17(std::abs(s.value - quad))
     << '\n';
}

void run_dist(std::ostream& os, const FucikPoint& p) {
  const DistanceBounds b = distance_bounds(p);
  os << "n,alpha,beta,norm_sq,dist_sq,lower,upper\n";
  os << p.n << ',' << fmt17(p.alpha) << ',' << fmt17(p.beta) << ',' << fmt17(norm_squared(p)) << ','
     << fmt17(distance_squared_to_cos(p)) << ',' << fmt17(b.lower) << ',' << fmt17(b.upper) << '\n';
}

void run_bounds(std::ostream& os, const FucikPoint& p, int k_max) {
  const FourierRow row = fourier_row(p, k_max);
  os << "k,A_k,c_k,bound_holds\n";
  for (int k = 1; k <= k_max; ++k) {
    const double a = row.coefficients[static_cast<size_t>(k) - 1];
    const double c = row.c_bounds[static_cast<size_t>(k) - 1];
    const double magnitude = k == 1 ? std::abs(a - 1.0) : std::abs(a);
    os << k << ',' << fmt17(a) << ',' << fmt17(c) << ',' << (magnitude <= c ? "true" : "false")
       << '\n';
  }
  const CertificateSum cert = certificate_sum(std::max(k_max, 2));
  os << "sum_ck,tail_bound,certificate_lt_1\n";
  os << fmt17(cert.partial_sum) << ',' << fmt17(cert.tail_bound) << ','
     << (cert.less_than_one ? "true" : "false") << '\n';
}

void run_biorth(std::ostream& os, const FucikSystem& system, int m, int matrix_n) {
  if (matrix_n > 0) {
    for (const auto& row : biorthogonality_matrix(system, matrix_n)) {
      for (size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << fmt17(row[j]);
      os << '\n';
    }
    return;
  }
  const BiorthogonalElement psi = biorthogonal_element(system, m);
  os << "m,k,C_m_k\n";
  for (const auto& [k, c] : psi.coeffs) os << psi.m << ',' << k << ',' << fmt17(c) << '\n';
}

Target make_target(const std::string& name, const std::string& coeff_file) {
  if (!coeff_file.empty()) {
    std::ifstream in(coeff_file);
    if (!in) throw DomainError("cannot open coefficient file: " + coeff_file);
    CosineTarget t;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || !(std::isdigit(static_cast<unsigned char>(line[0])))) continue;
      std::istringstream row(line);
      std::string k_str, c_str;
      std::getline(row, k_str, ',');
      std::getline(row, c_str, ',');
      const int k = parse_int(k_str, "mode index");
      if (k < 0) throw DomainError("mode index must be nonnegative");
      if (t.coeffs.size() <= static_cast<size_t>(k)) t.coeffs.resize(static_cast<size_t>(k) + 1, 0.0);
      t.coeffs[static_cast<size_t>(k)] = parse_double(c_str, "coefficient");
    }
    return Target{t};
  }
  if (name == "sawtooth") return Target{SampledTarget{[](double x) { return x - kPi / 2.0; }, {}}};
  if (name == "constant") return Target{CosineTarget{{1.0}}};
  if (name.rfind("mode:", 0) == 0) {
    const int m = parse_int(name.substr(5), "mode index");
    if (m < 0) throw DomainError("mode index must be nonnegative");
    CosineTarget t;
    t.coeffs.assign(static_cast<size_t>(m) + 1, 0.0);
    t.coeffs[static_cast<size_t>(m)] = 1.0;
    return Target{t};
  }
  throw DomainError("unknown target '" + name + "' (expected sawtooth, constant, or mode:<m>)");
}

void run_expand(std::ostream& os, const FucikSystem& system, const Target& target, int N,
                const QuadratureSpec& spec) {
  const ExpansionResult r = expand(system, target, N, spec);
  os << "n,c_n,residual_after_n\n";
  for (int n = 0; n <= N; ++n)
    os << n << ',' << fmt17(r.coefficients[static_cast<size_t>(n)]) << ','
       << fmt17(r.residual_l2[static_cast<size_t>(n)]) << '\n';
}

// ---- verify battery ----------------------------------------------------

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string note;
};

FucikSystem verify_random_system(int n_max, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> gamma(1.0, 4.0);
  std::bernoulli_distribution which(0.5);
  FucikSystem s = FucikSystem::diagonal(n_max);
  for (int n = 1; n <= n_max; ++n)
    s.set(point_from_dilation(n, gamma(rng), which(rng) ? Branch::AlphaDominant : Branch::BetaDominant));
  return s;
}

int run_verify(std::ostream& os, const QuadratureSpec& spec) {
  std::vector<VerifyCheck> checks;
  const double gammas[] = {1.0, 1.1, 4.0};
  const Branch branches[] = {Branch::AlphaDominant, Branch::BetaDominant};

  {
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n)
      for (double g : gammas)
        for (Branch b : branches) {
          const FucikPoint p = point_from_dilation(n, g, b);
          worst = std::max(worst, curve_residual(p));
          const FucikPoint q = point_from_beta(n, p.beta);
          worst = std::max(worst, std::abs(q.alpha - p.alpha) / p.alpha);
        }
    checks.push_back({"curve identity and alpha/beta round-trip", worst <= 1e-10,
                      "worst residual " + fmt17(worst)});
  }
  {
    double worst = 0.0;
    bool neumann = true;
    for (int n = 1; n <= 6; ++n)
      for (double g : gammas)
        for (Branch b : branches) {
          const Eigenfunction f = Eigenfunction::build(point_from_dilation(n, g, b));
          worst = std::max(worst, ode_residual(f, 500));
          neumann = neumann && f.derivative(0.0) == 0.0 && f.derivative(kPi) == 0.0;
        }
    checks.push_back({"ODE residual on joint-avoiding grids", worst <= 1e-9,
                      "max residual " + fmt17(worst)});
    checks.push_back({"Neumann derivatives exactly zero", neumann, ""});
  }
  {
    double worst = 0.0;
    for (int n = 1; n <= 5; ++n)
      for (double g : {1.1, 4.0})
        for (Branch b : branches) worst = std::max(worst, symmetry_check(point_from_dilation(n, g, b), 500));
    checks.push_back({"shift/reflection symmetry identities", worst <= 1e-10,
                      "max deviation " + fmt17(worst)});
  }
  {
    double worst = 0.0;
    for (int n = 1; n <= 5; ++n)
      for (double g : {1.1, 4.0})
        for (Branch b : branches) {
          const FucikPoint p = point_from_dilation(n, g, b);
          for (int m = 0; m <= 3 * n; ++m) worst = std::max(worst, inner_oracle_delta(p, m, spec));
        }
    checks.push_back({"inner products vs quadrature oracle", worst <= 1e-10,
                      "max |analytic - quadrature| " + fmt17(worst)});
  }
  {
    bool ok = true;
    for (int n : {1, 2}) {
      const int m = 2 * n;
      const double m2 = static_cast<double>(m) * m;
      const double resonant = inner_with_cos(point_from_alpha(n, m2), m).value;
      for (double off : {1.0 - 1e-6, 1.0 + 1e-6})
        ok = ok && std::abs(inner_with_cos(point_from_alpha(n, m2 * off), m).value - resonant) <= 1e-4;
    }
    checks.push_back({"resonant-case continuity", ok, ""});
  }
  {
    double worst = 0.0;
    bool bracket = true;
    for (int n = 1; n <= 5; ++n)
      for (double g : gammas)
        for (Branch b : branches) {
          const FucikPoint p = point_from_dilation(n, g, b);
          const Eigenfunction f = Eigenfunction::build(p);
          const double quad = integrate(
                                  [&](double x) {
                                    const double d = f(x) - std::cos(n * x);
                                    return d * d;
                                  },
                                  f.breakpoints(), 0.0, kPi, spec)
                                  .value;
          const double dist = distance_squared_to_cos(p);
          worst = std::max(worst, std::abs(dist - quad));
          if (g > 1.0) {
            const DistanceBounds db = distance_bounds(p);
            bracket = bracket && db.lower <= dist && dist <= db.upper;
          }
        }
    checks.push_back({"distance formulas vs quadrature", worst <= 1e-10,
                      "max |analytic - quadrature| " + fmt17(worst)});
    checks.push_back({"distance bracket lower <= value <= upper", bracket, ""});
  }
  {
    bool ok = true;
    for (double g : {1.0, 1.1, 4.0, 9.0, 25.0})
      for (Branch b : branches) {
        if (g == 1.0 && b == Branch::BetaDominant) continue;
        const FourierRow row = fourier_row(point_from_dilation(2, g, b), 40);
        ok = ok && std::abs(row.coefficients[0] - 1.0) <= row.c_bounds[0];
        for (int k = 2; k <= 40; ++k)
          ok = ok && std::abs(row.coefficients[static_cast<size_t>(k) - 1]) <=
                         row.c_bounds[static_cast<size_t>(k) - 1];
      }
    checks.push_back({"coefficient caps |A_k| <= c_k", ok, ""});
  }
  {
    const CertificateSum cert = certificate_sum(10000);
    const bool ok = cert.less_than_one && std::abs(cert.total - 0.9408223) <= 1e-6;
    checks.push_back({"cap-sum certificate < 1", ok, "total " + fmt17(cert.total)});
  }
  {
    const std::vector<double> grid = {1.001, 1.01, 1.1, 2.0, 10.0, 100.0, 1e4};
    bool ok = true;
    double prev = -1.0;
    for (double g : grid) {
      const double v = bound_b1(g);
      ok = ok && v > prev && v < bound_b1_limit();
      prev = v;
    }
    for (int k = 2; k <= 6; ++k) ok = ok && bound_monotonicity_check(k, grid);
    checks.push_back({"bound-function monotonicity", ok, ""});
  }
  {
    double worst = 0.0;
    for (const FucikSystem& s : {FucikSystem::diagonal(8), verify_random_system(8, 2024)}) {
      const auto mat = biorthogonality_matrix(s, 8);
      for (size_t i = 0; i < mat.size(); ++i)
        for (size_t j = 0; j < mat.size(); ++j)
          worst = std::max(worst, std::abs(mat[i][j] - (i == j ? 1.0 : 0.0)));
    }
    checks.push_back({"biorthogonality matrices (N=8)", worst <= 1e-9,
                      "max |entry - delta| " + fmt17(worst)});
  }
  {
    FucikSystem s = verify_random_system(6, 11);
    const Psi0PartialSum part = psi0_partial_sum(s, 6);
    auto psi0 = [&](double x) {
      double v = 0.0;
      for (size_t k = 0; k < part.coeffs.size(); ++k)
        v += part.coeffs[k] * cosine_mode(static_cast<int>(k), x);
      return v;
    };
    double worst = std::abs(
        integrate([&](double x) { return cosine_mode(0, x) * psi0(x); }, {}, 0.0, kPi, spec).value -
        1.0);
    for (int n = 1; n <= 6; ++n) {
      const Eigenfunction f = Eigenfunction::build(s.point(n));
      worst = std::max(worst, std::abs(integrate([&](double x) { return f(x) * psi0(x); },
                                                 f.breakpoints(), 0.0, kPi, spec)
                                           .value));
    }
    checks.push_back({"psi_0 partial-sum duality", worst <= 1e-9, "max deviation " + fmt17(worst)});
  }
  {
    bool ok = true;
    ok = ok && gram_condition(FucikSystem::diagonal(6), 6, spec) > 0.0;
    ok = ok && gram_condition(verify_random_system(6, 5150), 6, spec) > 0.0;
    checks.push_back({"Gram smallest eigenvalue > 0", ok, ""});
  }
  {
    FucikSystem s = verify_random_system(6, 99);
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::vector<double> a(7);
    for (auto& v : a) v = coef(rng);
    std::vector<Eigenfunction> fs;
    std::vector<double> brk;
    for (int n = 0; n <= 6; ++n) {
      fs.push_back(Eigenfunction::build(s.point(n)));
      brk.insert(brk.end(), fs.back().breakpoints().begin(), fs.back().breakpoints().end());
    }
    auto combo = [&](double x) {
      double v = 0.0;
      for (size_t n = 0; n < fs.size(); ++n) v += a[n] * fs[n](x);
      return v;
    };
    const ExpansionResult r = expand(s, Target{SampledTarget{combo, brk}}, 6, spec);
    double worst = 0.0;
    for (size_t n = 0; n < a.size(); ++n) worst = std::max(worst, std::abs(r.coefficients[n] - a[n]));
    checks.push_back({"expansion round-trip", worst <= 1e-9, "max coefficient error " + fmt17(worst)});
  }

  bool all = true;
  os << "check,result\n";
  for (const VerifyCheck& c : checks) {
    all = all && c.pass;
    os << c.name << ',' << (c.pass ? "PASS" : "FAIL");
    if (!c.note.empty()) os << " (" << c.note << ')';
    os << '\n';
  }
  os << (all ? "all checks passed\n" : "FAILURES present\n");
  return all ? 0 : 1;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Neumann Fucik spectrum numerics"};
  app.require_subcommand(1);
  app.fallthrough();  // accept --out/--quad-* after the subcommand as well

  std::string out_path;
  double quad_tol = 0.0;
  int quad_nodes = 0;
  app.add_option("--out", out_path, "write CSV to a file instead of stdout");
  app.add_option("--quad-tol", quad_tol, "quadrature absolute tolerance (default 1e-12)");
  app.add_option("--quad-nodes", quad_nodes, "Gauss-Legendre nodes per segment (default 32)");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "sample a spectrum curve");
  int sp_n = 1, sp_count = 100;
  double sp_lo = 0.0, sp_hi = 0.0;
  std::string sp_plot;
  spectrum_cmd->add_option("--n", sp_n, "curve index")->required();
  spectrum_cmd->add_option("--count", sp_count, "number of samples");
  spectrum_cmd->add_option("--alpha-min", sp_lo, "lower alpha")->required();
  spectrum_cmd->add_option("--alpha-max", sp_hi, "upper alpha")->required();
  spectrum_cmd->add_option("--plot-script", sp_plot, "also write a gnuplot script for the CSV");

  auto* eval_cmd = app.add_subcommand("eval", "evaluate an eigenfunction on a grid");
  PointFlags eval_point;
  eval_point.attach(eval_cmd);
  int eval_grid = 500;
  std::string eval_plot;
  eval_cmd->add_option("--grid", eval_grid, "grid size");
  eval_cmd->add_option("--plot-script", eval_plot, "also write a gnuplot script for the CSV");

  auto* inner_cmd = app.add_subcommand("inner", "closed-form product with the quadrature check");
  PointFlags inner_point;
  inner_point.attach(inner_cmd);
  int inner_m = 0;
  inner_cmd->add_option("--m", inner_m, "cosine mode index")->required();

  auto* dist_cmd = app.add_subcommand("dist", "norm, distance, and distance bounds");
  PointFlags dist_point;
  dist_point.attach(dist_cmd);

  auto* bounds_cmd = app.add_subcommand("bounds", "generator coefficients, caps, certificate");
  PointFlags bounds_point;
  bounds_point.attach(bounds_cmd);
  int bounds_kmax = 50;
  bounds_cmd->add_option("--kmax", bounds_kmax, "largest coefficient index");
  bounds_cmd->get_option("--n")->required(false);

  auto* biorth_cmd = app.add_subcommand("biorth", "biorthogonal coefficients or the full matrix");
  SystemFlags biorth_system;
  biorth_system.attach(biorth_cmd);
  int biorth_m = 0, biorth_matrix = 0;
  biorth_cmd->add_option("--m", biorth_m, "element index");
  biorth_cmd->add_option("--matrix", biorth_matrix, "emit the N x N biorthogonality matrix");

  auto* expand_cmd = app.add_subcommand("expand", "expand a target in the system");
  SystemFlags expand_system;
  expand_system.attach(expand_cmd);
  std::string expand_target, expand_coeffs;
  int expand_n = 8;
  expand_cmd->add_option("--target", expand_target, "sawtooth | constant | mode:<m>");
  expand_cmd->add_option("--coeffs", expand_coeffs, "CSV file with rows k,coef");
  expand_cmd->add_option("--N", expand_n, "truncation order");

  auto* verify_cmd = app.add_subcommand("verify", "run the invariant battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    OutputTarget out;
    out.open(out_path);
    const QuadratureSpec spec = quad_spec_from(quad_tol, quad_nodes);

    if (spectrum_cmd->parsed()) {
      run_spectrum(*out.os, sp_n, sp_count, sp_lo, sp_hi);
      if (!sp_plot.empty())
        write_plot_script(sp_plot, out_path,
                          "set xlabel 'alpha'\nset ylabel 'beta'\n"
                          "plot csv using 2:3 skip 1 with lines title 'Gamma_n'");
    } else if (eval_cmd->parsed()) {
      run_eval(*out.os, eval_point.make(), eval_grid);
      if (!eval_plot.empty())
        write_plot_script(eval_plot, out_path,
                          "set xlabel 'x'\n"
                          "plot csv using 1:2 skip 1 with lines title 'f', \\\n"
                          "     csv using 1:3 skip 1 with lines title \"f'\"");
    } else if (inner_cmd->parsed()) {
      run_inner(*out.os, inner_point.make(), inner_m, spec);
    } else if (dist_cmd->parsed()) {
      run_dist(*out.os, dist_point.make());
    } else if (bounds_cmd->parsed()) {
      FucikPoint p = bounds_point.alpha || bounds_point.beta || bounds_point.gamma || bounds_point.delta
                         ? bounds_point.make()
                         : point_from_dilation(bounds_point.n, 4.0, Branch::AlphaDominant);
      run_bounds(*out.os, p, bounds_kmax);
    } else if (biorth_cmd->parsed()) {
      if (biorth_matrix <= 0 && biorth_m <= 0)
        throw DomainError("biorth needs --m or --matrix");
      FucikSystem s = biorth_system.make();
      run_biorth(*out.os, s, biorth_m, biorth_matrix);
    } else if (expand_cmd->parsed()) {
      FucikSystem s = expand_system.make();
      run_expand(*out.os, s, make_target(expand_target, expand_coeffs), expand_n, spec);
    } else if (verify_cmd->parsed()) {
      return run_verify(*out.os, spec);
    }
    return 0;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const QuadratureNonConvergence& e) {
    std::cerr << "quadrature failure: " << e.what() << '\n';
    return 3;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 70;
  }
}
