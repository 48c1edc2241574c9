// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "fucik/analytic_products.hpp"
#include "fucik/biorthogonal.hpp"
#include "fucik/dilation_fourier.hpp"
#include "fucik/eigenfunction.hpp"
#include "fucik/expansion.hpp"
#include "fucik/quadrature.hpp"
#include "fucik/spectrum.hpp"
#include "fucik/system.hpp"

using namespace fucik;

namespace {

constexpr double kPi = std::numbers::pi;
const double kGammaGrid[] = {1.0, 1.1, 2.0, 4.0, 9.0};
const Branch kBranches[] = {Branch::AlphaDominant, Branch::BetaDominant};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::vector<FucikPoint> criterion_grid() {
  std::vector<FucikPoint> pts;
  for (int n = 1; n <= 8; ++n)
    for (double g : kGammaGrid)
      for (Branch b : kBranches) {
        if (g == 1.0 && b == Branch::BetaDominant) continue;  // same diagonal point
        pts.push_back(point_from_dilation(n, g, b));
      }
  return pts;
}

FucikSystem soft_system(int n_max) {
  FucikSystem s = FucikSystem::diagonal(n_max);
  for (int n = 1; n <= n_max; ++n)
    s.set(point_from_dilation(n, 1.0 + 1.0 / (static_cast<double>(n) * n), Branch::AlphaDominant));
  return s;
}

FucikSystem random_system(int n_max, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> gamma(1.0, 4.0);
  std::bernoulli_distribution which(0.5);
  FucikSystem s = FucikSystem::diagonal(n_max);
  for (int n = 1; n <= n_max; ++n)
    s.set(point_from_dilation(n, gamma(rng), which(rng) ? Branch::AlphaDominant : Branch::BetaDominant));
  return s;
}

struct Criterion {
  int id;
  std::string name;
  bool pass;
  std::string note;
};

}  // namespace

int main() {
  std::vector<Criterion> results;

  // 1: closed-form inner products vs the quadrature oracle
  {
    double worst = 0.0;
    for (const FucikPoint& p : criterion_grid())
      for (int m = 0; m <= 4 * p.n; ++m) worst = std::max(worst, inner_oracle_delta(p, m));
    results.push_back({1, "inner products vs oracle (n<=8, m<=4n, gamma grid)", worst <= 1e-10,
                       "max delta " + sci(worst) + ", tol 1e-10"});
  }

  // 2: resonant construction alpha = m^2 and continuity of the generic form
  {
    double worst_oracle = 0.0, worst_cont = 0.0;
    for (int n = 1; n <= 4; ++n)
      for (int q : {1, 2, 3}) {
        const int m = q * n;
        const double m2 = static_cast<double>(m) * m;
        const FucikPoint p = point_from_alpha(n, m2);
        worst_oracle = std::max(worst_oracle, inner_oracle_delta(p, m));
        const double resonant = inner_with_cos(p, m).value;
        if (q > 1 && std::abs(resonant - kPi * n * n / (4.0 * m * (2.0 * m - n))) > 1e-14)
          worst_oracle = 1.0;  // closed value must match the resonant formula
        for (double off : {1.0 - 1e-6, 1.0 + 1e-6})
          worst_cont = std::max(
              worst_cont, std::abs(inner_with_cos(point_from_alpha(n, m2 * off), m).value - resonant));
      }
    results.push_back({2, "resonant cases and continuity", worst_oracle <= 1e-10 && worst_cont <= 1e-4,
                       "max oracle delta " + sci(worst_oracle) + ", max continuity gap " +
                           sci(worst_cont)});
  }

  // 3: distance formulas vs quadrature, with the closed-form bracket
  {
    double worst = 0.0;
    bool bracket = true;
    for (const FucikPoint& p : criterion_grid()) {
      const Eigenfunction f = Eigenfunction::build(p);
      const int n = p.n;
      const double quad = integrate(
                              [&](double x) {
                                const double d = f(x) - std::cos(n * x);
                                return d * d;
                              },
                              f.breakpoints(), 0.0, kPi)
                              .value;
      const double dist = distance_squared_to_cos(p);
      worst = std::max(worst, std::abs(dist - quad));
      if (!p.is_diagonal()) {
        const DistanceBounds b = distance_bounds(p);
        bracket = bracket && b.lower <= dist && dist <= b.upper;
      }
    }
    results.push_back({3, "distance formulas vs oracle + bracket", worst <= 1e-10 && bracket,
                       "max delta " + sci(worst) + (bracket ? ", bracket holds" : ", bracket FAILS")});
  }

  // 4: the cap-sum certificate
  {
    const CertificateSum cert = certificate_sum(10000);
    const bool ok = cert.less_than_one && std::abs(cert.total - 0.9408223) <= 1e-6;
    results.push_back(
        {4, "cap sum = 0.9408223... < 1", ok, "partial + tail = " + sci(cert.total)});
  }

  // 5: coefficient caps across the gamma grid
  {
    int violations = 0;
    double worst_ratio = 0.0;
    const double gammas[] = {1.0, 1.1, 2.0, 4.0, 9.0, 25.0, 100.0};
    for (int n : {1, 5})
      for (double g : gammas)
        for (Branch b : kBranches) {
          if (g == 1.0 && b == Branch::BetaDominant) continue;
          const FourierRow row = fourier_row(point_from_dilation(n, g, b), 40);
          for (int k = 1; k <= 40; ++k) {
            const double a = row.coefficients[static_cast<size_t>(k) - 1];
            const double c = row.c_bounds[static_cast<size_t>(k) - 1];
            const double mag = k == 1 ? std::abs(a - 1.0) : std::abs(a);
            if (mag > c) ++violations;
            worst_ratio = std::max(worst_ratio, mag / c);
          }
        }
    results.push_back({5, "|A_1 - 1| <= (12+pi^2)/36 and |A_k| <= 2/(4k^2-1)", violations == 0,
                       std::to_string(violations) + " violations, worst |A|/cap " + sci(worst_ratio)});
  }

  // 6: biorthogonality matrices for the three test systems
  {
    double worst = 0.0;
    for (const FucikSystem& s :
         {FucikSystem::diagonal(12), soft_system(12), random_system(12, 20240817)}) {
      const auto mat = biorthogonality_matrix(s, 12);
      for (size_t i = 0; i < mat.size(); ++i)
        for (size_t j = 0; j < mat.size(); ++j)
          worst = std::max(worst, std::abs(mat[i][j] - (i == j ? 1.0 : 0.0)));
    }
    results.push_back({6, "biorthogonality identity (3 systems, N=12)", worst <= 1e-9,
                       "max |entry - delta| " + sci(worst)});
  }

  // 7: expansion round-trip and the classical sawtooth series
  {
    FucikSystem s = random_system(8, 424242);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::vector<double> a(9);
    for (auto& v : a) v = coef(rng);
    std::vector<Eigenfunction> fs;
    std::vector<double> brk;
    for (int n = 0; n <= 8; ++n) {
      fs.push_back(Eigenfunction::build(s.point(n)));
      brk.insert(brk.end(), fs.back().breakpoints().begin(), fs.back().breakpoints().end());
    }
    auto combo = [&](double x) {
      double v = 0.0;
      for (size_t n = 0; n < fs.size(); ++n) v += a[n] * fs[n](x);
      return v;
    };
    const ExpansionResult r = expand(s, Target{SampledTarget{combo, brk}}, 8);
    double worst_coef = 0.0;
    for (size_t n = 0; n < a.size(); ++n)
      worst_coef = std::max(worst_coef, std::abs(r.coefficients[n] - a[n]));

    const int K = 50;
    const ExpansionResult saw =
        expand(FucikSystem::diagonal(K), Target{SampledTarget{[](double x) { return x - kPi / 2.0; }, {}}}, K);
    double tail = 0.0;
    for (int j = K + 1; j <= 2000001; j += 2)
      tail += 8.0 / kPi / (static_cast<double>(j) * j * j * j);
    const double saw_gap = std::abs(saw.residual_l2.back() - std::sqrt(tail));

    results.push_back({7, "expansion round-trip + classical sawtooth", worst_coef <= 1e-9 && saw_gap <= 1e-6,
                       "max coef error " + sci(worst_coef) + ", sawtooth tail gap " + sci(saw_gap)});
  }

  // 8: ODE residuals and exact Neumann derivatives
  {
    double worst = 0.0;
    bool neumann = true;
    for (const FucikPoint& p : criterion_grid()) {
      const Eigenfunction f = Eigenfunction::build(p);
      worst = std::max(worst, ode_residual(f, 1000));
      neumann = neumann && f.derivative(0.0) == 0.0 && f.derivative(kPi) == 0.0;
    }
    results.push_back({8, "ODE residual <= 1e-9, Neumann derivatives exact", worst <= 1e-9 && neumann,
                       "max residual " + sci(worst)});
  }

  // 9: shift and reflection symmetry identities
  {
    double worst = 0.0;
    for (const FucikPoint& p : criterion_grid()) {
      worst = std::max(worst, symmetry_shift_deviation(p, 1000));
      if (p.n % 2 == 1) worst = std::max(worst, symmetry_reflection_deviation(p, 1000));
    }
    results.push_back(
        {9, "symmetry identities on 1e3 grids", worst <= 1e-10, "max deviation " + sci(worst)});
  }

  // 10: monotonicity of the bound functions (b1 governs k = 1, b2 the k >= 2
  // caps; b2 alone is not monotone at k = 1 and is never used there)
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
    results.push_back({10, "bound monotonicity (b1; b2 for k=2..6)", ok, ""});
  }

  // 11: Gram smallest eigenvalue stays positive
  {
    const double diag = gram_condition(FucikSystem::diagonal(8), 8);
    const double soft = gram_condition(soft_system(8), 8);
    const double rand_sys = gram_condition(random_system(8, 20240817), 8);
    const bool ok = diag > 0.0 && soft > 0.0 && rand_sys > 0.0;
    results.push_back({11, "Gram smallest eigenvalue > 0 (3 systems, N=8)", ok,
                       "diag " + sci(diag) + ", soft " + sci(soft) + ", random " + sci(rand_sys)});
  }

  // 12: criterion arithmetic two ways + the equivalent denominator form
  {
    double worst_two_way = 0.0;
    bool prefix_ok = true;
    for (const FucikSystem& s :
         {FucikSystem::diagonal(12), soft_system(12), random_system(12, 20240817)}) {
      double sum1 = 0.0, sum2 = 0.0, max_ratio = 1.0;
      for (int n = 1; n <= 12; ++n) {
        const FucikPoint& p = s.point(n);
        const double t1 = criterion_term(p);
        const double root = std::sqrt(dilation_params(p).parameter());
        worst_two_way = std::max(worst_two_way, std::abs(t1 - (root - 1.0) * (root - 1.0)));
        const double t2 = criterion_term_equivalent(p);
        const double maxs = std::max(std::sqrt(p.alpha), std::sqrt(p.beta));
        max_ratio = std::max(max_ratio, ((2.0 * maxs - n) / n) * ((2.0 * maxs - n) / n));
        sum1 += t1;
        sum2 += t2;
        prefix_ok = prefix_ok && sum2 <= sum1 + 1e-15 && sum1 <= max_ratio * sum2 + 1e-15;
      }
    }
    results.push_back({12, "criterion terms two ways + equivalent form", worst_two_way <= 1e-14 && prefix_ok,
                       "max two-way gap " + sci(worst_two_way)});
  }

  bool all = true;
  for (const Criterion& c : results) {
    all = all && c.pass;
    std::printf("[%2d] %s  %s%s%s\n", c.id, c.pass ? "PASS" : "FAIL", c.name.c_str(),
                c.note.empty() ? "" : ": ", c.note.c_str());
  }
  std::printf("%zu/%zu criteria passed\n",
              static_cast<size_t>(std::count_if(results.begin(), results.end(),
                                                [](const Criterion& c) { return c.pass; })),
              results.size());
  return all ? 0 : 1;
}
