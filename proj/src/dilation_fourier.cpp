#include "fucik/dilation_fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fucik/analytic_products.hpp"
#include "fucik/errors.hpp"

namespace fucik {

namespace {

constexpr double kPi = std::numbers::pi;

double sq(double v) { return v * v; }

}  // namespace

ZeroMeanProjection project_zero_mean(const FucikPoint& p) {
  if (p.n < 1) throw DomainError("zero-mean projection requires n >= 1");
  ZeroMeanProjection g{Eigenfunction::build(p), 0.0};
  g.mean_term = std::numbers::sqrt2 / kPi * inner_with_cos(p, 0).value;
  return g;
}

double dilate(const std::function<double(double)>& h, int k, double x) {
  if (k < 1) throw DomainError("dilation order must be positive");
  double y = std::fmod(k * x, 2.0 * kPi);
  if (y < 0.0) y += 2.0 * kPi;
  if (y > kPi) y = 2.0 * kPi - y;
  return h(y);
}

std::vector<double> dilated_breakpoints(std::span<const double> base, int k) {
  if (k < 1) throw DomainError("dilation order must be positive");
  std::vector<double> out;
  for (int j = 0; j <= k + 1; ++j) {
    const double offset = 2.0 * kPi * j;
    for (double b : base) {
      for (double s : {offset + b, offset - b}) {
        const double x = s / k;
        if (x >= 0.0 && x <= kPi) out.push_back(x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](double u, double v) { return std::abs(u - v) < 1e-13; }),
            out.end());
  return out;
}

double fourier_coefficient(double parameter, int k) {
  if (k < 1) throw DomainError("coefficient index must be positive");
  if (!(parameter >= 1.0)) throw DomainError("dilation parameter must be >= 1");
  const double s = std::sqrt(parameter);
  if (k == 1) {
    // Stable across parameter = 1, where the value is exactly 1; the
    // (k^2 - gamma) and cosine factors would otherwise cancel to 0/0.
    return 8.0 * sq(parameter) * cos_over_gap(1.0, s) /
           (kPi * (1.0 + s) * (3.0 * s - 1.0) * (2.0 * s - 1.0));
  }
  const double k2 = static_cast<double>(k) * k;
  if (std::abs(parameter - k2) <= 1e-9 * k2) return 1.0 / (2.0 * k * (2.0 * k - 1.0));
  return 8.0 * sq(parameter) * (1.0 - s) * std::cos(k * kPi / (2.0 * s)) /
         (kPi * (k2 - parameter) * (k2 * sq(2.0 * s - 1.0) - parameter) * (2.0 * s - 1.0));
}

double perturbation_bound(int k) {
  if (k < 1) throw DomainError("coefficient index must be positive");
  if (k == 1) return (12.0 + kPi * kPi) / 36.0;
  return 2.0 / (4.0 * static_cast<double>(k) * k - 1.0);
}

FourierRow fourier_row(const FucikPoint& p, int k_max) {
  if (p.n < 1) throw DomainError("Fourier row requires n >= 1");
  if (k_max < 1) throw DomainError("k_max must be positive");
  const DilationParams d = dilation_params(p);
  const bool beta_branch = d.branch == Branch::BetaDominant;

  FourierRow row;
  row.n = p.n;
  row.coefficients.reserve(static_cast<size_t>(k_max));
  row.c_bounds.reserve(static_cast<size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    double a = fourier_coefficient(d.parameter(), k);
    if (beta_branch && k % 2 == 0) a = -a;  // generator sign (-1)^(k+1)
    row.coefficients.push_back(a);
    row.c_bounds.push_back(perturbation_bound(k));
  }
  return row;
}

CertificateSum certificate_sum(int k_max) {
  if (k_max < 2) throw DomainError("certificate sum requires k_max >= 2");
  CertificateSum c;
  c.partial_sum = perturbation_bound(1);
  for (int k = 2; k <= k_max; ++k) c.partial_sum += perturbation_bound(k);
  c.tail_bound = 1.0 / (2.0 * k_max + 1.0);  // telescoped exactly
  c.total = c.partial_sum + c.tail_bound;
  c.less_than_one = c.total < 1.0;
  return c;
}

double bound_b1(double gamma) {
  const double s = std::sqrt(gamma);
  return (s - 1.0) * ((12.0 + kPi * kPi) * gamma + (18.0 - kPi * kPi) * s - 6.0) /
         ((s + 1.0) * (2.0 * s - 1.0) * (3.0 * s - 1.0));
}

double bound_b2(double gamma, int k) {
  if (k < 1) throw DomainError("coefficient index must be positive");
  const double s = std::sqrt(gamma);
  const double k2 = static_cast<double>(k) * k;
  return s * s * s * (s - 1.0) / ((k + s) * (k2 * sq(2.0 * s - 1.0) - gamma) * (2.0 * s - 1.0));
}

double bound_b1_limit() { return (12.0 + kPi * kPi) / 6.0; }

double bound_b2_limit(int k) {
  if (k < 1) throw DomainError("coefficient index must be positive");
  return 1.0 / (2.0 * (4.0 * static_cast<double>(k) * k - 1.0));
}

bool bound_monotonicity_check(int k, std::span<const double> gamma_grid) {
  if (k < 1) throw DomainError("coefficient index must be positive");
  if (gamma_grid.size() < 2) throw DomainError("grid needs at least two points");
  for (size_t i = 0; i < gamma_grid.size(); ++i) {
    if (!(gamma_grid[i] > 1.0)) throw DomainError("grid points must exceed 1");
    if (i > 0 && !(gamma_grid[i] > gamma_grid[i - 1]))
      throw DomainError("grid must be strictly increasing");
  }
  double prev1 = -1.0, prev2 = -1.0;
  for (double g : gamma_grid) {
    const double v1 = bound_b1(g);
    const double v2 = bound_b2(g, k);
    if (v1 <= prev1 || v2 <= prev2) return false;
    if (!(v1 < bound_b1_limit()) || !(v2 < bound_b2_limit(k))) return false;
    prev1 = v1;
    prev2 = v2;
  }
  return true;
}

double mean_coefficient_term(const FucikPoint& p) {
  if (p.n == 0) return 0.0;
  const double n = p.n;
  const double s = std::max(std::sqrt(p.alpha), std::sqrt(p.beta));
  return 8.0 * sq(s - n) / sq(2.0 * s - n);
}

double mean_coefficient_sum(const FucikSystem& system, int n_limit) {
  if (n_limit < 1 || n_limit > system.n_max())
    throw DomainError("summation limit outside the system's range");
  double sum = 0.0;
  for (int n = 1; n <= n_limit; ++n) sum += sq(inner_with_cos(system.point(n), 0).value);
  return sum;
}

}  // namespace fucik
