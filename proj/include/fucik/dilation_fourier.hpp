#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fucik/eigenfunction.hpp"
#include "fucik/system.hpp"

namespace fucik {

/// Zero-mean projection g_n = f^n - (sqrt(2)/pi) <f^n, phi_0> of an
/// eigenfunction into the subspace of zero-mean functions.
struct ZeroMeanProjection {
  Eigenfunction base;
  double mean_term = 0.0;  // (sqrt(2)/pi) <f^n, phi_0>

  double operator()(double x) const { return base(x) - mean_term; }
  const std::vector<double>& breakpoints() const { return base.breakpoints(); }
};

ZeroMeanProjection project_zero_mean(const FucikPoint& p);

/// Dilation isometry on zero-mean functions: (T_k h)(x) = h*(k x), where h*
/// is the even 2 pi-periodic extension of h from [0, pi]. T_1 is the
/// identity and T_k cos(n .) = cos(n k .).
double dilate(const std::function<double(double)>& h, int k, double x);

/// Preimages in [0, pi] under x -> k x (mod even 2 pi extension) of the
/// given breakpoints of h; where T_k h loses smoothness.
std::vector<double> dilated_breakpoints(std::span<const double> base, int k);

/// k-th cosine Fourier coefficient of the zero-mean Gamma_1 generator at
/// dilation parameter >= 1. The resonance parameter = k^2 (k >= 2) is
/// handled by its closed limit 1/(2k(2k-1)); k = 1 is evaluated through a
/// form that is stable across parameter = 1 (value 1 there).
double fourier_coefficient(double parameter, int k);

/// Uniform cap c_k on the perturbation coefficients:
/// (12 + pi^2)/36 for k = 1 and 2/(4k^2 - 1) for k >= 2.
double perturbation_bound(int k);

/// Coefficients A_{n,k} of g_n(x) = sum_k A_{n,k} cos(n k x) for one point,
/// with the caps c_k alongside. On the beta-dominant branch the generator
/// coefficients carry the extra sign (-1)^(k+1).
struct FourierRow {
  int n = 0;
  std::vector<double> coefficients;  // A_{n,k}, k = 1..K
  std::vector<double> c_bounds;      // c_k,     k = 1..K
};

FourierRow fourier_row(const FucikPoint& p, int k_max);

/// Partial sum of the caps with its exact telescoped tail
/// sum_{k>K} 2/(4k^2-1) = 1/(2K+1); total = partial + tail is the full sum
/// (12 + pi^2)/36 + 1/3 = 0.9408223... < 1 at every K >= 2.
struct CertificateSum {
  double partial_sum = 0.0;
  double tail_bound = 0.0;
  double total = 0.0;
  bool less_than_one = false;
};

CertificateSum certificate_sum(int k_max);

/// Rational bound functions of the coefficient estimates, as functions of
/// the dilation parameter on (1, inf). bound_b1 governs k = 1 (limit
/// (12+pi^2)/6, to be divided by 6); bound_b2 governs k >= 2 (limit
/// 1/(2(4k^2-1)), to be multiplied by 4). bound_b2 is increasing only for
/// k >= 2; at k = 1 it is not monotone and is never used for the bounds.
double bound_b1(double gamma);
double bound_b2(double gamma, int k);
double bound_b1_limit();
double bound_b2_limit(int k);

/// True iff bound_b1 and bound_b2(., k) are strictly increasing along the
/// grid and everywhere below their limits. Grid must be strictly increasing
/// with every entry > 1.
bool bound_monotonicity_check(int k, std::span<const double> gamma_grid);

/// 8 (max(sqrt(alpha), sqrt(beta)) - n)^2 / (2 max(...) - n)^2
/// = <f^n, phi_0>^2; 0 for n = 0.
double mean_coefficient_term(const FucikPoint& p);

/// sum_{n=1}^{N} <f^n, phi_0>^2 computed from the closed-form products.
double mean_coefficient_sum(const FucikSystem& system, int n_limit);

}  // namespace fucik
