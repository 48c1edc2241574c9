#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "fucik/biorthogonal.hpp"
#include "fucik/quadrature.hpp"
#include "fucik/system.hpp"

namespace fucik {

/// Prefix evaluation of the Riesz-basis criterion
/// sum_n (max(sqrt(alpha(n)), sqrt(beta(n))) - n)^2 / n^2. The artifact never
/// claims the infinite statement; the verdict only reports whether the prefix
/// terms look summable (non-increasing trailing half).
struct BasisCertificate {
  enum class Verdict { CertifiedPrefix, Inconclusive };

  double partial_sum = 0.0;
  std::vector<double> terms;  // term for n = 1..N
  double power_fit_c = 0.0;   // smallest C with max(...) <= n + C n^{(1-eps)/2} on the prefix
  double epsilon = 0.0;
  Verdict verdict = Verdict::Inconclusive;
};

/// (max(sqrt(alpha), sqrt(beta)) - n)^2 / n^2 for n >= 1.
double criterion_term(const FucikPoint& p);

/// Same numerator over (2 max(...) - n)^2; summable iff criterion_term is.
double criterion_term_equivalent(const FucikPoint& p);

BasisCertificate criterion_check(const FucikSystem& system, int N, double epsilon = 0.5);

/// Expansion target: either exact cosine coefficients (target =
/// sum_k coeffs[k] phi_k) or a black-box sampler with its breakpoints.
struct CosineTarget {
  std::vector<double> coeffs;
};

struct SampledTarget {
  std::function<double(double)> fn;
  std::vector<double> breakpoints;
};

using Target = std::variant<CosineTarget, SampledTarget>;

double target_value(const Target& t, double x);

/// Coefficients of target against the biorthogonal system, with the
/// truncation-dependent constant-mode coefficient
///   b0(k) = (2/pi)(<target, phi_0> - sum_{n<=k} <f^n, phi_0> c_n)
/// and L2 residuals ||target - b0(K) f^0 - sum_{n<=K} c_n f^n|| per K.
struct ExpansionResult {
  std::vector<double> coefficients;  // index 0 holds b0(N); index n >= 1 holds c_n = <target, psi_n>
  std::vector<double> residual_l2;   // residual after truncation K, K = 0..N
  std::vector<double> b0_trace;      // b0(k), k = 0..N
};

ExpansionResult expand(const FucikSystem& system, const Target& target, int N,
                       const QuadratureSpec& spec = {});

struct B0Report {
  std::vector<double> values;      // b0(k), k = 0..N
  std::vector<double> increments;  // |b0(k+1) - b0(k)|, k = 0..N-1
};

B0Report b0_convergence_report(const FucikSystem& system, const Target& target, int N,
                               const QuadratureSpec& spec = {});

}  // namespace fucik
