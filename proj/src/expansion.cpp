#include "fucik/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fucik/analytic_products.hpp"
#include "fucik/eigenfunction.hpp"
#include "fucik/errors.hpp"

namespace fucik {

namespace {

constexpr double kPi = std::numbers::pi;

double sq(double v) { return v * v; }

// <target, phi_k> for k = 0..N. Exact finite dot products on the cosine
// path, one oracle integral per mode on the sampled path.
std::vector<double> mode_products(const Target& target, int N, const QuadratureSpec& spec) {
  std::vector<double> t(static_cast<size_t>(N) + 1, 0.0);
  if (const auto* ct = std::get_if<CosineTarget>(&target)) {
    for (int k = 0; k <= N; ++k)
      if (k < static_cast<int>(ct->coeffs.size())) t[static_cast<size_t>(k)] = kPi / 2.0 * ct->coeffs[static_cast<size_t>(k)];
    return t;
  }
  const auto& st = std::get<SampledTarget>(target);
  for (int k = 0; k <= N; ++k)
    t[static_cast<size_t>(k)] =
        integrate([&](double x) { return st.fn(x) * cosine_mode(k, x); }, st.breakpoints, 0.0, kPi,
                  spec)
            .value;
  return t;
}

const std::vector<double>& target_breakpoints(const Target& t) {
  static const std::vector<double> empty;
  if (const auto* st = std::get_if<SampledTarget>(&t)) return st->breakpoints;
  return empty;
}

}  // namespace

double target_value(const Target& t, double x) {
  if (const auto* ct = std::get_if<CosineTarget>(&t)) {
    double v = 0.0;
    for (size_t k = 0; k < ct->coeffs.size(); ++k)
      v += ct->coeffs[k] * cosine_mode(static_cast<int>(k), x);
    return v;
  }
  return std::get<SampledTarget>(t).fn(x);
}

double criterion_term(const FucikPoint& p) {
  if (p.n < 1) throw DomainError("criterion terms start at n = 1");
  const double n = p.n;
  const double s = std::max(std::sqrt(p.alpha), std::sqrt(p.beta));
  return sq(s - n) / (n * n);
}

double criterion_term_equivalent(const FucikPoint& p) {
  if (p.n < 1) throw DomainError("criterion terms start at n = 1");
  const double n = p.n;
  const double s = std::max(std::sqrt(p.alpha), std::sqrt(p.beta));
  return sq(s - n) / sq(2.0 * s - n);
}

BasisCertificate criterion_check(const FucikSystem& system, int N, double epsilon) {
  if (N < 1 || N > system.n_max()) throw DomainError("prefix outside the system's range");
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");

  BasisCertificate cert;
  cert.epsilon = epsilon;
  cert.terms.reserve(static_cast<size_t>(N));
  for (int n = 1; n <= N; ++n) {
    const FucikPoint& p = system.point(n);
    cert.terms.push_back(criterion_term(p));
    cert.partial_sum += cert.terms.back();
    const double s = std::max(std::sqrt(p.alpha), std::sqrt(p.beta));
    cert.power_fit_c =
        std::max(cert.power_fit_c, (s - n) / std::pow(static_cast<double>(n), (1.0 - epsilon) / 2.0));
  }

  // Summable-looking prefix: non-increasing over the trailing half and no
  // growth of the final term past the mid-prefix one.
  const size_t half = cert.terms.size() / 2;
  bool tail_decreasing = true;
  for (size_t i = std::max<size_t>(half, 1); i < cert.terms.size(); ++i)
    if (cert.terms[i] > cert.terms[i - 1] + 1e-15) tail_decreasing = false;
  if (cert.terms.back() > cert.terms[half] + 1e-15) tail_decreasing = false;
  cert.verdict = tail_decreasing ? BasisCertificate::Verdict::CertifiedPrefix
                                 : BasisCertificate::Verdict::Inconclusive;
  return cert;
}

ExpansionResult expand(const FucikSystem& system, const Target& target, int N,
                       const QuadratureSpec& spec) {
  if (N < 1 || N > system.n_max()) throw DomainError("truncation outside the system's range");

  const std::vector<double> t = mode_products(target, N, spec);

  ExpansionResult res;
  res.coefficients.assign(static_cast<size_t>(N) + 1, 0.0);
  for (int n = 1; n <= N; ++n) {
    const BiorthogonalElement psi = biorthogonal_element(system, n);
    double c = 0.0;
    for (const auto& [k, coef] : psi.coeffs) c += coef * t[static_cast<size_t>(k)];
    res.coefficients[static_cast<size_t>(n)] = c;
  }

  res.b0_trace.assign(static_cast<size_t>(N) + 1, 0.0);
  double acc = t[0];
  res.b0_trace[0] = 2.0 / kPi * acc;
  for (int n = 1; n <= N; ++n) {
    acc -= inner_with_cos(system.point(n), 0).value * res.coefficients[static_cast<size_t>(n)];
    res.b0_trace[static_cast<size_t>(n)] = 2.0 / kPi * acc;
  }
  res.coefficients[0] = res.b0_trace[static_cast<size_t>(N)];

  std::vector<Eigenfunction> fs;
  fs.reserve(static_cast<size_t>(N));
  for (int n = 1; n <= N; ++n) fs.push_back(Eigenfunction::build(system.point(n)));

  std::vector<double> brk = target_breakpoints(target);
  res.residual_l2.reserve(static_cast<size_t>(N) + 1);
  for (int K = 0; K <= N; ++K) {
    if (K >= 1) {
      const auto& own = fs[static_cast<size_t>(K) - 1].breakpoints();
      brk.insert(brk.end(), own.begin(), own.end());
      std::sort(brk.begin(), brk.end());
    }
    const double b0 = res.b0_trace[static_cast<size_t>(K)];
    auto diff = [&](double x) {
      double approx = b0 * std::numbers::sqrt2 / 2.0;
      for (int n = 1; n <= K; ++n)
        approx += res.coefficients[static_cast<size_t>(n)] * fs[static_cast<size_t>(n) - 1](x);
      return sq(target_value(target, x) - approx);
    };
    res.residual_l2.push_back(std::sqrt(std::max(0.0, integrate(diff, brk, 0.0, kPi, spec).value)));
  }
  return res;
}

B0Report b0_convergence_report(const FucikSystem& system, const Target& target, int N,
                               const QuadratureSpec& spec) {
  if (N < 1 || N > system.n_max()) throw DomainError("truncation outside the system's range");
  const std::vector<double> t = mode_products(target, N, spec);

  B0Report rep;
  rep.values.assign(static_cast<size_t>(N) + 1, 0.0);
  double acc = t[0];
  rep.values[0] = 2.0 / kPi * acc;
  for (int n = 1; n <= N; ++n) {
    const BiorthogonalElement psi = biorthogonal_element(system, n);
    double c = 0.0;
    for (const auto& [k, coef] : psi.coeffs) c += coef * t[static_cast<size_t>(k)];
    acc -= inner_with_cos(system.point(n), 0).value * c;
    rep.values[static_cast<size_t>(n)] = 2.0 / kPi * acc;
  }
  rep.increments.reserve(static_cast<size_t>(N));
  for (int n = 0; n < N; ++n)
    rep.increments.push_back(
        std::abs(rep.values[static_cast<size_t>(n) + 1] - rep.values[static_cast<size_t>(n)]));
  return rep;
}

}  // namespace fucik
