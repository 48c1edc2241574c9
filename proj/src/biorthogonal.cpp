#include "fucik/biorthogonal.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "fucik/analytic_products.hpp"
#include "fucik/eigenfunction.hpp"
#include "fucik/errors.hpp"

namespace fucik {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

std::vector<int> divisors(int m) {
  if (m < 1) throw DomainError("divisors require a positive integer");
  std::vector<int> out;
  for (int k = 1; k * k <= m; ++k) {
    if (m % k != 0) continue;
    out.push_back(k);
    if (k != m / k) out.push_back(m / k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double BiorthogonalElement::coefficient(int k) const {
  for (const auto& [idx, c] : coeffs)
    if (idx == k) return c;
  return 0.0;
}

double BiorthogonalElement::operator()(double x) const {
  double v = 0.0;
  for (const auto& [k, c] : coeffs) v += c * std::cos(k * x);
  return v;
}

BiorthogonalElement biorthogonal_element(const FucikSystem& system, int m) {
  if (m < 1) throw DomainError("biorthogonal index must be positive");
  if (m > system.n_max()) throw DomainError("system not defined up to the requested index");

  const std::vector<int> divs = divisors(m);
  std::map<int, double> c;
  // Descending sweep: the coefficient at k references only strictly larger
  // divisors, all already resolved.
  for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
    const int k = *it;
    const FucikPoint& pk = system.point(k);
    const double pivot = inner_with_self_mode(pk);
    if (std::abs(pivot) < 1e-300) throw NumericalError("self-mode product underflow");
    if (k == m) {
      c[k] = 1.0 / pivot;
      continue;
    }
    double acc = 0.0;
    for (int l : divs)
      if (l > k && l % k == 0) acc += c[l] * inner_with_cos(pk, l).value;
    c[k] = -acc / pivot;
  }

  BiorthogonalElement e;
  e.m = m;
  e.coeffs.assign(c.begin(), c.end());
  return e;
}

std::vector<std::vector<double>> biorthogonality_matrix(const FucikSystem& system, int N) {
  if (N < 1 || N > system.n_max()) throw DomainError("matrix size outside the system's range");
  std::vector<std::vector<double>> mat(static_cast<size_t>(N),
                                       std::vector<double>(static_cast<size_t>(N), 0.0));
  for (int m = 1; m <= N; ++m) {
    const BiorthogonalElement psi = biorthogonal_element(system, m);
    for (int n = 1; n <= N; ++n) {
      double v = 0.0;
      for (const auto& [k, coef] : psi.coeffs) v += coef * inner_with_cos(system.point(n), k).value;
      mat[static_cast<size_t>(n) - 1][static_cast<size_t>(m) - 1] = v;
    }
  }
  return mat;
}

Psi0PartialSum psi0_partial_sum(const FucikSystem& system, int K) {
  if (K < 1 || K > system.n_max()) throw DomainError("truncation outside the system's range");
  Psi0PartialSum out;
  out.coeffs.assign(static_cast<size_t>(K) + 1, 0.0);
  out.coeffs[0] = 2.0 / kPi;

  double min_term = std::numeric_limits<double>::infinity();
  double last_term = 0.0;
  for (int n = 1; n <= K; ++n) {
    const double a = inner_with_cos(system.point(n), 0).value;
    const double term = a * a;
    out.mean_square_partial += term;
    if (n < K) min_term = std::min(min_term, term);
    last_term = term;
    if (a == 0.0) continue;
    const BiorthogonalElement psi = biorthogonal_element(system, n);
    for (const auto& [k, c] : psi.coeffs) out.coeffs[static_cast<size_t>(k)] -= 2.0 / kPi * a * c;
  }
  out.convergence_warning = K >= 2 && last_term > 1e-15 && last_term > min_term + 1e-15;
  return out;
}

double gram_condition(const FucikSystem& system, int N, const QuadratureSpec& spec) {
  if (N < 0 || N > system.n_max()) throw DomainError("Gram size outside the system's range");
  const int dim = N + 1;

  std::vector<Eigenfunction> fs;
  fs.reserve(static_cast<size_t>(dim));
  for (int n = 0; n <= N; ++n) fs.push_back(Eigenfunction::build(system.point(n)));

  Eigen::MatrixXd g(dim, dim);
  for (int i = 0; i <= N; ++i) {
    g(i, i) = norm_squared(system.point(i));
    for (int j = i + 1; j <= N; ++j) {
      double v;
      if (i == 0) {
        v = inner_with_cos(system.point(j), 0).value;  // <f^j, phi_0>
      } else {
        std::vector<double> brk = fs[static_cast<size_t>(i)].breakpoints();
        const auto& other = fs[static_cast<size_t>(j)].breakpoints();
        brk.insert(brk.end(), other.begin(), other.end());
        std::sort(brk.begin(), brk.end());
        const auto& fi = fs[static_cast<size_t>(i)];
        const auto& fj = fs[static_cast<size_t>(j)];
        v = integrate([&](double x) { return fi(x) * fj(x); }, brk, 0.0, kPi, spec).value;
      }
      g(i, j) = v;
      g(j, i) = v;
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g);
  if (solver.info() != Eigen::Success) throw NumericalError("Gram eigendecomposition failed");
  return solver.eigenvalues().minCoeff();
}

}  // namespace fucik
