#pragma once

#include <utility>
#include <vector>

#include "fucik/quadrature.hpp"
#include "fucik/system.hpp"

namespace fucik {

/// All positive divisors of m, ascending.
std::vector<int> divisors(int m);

/// Sparse cosine representation psi_m = sum_{k | m} C^m_k phi_k of the m-th
/// biorthogonal element. Coefficients live exactly on the divisors of m,
/// so psi_m has zero mean (no phi_0 term).
struct BiorthogonalElement {
  int m = 0;
  std::vector<std::pair<int, double>> coeffs;  // (k, C^m_k), ascending k | m

  double coefficient(int k) const;
  /// Assembled value sum_k C^m_k cos(k x).
  double operator()(double x) const;
};

/// Divisor recursion: C^m_m = <f^m, phi_m>^{-1} and, walking the divisors of
/// m in descending order,
///   C^m_k = -<f^k, phi_k>^{-1} sum_{l | m, k | l, l > k} C^m_l <f^k, phi_l>.
/// All inner products come from the closed forms. Throws NumericalError if a
/// pivot |<f^k, phi_k>| underflows 1e-300 (cannot happen for valid points,
/// but guarded).
BiorthogonalElement biorthogonal_element(const FucikSystem& system, int m);

/// Entries <f^n, psi_m> for 1 <= n, m <= N (row n, column m); identity up to
/// the recursion's rounding for any system.
std::vector<std::vector<double>> biorthogonality_matrix(const FucikSystem& system, int N);

/// Partial sum (2/pi)(phi_0 - sum_{n<=K} <f^n, phi_0> psi_n) of the zeroth
/// biorthogonal element, as coefficients over {phi_0, phi_1, ..., phi_K}.
/// mean_square_partial accumulates sum_{n<=K} <f^n, phi_0>^2, the quantity
/// whose convergence governs the strong limit; convergence_warning is set
/// when the latest term exceeds the smallest term seen so far (the partial
/// sums are not Cauchy-decreasing).
struct Psi0PartialSum {
  std::vector<double> coeffs;
  double mean_square_partial = 0.0;
  bool convergence_warning = false;
};

Psi0PartialSum psi0_partial_sum(const FucikSystem& system, int K);

/// Smallest eigenvalue of the Gram matrix <f^i, f^j>, 0 <= i, j <= N.
/// Diagonal and phi_0 entries come from closed forms, the rest from the
/// quadrature oracle. Positive iff the prefix is linearly independent.
double gram_condition(const FucikSystem& system, int N, const QuadratureSpec& spec = {});

}  // namespace fucik
