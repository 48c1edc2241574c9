#pragma once

#include <string_view>

#include "fucik/quadrature.hpp"
#include "fucik/spectrum.hpp"

namespace fucik {

/// Case split for <f^n, phi_m>. Exactly one tag applies to any valid input:
///  - Trivial0:                n = 0 or m = 0,
///  - Diagonal:                alpha = beta = n^2 and m = n (value pi/2),
///  - NonDivisible:            m/n not an integer (value 0),
///  - DivisibleResonantAlpha:  m/n integer, alpha = m^2 (alpha-dominant),
///  - DivisibleResonantBeta:   m/n integer, beta = m^2 (beta-dominant),
///  - DivisibleGeneric:        m/n integer, no resonance.
enum class ProductCase {
  Trivial0,
  DivisibleGeneric,
  DivisibleResonantAlpha,
  DivisibleResonantBeta,
  NonDivisible,
  Diagonal,
};

std::string_view to_string(ProductCase c);

struct ScalarProduct {
  ProductCase tag = ProductCase::Trivial0;
  double value = 0.0;
};

/// phi_m evaluated at x: sqrt(2)/2 for m = 0, cos(m x) otherwise.
/// All modes have L2 norm sqrt(pi/2).
double cosine_mode(int m, double x);

/// Closed-form <f^n, phi_m> with total case dispatch. Resonance alpha = m^2
/// (resp. beta = m^2) is detected inside a relative window of 1e-9; m = n is
/// routed through inner_with_self_mode, which is finite across the diagonal.
ScalarProduct inner_with_cos(const FucikPoint& p, int m);

/// <f^n, phi_n> for n >= 1; returns pi/2 at the removable singularity
/// alpha -> n^2 (resp. beta). Never zero.
double inner_with_self_mode(const FucikPoint& p);

/// ||f^n||^2; pi/2 for n = 0.
double norm_squared(const FucikPoint& p);

/// ||f^n - phi_n||^2 for n >= 1; 0 on the diagonal.
double distance_squared_to_cos(const FucikPoint& p);

struct DistanceBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Closed-form bracket for distance_squared_to_cos; degenerates to (0, 0)
/// on the diagonal.
DistanceBounds distance_bounds(const FucikPoint& p);

/// Quadrature value of <f^n, phi_m> (the independent oracle path).
double inner_quadrature(const FucikPoint& p, int m, const QuadratureSpec& spec = {});

/// |analytic - quadrature| for <f^n, phi_m>.
double inner_oracle_delta(const FucikPoint& p, int m, const QuadratureSpec& spec = {});

/// cos(n pi / (2 s)) / (s - n), evaluated through a series-safe rewrite that
/// stays finite and accurate across s = n.
double cos_over_gap(double n, double s);

}  // namespace fucik
