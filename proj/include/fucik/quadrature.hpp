#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace fucik {

/// Configuration of the independent integration oracle: composite
/// Gauss-Legendre on the supplied smooth pieces, refined by halving every
/// piece until two successive levels agree to abs_tol/2.
struct QuadratureSpec {
  double abs_tol = 1e-12;
  int nodes_per_segment = 32;
  int max_refinements = 12;
};

struct QuadratureResult {
  double value = 0.0;
  double est_error = 0.0;   // difference of the last two refinement levels
  int refinements = 0;      // level at which convergence was reached
};

/// Nodes and weights of the Gauss-Legendre rule of the given order on
/// [-1, 1], cached per order.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int order);

/// Integrate fn over [a, b]. `breakpoints` lists the points where fn loses
/// smoothness; entries outside (a, b) are ignored. Segment integrals are
/// accumulated left to right in a fixed order for reproducibility.
/// Throws QuadratureNonConvergence if max_refinements halvings do not reach
/// the tolerance.
QuadratureResult integrate(const std::function<double(double)>& fn,
                           std::span<const double> breakpoints,
                           double a, double b,
                           const QuadratureSpec& spec = {});

}  // namespace fucik
