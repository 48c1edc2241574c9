#pragma once

#include <string_view>
#include <vector>

namespace fucik {

/// Which parameter dominates the classical eigenvalue n^2 on the curve.
/// The boundary alpha = n^2 = beta belongs to AlphaDominant.
enum class Branch { AlphaDominant, BetaDominant, Trivial };

std::string_view to_string(Branch b);

/// A validated point (alpha, beta) on the spectrum curve
///
///   Gamma_n = { (alpha, beta) : n/(2 sqrt(alpha)) + n/(2 sqrt(beta)) = 1 },
///
/// together with the bump lengths l1 = pi/sqrt(alpha), l2 = pi/sqrt(beta).
/// Points satisfy l1 + l2 = 2 pi / n. The index n = 0 denotes the trivial
/// constant mode with alpha = beta = 0 and meaningless l-fields.
///
/// Near the asymptote alpha -> (n/2)^2 from above, beta grows without bound;
/// the open domain alpha > n^2/4 is enforced strictly.
struct FucikPoint {
  int n = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;
  Branch branch = Branch::Trivial;

  bool is_diagonal() const { return n >= 1 && alpha == beta; }
};

/// Projection parameters onto Gamma_1 along the ray through the origin:
/// alpha = n^2 gamma on the alpha-dominant branch, beta = n^2 delta on the
/// beta-dominant one. Only the field matching `branch` is meaningful; the
/// other is kept at 1.
struct DilationParams {
  Branch branch = Branch::AlphaDominant;
  double gamma = 1.0;
  double delta = 1.0;

  double parameter() const { return branch == Branch::BetaDominant ? delta : gamma; }
};

/// The constant mode n = 0 with alpha = beta = 0.
FucikPoint trivial_point();

/// The unique point of Gamma_n with the given alpha.
/// Throws DomainError unless alpha > n^2/4 (or n = 0 with alpha = 0).
FucikPoint point_from_alpha(int n, double alpha);

/// Mirror of point_from_alpha; delegates to the alpha-driven path.
FucikPoint point_from_beta(int n, double beta);

/// Build the point of Gamma_n at dilation parameter gamma (alpha-dominant)
/// or delta (beta-dominant); parameter >= 1.
FucikPoint point_from_dilation(int n, double parameter, Branch branch);

/// Residual |n/(2 sqrt(alpha)) + n/(2 sqrt(beta)) - 1| of the curve identity.
double curve_residual(const FucikPoint& p);

DilationParams dilation_params(const FucikPoint& p);

/// Reconstruct (alpha, beta) from dilation parameters (round-trip of
/// dilation_params).
FucikPoint point_from_dilation(int n, const DilationParams& d);

/// count >= 2 points with uniformly spaced alpha in [alpha_lo, alpha_hi],
/// which must be contained in (n^2/4, inf).
std::vector<FucikPoint> curve_samples(int n, int count, double alpha_lo, double alpha_hi);

}  // namespace fucik
