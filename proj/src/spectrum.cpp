#include "fucik/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fucik/errors.hpp"

namespace fucik {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCurveTol = 1e-12;  // on the normalized identity, all O(1) quantities

}  // namespace

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::AlphaDominant: return "AlphaDominant";
    case Branch::BetaDominant: return "BetaDominant";
    case Branch::Trivial: return "Trivial";
  }
  return "?";
}

FucikPoint trivial_point() {
  return FucikPoint{0, 0.0, 0.0, 0.0, 0.0, Branch::Trivial};
}

double curve_residual(const FucikPoint& p) {
  if (p.n == 0) return 0.0;
  return std::abs(p.n / (2.0 * std::sqrt(p.alpha)) + p.n / (2.0 * std::sqrt(p.beta)) - 1.0);
}

FucikPoint point_from_alpha(int n, double alpha) {
  if (n < 0) throw DomainError("curve index must be nonnegative");
  if (n == 0) {
    if (alpha != 0.0) throw DomainError("n = 0 admits only alpha = 0");
    return trivial_point();
  }
  const double nn = static_cast<double>(n);
  if (!(alpha > nn * nn / 4.0))
    throw DomainError("alpha must exceed n^2/4, got alpha = " + std::to_string(alpha) +
                      " for n = " + std::to_string(n));
  const double sa = std::sqrt(alpha);
  const double denom = 2.0 * sa - nn;
  const double beta = nn * nn * alpha / (denom * denom);

  FucikPoint p;
  p.n = n;
  p.alpha = alpha;
  p.beta = beta;
  p.l1 = kPi / sa;
  p.l2 = kPi / std::sqrt(beta);
  p.branch = alpha >= nn * nn ? Branch::AlphaDominant : Branch::BetaDominant;
  if (curve_residual(p) > kCurveTol)
    throw NumericalError("curve identity violated beyond 1e-12 at alpha = " + std::to_string(alpha));
  return p;
}

FucikPoint point_from_beta(int n, double beta) {
  if (n < 0) throw DomainError("curve index must be nonnegative");
  if (n == 0) {
    if (beta != 0.0) throw DomainError("n = 0 admits only beta = 0");
    return trivial_point();
  }
  const double nn = static_cast<double>(n);
  if (!(beta > nn * nn / 4.0))
    throw DomainError("beta must exceed n^2/4, got beta = " + std::to_string(beta) +
                      " for n = " + std::to_string(n));
  const double sb = std::sqrt(beta);
  const double denom = 2.0 * sb - nn;
  return point_from_alpha(n, nn * nn * beta / (denom * denom));
}

FucikPoint point_from_dilation(int n, double parameter, Branch branch) {
  if (branch == Branch::Trivial) {
    if (n != 0) throw DomainError("trivial branch requires n = 0");
    return trivial_point();
  }
  if (n < 1) throw DomainError("dilation construction requires n >= 1");
  if (!(parameter >= 1.0)) throw DomainError("dilation parameter must be >= 1");
  const double nn = static_cast<double>(n);
  return branch == Branch::AlphaDominant ? point_from_alpha(n, nn * nn * parameter)
                                         : point_from_beta(n, nn * nn * parameter);
}

DilationParams dilation_params(const FucikPoint& p) {
  if (p.n == 0) throw DomainError("dilation parameters undefined for n = 0");
  const double nn = static_cast<double>(p.n);
  DilationParams d;
  d.branch = p.branch;
  if (p.branch == Branch::AlphaDominant) {
    d.gamma = p.alpha / (nn * nn);
  } else {
    d.delta = p.beta / (nn * nn);
  }
  return d;
}

FucikPoint point_from_dilation(int n, const DilationParams& d) {
  return point_from_dilation(n, d.parameter(), d.branch);
}

std::vector<FucikPoint> curve_samples(int n, int count, double alpha_lo, double alpha_hi) {
  if (n < 1) throw DomainError("curve_samples requires n >= 1");
  if (count < 2) throw DomainError("curve_samples requires count >= 2");
  const double nn = static_cast<double>(n);
  if (!(alpha_lo > nn * nn / 4.0) || !(alpha_hi >= alpha_lo))
    throw DomainError("alpha range must lie in (n^2/4, inf) with lo <= hi");

  std::vector<FucikPoint> out;
  out.reserve(static_cast<size_t>(count));
  const double step = (alpha_hi - alpha_lo) / (count - 1);
  for (int i = 0; i < count; ++i) {
    const double a = i + 1 == count ? alpha_hi : alpha_lo + step * i;
    out.push_back(point_from_alpha(n, a));
  }
  return out;
}

}  // namespace fucik
