#include "fucik/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "fucik/errors.hpp"

namespace fucik {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::pair<std::vector<double>, std::vector<double>> compute_gauss_legendre(int order) {
  // Roots of the Legendre polynomial by Newton iteration from the Chebyshev
  // initial guesses; weights 2 / ((1 - x^2) P'^2).
  std::vector<double> x(order), w(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double t = std::cos(kPi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = t;
      for (int j = 2; j <= order; ++j) {
        const double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[i] = -t;
    x[order - 1 - i] = t;
    const double weight = 2.0 / ((1.0 - t * t) * dp * dp);
    w[i] = weight;
    w[order - 1 - i] = weight;
  }
  return {std::move(x), std::move(w)};
}

}  // namespace

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int order) {
  if (order < 1) throw DomainError("Gauss-Legendre order must be positive");
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
  return it->second;
}

QuadratureResult integrate(const std::function<double(double)>& fn,
                           std::span<const double> breakpoints,
                           double a, double b,
                           const QuadratureSpec& spec) {
  if (!(spec.abs_tol > 0.0)) throw DomainError("abs_tol must be positive");
  if (spec.max_refinements < 1) throw DomainError("max_refinements must be positive");
  if (!(b >= a)) throw DomainError("integration interval must satisfy a <= b");
  if (a == b) return QuadratureResult{0.0, 0.0, 0};

  std::vector<double> edges;
  edges.reserve(breakpoints.size() + 2);
  edges.push_back(a);
  for (double bp : breakpoints)
    if (bp > a && bp < b) edges.push_back(bp);
  std::sort(edges.begin() + 1, edges.end());
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](double u, double v) { return std::abs(u - v) < 1e-14; }),
              edges.end());
  edges.push_back(b);

  const auto& [gx, gw] = gauss_legendre(spec.nodes_per_segment);

  double prev = 0.0;
  for (int level = 0; level <= spec.max_refinements; ++level) {
    const int pieces = 1 << level;
    double total = 0.0;
    for (size_t s = 0; s + 1 < edges.size(); ++s) {
      const double h = (edges[s + 1] - edges[s]) / pieces;
      for (int piece = 0; piece < pieces; ++piece) {
        const double lo = edges[s] + piece * h;
        const double mid = lo + h / 2.0;
        const double half = h / 2.0;
        double acc = 0.0;
        for (size_t k = 0; k < gx.size(); ++k) acc += gw[k] * fn(mid + half * gx[k]);
        total += half * acc;
      }
    }
    if (level > 0) {
      const double diff = std::abs(total - prev);
      if (diff < spec.abs_tol / 2.0) return QuadratureResult{total, diff, level};
    }
    prev = total;
  }
  throw QuadratureNonConvergence("quadrature did not reach abs_tol " +
                                 std::to_string(spec.abs_tol) + " within " +
                                 std::to_string(spec.max_refinements) + " refinements");
}

}  // namespace fucik
