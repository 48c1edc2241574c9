#pragma once

#include <vector>

#include "fucik/spectrum.hpp"

namespace fucik {

/// A sequence n -> (alpha(n), beta(n)) selecting one point of Gamma_n per
/// index, with index 0 pinned to the constant mode alpha = beta = 0.
class FucikSystem {
 public:
  /// All points on the diagonal: f^n = phi_n.
  static FucikSystem diagonal(int n_max);

  /// points[i].n must equal i and points[0] must be the trivial mode.
  explicit FucikSystem(std::vector<FucikPoint> points);

  /// Replace the point at index p.n (1 <= p.n <= n_max()).
  FucikSystem& set(const FucikPoint& p);

  const FucikPoint& point(int n) const;
  int n_max() const { return static_cast<int>(points_.size()) - 1; }

 private:
  std::vector<FucikPoint> points_;
};

}  // namespace fucik
