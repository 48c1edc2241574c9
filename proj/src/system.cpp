#include "fucik/system.hpp"

#include <string>
#include <utility>

#include "fucik/errors.hpp"

namespace fucik {

FucikSystem FucikSystem::diagonal(int n_max) {
  if (n_max < 0) throw DomainError("system size must be nonnegative");
  std::vector<FucikPoint> pts;
  pts.reserve(static_cast<size_t>(n_max) + 1);
  pts.push_back(trivial_point());
  for (int n = 1; n <= n_max; ++n)
    pts.push_back(point_from_alpha(n, static_cast<double>(n) * n));
  return FucikSystem(std::move(pts));
}

FucikSystem::FucikSystem(std::vector<FucikPoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw DomainError("system needs at least the trivial mode");
  for (size_t i = 0; i < points_.size(); ++i)
    if (points_[i].n != static_cast<int>(i))
      throw DomainError("system point at index " + std::to_string(i) + " has curve index " +
                        std::to_string(points_[i].n));
  if (points_[0].branch != Branch::Trivial)
    throw DomainError("index 0 must hold the trivial constant mode");
}

FucikSystem& FucikSystem::set(const FucikPoint& p) {
  if (p.n < 1 || p.n > n_max()) throw DomainError("point index outside the system");
  points_[static_cast<size_t>(p.n)] = p;
  return *this;
}

const FucikPoint& FucikSystem::point(int n) const {
  if (n < 0 || n > n_max()) throw DomainError("system index out of range");
  return points_[static_cast<size_t>(n)];
}

}  // namespace fucik
