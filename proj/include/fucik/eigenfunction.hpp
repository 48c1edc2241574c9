#pragma once

#include <vector>

#include "fucik/spectrum.hpp"

namespace fucik {

/// One cosine bump restricted to [lo, hi]:  amplitude * cos(frequency * (x - center)).
struct Segment {
  double lo = 0.0;
  double hi = 0.0;
  double amplitude = 0.0;
  double frequency = 0.0;
  double center = 0.0;

  double value(double x) const;
  double derivative(double x) const;
  double second_derivative(double x) const;
};

/// Normalized eigenfunction of -u'' = alpha u+ - beta u- with Neumann
/// conditions on [0, pi], sup norm 1 and f(0) > 0. Piecewise cosine with
/// bump centers at k pi / n; evaluation outside [0, pi] uses the even
/// 2 pi-periodic extension by argument reduction. Immutable and reentrant.
class Eigenfunction {
 public:
  static Eigenfunction build(const FucikPoint& p);

  double operator()(double x) const;
  double derivative(double x) const;
  double second_derivative(double x) const;

  const FucikPoint& point() const { return point_; }
  /// Segment edges 0 = b_0 < b_1 < ... < b_s = pi (joints between bumps).
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<Segment>& segments() const { return segments_; }

 private:
  Eigenfunction() = default;

  const Segment& segment_at(double reduced) const;

  FucikPoint point_;
  std::vector<double> breakpoints_;
  std::vector<Segment> segments_;
};

/// Max over a joint-avoiding grid of |-f'' - alpha f+ + beta f-| using the
/// analytic second derivative of the active segment. Grid nodes sit at
/// (i + 1/2) pi / grid_size; the second derivative jumps at the joints, so
/// nodes never coincide with them.
double ode_residual(const Eigenfunction& e, int grid_size);

/// Max grid deviation of f_{alpha,beta}(x) + f_{beta,alpha}(x - pi/n)
/// (valid for every n >= 1).
double symmetry_shift_deviation(const FucikPoint& p, int grid_size);

/// Max grid deviation of f_{alpha,beta}(x) + f_{beta,alpha}(pi - x)
/// (valid for odd n only; DomainError otherwise).
double symmetry_reflection_deviation(const FucikPoint& p, int grid_size);

/// Max deviation over every identity applicable to p.n.
double symmetry_check(const FucikPoint& p, int grid_size);

}  // namespace fucik
