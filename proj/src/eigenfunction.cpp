#include "fucik/eigenfunction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fucik/errors.hpp"

namespace fucik {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Even 2 pi-periodic reduction into [0, pi]; *sign tracks the derivative's
// orientation flip under reflection.
double reduce(double x, double* sign = nullptr) {
  double y = std::fmod(x, kTwoPi);
  if (y < 0.0) y += kTwoPi;
  double s = 1.0;
  if (y > kPi) {
    y = kTwoPi - y;
    s = -1.0;
  }
  if (sign) *sign = s;
  return y;
}

}  // namespace

double Segment::value(double x) const { return amplitude * std::cos(frequency * (x - center)); }

double Segment::derivative(double x) const {
  return -amplitude * frequency * std::sin(frequency * (x - center));
}

double Segment::second_derivative(double x) const { return -frequency * frequency * value(x); }

Eigenfunction Eigenfunction::build(const FucikPoint& p) {
  Eigenfunction e;
  e.point_ = p;

  if (p.n == 0) {
    e.segments_.push_back(Segment{0.0, kPi, std::numbers::sqrt2 / 2.0, 0.0, 0.0});
    e.breakpoints_ = {0.0, kPi};
    return e;
  }

  const double sa = std::sqrt(p.alpha);
  const double sb = std::sqrt(p.beta);
  const bool alpha_dom = p.branch == Branch::AlphaDominant;
  const double amp_pos = alpha_dom ? sb / sa : 1.0;
  const double amp_neg = alpha_dom ? -1.0 : -sa / sb;
  const double half1 = p.l1 / 2.0;
  const double half2 = p.l2 / 2.0;

  // Bump j is centered at j pi / n; even j carry frequency sqrt(alpha) and
  // the positive amplitude, odd j the negative one. The first and last bumps
  // contribute half widths only. The last center is pinned to pi exactly so
  // that the Neumann derivative there vanishes identically.
  e.segments_.reserve(static_cast<size_t>(p.n) + 1);
  e.breakpoints_.reserve(static_cast<size_t>(p.n) + 2);
  e.breakpoints_.push_back(0.0);
  double lo = 0.0;
  for (int j = 0; j <= p.n; ++j) {
    const bool even = j % 2 == 0;
    const double center = j == p.n ? kPi : j * kPi / p.n;
    const double hi = j == p.n ? kPi : std::min(center + (even ? half1 : half2), kPi);
    e.segments_.push_back(Segment{lo, hi, even ? amp_pos : amp_neg, even ? sa : sb, center});
    e.breakpoints_.push_back(hi);
    lo = hi;
  }
  return e;
}

const Segment& Eigenfunction::segment_at(double reduced) const {
  auto it = std::lower_bound(segments_.begin(), segments_.end(), reduced,
                             [](const Segment& s, double v) { return s.hi < v; });
  if (it == segments_.end()) --it;
  return *it;
}

double Eigenfunction::operator()(double x) const {
  const double y = reduce(x);
  return segment_at(y).value(y);
}

double Eigenfunction::derivative(double x) const {
  double sign;
  const double y = reduce(x, &sign);
  return sign * segment_at(y).derivative(y);
}

double Eigenfunction::second_derivative(double x) const {
  const double y = reduce(x);
  return segment_at(y).second_derivative(y);
}

double ode_residual(const Eigenfunction& e, int grid_size) {
  if (grid_size < 1) throw DomainError("grid_size must be positive");
  const FucikPoint& p = e.point();
  double worst = 0.0;
  for (int i = 0; i < grid_size; ++i) {
    const double x = (i + 0.5) * kPi / grid_size;
    const double v = e(x);
    const double r = -e.second_derivative(x) - p.alpha * std::max(v, 0.0) + p.beta * std::max(-v, 0.0);
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

double symmetry_shift_deviation(const FucikPoint& p, int grid_size) {
  if (p.n < 1) throw DomainError("symmetry identities require n >= 1");
  if (grid_size < 1) throw DomainError("grid_size must be positive");
  const Eigenfunction f = Eigenfunction::build(p);
  const Eigenfunction g = Eigenfunction::build(point_from_alpha(p.n, p.beta));
  const double shift = kPi / p.n;
  double worst = 0.0;
  for (int i = 0; i < grid_size; ++i) {
    const double x = (i + 0.5) * kPi / grid_size;
    worst = std::max(worst, std::abs(f(x) + g(x - shift)));
  }
  return worst;
}

double symmetry_reflection_deviation(const FucikPoint& p, int grid_size) {
  if (p.n < 1) throw DomainError("symmetry identities require n >= 1");
  if (p.n % 2 == 0) throw DomainError("reflection identity holds for odd n only");
  if (grid_size < 1) throw DomainError("grid_size must be positive");
  const Eigenfunction f = Eigenfunction::build(p);
  const Eigenfunction g = Eigenfunction::build(point_from_alpha(p.n, p.beta));
  double worst = 0.0;
  for (int i = 0; i < grid_size; ++i) {
    const double x = (i + 0.5) * kPi / grid_size;
    worst = std::max(worst, std::abs(f(x) + g(kPi - x)));
  }
  return worst;
}

double symmetry_check(const FucikPoint& p, int grid_size) {
  double worst = symmetry_shift_deviation(p, grid_size);
  if (p.n % 2 == 1) worst = std::max(worst, symmetry_reflection_deviation(p, grid_size));
  return worst;
}

}  // namespace fucik
