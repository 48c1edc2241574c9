#include "fucik/analytic_products.hpp"

#include <cmath>
#include <numbers>

#include "fucik/eigenfunction.hpp"
#include "fucik/errors.hpp"

namespace fucik {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kResonanceWindow = 1e-9;  // relative, matches the 0/0 structure of the generic forms

double sq(double v) { return v * v; }

double parity_sign(long q) { return q % 2 == 0 ? 1.0 : -1.0; }

// sqrt of the branch-dominant parameter.
double dominant_root(const FucikPoint& p) {
  return std::sqrt(p.branch == Branch::BetaDominant ? p.beta : p.alpha);
}

}  // namespace

std::string_view to_string(ProductCase c) {
  switch (c) {
    case ProductCase::Trivial0: return "Trivial0";
    case ProductCase::DivisibleGeneric: return "DivisibleGeneric";
    case ProductCase::DivisibleResonantAlpha: return "DivisibleResonantAlpha";
    case ProductCase::DivisibleResonantBeta: return "DivisibleResonantBeta";
    case ProductCase::NonDivisible: return "NonDivisible";
    case ProductCase::Diagonal: return "Diagonal";
  }
  return "?";
}

double cosine_mode(int m, double x) {
  if (m < 0) throw DomainError("mode index must be nonnegative");
  return m == 0 ? kSqrt2 / 2.0 : std::cos(m * x);
}

double cos_over_gap(double n, double s) {
  // cos(n pi / (2 s)) = sin(w) with w = (pi/2)(s - n)/s, so the quotient is
  // (pi / (2 s)) * sinc(w); the series kicks in where the direct quotient
  // would cancel catastrophically.
  const double t = s - n;
  if (std::abs(t) < 1e-5) {
    const double w = kPi / 2.0 * t / s;
    const double w2 = w * w;
    const double sinc =
        1.0 - w2 / 6.0 + w2 * w2 / 120.0 - w2 * w2 * w2 / 5040.0 + w2 * w2 * w2 * w2 / 362880.0;
    return kPi / (2.0 * s) * sinc;
  }
  return std::cos(n * kPi / (2.0 * s)) / t;
}

double inner_with_self_mode(const FucikPoint& p) {
  if (p.n < 1) throw DomainError("self-mode product requires n >= 1");
  const double n = p.n;
  const double s = dominant_root(p);
  return 4.0 * sq(sq(s)) / ((2.0 * s - n) * (3.0 * s - n) * (s + n)) * cos_over_gap(n, s);
}

ScalarProduct inner_with_cos(const FucikPoint& p, int m) {
  if (m < 0) throw DomainError("mode index must be nonnegative");
  if (p.n == 0) return {ProductCase::Trivial0, m == 0 ? kPi / 2.0 : 0.0};

  const double n = p.n;
  if (m == 0) {
    const double sa = std::sqrt(p.alpha);
    const double v = p.branch == Branch::AlphaDominant
                         ? -2.0 * kSqrt2 * (sa - n) / (2.0 * sa - n)
                         : -2.0 * kSqrt2 * (sa - n) / n;
    return {ProductCase::Trivial0, v};
  }
  if (m % p.n != 0) return {ProductCase::NonDivisible, 0.0};
  if (m == p.n) {
    const ProductCase tag = p.is_diagonal() ? ProductCase::Diagonal : ProductCase::DivisibleGeneric;
    return {tag, inner_with_self_mode(p)};
  }

  const long q = m / p.n;  // q >= 2 here
  const double m2 = static_cast<double>(m) * m;
  if (p.branch == Branch::AlphaDominant) {
    if (std::abs(p.alpha - m2) <= kResonanceWindow * m2)
      return {ProductCase::DivisibleResonantAlpha, kPi * n * n / (4.0 * m * (2.0 * m - n))};
    const double v = parity_sign(q) * (p.beta - p.alpha) * std::sqrt(p.beta) * n /
                     ((m2 - p.alpha) * (m2 - p.beta)) * std::cos(m * p.l2 / 2.0);
    return {ProductCase::DivisibleGeneric, v};
  }
  if (std::abs(p.beta - m2) <= kResonanceWindow * m2) {
    // The resonant limit of the generic expression carries the parity of m/n.
    return {ProductCase::DivisibleResonantBeta,
            parity_sign(q + 1) * kPi * n * n / (4.0 * m * (2.0 * m - n))};
  }
  const double v = (p.beta - p.alpha) * std::sqrt(p.alpha) * n /
                   ((m2 - p.alpha) * (m2 - p.beta)) * std::cos(m * p.l1 / 2.0);
  return {ProductCase::DivisibleGeneric, v};
}

double norm_squared(const FucikPoint& p) {
  if (p.n == 0) return kPi / 2.0;
  const double n = p.n;
  const double s = dominant_root(p);
  return kPi / 2.0 - kPi * n * (s - n) / sq(2.0 * s - n);
}

double distance_squared_to_cos(const FucikPoint& p) {
  if (p.n < 1) throw DomainError("distance to phi_n requires n >= 1");
  const double n = p.n;
  const double s = dominant_root(p);
  return kPi - kPi * n * (s - n) / sq(2.0 * s - n) -
         8.0 * sq(sq(s)) / ((2.0 * s - n) * (3.0 * s - n) * (s + n)) * cos_over_gap(n, s);
}

DistanceBounds distance_bounds(const FucikPoint& p) {
  if (p.n < 1) throw DomainError("distance bounds require n >= 1");
  const double n = p.n;
  const double s = dominant_root(p);
  DistanceBounds b;
  b.lower = kPi * (4.0 * s * s + 5.0 * s * n - 2.0 * n * n) * sq(s - n) /
            ((s + n) * sq(2.0 * s - n) * (3.0 * s - n));
  b.upper = (12.0 + kPi * kPi) * kPi / 9.0 * sq(s - n) / (n * n);
  return b;
}

double inner_quadrature(const FucikPoint& p, int m, const QuadratureSpec& spec) {
  if (m < 0) throw DomainError("mode index must be nonnegative");
  const Eigenfunction e = Eigenfunction::build(p);
  return integrate([&](double x) { return e(x) * cosine_mode(m, x); }, e.breakpoints(), 0.0, kPi,
                   spec)
      .value;
}

double inner_oracle_delta(const FucikPoint& p, int m, const QuadratureSpec& spec) {
  return std::abs(inner_with_cos(p, m).value - inner_quadrature(p, m, spec));
}

}  // namespace fucik
