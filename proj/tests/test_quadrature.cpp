#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "fucik/eigenfunction.hpp"
#include "fucik/errors.hpp"
#include "fucik/quadrature.hpp"
#include "fucik/spectrum.hpp"

using namespace fucik;

namespace {

constexpr double kPi = std::numbers::pi;

// Closed-sum check helper for sum_{k=0}^{n-1} cos(a + k d).
double cosine_progression(double a, double d, int n) {
  double s = 0.0;
  for (int k = 0; k < n; ++k) s += std::cos(a + k * d);
  return s;
}

}  // namespace

TEST_CASE("Gauss-Legendre rule integrates polynomials exactly") {
  const auto& [x, w] = gauss_legendre(8);
  REQUIRE(x.size() == 8);
  double mass = 0.0, quartic = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    mass += w[i];
    quartic += w[i] * std::pow(x[i], 14);
  }
  CHECK(mass == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(quartic == doctest::Approx(2.0 / 15.0).epsilon(1e-14));  // order 8 exact through degree 15
}

TEST_CASE("smooth trig integrals hit machine precision") {
  const auto r = integrate([](double x) { return std::cos(2.0 * x) * std::cos(2.0 * x); }, {}, 0.0, kPi);
  CHECK(std::abs(r.value - kPi / 2.0) <= 1e-12);
  CHECK(r.est_error <= 1e-12);

  // cos(sqrt(delta)(x - x0)) cos(nx) with delta = 4, n = 3, x0 = pi/4 has the
  // antiderivative n/(n^2-delta) cos(.)sin(nx) - sqrt(delta)/(n^2-delta) sin(.)cos(nx);
  // evaluated at the endpoints it gives -4/5.
  const auto r2 = integrate(
      [](double x) { return std::cos(2.0 * (x - kPi / 4.0)) * std::cos(3.0 * x); }, {}, 0.0, kPi);
  CHECK(std::abs(r2.value - (-0.8)) <= 1e-12);
}

TEST_CASE("cosine progression closed form") {
  const double a = 0.3, d = 0.7;
  const int n = 5;
  const double closed = std::sin(n * d / 2.0) / std::sin(d / 2.0) * std::cos(a + (n - 1) * d / 2.0);
  CHECK(std::abs(cosine_progression(a, d, n) - closed) <= 1e-14);

  // sin(d/2) = 0 degenerates to n cos(a)
  CHECK(std::abs(cosine_progression(0.4, 2.0 * kPi, 7) - 7.0 * std::cos(0.4)) <= 1e-13);
}

TEST_CASE("segment awareness is mandatory for kinked integrands") {
  // Joints at irrational fractions of pi, so dyadic refinement never lands
  // on them.
  const Eigenfunction f = Eigenfunction::build(point_from_alpha(3, 144.0));
  auto integrand = [&](double x) { return f(x) * std::cos(7.0 * x); };

  QuadratureSpec tight;
  tight.max_refinements = 6;
  const auto with = integrate(integrand, f.breakpoints(), 0.0, kPi, tight);
  CHECK(with.est_error <= 1e-12);

  // Same budget without the joint locations stalls around 1e-11 per level.
  CHECK_THROWS_AS(integrate(integrand, {}, 0.0, kPi, tight), QuadratureNonConvergence);
}

TEST_CASE("interval and tolerance validation") {
  CHECK(integrate([](double) { return 1.0; }, {}, 1.0, 1.0).value == 0.0);
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, {}, 1.0, 0.0), DomainError);
  QuadratureSpec bad;
  bad.abs_tol = 0.0;
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, {}, 0.0, 1.0, bad), DomainError);
}
