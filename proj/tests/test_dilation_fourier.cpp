#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "fucik/analytic_products.hpp"
#include "fucik/dilation_fourier.hpp"
#include "fucik/errors.hpp"
#include "fucik/quadrature.hpp"

using namespace fucik;

namespace {

constexpr double kPi = std::numbers::pi;

double generator_quadrature_coefficient(const FucikPoint& gamma1_point, int k) {
  const ZeroMeanProjection h = project_zero_mean(gamma1_point);
  return 2.0 / kPi *
         integrate([&](double x) { return h(x) * std::cos(k * x); }, h.breakpoints(), 0.0, kPi)
             .value;
}

}  // namespace

TEST_CASE("zero-mean projection") {
  const ZeroMeanProjection diag = project_zero_mean(point_from_alpha(3, 9.0));
  CHECK(diag.mean_term == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(diag(0.4) == doctest::Approx(std::cos(3 * 0.4)).epsilon(1e-14));

  const ZeroMeanProjection g = project_zero_mean(point_from_alpha(1, 4.0));
  CHECK(g.mean_term == doctest::Approx(-4.0 / (3.0 * kPi)).epsilon(1e-14));

  for (double gamma : {1.1, 4.0, 9.0}) {
    const ZeroMeanProjection z = project_zero_mean(point_from_dilation(2, gamma, Branch::BetaDominant));
    const double mean = integrate([&](double x) { return z(x); }, z.breakpoints(), 0.0, kPi).value;
    CHECK(std::abs(mean) <= 1e-10);
  }
  CHECK_THROWS_AS(project_zero_mean(trivial_point()), DomainError);
}

TEST_CASE("dilation isometries") {
  auto h = [](double x) { return std::cos(x); };
  CHECK(dilate(h, 3, kPi / 6.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(dilate(h, 3, 0.5) == doctest::Approx(std::cos(1.5)).epsilon(1e-14));
  CHECK(dilate(h, 1, 0.77) == doctest::Approx(h(0.77)).epsilon(1e-15));

  // isometry on a genuinely kinked zero-mean element
  const ZeroMeanProjection g = project_zero_mean(point_from_alpha(1, 4.0));
  const double base =
      integrate([&](double x) { return g(x) * g(x); }, g.breakpoints(), 0.0, kPi).value;
  for (int k : {2, 3, 5}) {
    const auto brk = dilated_breakpoints(g.breakpoints(), k);
    const double dil = integrate([&](double x) { double v = dilate([&](double y) { return g(y); }, k, x); return v * v; },
                                 brk, 0.0, kPi)
                           .value;
    CHECK(std::abs(dil - base) <= 1e-9);
  }
}

TEST_CASE("generator Fourier coefficients") {
  CHECK(fourier_coefficient(1.0, 1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(fourier_coefficient(1.0, 2) == 0.0);
  CHECK(fourier_coefficient(4.0, 2) == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
  CHECK(fourier_coefficient(4.0, 3) ==
        doctest::Approx(generator_quadrature_coefficient(point_from_alpha(1, 4.0), 3)).epsilon(1e-10));

  // quadrature agreement across the grid, resonances approached exactly
  for (double gamma : {1.1, 2.0, 4.0, 9.0, 25.0}) {
    const FucikPoint p1 = point_from_alpha(1, gamma);
    for (int k = 1; k <= 8; ++k) {
      CAPTURE(gamma);
      CAPTURE(k);
      CHECK(std::abs(fourier_coefficient(gamma, k) - generator_quadrature_coefficient(p1, k)) <=
            1e-10);
    }
  }
  CHECK_THROWS_AS(fourier_coefficient(0.5, 1), DomainError);
}

TEST_CASE("beta-branch rows carry the alternating sign") {
  const FucikPoint p = point_from_dilation(1, 4.0, Branch::BetaDominant);
  const FourierRow row = fourier_row(p, 6);
  const ZeroMeanProjection h = project_zero_mean(p);  // n = 1: the generator itself
  for (int k = 1; k <= 6; ++k) {
    const double quad =
        2.0 / kPi *
        integrate([&](double x) { return h(x) * std::cos(k * x); }, h.breakpoints(), 0.0, kPi)
            .value;
    CHECK(row.coefficients[static_cast<size_t>(k) - 1] == doctest::Approx(quad).epsilon(1e-9));
  }
}

TEST_CASE("coefficient caps") {
  CHECK(perturbation_bound(1) == doctest::Approx((12.0 + kPi * kPi) / 36.0).epsilon(1e-15));
  CHECK(perturbation_bound(2) == doctest::Approx(2.0 / 15.0).epsilon(1e-15));
  CHECK(perturbation_bound(10) == doctest::Approx(2.0 / 399.0).epsilon(1e-15));

  for (double gamma : {1.0, 1.1, 2.0, 4.0, 9.0, 25.0, 100.0}) {
    for (Branch b : {Branch::AlphaDominant, Branch::BetaDominant}) {
      if (gamma == 1.0 && b == Branch::BetaDominant) continue;
      const FourierRow row = fourier_row(point_from_dilation(3, gamma, b), 40);
      CHECK(std::abs(row.coefficients[0] - 1.0) <= row.c_bounds[0]);
      CHECK(row.coefficients[0] <= 1.0);  // A_1 never exceeds 1 on the tested grid
      for (int k = 2; k <= 40; ++k)
        CHECK(std::abs(row.coefficients[static_cast<size_t>(k) - 1]) <=
              row.c_bounds[static_cast<size_t>(k) - 1]);
    }
  }
}

TEST_CASE("truncated Parseval approaches ||g||^2 from below") {
  const FucikPoint p = point_from_dilation(2, 4.0, Branch::AlphaDominant);
  const double mean = inner_with_cos(p, 0).value;
  const double target = norm_squared(p) - 2.0 / kPi * mean * mean;
  const FourierRow row = fourier_row(p, 400);
  double partial = 0.0;
  for (double a : row.coefficients) {
    partial += kPi / 2.0 * a * a;
    CHECK(partial <= target + 1e-12);
  }
  CHECK(target - partial <= 1e-5);  // tail of order sum_{k>400} c_k^2
}

TEST_CASE("representation by dilated cosines") {
  // g_n(x) = sum_k A_{n,k} cos(n k x); sampled residual at K=200 sits below
  // the cap tail.
  for (const FucikPoint& p : {point_from_dilation(2, 4.0, Branch::AlphaDominant),
                              point_from_dilation(3, 2.5, Branch::BetaDominant)}) {
    const int K = 200;
    const FourierRow row = fourier_row(p, K);
    const ZeroMeanProjection g = project_zero_mean(p);
    const double tail = 1.0 / (2.0 * K + 1.0);
    double worst = 0.0;
    for (int i = 0; i <= 500; ++i) {
      const double x = i * kPi / 500.0;
      double s = 0.0;
      for (int k = K; k >= 1; --k)
        s += row.coefficients[static_cast<size_t>(k) - 1] * std::cos(p.n * k * x);
      worst = std::max(worst, std::abs(g(x) - s));
    }
    CHECK(worst <= tail + 1e-8);
  }
}

TEST_CASE("certificate sum") {
  const CertificateSum c2 = certificate_sum(2);
  CHECK(c2.partial_sum == doctest::Approx((12.0 + kPi * kPi) / 36.0 + 2.0 / 15.0).epsilon(1e-15));
  CHECK(c2.tail_bound == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(c2.less_than_one);

  const CertificateSum big = certificate_sum(10000);
  CHECK(std::abs(big.total - 0.9408223) <= 1e-6);
  CHECK(std::abs(big.total - ((12.0 + kPi * kPi) / 36.0 + 1.0 / 3.0)) <= 1e-12);

  for (int k : {2, 3, 5, 17, 300}) CHECK(certificate_sum(k).less_than_one);
  CHECK_THROWS_AS(certificate_sum(1), DomainError);

  // telescoping: the exact tail equals the series remainder
  const int cutoff = 2000000;
  double rem = 1.0 / (2.0 * cutoff + 1.0);  // remainder past the cutoff, telescoped
  for (int k = 301; k <= cutoff; ++k) rem += 2.0 / (4.0 * static_cast<double>(k) * k - 1.0);
  CHECK(std::abs(certificate_sum(300).tail_bound - rem) <= 1e-12);
}

TEST_CASE("bound function monotonicity") {
  const std::vector<double> grid = {1.01, 1.1, 2.0, 10.0, 100.0, 1e4};
  CHECK(bound_monotonicity_check(2, grid));
  for (int k = 2; k <= 6; ++k) CHECK(bound_monotonicity_check(k, grid));

  // limits reinstate the dropped constants of the caps
  CHECK(bound_b1_limit() / 6.0 == doctest::Approx(perturbation_bound(1)).epsilon(1e-15));
  for (int k : {2, 3, 4}) CHECK(4.0 * bound_b2_limit(k) == doctest::Approx(perturbation_bound(k)).epsilon(1e-15));

  std::vector<double> bad = {0.9, 2.0};
  CHECK_THROWS_AS(bound_monotonicity_check(2, bad), DomainError);
}

TEST_CASE("the k=1 bound is governed by b1, not b2") {
  // b2(., 1) decreases from 1/4 toward its limit and is never used for the
  // caps; the check reports that honestly.
  const std::vector<double> grid = {1.001, 1.01, 1.1, 2.0, 10.0, 100.0, 1e4};
  CHECK(bound_b2(grid.front(), 1) > bound_b2(grid[3], 1));
  CHECK(bound_b2(grid.front(), 1) > bound_b2_limit(1));
  CHECK_FALSE(bound_monotonicity_check(1, grid));
  CHECK(bound_monotonicity_check(2, grid));
}

TEST_CASE("mean coefficient sum") {
  FucikSystem diag = FucikSystem::diagonal(20);
  CHECK(mean_coefficient_sum(diag, 20) == 0.0);

  FucikSystem single = FucikSystem::diagonal(20);
  single.set(point_from_dilation(1, 4.0, Branch::AlphaDominant));
  CHECK(mean_coefficient_sum(single, 20) == doctest::Approx(8.0 / 9.0).epsilon(1e-14));

  // term-by-term identity with the closed form over a mixed system
  FucikSystem mixed = FucikSystem::diagonal(20);
  for (int n = 1; n <= 20; ++n) {
    const double g = 1.0 + (n % 5) * 0.7;
    mixed.set(point_from_dilation(n, g, n % 2 == 0 ? Branch::BetaDominant : Branch::AlphaDominant));
  }
  for (int n = 1; n <= 20; ++n) {
    const double a = inner_with_cos(mixed.point(n), 0).value;
    CHECK(std::abs(a * a - mean_coefficient_term(mixed.point(n))) <= 1e-12);
  }
}
