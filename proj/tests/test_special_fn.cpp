#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>

#include "spart/error.hpp"
#include "spart/pennington.hpp"
#include "spart/special_fn.hpp"

using spart::Complex;
using std::numbers::ln2;
using std::numbers::pi;

namespace {

// Independent route to Gamma: shift to Re z >= 15, then Stirling's series.
Complex stirling_gamma(Complex z) {
  Complex shift_log = 0.0;
  while (z.real() < 15.0) {
    shift_log += std::log(z);
    z += 1.0;
  }
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  const Complex series =
      inv * (1.0 / 12 + inv2 * (-1.0 / 360 + inv2 * (1.0 / 1260 + inv2 * (-1.0 / 1680 + inv2 * (1.0 / 1188)))));
  const Complex log_gamma = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2 * pi) + series;
  return std::exp(log_gamma - shift_log);
}

double gamma_modulus_on_imaginary_axis(double t) {
  return std::sqrt(pi / (t * std::sinh(pi * t)));
}

double relative_error(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("gamma at real points") {
  CHECK(std::abs(spart::gamma_complex(1.0) - 1.0) < 1e-14);
  CHECK(std::abs(spart::gamma_complex(0.5).real() - std::sqrt(pi)) <= 1e-12);
  CHECK(std::abs(spart::gamma_complex(5.0).real() - 24.0) < 24.0 * 1e-14);
  CHECK(spart::gamma_complex(-0.5).real() == doctest::Approx(-2.0 * std::sqrt(pi)).epsilon(1e-13));
  CHECK(spart::gamma_complex(-1.5).real() == doctest::Approx(4.0 / 3.0 * std::sqrt(pi)).epsilon(1e-13));
}

TEST_CASE("gamma errors") {
  CHECK_THROWS_AS(spart::gamma_complex(0.0), spart::PoleError);
  CHECK_THROWS_AS(spart::gamma_complex(-3.0), spart::PoleError);
  CHECK_THROWS_AS(spart::gamma_complex(Complex(0.5, 200.5)), spart::DomainError);
  CHECK_NOTHROW(spart::gamma_complex(Complex(0.0, 200.0)));
}

TEST_CASE("gamma modulus on the imaginary axis") {
  const double t_w = 2 * pi / ln2;
  for (const double t : {1.0, 5.0, t_w, 20.0, 2 * t_w, 100.0, 16 * t_w, 199.0}) {
    CAPTURE(t);
    const double modulus = std::abs(spart::gamma_complex(Complex(0.0, t)));
    CHECK(std::abs(modulus - gamma_modulus_on_imaginary_axis(t)) <= 1e-10 * modulus);
  }
}

TEST_CASE("gamma matches an independent Stirling evaluation") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(-4.5, 12.0);
  std::uniform_real_distribution<double> im(-150.0, 150.0);
  for (int i = 0; i < 400; ++i) {
    const Complex z(re(rng), im(rng));
    CAPTURE(z);
    CHECK(relative_error(spart::gamma_complex(z), stirling_gamma(z)) <= 1e-12);
  }
}

TEST_CASE("gamma recurrence and conjugate symmetry") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> re(-3.0, 6.0);
  std::uniform_real_distribution<double> im(-60.0, 60.0);
  for (int i = 0; i < 200; ++i) {
    const Complex z(re(rng), im(rng));
    CAPTURE(z);
    const Complex g = spart::gamma_complex(z);
    CHECK(relative_error(spart::gamma_complex(z + 1.0), z * g) <= 1e-12);
    const Complex gc = spart::gamma_complex(std::conj(z));
    CHECK(std::abs(gc.real() - g.real()) <= 1e-13 * std::max(1.0, std::abs(g)));
    CHECK(std::abs(gc.imag() + g.imag()) <= 1e-13 * std::max(1.0, std::abs(g)));
  }
}

TEST_CASE("zeta at even integers") {
  CHECK(std::abs(spart::zeta_complex(2.0) - pi * pi / 6) <= 1e-10);
  CHECK(std::abs(spart::zeta_complex(4.0) - std::pow(pi, 4) / 90) <= 1e-10);
  CHECK(std::abs(spart::zeta_complex(6.0) - std::pow(pi, 6) / 945) <= 1e-12);
}

TEST_CASE("zeta on Re s = 1 converges under doubled truncation") {
  for (int nu = 1; nu <= 16; ++nu) {
    const Complex s(1.0, 2 * pi * nu / ln2);
    CAPTURE(nu);
    const Complex value = spart::zeta_complex(s);
    const auto direct = static_cast<std::size_t>(std::ceil(std::abs(s))) + 20;
    const Complex doubled = spart::zeta_euler_maclaurin(s, 2 * direct, 24);
    CHECK(std::abs(value - doubled) <= 1e-10);
  }
}

TEST_CASE("zeta elsewhere in the band") {
  // zeta(s) zeta(conj s) symmetry and a large-height point against doubled truncation
  for (const Complex s : {Complex(0.6, 3.0), Complex(0.75, -40.0), Complex(2.5, 1000.0), Complex(1.0, 5e4)}) {
    CAPTURE(s);
    const Complex z = spart::zeta_complex(s);
    const Complex zc = spart::zeta_complex(std::conj(s));
    CHECK(std::abs(zc.real() - z.real()) <= 1e-13);
    CHECK(std::abs(zc.imag() + z.imag()) <= 1e-13);
    const auto direct = static_cast<std::size_t>(std::ceil(std::abs(s))) + 20;
    CHECK(std::abs(z - spart::zeta_euler_maclaurin(s, 2 * direct, 24)) <= 1e-10);
  }
}

TEST_CASE("zeta errors") {
  CHECK_THROWS_AS(spart::zeta_complex(1.0), spart::PoleError);
  CHECK_THROWS_AS(spart::zeta_complex(Complex(0.5, 14.0)), spart::DomainError);
  CHECK_THROWS_AS(spart::zeta_complex(Complex(2.0, 2e5)), spart::DomainError);
}

TEST_CASE("bernoulli ratios") {
  CHECK(spart::bernoulli_over_factorial(1) == doctest::Approx(1.0 / 12).epsilon(1e-16));
  CHECK(spart::bernoulli_over_factorial(2) == doctest::Approx(-1.0 / 720).epsilon(1e-16));
  CHECK(spart::bernoulli_over_factorial(3) == doctest::Approx(1.0 / 30240).epsilon(1e-16));
  // B_{2k}/(2k)! = (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}
  for (std::size_t k = 2; k <= 30; ++k) {
    CAPTURE(k);
    const double zeta_2k = spart::zeta_complex(static_cast<double>(2 * k)).real();
    const double want = (k % 2 == 1 ? 2.0 : -2.0) * zeta_2k / std::pow(2 * pi, 2.0 * k);
    CHECK(spart::bernoulli_over_factorial(k) == doctest::Approx(want).epsilon(1e-13));
  }
  CHECK_THROWS_AS(spart::bernoulli_over_factorial(31), spart::DomainError);
}

TEST_CASE("quadrature catalogue") {
  const auto linear = spart::integrate_adaptive([](double t) { return t; }, 0.0, 1.0, 1e-12);
  CHECK(std::abs(linear.value - 0.5) <= 1e-12);
  CHECK(linear.evaluations > 0);

  const auto dilog = spart::integrate_adaptive([](double t) { return t == 0.0 ? 1.0 : std::log1p(t) / t; },
                                               0.0, 1.0, 1e-13);
  CHECK(std::abs(dilog.value - pi * pi / 12) <= 1e-10);
  CHECK(std::abs(dilog.value - pi * pi / 12) <= dilog.error_estimate + 1e-15);

  const auto middle = spart::integrate_adaptive([](double v) { return spart::sawtooth_f(v) / v; }, 1.0, 2.0, 1e-13);
  CHECK(std::abs(middle.value) <= 1e-10);
  CHECK(std::abs(middle.value) <= middle.error_estimate + 1e-15);

  const auto gauss = spart::integrate_adaptive([](double x) { return std::exp(-x * x); }, 0.0,
                                               std::numeric_limits<double>::infinity(), 1e-12);
  CHECK(std::abs(gauss.value - std::sqrt(pi) / 2) <= std::max(1e-12, gauss.error_estimate));
}

TEST_CASE("quadrature respects breakpoints") {
  // floor(x) on [0, 5]: exact with breakpoints at the jumps.
  const std::array<double, 4> jumps{1, 2, 3, 4};
  const auto r = spart::integrate_adaptive([](double x) { return std::floor(x); }, 0.0, 5.0, 1e-12, jumps);
  CHECK(std::abs(r.value - 10.0) <= 1e-12);
}

TEST_CASE("quadrature failures") {
  CHECK_THROWS_AS(spart::integrate_adaptive([](double) { return 1.0; }, 0.0, 1.0, 0.0), spart::DomainError);
  CHECK_THROWS_AS(spart::integrate_adaptive([](double) { return 1.0; }, 1.0, 0.0, 1e-6), spart::DomainError);
  // 1/sqrt-like blowup with a tolerance below rounding cannot be met.
  try {
    spart::integrate_adaptive([](double x) { return std::sin(1.0 / x) / x; }, 1e-9, 1.0, 1e-15);
    FAIL("expected AccuracyError");
  } catch (const spart::AccuracyError& e) {
    CHECK(std::isfinite(e.best_estimate()));
  }
}
