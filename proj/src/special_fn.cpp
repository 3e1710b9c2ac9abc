#include "spart/special_fn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include "spart/error.hpp"

namespace spart {

namespace {

constexpr double kPi = std::numbers::pi;

// Godfrey's coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos{
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// ln Gamma(z) for Re z >= 1/2. Not the principal branch; only exp() of it is used.
Complex log_gamma_right(Complex z) {
  z -= 1.0;
  Complex series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    series += kLanczos[i] / (z + static_cast<double>(i));
  }
  const Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

Complex log_gamma(Complex z) {
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
    return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma_right(1.0 - z);
  }
  return log_gamma_right(z);
}

// Neumaier-compensated accumulator.
template <class T>
class CompensatedSum {
 public:
  void add(T x) {
    const T t = sum_ + x;
    compensation_ += compensate(sum_, x, t);
    sum_ = t;
  }
  T value() const { return sum_ + compensation_; }

 private:
  static double compensate(double s, double x, double t) {
    return std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
  }
  static Complex compensate(Complex s, Complex x, Complex t) {
    return {compensate(s.real(), x.real(), t.real()), compensate(s.imag(), x.imag(), t.imag())};
  }

  T sum_{};
  T compensation_{};
};

constexpr std::size_t kMaxCorrections = 30;

// Akiyama-Tanigawa over exact rationals, then B_{2k}/(2k)! rounded once.
std::vector<double> compute_bernoulli_ratios() {
  const std::size_t top = 2 * kMaxCorrections;
  std::vector<mpq_class> row(top + 1);
  std::vector<mpq_class> bernoulli(top + 1);
  for (std::size_t m = 0; m <= top; ++m) {
    row[m] = mpq_class(1, m + 1);
    for (std::size_t j = m; j >= 1; --j) {
      row[j - 1] = j * (row[j - 1] - row[j]);
      row[j - 1].canonicalize();
    }
    bernoulli[m] = row[0];
  }
  std::vector<double> ratios(kMaxCorrections + 1, 0.0);
  mpz_class factorial = 1;
  for (std::size_t n = 1; n <= top; ++n) {
    factorial *= static_cast<unsigned long>(n);
    if (n % 2 == 0) {
      mpq_class ratio = bernoulli[n] / mpq_class(factorial);
      ratio.canonicalize();
      ratios[n / 2] = ratio.get_d();
    }
  }
  return ratios;
}

void silence_gsl() {
  static std::once_flag once;
  std::call_once(once, [] { gsl_set_error_handler_off(); });
}

struct CountingIntegrand {
  const Integrand* f;
  std::size_t evaluations = 0;

  static double call(double x, void* self) {
    auto* me = static_cast<CountingIntegrand*>(self);
    ++me->evaluations;
    return (*me->f)(x);
  }
};

constexpr std::size_t kWorkspaceIntervals = 2000;

class Workspace {
 public:
  Workspace() : ws_(gsl_integration_workspace_alloc(kWorkspaceIntervals)) {
    if (ws_ == nullptr) throw ResourceError("cannot allocate quadrature workspace");
  }
  ~Workspace() { gsl_integration_workspace_free(ws_); }
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;
  gsl_integration_workspace* get() { return ws_; }

 private:
  gsl_integration_workspace* ws_;
};

}  // namespace

Complex gamma_complex(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("gamma_complex: non-finite argument");
  }
  if (std::abs(z.imag()) > kGammaImagBand) {
    throw DomainError("gamma_complex: |Im z| exceeds " + std::to_string(kGammaImagBand));
  }
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw PoleError("gamma_complex: pole at non-positive integer " + std::to_string(z.real()));
  }
  const Complex value = std::exp(log_gamma(z));
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw DomainError("gamma_complex: result overflows binary64");
  }
  // Real axis: drop the rounding-level phase left by the complex logs.
  if (z.imag() == 0.0) {
    const double sign = (z.real() > 0.0 || static_cast<long long>(std::floor(z.real())) % 2 == 0)
                            ? 1.0
                            : -1.0;
    return {sign * std::abs(value), 0.0};
  }
  return value;
}

double bernoulli_over_factorial(std::size_t k) {
  static const std::vector<double> ratios = compute_bernoulli_ratios();
  if (k == 0 || k > kMaxCorrections) {
    throw DomainError("bernoulli_over_factorial: k out of range 1..30");
  }
  return ratios[k];
}

Complex zeta_euler_maclaurin(Complex s, std::size_t direct_terms, std::size_t corrections) {
  if (direct_terms < 2) {
    throw DomainError("zeta_euler_maclaurin: need at least 2 direct terms");
  }
  if (corrections > kMaxCorrections) {
    throw DomainError("zeta_euler_maclaurin: at most 30 corrections");
  }
  const double cut = static_cast<double>(direct_terms);

  CompensatedSum<Complex> sum;
  for (std::size_t n = direct_terms - 1; n >= 1; --n) {
    sum.add(std::exp(-s * std::log(static_cast<double>(n))));
  }
  const Complex cut_pow = std::exp(-s * std::log(cut));  // N^{-s}
  sum.add(cut_pow * cut / (s - 1.0));
  sum.add(0.5 * cut_pow);

  // term_k = B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
  Complex rising = s * cut_pow / cut;
  for (std::size_t k = 1; k <= corrections; ++k) {
    sum.add(bernoulli_over_factorial(k) * rising);
    const double j = static_cast<double>(2 * k);
    rising *= (s + (j - 1.0)) * (s + j) / (cut * cut);
  }
  return sum.value();
}

Complex zeta_complex(Complex s) {
  if (s == Complex(1.0, 0.0)) {
    throw PoleError("zeta_complex: pole at s = 1");
  }
  if (!(s.real() >= kZetaMinReal) || !(std::abs(s.imag()) <= kZetaImagBand)) {
    throw DomainError("zeta_complex: argument outside Re s >= 0.6, |Im s| <= 1e5");
  }
  // With N >= |s| + 20 each correction shrinks by at least (2 pi)^2 / 4.
  const auto direct = static_cast<std::size_t>(std::ceil(std::abs(s))) + 20;
  const Complex value = zeta_euler_maclaurin(s, direct, 12);
  if (s.imag() == 0.0) return {value.real(), 0.0};
  return value;
}

QuadratureResult integrate_adaptive(const Integrand& f, double a, double b, double tol,
                                    std::span<const double> breakpoints) {
  if (!(tol > 0.0)) {
    throw DomainError("integrate_adaptive: tolerance must be positive");
  }
  if (!(a <= b) || !std::isfinite(a)) {
    throw DomainError("integrate_adaptive: need finite a <= b");
  }
  silence_gsl();

  const bool infinite = std::isinf(b);
  std::vector<double> points{a};
  for (const double p : breakpoints) {
    if (p > a && p < b) points.push_back(p);
  }
  std::sort(points.begin() + 1, points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  CountingIntegrand counting{&f};
  gsl_function fn{&CountingIntegrand::call, &counting};
  Workspace workspace;
  QuadratureResult result;
  int status = GSL_SUCCESS;

  // With an infinite upper limit the budget is split between the finite
  // stretch and the transformed tail.
  const double piece_tol = infinite ? tol / 2 : tol;
  const double last_finite = points.back();
  if (!infinite) points.push_back(b);

  if (points.size() >= 2 && points.back() > points.front()) {
    double value = 0.0;
    double error = 0.0;
    status = gsl_integration_qagp(&fn, points.data(), points.size(), piece_tol, 0.0,
                                  kWorkspaceIntervals, workspace.get(), &value, &error);
    result.value += value;
    result.error_estimate += error;
  }
  if (infinite && status == GSL_SUCCESS) {
    double value = 0.0;
    double error = 0.0;
    status = gsl_integration_qagiu(&fn, last_finite, piece_tol, 0.0, kWorkspaceIntervals,
                                   workspace.get(), &value, &error);
    result.value += value;
    result.error_estimate += error;
  }
  result.evaluations = counting.evaluations;

  if (status != GSL_SUCCESS || !std::isfinite(result.value)) {
    throw AccuracyError(std::string("integral (") + gsl_strerror(status) + ")", result.value,
                        result.error_estimate);
  }
  return result;
}

}  // namespace spart
