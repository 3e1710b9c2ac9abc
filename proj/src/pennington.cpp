#include "spart/pennington.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "spart/error.hpp"

namespace spart {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
constexpr double kMinConstantTol = 1e-10;

void require_tol(double tol, const char* what) {
  if (!(tol >= kMinConstantTol)) {
    throw DomainError(std::string(what) + ": tolerance must be >= 1e-10");
  }
}

// Constants are pure functions of tol; first computation wins.
template <class Compute>
Estimate memoized(std::map<double, Estimate>& cache, std::mutex& mutex, double tol,
                  Compute compute) {
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(tol); it != cache.end()) return it->second;
  }
  const Estimate fresh = compute();
  std::lock_guard lock(mutex);
  return cache.emplace(tol, fresh).first->second;
}

// log2(x) - floor(log2(x)) in [0, 1), exact zero at powers of two.
double log2_fraction(double x) {
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);  // [0.5, 1)
  return std::log2(2.0 * mantissa);
}

}  // namespace

double sawtooth_f(double x) {
  if (!(x >= 1.0)) {
    throw DomainError("sawtooth_f requires x >= 1");
  }
  if (std::isinf(x)) {
    throw DomainError("sawtooth_f requires finite x");
  }
  return 0.5 - log2_fraction(x);
}

double remainder_R(double u) {
  if (!(u >= 1.0)) {
    throw DomainError("remainder_R requires u >= 1");
  }
  return std::log1p(1.0 / u) / kLn2 + sawtooth_f(u + 1.0);
}

unsigned mersenne_part_count(std::uint64_t u) {
  // 2^k - 1 <= u  <=>  2^k <= u + 1
  if (u == UINT64_MAX) return 64;
  return static_cast<unsigned>(std::bit_width(u + 1) - 1);
}

Estimate alpha_slice(unsigned k, double tol) {
  if (k == 0) {
    throw DomainError("alpha_slice: octaves start at k = 1");
  }
  const double lo = std::ldexp(1.0, static_cast<int>(k));
  const double hi = 2.0 * lo;
  const double floor_value = static_cast<double>(k) + 0.5;
  // floor(log2 v) = k on the open octave, so the integrand is smooth here.
  const auto integrand = [floor_value](double v) {
    return (floor_value - std::log2(v)) / (v * (v - 1.0));
  };
  const QuadratureResult r = integrate_adaptive(integrand, lo, hi, tol);
  return {r.value, r.error_estimate};
}

unsigned alpha_octaves(double tol) {
  // tail bound 1 / (2 (2^K - 1)) < tol / 2
  unsigned octaves = 1;
  while (1.0 / (std::ldexp(1.0, static_cast<int>(octaves)) - 1.0) >= tol) ++octaves;
  return octaves;
}

Estimate alpha_constant(double tol) {
  require_tol(tol, "alpha_constant");
  static std::map<double, Estimate> cache;
  static std::mutex mutex;
  return memoized(cache, mutex, tol, [tol] {
    const unsigned octaves = alpha_octaves(tol);
    const double slice_tol = tol / (2.0 * octaves);
    Estimate sum;
    // Smallest slices first.
    for (unsigned k = octaves; k >= 1; --k) {
      Estimate slice;
      try {
        slice = alpha_slice(k, slice_tol);
      } catch (const AccuracyError& e) {
        throw AccuracyError("alpha (octave " + std::to_string(k) + ")", sum.value + e.best_estimate(),
                            sum.error + e.error_estimate());
      }
      sum.value += slice.value;
      sum.error += slice.error;
    }
    sum.error += 0.5 / (std::ldexp(1.0, static_cast<int>(octaves)) - 1.0);
    return sum;
  });
}

double c_closed_form() { return (kPi * kPi + kLn2 * kLn2) / (12.0 * kLn2); }

Estimate c_constant(double tol) {
  const Estimate alpha = alpha_constant(tol);
  return {c_closed_form() + alpha.value, alpha.error};
}

double tail_integrand(double v) {
  if (!(v >= 0.0)) {
    throw DomainError("tail_integrand requires v >= 0");
  }
  if (v == 0.0) return 0.5;
  double numerator = 0.0;
  if (v < 1.0) {
    // ln v - ln(1 - e^-v) = v/2 - ln(sinh(y)/y), y = v/2
    const double y = 0.5 * v;
    const double y2 = y * y;
    const double excess = y < 1e-2 ? y2 / 6.0 * (1.0 + y2 / 20.0 * (1.0 + y2 / 42.0))
                                   : std::sinh(y) / y - 1.0;
    numerator = y - std::log1p(excess);
  } else {
    numerator = std::log(v) - std::log1p(-std::exp(-v));
  }
  return numerator / std::expm1(v);
}

double tail_cutoff(double bound) {
  const auto tail_bound = [](double t) {
    const double decay = std::exp(-t);
    return (std::log(t) + 1.0) * decay * (1.0 + 2.0 * decay);
  };
  double cutoff = 1.0;
  while (tail_bound(cutoff) >= bound) cutoff += 0.5;
  return cutoff;
}

Estimate tail_integral_I(double tol) {
  require_tol(tol, "tail_integral_I");
  static std::map<double, Estimate> cache;
  static std::mutex mutex;
  return memoized(cache, mutex, tol, [tol] {
    const double cutoff = tail_cutoff(tol / 2.0);
    const std::array<double, 3> splits{1.0, 4.0, 12.0};
    QuadratureResult body;
    try {
      body = integrate_adaptive(tail_integrand, 0.0, cutoff, tol / 2.0, splits);
    } catch (const AccuracyError& e) {
      throw AccuracyError("tail integral I", e.best_estimate(), e.error_estimate());
    }
    const double decay = std::exp(-cutoff);
    const double tail = (std::log(cutoff) + 1.0) * decay * (1.0 + 2.0 * decay);
    return Estimate{body.value, body.error_estimate + tail};
  });
}

Estimate H_constant(double tol) {
  const Estimate c = c_constant(tol);
  const Estimate tail = tail_integral_I(tol);
  const double h = c.value + tail.value / kLn2;

  // General form with lambda1 = 1, b = -1/2, a = 1/ln 2.
  const double a = 1.0 / kLn2;
  const double b = -0.5;
  const double ln_lambda1 = std::log(1.0);
  const double general = c.value - b * ln_lambda1 - 0.5 * a * ln_lambda1 * ln_lambda1 + a * tail.value;
  if (std::abs(general - h) > 1e-12) {
    throw Error("H_constant: general form disagrees at lambda1 = 1");
  }
  return {h, c.error + tail.error / kLn2};
}

double eq4_series(double u, int nu_max) {
  if (!(u >= 1.0) || std::isinf(u)) {
    throw DomainError("eq4_series requires finite u >= 1");
  }
  if (nu_max < 1) {
    throw DomainError("eq4_series requires nu_max >= 1");
  }
  const double phase = 2.0 * kPi * log2_fraction(u);
  double sum = 0.0;
  for (int nu = nu_max; nu >= 1; --nu) {
    const double n = nu;
    sum += std::cos(phase * n) / (n * n);
  }
  return kLn2 / 12.0 - kLn2 / (2.0 * kPi * kPi) * sum;
}

double sawtooth_fourier_coefficient(long nu) {
  if (nu == 0) return 0.0;
  const double n = static_cast<double>(nu);
  return -kLn2 / (4.0 * kPi * kPi * n * n);
}

Complex w_oscillation_complex(double z, double rho, const FourierCoefficients& coefficients,
                              int nu_max) {
  if (!(rho > 0.0)) {
    throw DomainError("w_oscillation: rho must be positive");
  }
  if (nu_max < 1) {
    throw DomainError("w_oscillation: nu_max must be >= 1");
  }
  if (!coefficients) return {0.0, 0.0};

  Complex sum{0.0, 0.0};
  for (long nu = nu_max; nu >= 1; --nu) {
    const double frequency = 2.0 * kPi * static_cast<double>(nu) / rho;
    // |Gamma(it)| < e^{-pi t / 2}: beyond the gamma band a term is below 1e-130.
    if (frequency > kGammaImagBand) continue;
    for (const long signed_nu : {nu, -nu}) {
      const double t = signed_nu > 0 ? frequency : -frequency;
      const Complex it{0.0, t};
      const Complex term = -(t * t) * gamma_complex(it) * zeta_complex(1.0 + it) *
                           coefficients(signed_nu) * std::exp(it * z);
      sum += term;
    }
  }
  return sum;
}

double w_oscillation(double z, double rho, const FourierCoefficients& coefficients, int nu_max) {
  return w_oscillation_complex(z, rho, coefficients, nu_max).real();
}

double w_oscillation(double z, int nu_max) {
  return w_oscillation(z, kLn2, sawtooth_fourier_coefficient, nu_max);
}

void AsymptoticParams::validate() const {
  if (!(a > 0.0) || !(rho > 0.0) || !(lambda1 > 0.0) || !(h > 0.0)) {
    throw DomainError("AsymptoticParams: a, rho, lambda1 and h must be positive");
  }
  if (!std::isfinite(b) || !std::isfinite(c)) {
    throw DomainError("AsymptoticParams: b and c must be finite");
  }
}

double ordered_total(const AsymptoticBreakdown& terms) {
  std::array<double, 6> parts{terms.quad_term,  terms.lin_term,    terms.bline_term,
                              terms.w_value,    terms.gauss_const, terms.h_const};
  std::stable_sort(parts.begin(), parts.end(),
                   [](double x, double y) { return std::abs(x) > std::abs(y); });
  double total = 0.0;
  for (const double part : parts) total += part;
  return total;
}

AsymptoticParams mersenne_params(double tol) {
  AsymptoticParams params;
  params.a = 1.0 / kLn2;
  params.b = -0.5;
  params.c = c_constant(tol).value;
  params.rho = kLn2;
  params.lambda1 = 1.0;
  params.h = 1.0;
  params.fourier_c = sawtooth_fourier_coefficient;
  return params;
}

AsymptoticParams binary_params() {
  AsymptoticParams params;
  params.a = 1.0 / kLn2;
  params.b = 0.5;
  params.c = kLn2 / 12.0;
  params.rho = kLn2;
  params.lambda1 = 1.0;
  params.h = 1.0;
  params.fourier_c = sawtooth_fourier_coefficient;
  return params;
}

AsymptoticBreakdown theorem2_ln_Ph(double u, const AsymptoticParams& params, double tol,
                                   int nu_max) {
  params.validate();
  if (!(u > std::numbers::e) || std::isinf(u)) {
    throw DomainError("theorem2_ln_Ph requires finite u > e");
  }
  const double ln_u = std::log(u);
  const double centre = ln_u - std::log(ln_u) - std::log(params.a);
  const double ln_lambda1 = std::log(params.lambda1);

  AsymptoticBreakdown out;
  out.w_argument = centre;
  out.quad_term = 0.5 * params.a * centre * centre;
  out.lin_term = (params.a - 0.5) * ln_u;
  out.bline_term = (params.b - 0.5) * centre;
  out.w_value = params.fourier_c ? w_oscillation(centre, params.rho, params.fourier_c, nu_max) : 0.0;
  out.gauss_const = -0.5 * std::log(2.0 * kPi);
  out.h_const = params.c - params.b * ln_lambda1 - 0.5 * params.a * ln_lambda1 * ln_lambda1 +
                params.a * tail_integral_I(tol).value;
  out.total = ordered_total(out);
  return out;
}

AsymptoticBreakdown theorem1_ln_ps(std::uint64_t n, double tol, int nu_max) {
  if (n < 2) {
    throw DomainError("theorem1_ln_ps requires n >= 2");
  }
  return theorem2_ln_Ph(static_cast<double>(n) + 1.0, mersenne_params(tol), tol, nu_max);
}

}  // namespace spart
