#pragma once

#include <cstdint>
#include <functional>

#include "spart/special_fn.hpp"

namespace spart {

/// Sawtooth f(x) = floor(log2 x) - log2 x + 1/2 for x >= 1. Exact at powers of two.
double sawtooth_f(double x);

/// R(u) = ln(1 + 1/u) / ln 2 + f(u + 1), the remainder of the Mersenne
/// part-counting function after removing ln u / ln 2 - 1/2. Requires u >= 1.
double remainder_R(double u);

/// floor(log2(u + 1)) by integer bit length: the number of Mersenne parts <= u.
unsigned mersenne_part_count(std::uint64_t u);

/// A computed constant with its absolute error bound.
struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

/// Integral of f(v) / (v (v - 1)) over one octave [2^k, 2^(k+1)], k >= 1.
Estimate alpha_slice(unsigned k, double tol);

/// alpha = lim int_2^u f(v) / (v (v - 1)) dv, summed over octaves 1..K plus
/// the tail bound 1 / (2 (2^K - 1)). Requires tol >= 1e-10.
Estimate alpha_constant(double tol);

/// Number of octaves alpha_constant sums for a given tolerance.
unsigned alpha_octaves(double tol);

/// (pi^2 + ln^2 2) / (12 ln 2).
double c_closed_form();

/// c = (pi^2 + ln^2 2) / (12 ln 2) + alpha.
Estimate c_constant(double tol);

/// Integrand of the H tail integral, continuous at 0 with value 1/2.
double tail_integrand(double v);

/// Cutoff T at which (ln T + 1) e^-T (1 + 2 e^-T) drops below `bound`.
double tail_cutoff(double bound);

/// I = int_0^inf (ln v - ln(1 - e^-v)) / (e^v - 1) dv. Requires tol >= 1e-10.
Estimate tail_integral_I(double tol);

/// H = c + I / ln 2. Checks the general form c - b ln l1 - a ln^2 l1 / 2 + a I
/// at l1 = 1 agrees with it.
Estimate H_constant(double tol);

/// ln 2 / 12 - sum_{0 < |nu| <= nu_max} ln 2 / (4 pi^2 nu^2) e^{2 pi i nu log2 u},
/// with +nu and -nu paired into cosines. Truncation error <= ln 2 / (2 pi^2 nu_max).
double eq4_series(double u, int nu_max);

/// Coefficient family c_nu (nu != 0) of the periodic part.
using FourierCoefficients = std::function<double(long)>;

/// c_nu = -ln 2 / (4 pi^2 nu^2), shared by the Mersenne and binary sequences.
double sawtooth_fourier_coefficient(long nu);

inline constexpr int kDefaultWTerms = 16;
inline constexpr int kDefaultSawtoothSeriesTerms = 10'000;

/// Complex partial sums of W, kept separately so the imaginary residue of
/// the conjugate pairing can be inspected.
Complex w_oscillation_complex(double z, double rho, const FourierCoefficients& coefficients,
                              int nu_max);

/// W(z) for real z: -sum_{nu != 0} (2 pi nu / rho)^2 Gamma(2 pi i nu / rho)
/// zeta(1 + 2 pi i nu / rho) c_nu e^{2 pi i nu z / rho}.
double w_oscillation(double z, double rho, const FourierCoefficients& coefficients, int nu_max);

/// W for the Mersenne sequence (rho = ln 2, c_nu = sawtooth family).
double w_oscillation(double z, int nu_max = kDefaultWTerms);

/// Inputs of the general asymptotic for partitions into a sequence lambda_nu.
struct AsymptoticParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double rho = 0.0;
  double lambda1 = 1.0;
  double h = 1.0;
  FourierCoefficients fourier_c;  ///< empty means all coefficients are zero

  /// Throws DomainError unless a, rho, lambda1, h are positive.
  void validate() const;
};

/// Terms of an ln P_h(u) estimate.
struct AsymptoticBreakdown {
  double quad_term = 0.0;    ///< a/2 (ln u - lnln u - ln a)^2
  double lin_term = 0.0;     ///< (a - 1/2) ln u
  double bline_term = 0.0;   ///< (b - 1/2)(ln u - lnln u - ln a)
  double w_value = 0.0;      ///< W(ln u - lnln u - ln a)
  double gauss_const = 0.0;  ///< -ln(2 pi) / 2
  double h_const = 0.0;      ///< H
  /// Sum of the six terms, added in order of decreasing magnitude
  /// (ties keep field order) so the result is reproducible.
  double total = 0.0;
  double w_argument = 0.0;
};

/// Sums the breakdown fields in decreasing magnitude order.
double ordered_total(const AsymptoticBreakdown& terms);

/// Parameters for partitions into parts 2^k - 1 (k >= 1).
AsymptoticParams mersenne_params(double tol);

/// Parameters for partitions into parts 2^k (k >= 0): N(u) = ln u / ln 2 + 1/2 + f(u),
/// so a = 1/ln 2, b = 1/2, c = ln 2 / 12, same c_nu family.
AsymptoticParams binary_params();

/// General asymptotic ln P_h(u). Requires u > e.
AsymptoticBreakdown theorem2_ln_Ph(double u, const AsymptoticParams& params, double tol,
                                   int nu_max = kDefaultWTerms);

/// ln p_s(n) estimate: theorem2_ln_Ph at u = n + 1 with Mersenne params. Requires n >= 2.
AsymptoticBreakdown theorem1_ln_ps(std::uint64_t n, double tol, int nu_max = kDefaultWTerms);

}  // namespace spart
