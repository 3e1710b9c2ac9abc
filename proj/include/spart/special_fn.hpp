#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>

namespace spart {

using Complex = std::complex<double>;

/// Largest |Im z| accepted by gamma_complex.
inline constexpr double kGammaImagBand = 200.0;
/// Largest |Im s| accepted by zeta_complex.
inline constexpr double kZetaImagBand = 1e5;
/// Smallest Re s accepted by zeta_complex.
inline constexpr double kZetaMinReal = 0.6;

/// Gamma function for complex arguments, Lanczos (g = 7, 9 terms) evaluated
/// in log form, with reflection below Re z = 1/2.
/// Throws PoleError at 0, -1, -2, ... and DomainError outside |Im z| <= 200.
Complex gamma_complex(Complex z);

/// Riemann zeta for Re s >= 0.6, |Im s| <= 1e5, s != 1.
/// Euler-Maclaurin with truncation chosen from |s|; see zeta_euler_maclaurin.
Complex zeta_complex(Complex s);

/// Euler-Maclaurin evaluation with explicit parameters: the first
/// `direct_terms - 1` terms summed, the integral tail, the half term and
/// `corrections` Bernoulli corrections at the cut (corrections <= 30).
Complex zeta_euler_maclaurin(Complex s, std::size_t direct_terms, std::size_t corrections);

/// B_{2k} / (2k)! for k = 1..30, computed exactly once and rounded.
double bernoulli_over_factorial(std::size_t k);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  ///< absolute
  std::size_t evaluations = 0;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod integration of f over [a, b] with an absolute
/// tolerance. `breakpoints` lists interior points where f or a derivative
/// jumps; the integrator never straddles them. b may be +infinity, in which
/// case the last finite piece is mapped through x = a' + (1 - t) / t.
///
/// Throws AccuracyError (carrying the best estimate) when the tolerance is
/// not reached within the subdivision budget, DomainError for tol <= 0 or
/// a > b.
QuadratureResult integrate_adaptive(const Integrand& f, double a, double b, double tol,
                                    std::span<const double> breakpoints = {});

}  // namespace spart
