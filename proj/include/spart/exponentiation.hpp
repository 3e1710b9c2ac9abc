#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace spart {

/// n written as a sum of Mersenne numbers 2^k - 1, k >= 1.
struct SPartition {
  mpz_class n;
  std::vector<unsigned> exponents;  ///< k of each part, greedy order

  /// Sum of the parts.
  mpz_class sum() const;
  /// Parts sum to n, exponents are >= 1 and non-increasing with at most one
  /// repeat (the last two), and there are at most floor(log2(n + 1)) + 1 parts.
  bool satisfies_greedy_invariants() const;
};

/// Repeatedly removes the largest 2^k - 1 not exceeding the remainder.
/// Throws DomainError for negative n.
SPartition greedy_decompose(const mpz_class& n);

/// Tallies modular multiplications (squarings included).
struct ModMulCounter {
  std::uint64_t multiplications = 0;
};

/// a^(2^k - 1) mod m via x <- a, then k - 1 rounds of x <- x^2 * a.
/// Uses exactly 2(k - 1) modular multiplications. Requires m >= 1, k >= 1.
mpz_class pow_mersenne_part(const mpz_class& a, unsigned k, const mpz_class& m,
                            ModMulCounter* counter = nullptr);

/// a^n mod m through the greedy s-partition of n. Requires m >= 1, n >= 0.
mpz_class modexp_spartition(const mpz_class& a, const mpz_class& n, const mpz_class& m);

/// Right-to-left binary square-and-multiply, independent of the above.
mpz_class modexp_reference(const mpz_class& a, const mpz_class& n, const mpz_class& m);

}  // namespace spart
