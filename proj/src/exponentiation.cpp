#include "spart/exponentiation.hpp"

#include "spart/error.hpp"

namespace spart {

namespace {

void require_modulus(const mpz_class& m) {
  if (m < 1) {
    throw DomainError("modulus must be >= 1");
  }
}

void require_exponent(const mpz_class& n) {
  if (n < 0) {
    throw DomainError("exponent must be >= 0");
  }
}

// Least nonnegative residue.
mpz_class reduce(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class mulmod(const mpz_class& x, const mpz_class& y, const mpz_class& m, ModMulCounter* counter) {
  if (counter != nullptr) ++counter->multiplications;
  return reduce(x * y, m);
}

}  // namespace

mpz_class SPartition::sum() const {
  mpz_class total = 0;
  for (const unsigned k : exponents) {
    mpz_class part;
    mpz_ui_pow_ui(part.get_mpz_t(), 2, k);
    total += part - 1;
  }
  return total;
}

bool SPartition::satisfies_greedy_invariants() const {
  if (sum() != n) return false;
  const mpz_class n_plus_one = n + 1;
  const std::size_t max_parts = mpz_sizeinbase(n_plus_one.get_mpz_t(), 2);  // floor(log2) + 1
  if (exponents.size() > max_parts) return false;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 1) return false;
    if (i == 0) continue;
    if (exponents[i] > exponents[i - 1]) return false;
    if (exponents[i] == exponents[i - 1] && i + 1 != exponents.size()) return false;
  }
  return true;
}

SPartition greedy_decompose(const mpz_class& n) {
  require_exponent(n);
  SPartition out{n, {}};
  mpz_class remainder = n;
  while (remainder > 0) {
    // largest k with 2^k <= remainder + 1
    const mpz_class next = remainder + 1;
    const auto k = static_cast<unsigned>(mpz_sizeinbase(next.get_mpz_t(), 2) - 1);
    out.exponents.push_back(k);
    mpz_class part;
    mpz_ui_pow_ui(part.get_mpz_t(), 2, k);
    remainder -= part - 1;
  }
  return out;
}

mpz_class pow_mersenne_part(const mpz_class& a, unsigned k, const mpz_class& m,
                            ModMulCounter* counter) {
  require_modulus(m);
  if (k < 1) {
    throw DomainError("pow_mersenne_part requires k >= 1");
  }
  const mpz_class base = reduce(a, m);
  mpz_class x = base;
  // x = a^(2^j - 1)  ->  x^2 * a = a^(2^(j+1) - 1)
  for (unsigned j = 1; j < k; ++j) {
    x = mulmod(x, x, m, counter);
    x = mulmod(x, base, m, counter);
  }
  return x;
}

mpz_class modexp_spartition(const mpz_class& a, const mpz_class& n, const mpz_class& m) {
  require_modulus(m);
  require_exponent(n);
  mpz_class result = reduce(mpz_class(1), m);
  for (const unsigned k : greedy_decompose(n).exponents) {
    result = reduce(result * pow_mersenne_part(a, k, m), m);
  }
  return result;
}

mpz_class modexp_reference(const mpz_class& a, const mpz_class& n, const mpz_class& m) {
  require_modulus(m);
  require_exponent(n);
  mpz_class result = reduce(mpz_class(1), m);
  mpz_class square = reduce(a, m);
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t bit = 0; bit < bits; ++bit) {
    if (mpz_tstbit(n.get_mpz_t(), bit) != 0) {
      result = reduce(result * square, m);
    }
    square = reduce(square * square, m);
  }
  return result;
}

}  // namespace spart
