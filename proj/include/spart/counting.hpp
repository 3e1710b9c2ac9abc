#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace spart {

/// Exact nonnegative partition count.
using Count = mpz_class;

/// Natural logarithm of a positive big integer, from its top 53 bits and
/// its binary exponent. Relative accuracy is that of binary64.
double natural_log(const Count& value);

/// Decimal rendering of a count.
std::string to_decimal(const Count& value);

/// Counts of partitions of 0..max_n() into parts from a fixed set.
class CountTable {
 public:
  CountTable() = default;
  CountTable(std::uint64_t n_max, std::vector<std::uint64_t> parts);

  std::uint64_t max_n() const noexcept { return counts_.size() - 1; }
  const std::vector<std::uint64_t>& parts() const noexcept { return parts_; }
  const Count& operator[](std::uint64_t n) const { return counts_.at(n); }
  const std::vector<Count>& counts() const noexcept { return counts_; }

  /// Number of solutions of sum r_i * part_i < u, i.e. sum of counts[0..u-1].
  Count cumulative(std::uint64_t u) const;

 private:
  std::vector<std::uint64_t> parts_;
  std::vector<Count> counts_;
};

/// All values 2^k - 1 <= n with k >= 1, ascending.
std::vector<std::uint64_t> mersenne_parts_upto(std::uint64_t n);

/// All values 2^k <= n with k >= 0, ascending.
std::vector<std::uint64_t> power_of_two_parts_upto(std::uint64_t n);

/// p_s(0..n_max): partitions into parts 2^k - 1.
CountTable count_s_partitions_table(std::uint64_t n_max);

/// b(0..n_max): partitions into parts 2^k.
CountTable count_binary_partitions_table(std::uint64_t n_max);

/// Largest n accepted by brute_force_count.
inline constexpr std::uint64_t kBruteForceLimit = 300;

/// Independent oracle: enumerates multiplicities of every Mersenne part
/// directly. Throws DomainError above kBruteForceLimit.
Count brute_force_count(std::uint64_t n);

/// P(u) for the Mersenne sequence: sum_{m < u} p_s(m). Requires u >= 1.
Count cumulative_P(std::uint64_t u);

}  // namespace spart
