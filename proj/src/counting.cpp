#include "spart/counting.hpp"

#include <cmath>
#include <new>

#include "spart/error.hpp"

namespace spart {

namespace {

// Past this the table alone needs tens of gigabytes.
constexpr std::uint64_t kMaxTableN = 1'000'000'000;

std::vector<Count> allocate_counts(std::uint64_t n_max) {
  if (n_max >= kMaxTableN) {
    throw ResourceError("count table too large: n_max = " + std::to_string(n_max));
  }
  try {
    return std::vector<Count>(n_max + 1);
  } catch (const std::bad_alloc&) {
    throw ResourceError("out of memory building count table up to " + std::to_string(n_max));
  }
}

// Recursive multiplicity enumeration over parts[0..idx], largest first.
// The multiplicity of the part 1 is forced, so reaching idx == 0 is one solution.
void enumerate(const std::vector<std::uint64_t>& parts, std::size_t idx, std::uint64_t remaining,
               Count& solutions) {
  if (idx == 0) {
    ++solutions;
    return;
  }
  const std::uint64_t part = parts[idx];
  for (std::uint64_t used = 0; used <= remaining; used += part) {
    enumerate(parts, idx - 1, remaining - used, solutions);
  }
}

}  // namespace

double natural_log(const Count& value) {
  if (sgn(value) <= 0) {
    throw DomainError("natural_log of a non-positive count");
  }
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

std::string to_decimal(const Count& value) { return value.get_str(10); }

CountTable::CountTable(std::uint64_t n_max, std::vector<std::uint64_t> parts)
    : parts_(std::move(parts)), counts_(allocate_counts(n_max)) {
  counts_[0] = 1;
  // Parts outer, totals ascending: each part may be reused any number of times
  // and different orders of the same multiset are counted once.
  for (const std::uint64_t part : parts_) {
    for (std::uint64_t total = part; total <= n_max; ++total) {
      counts_[total] += counts_[total - part];
    }
  }
}

Count CountTable::cumulative(std::uint64_t u) const {
  if (u == 0) {
    throw DomainError("cumulative count requires u >= 1");
  }
  if (u - 1 > max_n()) {
    throw DomainError("cumulative count beyond table range");
  }
  Count sum = 0;
  for (std::uint64_t m = 0; m < u; ++m) {
    sum += counts_[m];
  }
  return sum;
}

std::vector<std::uint64_t> mersenne_parts_upto(std::uint64_t n) {
  std::vector<std::uint64_t> parts;
  for (unsigned k = 1; k < 64; ++k) {
    const std::uint64_t part = (std::uint64_t{1} << k) - 1;
    if (part > n) break;
    parts.push_back(part);
  }
  return parts;
}

std::vector<std::uint64_t> power_of_two_parts_upto(std::uint64_t n) {
  std::vector<std::uint64_t> parts;
  for (unsigned k = 0; k < 64; ++k) {
    const std::uint64_t part = std::uint64_t{1} << k;
    if (part > n) break;
    parts.push_back(part);
  }
  return parts;
}

CountTable count_s_partitions_table(std::uint64_t n_max) {
  return CountTable(n_max, mersenne_parts_upto(n_max));
}

CountTable count_binary_partitions_table(std::uint64_t n_max) {
  return CountTable(n_max, power_of_two_parts_upto(n_max));
}

Count brute_force_count(std::uint64_t n) {
  if (n > kBruteForceLimit) {
    throw DomainError("brute_force_count is an oracle for n <= 300, got " + std::to_string(n));
  }
  std::vector<std::uint64_t> parts{1};
  while (2 * parts.back() + 1 <= n) {
    parts.push_back(2 * parts.back() + 1);
  }
  Count solutions = 0;
  enumerate(parts, parts.size() - 1, n, solutions);
  return solutions;
}

Count cumulative_P(std::uint64_t u) {
  if (u == 0) {
    throw DomainError("cumulative_P requires u >= 1");
  }
  return count_s_partitions_table(u - 1).cumulative(u);
}

}  // namespace spart
