#include "spart/bhatt_audit.hpp"

#include <array>
#include <bit>
#include <string>

#include "spart/error.hpp"

namespace spart {

namespace {

unsigned floor_log2(std::uint64_t x) { return static_cast<unsigned>(std::bit_width(x) - 1); }

// L^(L-1) for L = 0..64, with the 0^(-1) slot set to 0.
const std::array<Count, 65>& summand_table() {
  static const std::array<Count, 65> table = [] {
    std::array<Count, 65> t;
    t[0] = 0;
    for (unsigned L = 1; L <= 64; ++L) {
      mpz_ui_pow_ui(t[L].get_mpz_t(), L, L - 1);
    }
    return t;
  }();
  return table;
}

bool is_decade(std::uint64_t n) {
  if (n < 1000) return false;
  while (n % 10 == 0) n /= 10;
  return n == 1;
}

}  // namespace

Count bhatt_bound(std::uint64_t n) {
  if (n < 1) {
    throw DomainError("bhatt_bound requires n >= 1");
  }
  const auto& summands = summand_table();
  Count bound = 2 + n / 3;
  const unsigned last = floor_log2(n);
  for (std::uint64_t i = 0; i <= last; ++i) {
    if (3 * i > n || n - 3 * i < 2) continue;
    bound += summands[floor_log2(n - 3 * i)];
  }
  return bound;
}

AuditScanner::AuditScanner(std::uint64_t n_max) {
  if (n_max < 1) {
    throw DomainError("audit_scan requires n_max >= 1");
  }
  if (n_max > kMaxAuditN) {
    throw ResourceError("audit_scan supports n_max <= 1000000, got " + std::to_string(n_max));
  }
  table_ = count_s_partitions_table(n_max);
  summary_.n_max = n_max;
}

bool AuditScanner::next(AuditRecord& record) {
  if (next_n_ > summary_.n_max) return false;
  const std::uint64_t n = next_n_++;

  record.n = n;
  record.exact = table_[n];
  record.bound = bhatt_bound(n);
  record.violated = record.exact > record.bound;

  if (record.violated) {
    ++summary_.violations;
    if (!summary_.first_violation) summary_.first_violation = n;
  }
  const double log_exact = natural_log(record.exact);
  const double log_bound = natural_log(record.bound);
  const double log_ratio = log_exact - log_bound;
  if (n == 1 || log_ratio > summary_.max_log_ratio) {
    summary_.max_log_ratio = log_ratio;
    summary_.max_log_ratio_n = n;
  }
  if (n > 16 && record.bound < previous_bound_) {
    summary_.bound_monotone_from_16 = false;
    if (!summary_.first_bound_drop) summary_.first_bound_drop = n;
  }
  previous_bound_ = record.bound;

  if (is_decade(n)) {
    const LogRatioSample sample{n, log_exact / log_bound};
    if (!summary_.log_ratio_trend.empty() &&
        !(sample.ratio > summary_.log_ratio_trend.back().ratio)) {
      summary_.log_ratio_increasing = false;
    }
    summary_.log_ratio_trend.push_back(sample);
  }
  return true;
}

AuditSummary audit_scan(std::uint64_t n_max) {
  AuditScanner scanner(n_max);
  AuditRecord record;
  while (scanner.next(record)) {
  }
  return scanner.summary();
}

}  // namespace spart
