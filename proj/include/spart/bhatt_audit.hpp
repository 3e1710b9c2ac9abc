#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spart/counting.hpp"

namespace spart {

/// How summands the published bound leaves undefined are treated.
inline constexpr const char* kBhattConvention =
    "summands with n - 3i < 2 or floor(log2(n - 3i)) = 0 contribute 0; "
    "floor(log2(n - 3i)) = 1 contributes 1^0 = 1; log2 floors use integer bit length";

/// 2 + floor(n/3) + sum_{i=0}^{floor(log2 n)} L_i^(L_i - 1), L_i = floor(log2(n - 3i)),
/// evaluated exactly under kBhattConvention. Requires n >= 1.
Count bhatt_bound(std::uint64_t n);

struct AuditRecord {
  std::uint64_t n = 0;
  Count exact;
  Count bound;
  bool violated = false;  ///< exact > bound
};

/// ln(exact) / ln(bound) sampled at a decade point.
struct LogRatioSample {
  std::uint64_t n = 0;
  double ratio = 0.0;
};

struct AuditSummary {
  std::uint64_t n_max = 0;
  std::optional<std::uint64_t> first_violation;
  std::uint64_t violations = 0;
  double max_log_ratio = 0.0;  ///< max over n of ln(exact / bound)
  std::uint64_t max_log_ratio_n = 0;
  bool bound_monotone_from_16 = true;
  std::optional<std::uint64_t> first_bound_drop;
  std::vector<LogRatioSample> log_ratio_trend;  ///< n = 10^3, 10^4, ... <= n_max
  bool log_ratio_increasing = true;
};

inline constexpr std::uint64_t kMaxAuditN = 1'000'000;

/// Streams audit records for n = 1..n_max off one p_s table.
class AuditScanner {
 public:
  /// Throws DomainError for n_max = 0 and ResourceError above kMaxAuditN.
  explicit AuditScanner(std::uint64_t n_max);

  /// Fills the next record; returns false once n_max has been passed.
  bool next(AuditRecord& record);

  /// Aggregate over the records produced so far.
  const AuditSummary& summary() const noexcept { return summary_; }
  const CountTable& table() const noexcept { return table_; }

 private:
  CountTable table_;
  std::uint64_t next_n_ = 1;
  Count previous_bound_;
  AuditSummary summary_;
};

/// Runs a full scan, discarding records.
AuditSummary audit_scan(std::uint64_t n_max);

}  // namespace spart
