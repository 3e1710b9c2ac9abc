// Command-line front end. Talks to the library only through spart.h.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spart/spart.h"

namespace {

using Record = nlohmann::ordered_json;

enum class Format { json, csv };

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitTolerance = 2;

// Failure from the library, tagged with the quantity being computed.
class LibraryFailure : public std::runtime_error {
 public:
  LibraryFailure(spart_status status, const std::string& quantity)
      : std::runtime_error(quantity + ": " + spart_status_name(status) + ": " + spart_last_error()),
        status_(status) {}
  spart_status status() const { return status_; }

 private:
  spart_status status_;
};

void check(spart_status status, const std::string& quantity) {
  if (status != SPART_OK) throw LibraryFailure(status, quantity);
}

// Calls a (buf, cap, needed) style function twice: size query, then fill.
template <class Call>
std::string fetch_string(Call call, const std::string& quantity) {
  size_t needed = 0;
  spart_status status = call(nullptr, 0, &needed);
  if (status != SPART_ERR_BUFFER_TOO_SMALL) check(status, quantity);
  std::string out(needed, '\0');
  check(call(out.data(), out.size(), &needed), quantity);
  out.resize(needed - 1);
  return out;
}

class Table {
 public:
  Table(spart_part_set parts, uint64_t n_max) {
    check(spart_table_create(parts, n_max, &table_), "count table");
  }
  ~Table() { spart_table_destroy(table_); }
  Table(const Table&) = delete;
  Table& operator=(const Table&) = delete;

  std::string count(uint64_t n) const {
    return fetch_string(
        [&](char* b, size_t c, size_t* need) { return spart_table_count(table_, n, b, c, need); },
        "count");
  }
  double log(uint64_t n) const {
    double out = 0.0;
    check(spart_table_log(table_, n, &out), "ln count");
    return out;
  }

 private:
  spart_table* table_ = nullptr;
};

std::string csv_cell(const Record& value) {
  std::string text;
  if (value.is_string()) {
    text = value.get<std::string>();
  } else if (value.is_array()) {
    for (const auto& item : value) {
      if (!text.empty()) text += ' ';
      text += item.is_string() ? item.get<std::string>() : item.dump();
    }
  } else if (value.is_null()) {
    text = "";
  } else {
    text = value.dump();
  }
  if (text.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (const char ch : text) {
      if (ch == '"') quoted += '"';
      quoted += ch;
    }
    return quoted + "\"";
  }
  return text;
}

// Writes records as JSON lines, or as CSV with a header taken from the first
// record. Side records (summaries, notes) become '#' comment lines in CSV.
class Emitter {
 public:
  explicit Emitter(Format format) : format_(format) {}

  void record(const Record& r) {
    if (format_ == Format::json) {
      std::cout << r.dump() << '\n';
      return;
    }
    if (!header_written_) {
      bool first = true;
      for (const auto& item : r.items()) {
        std::cout << (first ? "" : ",") << item.key();
        first = false;
      }
      std::cout << '\n';
      header_written_ = true;
    }
    bool first = true;
    for (const auto& item : r.items()) {
      std::cout << (first ? "" : ",") << csv_cell(item.value());
      first = false;
    }
    std::cout << '\n';
  }

  void side_record(const Record& r) {
    if (format_ == Format::json) {
      std::cout << r.dump() << '\n';
      return;
    }
    for (const auto& item : r.items()) {
      std::cout << "# " << item.key() << '=' << csv_cell(item.value()) << '\n';
    }
  }

 private:
  Format format_;
  bool header_written_ = false;
};

Record breakdown_record(const spart_breakdown& b) {
  Record r;
  r["quad_term"] = b.quad_term;
  r["lin_term"] = b.lin_term;
  r["bline_term"] = b.bline_term;
  r["w_value"] = b.w_value;
  r["gauss_const"] = b.gauss_const;
  r["h_const"] = b.h_const;
  r["total"] = b.total;
  r["w_argument"] = b.w_argument;
  return r;
}

constexpr uint64_t kExactEstimateLimit = 1'000'000;

int cmd_count(Emitter& out, uint64_t n) {
  Table table(SPART_PARTS_MERSENNE, n);
  Record r;
  r["n"] = n;
  r["count"] = table.count(n);
  r["ln_count"] = table.log(n);
  out.record(r);
  return kExitOk;
}

int cmd_table(Emitter& out, uint64_t max_n) {
  Table table(SPART_PARTS_MERSENNE, max_n);
  for (uint64_t n = 0; n <= max_n; ++n) {
    Record r;
    r["n"] = n;
    r["count"] = table.count(n);
    out.record(r);
  }
  return kExitOk;
}

int cmd_estimate(Emitter& out, uint64_t n, double tol, int nu_max) {
  spart_breakdown b{};
  check(spart_theorem1(n, tol, nu_max, &b), "s-partition estimate");
  Record r;
  r["n"] = n;
  r.update(breakdown_record(b));
  if (n <= kExactEstimateLimit) {
    Table table(SPART_PARTS_MERSENNE, n);
    const double exact = table.log(n);
    r["exact_ln"] = exact;
    r["error"] = b.total - exact;
  } else {
    r["exact_ln"] = nullptr;
    r["error"] = nullptr;
  }
  out.record(r);
  return kExitOk;
}

int cmd_constants(Emitter& out, double tol) {
  spart_constants c{};
  check(spart_constants_compute(tol, &c), "constants");
  Record r;
  r["tol"] = tol;
  r["alpha"] = c.alpha.value;
  r["alpha_error"] = c.alpha.error;
  r["c"] = c.c.value;
  r["c_error"] = c.c.error;
  r["I"] = c.tail_integral.value;
  r["I_error"] = c.tail_integral.error;
  r["H"] = c.H.value;
  r["H_error"] = c.H.error;
  out.record(r);
  return kExitOk;
}

int cmd_w_eval(Emitter& out, int points, int nu_max) {
  if (points < 1) throw CLI::ValidationError("--points", "must be >= 1");
  const double period = std::numbers::ln2;
  for (int i = 0; i < points; ++i) {
    const double z = period * i / points;
    double w = 0.0;
    check(spart_w_eval(z, nu_max, &w), "W");
    Record r;
    r["z"] = z;
    r["w"] = w;
    out.record(r);
  }
  return kExitOk;
}

int cmd_bhatt_audit(Emitter& out, uint64_t max_n) {
  spart_audit* audit = nullptr;
  check(spart_audit_create(max_n, &audit), "bhatt audit");
  std::unique_ptr<spart_audit, void (*)(spart_audit*)> guard(audit, spart_audit_destroy);

  spart_audit_record rec{};
  spart_status status = SPART_OK;
  while ((status = spart_audit_next(audit, &rec)) == SPART_OK) {
    Record r;
    r["type"] = "record";
    r["n"] = rec.n;
    r["exact"] = rec.exact;
    r["bound"] = rec.bound;
    r["violated"] = rec.violated != 0;
    out.record(r);
  }
  if (status != SPART_DONE) check(status, "bhatt audit");

  spart_audit_summary s{};
  check(spart_audit_summarize(audit, &s), "bhatt audit summary");
  Record summary;
  summary["type"] = "summary";
  summary["max_n"] = s.n_max;
  if (s.first_violation != 0) {
    summary["first_violation"] = s.first_violation;
  } else {
    summary["first_violation"] = nullptr;
  }
  summary["violations"] = s.violations;
  summary["max_ratio"] = std::exp(s.max_log_ratio);
  summary["max_log_ratio"] = s.max_log_ratio;
  summary["max_ratio_n"] = s.max_log_ratio_n;
  summary["bound_monotone_from_16"] = s.bound_monotone_from_16 != 0;
  if (s.first_bound_drop != 0) summary["first_bound_drop"] = s.first_bound_drop;
  Record trend = Record::array();
  for (size_t i = 0; i < s.trend_count; ++i) {
    trend.push_back(Record{{"n", s.trend[i].n}, {"log_ratio", s.trend[i].ratio}});
  }
  summary["log_ratio_trend"] = trend;
  summary["log_ratio_increasing"] = s.log_ratio_increasing != 0;
  out.side_record(summary);

  Record note;
  note["type"] = "convention";
  note["text"] = spart_bhatt_convention();
  out.side_record(note);
  return kExitOk;
}

int cmd_decompose(Emitter& out, const std::string& n) {
  size_t count = 0;
  spart_status status = spart_decompose(n.c_str(), nullptr, 0, &count);
  if (status != SPART_ERR_BUFFER_TOO_SMALL) check(status, "decompose");
  std::vector<uint32_t> exponents(count);
  check(spart_decompose(n.c_str(), exponents.data(), exponents.size(), &count), "decompose");

  Record r;
  r["n"] = n;
  Record parts = Record::array();
  Record ks = Record::array();
  for (const uint32_t k : exponents) {
    ks.push_back(k);
    parts.push_back(fetch_string(
        [k](char* b, size_t c, size_t* need) { return spart_mersenne_number(k, b, c, need); },
        "part"));
  }
  r["parts"] = parts;
  r["exponents"] = ks;
  r["part_count"] = count;
  out.record(r);
  return kExitOk;
}

std::string call_modexp(bool reference, const std::string& a, const std::string& n,
                        const std::string& m) {
  return fetch_string(
      [&](char* b, size_t c, size_t* need) {
        return reference ? spart_modexp_reference(a.c_str(), n.c_str(), m.c_str(), b, c, need)
                         : spart_modexp(a.c_str(), n.c_str(), m.c_str(), b, c, need);
      },
      reference ? "modexp reference" : "modexp");
}

int modexp_one(Emitter& out, const std::string& a, const std::string& n, const std::string& m,
               bool with_check, bool& all_match) {
  Record r;
  r["a"] = a;
  r["n"] = n;
  r["m"] = m;
  const std::string result = call_modexp(false, a, n, m);
  r["result"] = result;
  if (with_check) {
    const std::string reference = call_modexp(true, a, n, m);
    r["reference"] = reference;
    r["match"] = reference == result;
    all_match = all_match && reference == result;
  }
  out.record(r);
  return kExitOk;
}

int cmd_modexp(Emitter& out, const std::string& a, const std::string& n, const std::string& m,
               bool with_check, int random_cases, uint64_t seed) {
  bool all_match = true;
  if (random_cases > 0) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < random_cases; ++i) {
      const uint64_t ra = rng();
      const uint64_t rn = rng();
      const uint64_t rm = rng() | 1u;
      modexp_one(out, std::to_string(ra), std::to_string(rn), std::to_string(rm), true, all_match);
    }
  } else {
    if (a.empty() || n.empty() || m.empty()) {
      throw CLI::ValidationError("modexp", "--a, --n and --m are required unless --random is given");
    }
    modexp_one(out, a, n, m, with_check, all_match);
  }
  if (!all_match) {
    std::cerr << "modexp: s-partition result disagrees with square-and-multiply reference\n";
    return kExitTolerance;
  }
  return kExitOk;
}

int cmd_binary_cross_check(Emitter& out, uint64_t n, double tol, int nu_max) {
  if (n < 2) throw CLI::ValidationError("--n", "must be >= 2");
  spart_params params{};
  check(spart_binary_params(&params), "binary params");
  spart_breakdown b{};
  // P_1(n + 1) counts partitions of n.
  check(spart_theorem2(static_cast<double>(n) + 1.0, &params, tol, nu_max, &b), "binary-partition estimate");
  Table table(SPART_PARTS_BINARY, n);
  const double exact = table.log(n);
  Record r;
  r["n"] = n;
  r.update(breakdown_record(b));
  r["exact_ln"] = exact;
  r["error"] = b.total - exact;
  out.record(r);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partitions into Mersenne parts: exact counts, asymptotics, Bhatt bound audit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "json";
  uint64_t seed = 20240101;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "Seed for randomized runs")->capture_default_str();

  uint64_t n = 0;
  uint64_t max_n = 0;
  double tol = 1e-8;
  int nu_max = 16;
  int points = 64;
  std::string big_a;
  std::string big_n;
  std::string big_m;
  bool with_check = false;
  int random_cases = 0;

  auto* count = app.add_subcommand("count", "Exact p_s(N)");
  count->add_option("--n", n)->required();

  auto* table = app.add_subcommand("table", "p_s(0..N)");
  table->add_option("--max-n", max_n)->required();

  auto* estimate = app.add_subcommand("estimate", "Asymptotic ln p_s(N) with its terms");
  estimate->add_option("--n", n)->required();
  estimate->add_option("--tol", tol)->capture_default_str();
  estimate->add_option("--nu-max", nu_max)->capture_default_str();

  auto* constants = app.add_subcommand("constants", "alpha, c, I and H with error bounds");
  constants->add_option("--tol", tol)->capture_default_str();

  auto* w_eval = app.add_subcommand("w-eval", "W over one period");
  w_eval->add_option("--points", points)->capture_default_str();
  w_eval->add_option("--nu-max", nu_max)->capture_default_str();

  auto* audit = app.add_subcommand("bhatt-audit", "Compare p_s(n) with Bhatt's bound");
  audit->add_option("--max-n", max_n)->required();

  auto* decompose = app.add_subcommand("decompose", "Greedy s-partition of N");
  decompose->add_option("--n", big_n)->required();

  auto* modexp = app.add_subcommand("modexp", "a^n mod m through the s-partition of n");
  modexp->add_option("--a", big_a);
  modexp->add_option("--n", big_n);
  modexp->add_option("--m", big_m);
  modexp->add_flag("--check", with_check, "Compare with square-and-multiply");
  modexp->add_option("--random", random_cases, "Check this many seeded random triples instead");

  auto* cross = app.add_subcommand("binary-cross-check", "General asymptotic vs exact ln b(N)");
  cross->add_option("--n", n)->required();
  cross->add_option("--tol", tol)->capture_default_str();
  cross->add_option("--nu-max", nu_max)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Emitter out(format_name == "csv" ? Format::csv : Format::json);
  try {
    if (count->parsed()) return cmd_count(out, n);
    if (table->parsed()) return cmd_table(out, max_n);
    if (estimate->parsed()) return cmd_estimate(out, n, tol, nu_max);
    if (constants->parsed()) return cmd_constants(out, tol);
    if (w_eval->parsed()) return cmd_w_eval(out, points, nu_max);
    if (audit->parsed()) return cmd_bhatt_audit(out, max_n);
    if (decompose->parsed()) return cmd_decompose(out, big_n);
    if (modexp->parsed()) return cmd_modexp(out, big_a, big_n, big_m, with_check, random_cases, seed);
    if (cross->parsed()) return cmd_binary_cross_check(out, n, tol, nu_max);
  } catch (const LibraryFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.status() == SPART_ERR_ACCURACY ? kExitTolerance : kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
