#include "spart/spart.h"

#include <cstring>
#include <exception>
#include <new>
#include <span>
#include <string>

#include "spart/bhatt_audit.hpp"
#include "spart/counting.hpp"
#include "spart/error.hpp"
#include "spart/exponentiation.hpp"
#include "spart/pennington.hpp"
#include "spart/special_fn.hpp"

struct spart_table {
  spart::CountTable table;
};

struct spart_audit {
  explicit spart_audit(std::uint64_t n_max) : scanner(n_max) {}
  spart::AuditScanner scanner;
  spart::AuditRecord record;
  std::string exact;
  std::string bound;
};

namespace {

thread_local std::string last_error;

spart_status fail(spart_status status, const char* message) {
  last_error = message;
  return status;
}

// Runs body, translating the core's exceptions into status codes.
template <class Body>
spart_status guarded(Body&& body) noexcept {
  try {
    last_error.clear();
    return body();
  } catch (const spart::AccuracyError& e) {
    return fail(SPART_ERR_ACCURACY, e.what());
  } catch (const spart::PoleError& e) {
    return fail(SPART_ERR_POLE, e.what());
  } catch (const spart::DomainError& e) {
    return fail(SPART_ERR_DOMAIN, e.what());
  } catch (const spart::ResourceError& e) {
    return fail(SPART_ERR_RESOURCE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SPART_ERR_RESOURCE, "out of memory");
  } catch (const std::invalid_argument& e) {
    return fail(SPART_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(SPART_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SPART_ERR_INTERNAL, "unknown exception");
  }
}

spart_status write_string(const std::string& text, char* buf, size_t cap, size_t* needed) {
  if (needed != nullptr) *needed = text.size() + 1;
  if (buf == nullptr || cap < text.size() + 1) {
    return fail(SPART_ERR_BUFFER_TOO_SMALL, "output buffer too small");
  }
  std::memcpy(buf, text.c_str(), text.size() + 1);
  return SPART_OK;
}

mpz_class parse_integer(const char* text, const char* what) {
  if (text == nullptr) {
    throw std::invalid_argument(std::string(what) + " is null");
  }
  mpz_class value;
  if (value.set_str(text, 10) != 0) {
    throw std::invalid_argument(std::string(what) + " is not a decimal integer: " + text);
  }
  return value;
}

spart::AsymptoticParams to_params(const spart_params& in) {
  spart::AsymptoticParams out;
  out.a = in.a;
  out.b = in.b;
  out.c = in.c;
  out.rho = in.rho;
  out.lambda1 = in.lambda1;
  out.h = in.h;
  if (in.fourier_c != nullptr) {
    out.fourier_c = [fn = in.fourier_c, user = in.fourier_user](long nu) { return fn(nu, user); };
  }
  return out;
}

void from_params(const spart::AsymptoticParams& in, spart_params* out) {
  out->a = in.a;
  out->b = in.b;
  out->c = in.c;
  out->rho = in.rho;
  out->lambda1 = in.lambda1;
  out->h = in.h;
  out->fourier_c = in.fourier_c ? &spart_sawtooth_coefficient : nullptr;
  out->fourier_user = nullptr;
}

void from_breakdown(const spart::AsymptoticBreakdown& in, spart_breakdown* out) {
  out->quad_term = in.quad_term;
  out->lin_term = in.lin_term;
  out->bline_term = in.bline_term;
  out->w_value = in.w_value;
  out->gauss_const = in.gauss_const;
  out->h_const = in.h_const;
  out->total = in.total;
  out->w_argument = in.w_argument;
}

spart_estimate from_estimate(const spart::Estimate& e) { return {e.value, e.error}; }

#define SPART_REQUIRE(cond, message) \
  if (!(cond)) return fail(SPART_ERR_INVALID_ARGUMENT, message)

}  // namespace

extern "C" {

const char* spart_last_error(void) { return last_error.c_str(); }

const char* spart_status_name(spart_status status) {
  switch (status) {
    case SPART_OK: return "ok";
    case SPART_ERR_DOMAIN: return "domain error";
    case SPART_ERR_POLE: return "pole error";
    case SPART_ERR_ACCURACY: return "accuracy error";
    case SPART_ERR_RESOURCE: return "resource error";
    case SPART_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SPART_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case SPART_ERR_INTERNAL: return "internal error";
    case SPART_DONE: return "done";
  }
  return "unknown status";
}

const char* spart_version(void) { return "1.0.0"; }

spart_status spart_table_create(spart_part_set parts, uint64_t n_max, spart_table** out) {
  SPART_REQUIRE(out != nullptr, "out is null");
  return guarded([&] {
    *out = nullptr;
    switch (parts) {
      case SPART_PARTS_MERSENNE:
        *out = new spart_table{spart::count_s_partitions_table(n_max)};
        return SPART_OK;
      case SPART_PARTS_BINARY:
        *out = new spart_table{spart::count_binary_partitions_table(n_max)};
        return SPART_OK;
    }
    return fail(SPART_ERR_INVALID_ARGUMENT, "unknown part set");
  });
}

void spart_table_destroy(spart_table* table) { delete table; }

uint64_t spart_table_max_n(const spart_table* table) {
  return table == nullptr ? 0 : table->table.max_n();
}

spart_status spart_table_count(const spart_table* table, uint64_t n, char* buf, size_t cap,
                               size_t* needed) {
  SPART_REQUIRE(table != nullptr, "table is null");
  return guarded([&] {
    if (n > table->table.max_n()) return fail(SPART_ERR_DOMAIN, "n beyond table range");
    return write_string(spart::to_decimal(table->table[n]), buf, cap, needed);
  });
}

spart_status spart_table_log(const spart_table* table, uint64_t n, double* out) {
  SPART_REQUIRE(table != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    if (n > table->table.max_n()) return fail(SPART_ERR_DOMAIN, "n beyond table range");
    *out = spart::natural_log(table->table[n]);
    return SPART_OK;
  });
}

spart_status spart_table_cumulative(const spart_table* table, uint64_t u, char* buf, size_t cap,
                                    size_t* needed) {
  SPART_REQUIRE(table != nullptr, "table is null");
  return guarded([&] {
    return write_string(spart::to_decimal(table->table.cumulative(u)), buf, cap, needed);
  });
}

spart_status spart_brute_force_count(uint64_t n, char* buf, size_t cap, size_t* needed) {
  return guarded(
      [&] { return write_string(spart::to_decimal(spart::brute_force_count(n)), buf, cap, needed); });
}

spart_status spart_gamma(double re, double im, double* out_re, double* out_im) {
  SPART_REQUIRE(out_re != nullptr && out_im != nullptr, "null output");
  return guarded([&] {
    const spart::Complex value = spart::gamma_complex({re, im});
    *out_re = value.real();
    *out_im = value.imag();
    return SPART_OK;
  });
}

spart_status spart_zeta(double re, double im, double* out_re, double* out_im) {
  SPART_REQUIRE(out_re != nullptr && out_im != nullptr, "null output");
  return guarded([&] {
    const spart::Complex value = spart::zeta_complex({re, im});
    *out_re = value.real();
    *out_im = value.imag();
    return SPART_OK;
  });
}

spart_status spart_integrate(spart_integrand f, void* user, double a, double b, double tol,
                             const double* breakpoints, size_t breakpoint_count,
                             spart_quadrature* out) {
  SPART_REQUIRE(f != nullptr && out != nullptr, "null argument");
  SPART_REQUIRE(breakpoints != nullptr || breakpoint_count == 0, "breakpoints is null");
  return guarded([&] {
    const std::span<const double> points(breakpoints, breakpoint_count);
    try {
      const spart::QuadratureResult r =
          spart::integrate_adaptive([f, user](double x) { return f(x, user); }, a, b, tol, points);
      *out = {r.value, r.error_estimate, r.evaluations};
    } catch (const spart::AccuracyError& e) {
      *out = {e.best_estimate(), e.error_estimate(), 0};
      throw;
    }
    return SPART_OK;
  });
}

spart_status spart_sawtooth(double x, double* out) {
  SPART_REQUIRE(out != nullptr, "null output");
  return guarded([&] {
    *out = spart::sawtooth_f(x);
    return SPART_OK;
  });
}

spart_status spart_remainder_R(double u, double* out) {
  SPART_REQUIRE(out != nullptr, "null output");
  return guarded([&] {
    *out = spart::remainder_R(u);
    return SPART_OK;
  });
}

spart_status spart_eq4_series(double u, int nu_max, double* out) {
  SPART_REQUIRE(out != nullptr, "null output");
  return guarded([&] {
    *out = spart::eq4_series(u, nu_max);
    return SPART_OK;
  });
}

spart_status spart_constants_compute(double tol, spart_constants* out) {
  SPART_REQUIRE(out != nullptr, "null output");
  return guarded([&] {
    const spart::Estimate alpha = spart::alpha_constant(tol);
    const spart::Estimate c = spart::c_constant(tol);
    const spart::Estimate tail = spart::tail_integral_I(tol);
    const spart::Estimate h = spart::H_constant(tol);
    *out = {from_estimate(alpha), from_estimate(c), from_estimate(tail), from_estimate(h)};
    return SPART_OK;
  });
}

spart_status spart_w_eval(double z, int nu_max, double* out) {
  SPART_REQUIRE(out != nullptr, "null output");
  return guarded([&] {
    *out = spart::w_oscillation(z, nu_max);
    return SPART_OK;
  });
}

double spart_sawtooth_coefficient(long nu, void* /*user*/) {
  return spart::sawtooth_fourier_coefficient(nu);
}

spart_status spart_mersenne_params(double tol, spart_params* out) {
  SPART_REQUIRE(out != nullptr, "null output");
  return guarded([&] {
    from_params(spart::mersenne_params(tol), out);
    return SPART_OK;
  });
}

spart_status spart_binary_params(spart_params* out) {
  SPART_REQUIRE(out != nullptr, "null output");
  return guarded([&] {
    from_params(spart::binary_params(), out);
    return SPART_OK;
  });
}

spart_status spart_theorem2(double u, const spart_params* params, double tol, int nu_max,
                            spart_breakdown* out) {
  SPART_REQUIRE(params != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    from_breakdown(spart::theorem2_ln_Ph(u, to_params(*params), tol, nu_max), out);
    return SPART_OK;
  });
}

spart_status spart_theorem1(uint64_t n, double tol, int nu_max, spart_breakdown* out) {
  SPART_REQUIRE(out != nullptr, "null output");
  return guarded([&] {
    from_breakdown(spart::theorem1_ln_ps(n, tol, nu_max), out);
    return SPART_OK;
  });
}

const char* spart_bhatt_convention(void) { return spart::kBhattConvention; }

spart_status spart_bhatt_bound(uint64_t n, char* buf, size_t cap, size_t* needed) {
  return guarded(
      [&] { return write_string(spart::to_decimal(spart::bhatt_bound(n)), buf, cap, needed); });
}

spart_status spart_audit_create(uint64_t n_max, spart_audit** out) {
  SPART_REQUIRE(out != nullptr, "out is null");
  return guarded([&] {
    *out = nullptr;
    *out = new spart_audit(n_max);
    return SPART_OK;
  });
}

void spart_audit_destroy(spart_audit* audit) { delete audit; }

spart_status spart_audit_next(spart_audit* audit, spart_audit_record* record) {
  SPART_REQUIRE(audit != nullptr && record != nullptr, "null argument");
  return guarded([&] {
    if (!audit->scanner.next(audit->record)) return SPART_DONE;
    audit->exact = spart::to_decimal(audit->record.exact);
    audit->bound = spart::to_decimal(audit->record.bound);
    *record = {audit->record.n, audit->exact.c_str(), audit->bound.c_str(),
               audit->record.violated ? 1 : 0};
    return SPART_OK;
  });
}

spart_status spart_audit_summarize(const spart_audit* audit, spart_audit_summary* out) {
  SPART_REQUIRE(audit != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    const spart::AuditSummary& s = audit->scanner.summary();
    *out = spart_audit_summary{};
    out->n_max = s.n_max;
    out->first_violation = s.first_violation.value_or(0);
    out->violations = s.violations;
    out->max_log_ratio = s.max_log_ratio;
    out->max_log_ratio_n = s.max_log_ratio_n;
    out->bound_monotone_from_16 = s.bound_monotone_from_16 ? 1 : 0;
    out->first_bound_drop = s.first_bound_drop.value_or(0);
    const std::size_t capacity = sizeof(out->trend) / sizeof(out->trend[0]);
    for (const auto& sample : s.log_ratio_trend) {
      if (out->trend_count == capacity) break;
      out->trend[out->trend_count++] = {sample.n, sample.ratio};
    }
    out->log_ratio_increasing = s.log_ratio_increasing ? 1 : 0;
    return SPART_OK;
  });
}

spart_status spart_decompose(const char* n, uint32_t* exponents, size_t cap, size_t* count) {
  SPART_REQUIRE(count != nullptr, "count is null");
  return guarded([&] {
    const spart::SPartition partition = spart::greedy_decompose(parse_integer(n, "n"));
    *count = partition.exponents.size();
    if (exponents == nullptr || cap < partition.exponents.size()) {
      return fail(SPART_ERR_BUFFER_TOO_SMALL, "exponent buffer too small");
    }
    for (std::size_t i = 0; i < partition.exponents.size(); ++i) exponents[i] = partition.exponents[i];
    return SPART_OK;
  });
}

spart_status spart_mersenne_number(uint32_t k, char* buf, size_t cap, size_t* needed) {
  return guarded([&] {
    if (k < 1) return fail(SPART_ERR_DOMAIN, "Mersenne exponent must be >= 1");
    mpz_class part;
    mpz_ui_pow_ui(part.get_mpz_t(), 2, k);
    part -= 1;
    return write_string(part.get_str(10), buf, cap, needed);
  });
}

spart_status spart_modexp(const char* a, const char* n, const char* m, char* buf, size_t cap,
                          size_t* needed) {
  return guarded([&] {
    const mpz_class r =
        spart::modexp_spartition(parse_integer(a, "a"), parse_integer(n, "n"), parse_integer(m, "m"));
    return write_string(r.get_str(10), buf, cap, needed);
  });
}

spart_status spart_modexp_reference(const char* a, const char* n, const char* m, char* buf,
                                    size_t cap, size_t* needed) {
  return guarded([&] {
    const mpz_class r =
        spart::modexp_reference(parse_integer(a, "a"), parse_integer(n, "n"), parse_integer(m, "m"));
    return write_string(r.get_str(10), buf, cap, needed);
  });
}

}  // extern "C"
