// Exercises the shared library strictly through the C header.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "spart/spart.h"

namespace {

std::string table_count(const spart_table* t, uint64_t n) {
  char buf[128];
  size_t needed = 0;
  REQUIRE(spart_table_count(t, n, buf, sizeof buf, &needed) == SPART_OK);
  return buf;
}

double half(double x, void*) { return 0.5 * x; }

}  // namespace

TEST_CASE("tables through the C API") {
  spart_table* t = nullptr;
  REQUIRE(spart_table_create(SPART_PARTS_MERSENNE, 300, &t) == SPART_OK);
  CHECK(spart_table_max_n(t) == 300);
  CHECK(table_count(t, 7) == "4");
  CHECK(table_count(t, 10) == "6");
  for (uint64_t n = 0; n <= 300; n += 37) {
    char buf[128];
    size_t needed = 0;
    REQUIRE(spart_brute_force_count(n, buf, sizeof buf, &needed) == SPART_OK);
    CHECK(table_count(t, n) == buf);
  }
  double ln = 0.0;
  CHECK(spart_table_log(t, 7, &ln) == SPART_OK);
  CHECK(ln == doctest::Approx(std::log(4.0)));

  char small[2];
  size_t needed = 0;
  CHECK(spart_table_cumulative(t, 8, small, sizeof small, &needed) == SPART_ERR_BUFFER_TOO_SMALL);
  CHECK(needed == 3);
  std::vector<char> buf(needed);
  CHECK(spart_table_cumulative(t, 8, buf.data(), buf.size(), &needed) == SPART_OK);
  CHECK(std::string(buf.data()) == "16");

  CHECK(spart_table_count(t, 301, small, sizeof small, &needed) == SPART_ERR_DOMAIN);
  CHECK(std::strlen(spart_last_error()) > 0);
  spart_table_destroy(t);

  REQUIRE(spart_table_create(SPART_PARTS_BINARY, 10, &t) == SPART_OK);
  CHECK(table_count(t, 10) == "14");
  spart_table_destroy(t);

  CHECK(spart_table_create(SPART_PARTS_MERSENNE, UINT64_MAX / 2, &t) == SPART_ERR_RESOURCE);
  CHECK(t == nullptr);
  CHECK(spart_table_create(SPART_PARTS_MERSENNE, 5, nullptr) == SPART_ERR_INVALID_ARGUMENT);
  spart_table_destroy(nullptr);
}

TEST_CASE("special functions through the C API") {
  double re = 0.0;
  double im = 0.0;
  CHECK(spart_gamma(0.5, 0.0, &re, &im) == SPART_OK);
  CHECK(std::abs(re - std::sqrt(M_PI)) <= 1e-12);
  CHECK(spart_gamma(-2.0, 0.0, &re, &im) == SPART_ERR_POLE);
  CHECK(spart_gamma(0.0, 500.0, &re, &im) == SPART_ERR_DOMAIN);
  CHECK(spart_zeta(2.0, 0.0, &re, &im) == SPART_OK);
  CHECK(std::abs(re - M_PI * M_PI / 6) <= 1e-10);
  CHECK(spart_zeta(1.0, 0.0, &re, &im) == SPART_ERR_POLE);

  spart_quadrature q{};
  CHECK(spart_integrate(half, nullptr, 0.0, 2.0, 1e-12, nullptr, 0, &q) == SPART_OK);
  CHECK(q.value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(q.evaluations > 0);
  const double points[] = {1.0};
  CHECK(spart_integrate(half, nullptr, 0.0, 2.0, 1e-12, points, 1, &q) == SPART_OK);
  CHECK(spart_integrate(half, nullptr, 0.0, 2.0, -1.0, nullptr, 0, &q) == SPART_ERR_DOMAIN);
}

TEST_CASE("asymptotics through the C API") {
  spart_constants c{};
  REQUIRE(spart_constants_compute(1e-8, &c) == SPART_OK);
  CHECK(c.alpha.value == doctest::Approx(0.0554929844).epsilon(1e-8));
  CHECK(c.H.value == doctest::Approx(c.c.value + c.tail_integral.value / std::log(2.0)).epsilon(1e-14));
  CHECK(spart_constants_compute(1e-12, &c) == SPART_ERR_DOMAIN);

  double w = 0.0;
  CHECK(spart_w_eval(0.0, 16, &w) == SPART_OK);
  CHECK(std::abs(w) < 1e-4);

  spart_breakdown b1{};
  REQUIRE(spart_theorem1(1000, 1e-8, 16, &b1) == SPART_OK);
  spart_params p{};
  REQUIRE(spart_mersenne_params(1e-8, &p) == SPART_OK);
  spart_breakdown b2{};
  REQUIRE(spart_theorem2(1001.0, &p, 1e-8, 16, &b2) == SPART_OK);
  CHECK(b1.total == b2.total);
  CHECK(b1.w_value == b2.w_value);

  p.fourier_c = nullptr;
  REQUIRE(spart_theorem2(1001.0, &p, 1e-8, 16, &b2) == SPART_OK);
  CHECK(b2.w_value == 0.0);

  REQUIRE(spart_binary_params(&p) == SPART_OK);
  CHECK(p.b == 0.5);
  CHECK(spart_theorem2(2.0, &p, 1e-8, 16, &b2) == SPART_ERR_DOMAIN);
  CHECK(spart_theorem1(1, 1e-8, 16, &b1) == SPART_ERR_DOMAIN);

  double v = 0.0;
  CHECK(spart_sawtooth(4.0, &v) == SPART_OK);
  CHECK(v == 0.5);
  CHECK(spart_remainder_R(1.0, &v) == SPART_OK);
  CHECK(v == doctest::Approx(1.5));
  CHECK(spart_eq4_series(8.0, 10000, &v) == SPART_OK);
  CHECK(std::abs(v) < 1e-5);
}

TEST_CASE("audit through the C API") {
  char buf[64];
  size_t needed = 0;
  REQUIRE(spart_bhatt_bound(8, buf, sizeof buf, &needed) == SPART_OK);
  CHECK(std::string(buf) == "16");
  CHECK(spart_bhatt_bound(0, buf, sizeof buf, &needed) == SPART_ERR_DOMAIN);
  CHECK(std::string(spart_bhatt_convention()).find("0^") == std::string::npos);

  spart_audit* audit = nullptr;
  REQUIRE(spart_audit_create(5000, &audit) == SPART_OK);
  spart_audit_record rec{};
  uint64_t count = 0;
  uint64_t first = 0;
  while (spart_audit_next(audit, &rec) == SPART_OK) {
    ++count;
    if (rec.violated && first == 0) first = rec.n;
    if (rec.n == 8) {
      CHECK(std::string(rec.exact) == "4");
      CHECK(std::string(rec.bound) == "16");
    }
  }
  CHECK(count == 5000);
  CHECK(spart_audit_next(audit, &rec) == SPART_DONE);
  spart_audit_summary s{};
  REQUIRE(spart_audit_summarize(audit, &s) == SPART_OK);
  CHECK(s.first_violation == first);
  CHECK(s.first_violation > 0);
  CHECK(s.trend_count == 1);
  spart_audit_destroy(audit);

  CHECK(spart_audit_create(0, &audit) == SPART_ERR_DOMAIN);
  CHECK(spart_audit_create(2'000'000, &audit) == SPART_ERR_RESOURCE);
}

TEST_CASE("exponentiation through the C API") {
  uint32_t exps[8];
  size_t count = 0;
  REQUIRE(spart_decompose("10", exps, 8, &count) == SPART_OK);
  REQUIRE(count == 2);
  CHECK(exps[0] == 3);
  CHECK(exps[1] == 2);
  CHECK(spart_decompose("1000000", nullptr, 0, &count) == SPART_ERR_BUFFER_TOO_SMALL);
  CHECK(count > 0);
  CHECK(spart_decompose("12x", exps, 8, &count) == SPART_ERR_INVALID_ARGUMENT);
  CHECK(spart_decompose("-4", exps, 8, &count) == SPART_ERR_DOMAIN);

  char buf[64];
  size_t needed = 0;
  REQUIRE(spart_mersenne_number(3, buf, sizeof buf, &needed) == SPART_OK);
  CHECK(std::string(buf) == "7");
  REQUIRE(spart_modexp("2", "10", "1000", buf, sizeof buf, &needed) == SPART_OK);
  CHECK(std::string(buf) == "24");
  REQUIRE(spart_modexp_reference("2", "10", "1000", buf, sizeof buf, &needed) == SPART_OK);
  CHECK(std::string(buf) == "24");
  CHECK(spart_modexp("2", "10", "0", buf, sizeof buf, &needed) == SPART_ERR_DOMAIN);
  CHECK(spart_modexp(nullptr, "10", "7", buf, sizeof buf, &needed) == SPART_ERR_INVALID_ARGUMENT);
}

TEST_CASE("status names") {
  CHECK(std::string(spart_status_name(SPART_OK)) == "ok");
  CHECK(std::string(spart_status_name(SPART_ERR_ACCURACY)) == "accuracy error");
  CHECK(std::string(spart_version()).size() > 0);
}
