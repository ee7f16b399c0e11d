#pragma once

// Test-only helpers: an MPFR oracle independent of the library's arithmetic,
// and random BigReal generators for property tests.

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>

#include "viete/precision.hpp"

namespace viete::testing {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec = 1024) { mpfr_init2(v_, prec); }
  Mpfr(const Mpfr& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Mpfr& operator=(const Mpfr& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  ~Mpfr() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

 private:
  mpfr_t v_;
};

inline constexpr mpfr_prec_t kOraclePrec = 1024;

inline Mpfr from_big(const BigReal& x, mpfr_prec_t prec = kOraclePrec) {
  // Exact as long as prec covers the significand.
  Mpfr out(std::max<mpfr_prec_t>(prec, static_cast<mpfr_prec_t>(
                                           mpz_sizeinbase(x.significand().get_mpz_t(), 2) + 1)));
  mpfr_set_z_2exp(out.get(), x.significand().get_mpz_t(), static_cast<mpfr_exp_t>(x.exponent()),
                  MPFR_RNDN);
  if (x.sign() < 0) mpfr_neg(out.get(), out.get(), MPFR_RNDN);
  return out;
}

inline Mpfr oracle_pi() {
  Mpfr p;
  mpfr_const_pi(p.get(), MPFR_RNDN);
  return p;
}

// pi / 2^n
inline Mpfr pi_over_pow2(long n) {
  Mpfr p = oracle_pi();
  mpfr_div_2si(p.get(), p.get(), n, MPFR_RNDN);
  return p;
}

// b_k = tan(pi / 2^{k+2})
inline Mpfr oracle_b(int k) {
  Mpfr t = pi_over_pow2(k + 2);
  mpfr_tan(t.get(), t.get(), MPFR_RNDN);
  return t;
}

// a_k = 2 cos(pi / 2^{k+1})
inline Mpfr oracle_a(int k) {
  Mpfr t = pi_over_pow2(k + 1);
  mpfr_cos(t.get(), t.get(), MPFR_RNDN);
  mpfr_mul_2si(t.get(), t.get(), 1, MPFR_RNDN);
  return t;
}

// c_k = (1 - b_k) / (1 + b_k) = tan(pi/4 - pi/2^{k+2})
inline Mpfr oracle_c(int k) {
  Mpfr t = oracle_pi();
  Mpfr q = pi_over_pow2(k + 2);
  mpfr_div_2si(t.get(), t.get(), 2, MPFR_RNDN);
  mpfr_sub(t.get(), t.get(), q.get(), MPFR_RNDN);
  mpfr_tan(t.get(), t.get(), MPFR_RNDN);
  return t;
}

// log2(|x - ref| / |ref|); -inf when equal.
inline double log2_rel_error(const BigReal& x, const Mpfr& ref) {
  Mpfr d = from_big(x);
  Mpfr diff(kOraclePrec * 2);
  mpfr_sub(diff.get(), d.get(), ref.get(), MPFR_RNDN);
  if (mpfr_zero_p(diff.get())) return -1e9;
  mpfr_div(diff.get(), diff.get(), ref.get(), MPFR_RNDN);
  mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
  mpfr_log2(diff.get(), diff.get(), MPFR_RNDN);
  return mpfr_get_d(diff.get(), MPFR_RNDN);
}

inline double log2_abs_error(const BigReal& x, const Mpfr& ref) {
  Mpfr d = from_big(x);
  Mpfr diff(kOraclePrec * 2);
  mpfr_sub(diff.get(), d.get(), ref.get(), MPFR_RNDN);
  if (mpfr_zero_p(diff.get())) return -1e9;
  mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
  mpfr_log2(diff.get(), diff.get(), MPFR_RNDN);
  return mpfr_get_d(diff.get(), MPFR_RNDN);
}

// Decimal truncation computed entirely in MPFR/GMP.
inline std::string oracle_truncated(const Mpfr& x, int digits) {
  Mpfr scaled(x.prec() + 64);
  mpfr_mul_ui(scaled.get(), x.get(), 1, MPFR_RNDN);
  for (int i = 0; i < digits; ++i) mpfr_mul_ui(scaled.get(), scaled.get(), 10, MPFR_RNDN);
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), scaled.get(), MPFR_RNDZ);
  const bool negative = sgn(z) < 0 || mpfr_sgn(x.get()) < 0;
  z = abs(z);
  std::string body = z.get_str();
  if (body.size() <= static_cast<std::size_t>(digits)) body.insert(0, digits + 1 - body.size(), '0');
  body.insert(body.size() - digits, 1, '.');
  return negative ? "-" + body : body;
}

// Random value with `bits` significant bits and exponent near zero.
inline BigReal random_real(std::mt19937_64& rng, int bits, int exp_spread, bool allow_negative = true) {
  mpz_class m = 1;
  for (int i = 1; i < bits; ++i) m = 2 * m + static_cast<int>(rng() & 1u);
  std::uniform_int_distribution<int> exp_dist(-exp_spread, exp_spread);
  const int e = exp_dist(rng) - bits;
  BigReal x = BigReal::dyadic(m, e);
  if (allow_negative && (rng() & 1u)) x = -x;
  return x;
}

}  // namespace viete::testing
