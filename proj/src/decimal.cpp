#include <cmath>
#include <string>

#include "viete/precision.hpp"

namespace viete {

namespace {

mpz_class pow10(unsigned long n) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, n);
  return r;
}

// floor(|x| * 10^scale) for scale >= 0; `inexact` reports a non-zero
// remainder. With `half_up`, computes floor(|x| * 10^scale + 1/2) instead.
mpz_class scaled_floor(const BigReal& x, long scale, bool half_up) {
  mpz_class num = x.significand();
  if (scale >= 0) {
    num *= pow10(static_cast<unsigned long>(scale));
  }
  std::int64_t e = x.exponent();
  mpz_class den = 1;
  if (scale < 0) den = pow10(static_cast<unsigned long>(-scale));
  if (e >= 0) {
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  if (half_up) {
    num = 2 * num + den;
    den *= 2;
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

int bits_for_digits(int digits) {
  constexpr double kLog2Of10 = 3.321928094887362;
  constexpr int kDecimalGuard = 8;
  return static_cast<int>(std::ceil(digits * kLog2Of10)) + kDecimalGuard;
}

std::string to_decimal(const BigReal& x, int digits, RoundingMode mode) {
  if (digits < 1) throw PrecisionError("digits must be at least 1");
  if (!x.is_exact() && x.precision_bits() < bits_for_digits(digits)) {
    throw PrecisionError("insufficient precision for requested digits (" + std::to_string(digits) +
                         " digits need " + std::to_string(bits_for_digits(digits)) + " bits, have " +
                         std::to_string(x.precision_bits()) + ")");
  }
  const mpz_class scaled = scaled_floor(x, digits, mode == RoundingMode::round);
  std::string body = scaled.get_str();
  if (body.size() <= static_cast<std::size_t>(digits)) {
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  }
  body.insert(body.size() - static_cast<std::size_t>(digits), 1, '.');
  return x.sign() < 0 ? "-" + body : body;
}

std::string to_scientific(const BigReal& x, int significant) {
  if (significant < 1) throw PrecisionError("significant digits must be at least 1");
  if (x.is_zero()) return "0";
  // Decimal exponent estimate, corrected below if off by one.
  long e10 = static_cast<long>(std::floor(static_cast<double>(x.ilog2()) * 0.30102999566398120));
  mpz_class digits;
  const mpz_class lower = pow10(static_cast<unsigned long>(significant - 1));
  const mpz_class upper = pow10(static_cast<unsigned long>(significant));
  for (int attempt = 0; attempt < 4; ++attempt) {
    digits = scaled_floor(x, significant - 1 - e10, false);
    if (digits >= upper) {
      ++e10;
    } else if (digits < lower) {
      --e10;
    } else {
      break;
    }
  }
  std::string s = digits.get_str();
  std::string out = x.sign() < 0 ? "-" : "";
  out += s.substr(0, 1);
  if (s.size() > 1) out += "." + s.substr(1);
  const long ae = e10 < 0 ? -e10 : e10;
  out += e10 < 0 ? "e-" : "e+";
  if (ae < 10) out += "0";
  out += std::to_string(ae);
  return out;
}

}  // namespace viete
