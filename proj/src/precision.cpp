#include "viete/precision.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace viete {

namespace {

std::int64_t bit_length(const mpz_class& m) {
  return m == 0 ? 0 : static_cast<std::int64_t>(mpz_sizeinbase(m.get_mpz_t(), 2));
}

mpz_class shifted_left(const mpz_class& m, std::int64_t n) {
  mpz_class r;
  mpz_mul_2exp(r.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  return r;
}

mpz_class shifted_right(const mpz_class& m, std::int64_t n) {
  mpz_class r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  return r;
}

// True when any of the low n bits of m is set.
bool low_bits_nonzero(const mpz_class& m, std::int64_t n) {
  if (n <= 0 || m == 0) return false;
  return static_cast<std::int64_t>(mpz_scan1(m.get_mpz_t(), 0)) < n;
}

int combine_precision(int a, int b) {
  if (a == BigReal::kExact) return b;
  if (b == BigReal::kExact) return a;
  return std::min(a, b);
}

}  // namespace

PrecisionContext::PrecisionContext(int precision_bits, int guard_bits)
    : precision_bits_(precision_bits), guard_bits_(guard_bits) {
  if (precision_bits < kMinPrecisionBits) {
    throw PrecisionError("precision below minimum (" +
                         std::to_string(precision_bits) + " < " +
                         std::to_string(kMinPrecisionBits) + " bits)");
  }
  if (guard_bits < 0) throw PrecisionError("guard bits must be non-negative");
}

PrecisionContext context_new(int precision_bits) {
  return PrecisionContext(precision_bits);
}

// Builds rounded BigReal values from an exact integer significand plus a
// sticky flag recording whether any non-zero bits lie below it.
class Rounder {
 public:
  // An exact result keeps precision_bits; a rounded one is certified to the
  // context precision at best.
  static BigReal make(int sign, mpz_class significand, std::int64_t exponent,
                      bool sticky, const PrecisionContext& ctx, int precision_bits) {
    BigReal out;
    if (significand == 0) return out;
    const int width = ctx.working_bits();
    const std::int64_t len = bit_length(significand);
    bool inexact = sticky;
    if (len > width) {
      const std::int64_t drop = len - width;
      const bool half = mpz_tstbit(significand.get_mpz_t(), drop - 1) != 0;
      const bool rest = sticky || low_bits_nonzero(significand, drop - 1);
      inexact = inexact || half || rest;
      mpz_class kept = shifted_right(significand, drop);
      if (half && (rest || mpz_odd_p(kept.get_mpz_t()))) ++kept;
      significand = std::move(kept);
      exponent += drop;
    }
    out.sign_ = sign;
    out.significand_ = std::move(significand);
    out.exponent_ = exponent;
    out.precision_bits_ = inexact ? combine_precision(precision_bits, ctx.precision_bits()) : precision_bits;
    out.canonicalize();
    return out;
  }
};

BigReal::BigReal(long value) {
  if (value == 0) return;
  sign_ = value < 0 ? -1 : 1;
  significand_ = value;
  if (value < 0) significand_ = -significand_;
  canonicalize();
}

BigReal BigReal::from_mpz(mpz_class value) { return dyadic(std::move(value), 0); }

BigReal BigReal::dyadic(mpz_class significand, std::int64_t exponent) {
  BigReal out;
  if (significand == 0) return out;
  out.sign_ = sgn(significand);
  out.significand_ = ::abs(significand);
  out.exponent_ = exponent;
  out.canonicalize();
  return out;
}

void BigReal::canonicalize() {
  if (significand_ == 0) {
    sign_ = 0;
    exponent_ = 0;
    return;
  }
  const auto tz = static_cast<std::int64_t>(mpz_scan1(significand_.get_mpz_t(), 0));
  if (tz > 0) {
    significand_ = shifted_right(significand_, tz);
    exponent_ += tz;
  }
}

std::int64_t BigReal::ilog2() const { return exponent_ + bit_length(significand_) - 1; }

double BigReal::to_double() const {
  if (sign_ == 0) return 0.0;
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, significand_.get_mpz_t());
  const std::int64_t total = exp + exponent_;
  if (total > 4096) return sign_ * HUGE_VAL;
  if (total < -4096) return sign_ * 0.0;
  return sign_ * std::ldexp(mant, static_cast<int>(total));
}

BigReal BigReal::operator-() const {
  BigReal out = *this;
  out.sign_ = -sign_;
  return out;
}

BigReal BigReal::abs() const {
  BigReal out = *this;
  out.sign_ = sign_ == 0 ? 0 : 1;
  return out;
}

BigReal BigReal::ldexp(std::int64_t shift) const {
  BigReal out = *this;
  if (sign_ != 0) out.exponent_ += shift;
  return out;
}

namespace {

// Aligns x and y to a common exponent for exact or sticky-rounded addition.
// An operand whose leading bit sits more than two bits below the other's can
// only perturb the result below its rounding position, so its low bits are
// folded into a sticky bit instead of widening the sum.
BigReal add_signed(const BigReal& x, const BigReal& y, int y_sign,
                   const PrecisionContext& ctx) {
  const int prec = combine_precision(x.precision_bits(), y.precision_bits());
  const int width = ctx.working_bits();
  const int ys = y.sign() * y_sign;
  if (y.is_zero()) return Rounder::make(x.sign(), x.significand(), x.exponent(), false, ctx, prec);
  if (x.is_zero()) return Rounder::make(ys, y.significand(), y.exponent(), false, ctx, prec);

  const std::int64_t top_x = x.ilog2();
  const std::int64_t top_y = y.ilog2();
  const std::int64_t hi = std::max(top_x, top_y);
  const std::int64_t cutoff = hi - width - 4;

  struct Term {
    mpz_class m;
    std::int64_t e;
    int s;
    bool sticky;
  };
  auto prepare = [&](const BigReal& v, int s, std::int64_t top) {
    Term t{v.significand(), v.exponent(), s, false};
    if (top < hi - 2 && t.e < cutoff) {
      const std::int64_t drop = cutoff - t.e;
      t.sticky = low_bits_nonzero(t.m, drop);
      t.m = shifted_right(t.m, drop);
      t.e = cutoff;
    }
    return t;
  };
  Term a = prepare(x, x.sign(), top_x);
  Term b = prepare(y, ys, top_y);

  // A sticky operand is represented by an extra half-unit below cutoff, which
  // is enough for round-to-nearest because the result has at least
  // width + 2 bits above cutoff.
  const bool sticky = a.sticky || b.sticky;
  std::int64_t e = std::min(a.e, b.e);
  if (sticky) e = std::min(e, cutoff - 1);
  mpz_class ma = shifted_left(a.m, a.e - e);
  mpz_class mb = shifted_left(b.m, b.e - e);
  if (a.sticky) ma += 1;
  if (b.sticky) mb += 1;
  mpz_class sum = a.s * ma + b.s * mb;
  const int s = sgn(sum);
  return Rounder::make(s, abs(sum), e, false, ctx, prec);
}

// Floor square root by Newton iteration from above, then a directed
// correction so that s^2 <= n < (s+1)^2.
mpz_class isqrt_newton(const mpz_class& n) {
  if (n < 2) return n;
  const std::int64_t len = bit_length(n);
  mpz_class x = shifted_left(mpz_class(1), (len + 1) / 2);
  while (true) {
    mpz_class y = (x + n / x) >> 1;
    if (y >= x) break;
    x = std::move(y);
  }
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

}  // namespace

BigReal add(const BigReal& x, const BigReal& y, const PrecisionContext& ctx) {
  return add_signed(x, y, 1, ctx);
}

BigReal sub(const BigReal& x, const BigReal& y, const PrecisionContext& ctx) {
  return add_signed(x, y, -1, ctx);
}

BigReal mul(const BigReal& x, const BigReal& y, const PrecisionContext& ctx) {
  const int prec = combine_precision(x.precision_bits(), y.precision_bits());
  return Rounder::make(x.sign() * y.sign(), x.significand() * y.significand(),
                       x.exponent() + y.exponent(), false, ctx, prec);
}

BigReal div(const BigReal& x, const BigReal& y, const PrecisionContext& ctx) {
  if (y.is_zero()) throw PoleError("division by zero");
  const int prec = combine_precision(x.precision_bits(), y.precision_bits());
  if (x.is_zero()) return BigReal{};
  const int width = ctx.working_bits();
  // Quotient gets at least width + 2 bits.
  const std::int64_t shift = std::max<std::int64_t>(
      0, width + 2 + bit_length(y.significand()) - bit_length(x.significand()) + 1);
  mpz_class q;
  mpz_class r;
  const mpz_class num = shifted_left(x.significand(), shift);
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), y.significand().get_mpz_t());
  return Rounder::make(x.sign() * y.sign(), std::move(q), x.exponent() - y.exponent() - shift,
                       r != 0, ctx, prec);
}

BigReal arith(ArithOp op, const BigReal& x, const BigReal& y, const PrecisionContext& ctx) {
  switch (op) {
    case ArithOp::add: return add(x, y, ctx);
    case ArithOp::sub: return sub(x, y, ctx);
    case ArithOp::mul: return mul(x, y, ctx);
    case ArithOp::div: return div(x, y, ctx);
  }
  throw std::logic_error("unknown arithmetic op");
}

BigReal sqrt(const BigReal& x, const PrecisionContext& ctx) {
  if (x.sign() < 0) throw DomainError("square root of a negative number");
  if (x.is_zero()) return BigReal{};
  const int width = ctx.working_bits();
  // Radicand needs 2 * (width + 2) bits and an even exponent.
  std::int64_t shift = std::max<std::int64_t>(0, 2 * (width + 2) - bit_length(x.significand()) + 1);
  if ((x.exponent() - shift) % 2 != 0) ++shift;
  const mpz_class n = shifted_left(x.significand(), shift);
  mpz_class s = isqrt_newton(n);
  const bool sticky = s * s != n;
  return Rounder::make(1, std::move(s), (x.exponent() - shift) / 2, sticky, ctx,
                       x.precision_bits());
}

BigReal round_to(const BigReal& x, const PrecisionContext& ctx) {
  return Rounder::make(x.sign(), x.significand(), x.exponent(), false, ctx, x.precision_bits());
}

Ordering compare(const BigReal& x, const BigReal& y) {
  if (x.sign() != y.sign()) return x.sign() < y.sign() ? Ordering::less : Ordering::greater;
  if (x.is_zero()) return Ordering::equal;
  // Same non-zero sign: compare magnitudes exactly.
  int mag = 0;
  const std::int64_t tx = x.ilog2();
  const std::int64_t ty = y.ilog2();
  if (tx != ty) {
    mag = tx < ty ? -1 : 1;
  } else {
    const std::int64_t e = std::min(x.exponent(), y.exponent());
    const mpz_class mx = shifted_left(x.significand(), x.exponent() - e);
    const mpz_class my = shifted_left(y.significand(), y.exponent() - e);
    mag = cmp(mx, my);
  }
  mag *= x.sign();
  if (mag == 0) return Ordering::equal;
  return mag < 0 ? Ordering::less : Ordering::greater;
}

BigReal relative_error(const BigReal& x, const BigReal& reference, const PrecisionContext& ctx) {
  if (reference.is_zero()) throw PoleError("relative error against zero reference");
  return div(sub(x, reference, ctx), reference, ctx).abs();
}

}  // namespace viete
