#pragma once

// Arbitrary-precision binary floating point used by every other module.
//
// A BigReal is sign * significand * 2^exponent with an integer significand.
// Every rounded operation rounds to nearest-even at
// PrecisionContext::working_bits() = precision_bits + guard_bits, so a chain
// of a few hundred operations still certifies precision_bits.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace viete {

class PrecisionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// sqrt of a negative number, arctan_taylor outside its convergence contract.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Division by zero or a singular arctangent composition.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PrecisionContext {
 public:
  static constexpr int kMinPrecisionBits = 16;
  static constexpr int kDefaultGuardBits = 32;

  explicit PrecisionContext(int precision_bits,
                            int guard_bits = kDefaultGuardBits);

  int precision_bits() const { return precision_bits_; }
  int guard_bits() const { return guard_bits_; }
  int working_bits() const { return precision_bits_ + guard_bits_; }

  // Same guard bits, different precision.
  PrecisionContext with_precision(int precision_bits) const {
    return PrecisionContext(precision_bits, guard_bits_);
  }

  friend bool operator==(const PrecisionContext&,
                         const PrecisionContext&) = default;

 private:
  int precision_bits_;
  int guard_bits_;
};

PrecisionContext context_new(int precision_bits);

enum class Ordering { less, equal, greater };
enum class ArithOp { add, sub, mul, div };
enum class RoundingMode { truncate, round };

class BigReal {
 public:
  // Certified precision of exact values (integers, dyadic constants).
  static constexpr int kExact = 0;

  BigReal() = default;  // zero
  BigReal(long value);  // NOLINT(google-explicit-constructor): exact
  static BigReal from_mpz(mpz_class value);
  // significand * 2^exponent, exact.
  static BigReal dyadic(mpz_class significand, std::int64_t exponent);

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  // Non-negative odd significand (zero for zero).
  const mpz_class& significand() const { return significand_; }
  std::int64_t exponent() const { return exponent_; }
  // 0 for exact values, otherwise precision_bits of the producing context.
  int precision_bits() const { return precision_bits_; }
  bool is_exact() const { return precision_bits_ == kExact; }

  // floor(log2|x|); undefined for zero.
  std::int64_t ilog2() const;
  double to_double() const;

  BigReal operator-() const;
  BigReal abs() const;
  // Exact multiplication by 2^shift.
  BigReal ldexp(std::int64_t shift) const;

  // Bitwise identity of the representation (which is canonical).
  friend bool operator==(const BigReal& x, const BigReal& y) {
    return x.sign_ == y.sign_ && x.exponent_ == y.exponent_ &&
           x.significand_ == y.significand_;
  }

 private:
  friend class Rounder;
  void canonicalize();

  int sign_ = 0;
  mpz_class significand_;
  std::int64_t exponent_ = 0;
  int precision_bits_ = kExact;
};

BigReal arith(ArithOp op, const BigReal& x, const BigReal& y,
              const PrecisionContext& ctx);
BigReal add(const BigReal& x, const BigReal& y, const PrecisionContext& ctx);
BigReal sub(const BigReal& x, const BigReal& y, const PrecisionContext& ctx);
BigReal mul(const BigReal& x, const BigReal& y, const PrecisionContext& ctx);
BigReal div(const BigReal& x, const BigReal& y, const PrecisionContext& ctx);
BigReal sqrt(const BigReal& x, const PrecisionContext& ctx);

// Rounds an exact or wider value to the context's working precision.
BigReal round_to(const BigReal& x, const PrecisionContext& ctx);

Ordering compare(const BigReal& x, const BigReal& y);

// |x - reference| / |reference| evaluated at ctx; reference must be non-zero.
BigReal relative_error(const BigReal& x, const BigReal& reference,
                       const PrecisionContext& ctx);

// Fewest bits of certified precision that can back `digits` fractional
// decimal digits.
int bits_for_digits(int digits);

// Fixed-point rendering with exactly `digits` fractional digits.
// Truncation chops toward zero; round is half away from zero.
std::string to_decimal(const BigReal& x, int digits,
                       RoundingMode mode = RoundingMode::truncate);

// d.ddd...e+NN with `significant` digits, truncated. "0" for zero.
std::string to_scientific(const BigReal& x, int significant);

// Arctangent by its Maclaurin series; requires |x| <= 1/2.
BigReal arctan_taylor(const BigReal& x, const PrecisionContext& ctx);

// Arctangent for any argument: half-angle reduction into the arctan_taylor
// contract, no use of pi.
BigReal arctan(const BigReal& x, const PrecisionContext& ctx);

enum class MachinFormula {
  machin,  // 16 arctan(1/5) - 4 arctan(1/239)
  euler,   // 4 arctan(1/2) + 4 arctan(1/3)
};

BigReal pi_reference(const PrecisionContext& ctx,
                     MachinFormula formula = MachinFormula::machin);

}  // namespace viete
