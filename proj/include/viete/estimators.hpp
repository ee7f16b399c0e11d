#pragma once

#include "viete/precision.hpp"

namespace viete {

enum class PiMethod { viete_product, arctan_sum, unity_limit };

const char* to_string(PiMethod method);

struct PiEstimate {
  PiMethod method = PiMethod::viete_product;
  int depth = 1;  // K for the product and the sum, k for unity_limit
  int m = 1;
  BigReal value;
  // |value - target|; target is pi, pi/4 for arctan_sum.
  BigReal abs_error;
};

// 2 / prod_{k=1..K} (a_k / 2).
PiEstimate viete_product_pi(int K, const PrecisionContext& ctx);

// sum_{k=1..K} arctan(b_k), converging to pi/4.
PiEstimate arctan_sum_quarter_pi(int K, const PrecisionContext& ctx);

// 2^{k+1} (1 - c_k^m) / m with 1 - c^m assembled as eps (1 + c + ... + c^{m-1}).
PiEstimate pi_from_unity(int k, int m, const PrecisionContext& ctx);

// b_{k+1} / b_k.
BigReal ratio_b(int k, const PrecisionContext& ctx);

struct TailBound {
  BigReal sum_b;    // sum_{l=k+1..L} b_l
  BigReal sum_geo;  // sum_{l=k+1..L} b_1 / 2^{l-1}
  bool holds;       // sum_b < sum_geo; true for an empty range
};

// Requires L >= k >= 0; terms start at max(k+1, 1).
TailBound tail_bound_check(int k, int L, const PrecisionContext& ctx);

// pi/4 - arctan(c_k) - sum_{l=k+1..L} arctan(b_l); exactly (pi/4) 2^-L in
// exact arithmetic. Requires L > k >= 1.
BigReal tail_split_check(int k, int L, const PrecisionContext& ctx);

}  // namespace viete
