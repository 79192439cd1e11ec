#pragma once

#include "pellucid/exact.hpp"

namespace pellucid {

// Parameters of the second-order recurrences
//   U_0 = 0, U_1 = 1, U_{n+1} = k U_n + s U_{n-1}
//   V_0 = 2, V_1 = k, V_{n+1} = k V_n + s V_{n-1}
// with k, s nonzero and k^2 + 4s > 0. (k, s) = (1, 1) gives the Fibonacci
// and Lucas numbers.
struct LucasParams {
    Int k;
    Int s;

    LucasParams(Int k_, Int s_);

    Int discriminant() const { return k * k + 4 * s; }
};

struct LucasPair {
    unsigned long n;
    Int u;
    Int v;
};

// Iterative bottom-up evaluation; the reference implementation.
LucasPair lucas_uv(const LucasParams& params, unsigned long n);
Int lucas_u(const LucasParams& params, unsigned long n);
Int lucas_v(const LucasParams& params, unsigned long n);

// Fast doubling:
//   U_{2m} = U_m V_m,  V_{2m} = V_m^2 - 2(-s)^m,
//   U_{m+1} = (k U_m + V_m) / 2,  V_{m+1} = ((k^2+4s) U_m + k V_m) / 2,
// both halvings exact for every integer (k, s). Must agree with lucas_uv
// everywhere; tests enforce equality.
LucasPair lucas_uv_doubling(const LucasParams& params, unsigned long n);

// Closed parity laws for s = +-1:
//   k even: U_n even iff n even; V_n always even.
//   k odd:  U_n and V_n even iff 3 | n.
bool lucas_u_is_even(const LucasParams& params, unsigned long n);
bool lucas_v_is_even(const LucasParams& params, unsigned long n);

} // namespace pellucid
