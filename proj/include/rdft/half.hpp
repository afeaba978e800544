// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

namespace rdft {

// IEEE 754 binary16 limits.
inline constexpr double kHalfMax = 65504.0;          // largest finite half
inline constexpr double kHalfMinSubnormal = 0x1p-24; // smallest positive half

namespace detail {

// Rounds a positive finite double to the nearest multiple of 2^exp,
// ties to even. The scaled value m = x * 2^-exp is exact (power-of-two
// scaling), so the tie comparison is exact as well.
inline double round_scaled_to_even(double x, int exp) {
    double m = std::ldexp(x, -exp);
    double lo = std::floor(m);
    double frac = m - lo;
    double r;
    if (frac > 0.5) {
        r = lo + 1.0;
    } else if (frac < 0.5) {
        r = lo;
    } else {
        r = (std::fmod(lo, 2.0) == 0.0) ? lo : lo + 1.0;
    }
    return std::ldexp(r, exp);
}

}  // namespace detail

/// Rounds a double to the nearest IEEE 754 binary16 value (round to nearest,
/// ties to even) and returns that value as a double. Values at or beyond the
/// half-infinity rounding threshold become +/-infinity; NaN stays NaN.
/// Conversion works on the double directly; going through float first could
/// double-round near half-precision midpoints.
inline double round_to_half(double x) {
    if (std::isnan(x)) return x;
    double mag = std::fabs(x);
    double sign = std::signbit(x) ? -1.0 : 1.0;
    if (std::isinf(x)) return x;
    if (mag == 0.0) return x;

    // 65520 is the midpoint between 65504 (0x7BFF) and the would-be 65536;
    // round-to-even sends the tie to infinity (0x7C00 has an even payload).
    if (mag >= 65520.0) return sign * HUGE_VAL;

    if (mag < 0x1p-14) {
        // Subnormal range: fixed quantum 2^-24.
        return sign * detail::round_scaled_to_even(mag, -24);
    }

    int e = std::ilogb(mag);  // 2^e <= mag < 2^(e+1), e in [-14, 15]
    return sign * detail::round_scaled_to_even(mag, e - 10);
}

/// True iff x is exactly representable in binary16 (NaN counts).
inline bool is_half_value(double x) {
    if (std::isnan(x)) return true;
    return round_to_half(x) == x;
}

/// Rounds a double to the nearest binary32 value, returned as a double.
/// The cast is correctly rounded (round to nearest even) per IEEE 754.
inline double round_to_float(double x) {
    return static_cast<double>(static_cast<float>(x));
}

inline bool is_float_value(double x) {
    if (std::isnan(x)) return true;
    return round_to_float(x) == x;
}

}  // namespace rdft
