#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace euclidsail {

// All arithmetic on matrix entries, lattice coordinates and counts goes
// through these helpers: overflow is a reported error, never wraparound.

inline int64_t checked_add(int64_t x, int64_t y) {
    int64_t r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline int64_t checked_sub(int64_t x, int64_t y) {
    int64_t r;
    if (__builtin_sub_overflow(x, y, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline int64_t checked_mul(int64_t x, int64_t y) {
    int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

// a*d - b*c evaluated without intermediate wraparound.
inline int64_t det2(int64_t a, int64_t b, int64_t c, int64_t d) {
    __int128 v = static_cast<__int128>(a) * d - static_cast<__int128>(b) * c;
    if (v < std::numeric_limits<int64_t>::min() || v > std::numeric_limits<int64_t>::max())
        throw std::overflow_error("2x2 determinant overflows int64");
    return static_cast<int64_t>(v);
}

struct ExtGcd {
    int64_t g;  // gcd, >= 0
    int64_t s;  // coefficient of a
    int64_t t;  // coefficient of b: g == s*a + t*b
};

inline ExtGcd ext_gcd(int64_t a, int64_t b) {
    int64_t old_r = a, r = b;
    int64_t old_s = 1, s = 0;
    int64_t old_t = 0, t = 1;
    while (r != 0) {
        int64_t q = old_r / r;
        int64_t tmp;
        tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

}  // namespace euclidsail
