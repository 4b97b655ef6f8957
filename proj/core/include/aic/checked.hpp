#pragma once

#include <cstdint>

#include "aic/errors.hpp"

namespace aic::checked {

// Exact 64-bit arithmetic with hard failure on overflow. Silent wraparound
// would corrupt results invisibly; a thrown OverflowError never does.

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("int64 overflow in addition");
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("int64 overflow in subtraction");
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("int64 overflow in multiplication");
    return r;
}

inline std::int64_t negate(std::int64_t a) {
    return sub(0, a);
}

} // namespace aic::checked
