#ifndef KRQ_CHECKED_HPP
#define KRQ_CHECKED_HPP

#include "krq/errors.hpp"

namespace krq {

// Exponents and multiplicities are 64-bit and overflow is a hard error,
// never wraparound.

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        fail(ErrorCode::arithmetic_overflow, "integer overflow in addition");
    return r;
}

inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r))
        fail(ErrorCode::arithmetic_overflow, "integer overflow in subtraction");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        fail(ErrorCode::arithmetic_overflow, "integer overflow in multiplication");
    return r;
}

inline long long checked_neg(long long a) {
    return checked_sub(0, a);
}

} // namespace krq

#endif
