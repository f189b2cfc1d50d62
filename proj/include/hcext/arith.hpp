#pragma once

#include <cstdint>
#include <string_view>

#include "hcext/error.hpp"

namespace hcext {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::string_view what = "product")
{
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw OverflowError(std::string(what) + " overflows 64 bits");
    return out;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, std::string_view what = "sum")
{
    std::uint64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw OverflowError(std::string(what) + " overflows 64 bits");
    return out;
}

// n! for n <= 20; larger arguments throw OverflowError.
std::uint64_t factorial(int n);

// C(n, k), exact; throws OverflowError if the result does not fit.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

bool is_prime(long long x);

// True for p^k with p prime and k >= 1.
bool is_prime_power(long long x);

}  // namespace hcext
