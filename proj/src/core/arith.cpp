#include "hcext/arith.hpp"

#include <numeric>

namespace hcext {

std::uint64_t factorial(int n)
{
    require(n >= 0, "factorial of a negative number");
    std::uint64_t out = 1;
    for (int i = 2; i <= n; ++i)
        out = checked_mul(out, static_cast<std::uint64_t>(i), std::to_string(n) + "!");
    return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t out = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // out * (n-k+i) / i is exact at every step; divide by the gcd first to delay overflow.
        std::uint64_t num = n - k + i;
        std::uint64_t den = i;
        std::uint64_t g = std::gcd(out, den);
        out /= g;
        den /= g;
        num /= den;
        out = checked_mul(out, num, "binomial coefficient");
    }
    return out;
}

}  // namespace hcext

namespace hcext {

bool is_prime(long long x)
{
    if (x < 2)
        return false;
    for (long long d = 2; d <= x / d; ++d)
        if (x % d == 0)
            return false;
    return true;
}

bool is_prime_power(long long x)
{
    if (x < 2)
        return false;
    long long p = 2;
    while (p <= x / p && x % p != 0)
        ++p;
    if (x % p != 0)
        p = x;  // no factor up to sqrt(x): x itself is prime
    while (x % p == 0)
        x /= p;
    return x == 1;
}

}  // namespace hcext
