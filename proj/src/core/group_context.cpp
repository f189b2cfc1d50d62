#include "hcext/group_context.hpp"

#include <string>

#include "hcext/arith.hpp"
#include "hcext/error.hpp"

namespace hcext {

namespace {

void check_field(std::uint64_t q, int r)
{
    require(q >= 2 && q <= static_cast<std::uint64_t>(INT64_MAX) && is_prime_power(static_cast<long long>(q)),
            "q must be a prime power (got " + std::to_string(q) + ")");
    require(is_prime(r), "r must be prime (got " + std::to_string(r) + ")");
    require(q % static_cast<std::uint64_t>(r) != 0,
            "r = " + std::to_string(r) + " divides q = " + std::to_string(q)
                + "; only non-defining characteristic is supported");
}

// Largest supported rank; n! must stay exact in 64 bits.
constexpr int kMaxRank = 20;

}  // namespace

int mult_order(std::uint64_t q, int r)
{
    require(is_prime(r), "r must be prime (got " + std::to_string(r) + ")");
    const std::uint64_t rr = static_cast<std::uint64_t>(r);
    const std::uint64_t base = q % rr;
    require(base != 0, "r = " + std::to_string(r) + " divides q = " + std::to_string(q));
    std::uint64_t acc = base;
    int d = 1;
    while (acc != 1) {
        acc = acc * base % rr;
        ++d;
    }
    return d;
}

int compute_l(std::uint64_t q, int r)
{
    int d = mult_order(q, r);
    return d == 1 ? r : d;
}

int torus_r_rank(int n, std::uint64_t q, int r)
{
    require(n >= 1, "n must be at least 1");
    mult_order(q, r);  // validates r prime, r does not divide q
    return (q - 1) % static_cast<std::uint64_t>(r) == 0 ? n : 0;
}

GroupContext GroupContext::make(int n, std::uint64_t q, int r)
{
    require(n >= 1 && n <= kMaxRank, "n must be between 1 and " + std::to_string(kMaxRank));
    check_field(q, r);
    GroupContext ctx;
    ctx.n_ = n;
    ctx.q_ = q;
    ctx.r_ = r;
    ctx.l_ = compute_l(q, r);
    ctx.e_ = torus_r_rank(n, q, r);
    return ctx;
}

GroupContext GroupContext::with_l_override(int n, std::optional<std::uint64_t> q, int r, int l)
{
    require(n >= 1 && n <= kMaxRank, "n must be between 1 and " + std::to_string(kMaxRank));
    require(l >= 2, "l must be at least 2");
    GroupContext ctx;
    if (q) {
        ctx = make(n, *q, r);
    } else {
        require(is_prime(r), "r must be prime (got " + std::to_string(r) + ")");
        ctx.n_ = n;
        ctx.r_ = r;
    }
    ctx.l_ = l;
    ctx.l_overridden_ = true;
    return ctx;
}

std::uint64_t GroupContext::weyl_order() const
{
    return factorial(n_);
}

std::optional<bool> GroupContext::case_one() const
{
    if (!q_)
        return std::nullopt;
    // U is a p-group and r != p, so r | |B| iff r | |T| = (q-1)^n.
    return (*q_ - 1) % static_cast<std::uint64_t>(r_) != 0;
}

bool case_one_applies(const GroupContext& ctx)
{
    auto c = ctx.case_one();
    if (!c)
        throw UnsupportedError("the r | |B| split needs q; supply q alongside the l override");
    return *c;
}

}  // namespace hcext
