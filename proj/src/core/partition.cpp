#include "hcext/partition.hpp"

#include <algorithm>
#include <charconv>

#include "hcext/arith.hpp"
#include "hcext/error.hpp"

namespace hcext {

namespace {

int parse_int(std::string_view s, std::string_view whole)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ValidationError("malformed partition \"" + std::string(whole) + "\"");
    return v;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw ValidationError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw ValidationError("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::from_parts_with_zeros(std::vector<int> parts)
{
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text)
{
    std::string_view body = trim(text);
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
        body = trim(body.substr(1, body.size() - 2));
    if (body.empty() || body == "0")
        return Partition();

    std::vector<int> parts;
    while (true) {
        auto comma = body.find(',');
        std::string_view item = trim(body.substr(0, comma));
        auto caret = item.find('^');
        int value = parse_int(trim(item.substr(0, caret)), text);
        int count = caret == std::string_view::npos ? 1 : parse_int(trim(item.substr(caret + 1)), text);
        if (value < 1 || count < 1)
            throw ValidationError("malformed partition \"" + std::string(text) + "\"");
        parts.insert(parts.end(), count, value);
        if (comma == std::string_view::npos)
            break;
        body.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const
{
    if (parts_.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size();) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i])
            ++j;
        if (!out.empty())
            out += ',';
        out += std::to_string(parts_[i]);
        if (j - i > 1)
            out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

Partition conjugate(const Partition& p)
{
    std::vector<int> out;
    if (p.empty())
        return Partition();
    out.reserve(static_cast<std::size_t>(p[0]));
    for (int col = 0; col < p[0]; ++col) {
        int height = 0;
        for (int part : p.parts())
            if (part > col)
                ++height;
        out.push_back(height);
    }
    return Partition(std::move(out));
}

bool is_l_regular(const Partition& p, int l)
{
    require(l >= 2, "l must be at least 2");
    auto parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        if (j - i >= static_cast<std::size_t>(l))
            return false;
        i = j;
    }
    return true;
}

bool is_l_restricted(const Partition& p, int l)
{
    require(l >= 2, "l must be at least 2");
    for (std::size_t i = 0; i < p.length(); ++i)
        if (p[i] - p[i + 1] >= l)
            return false;
    return true;
}

bool dominates(const Partition& a, const Partition& b)
{
    require(a.size() == b.size(), "dominance compares partitions of different sizes ("
                                      + a.to_string() + " vs " + b.to_string() + ")");
    int sa = 0, sb = 0;
    for (std::size_t k = 0; k < std::max(a.length(), b.length()); ++k) {
        sa += a[k];
        sb += b[k];
        if (sa < sb)
            return false;
    }
    return true;
}

std::vector<Partition> partitions_of(int n)
{
    require(n >= 0, "cannot enumerate partitions of a negative number");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // Standard successor: strip trailing 1s, decrement the last larger part,
    // then refill greedily with copies of it.
    std::vector<int> cur{n};
    while (true) {
        out.emplace_back(cur);
        int ones = 0;
        while (!cur.empty() && cur.back() == 1) {
            cur.pop_back();
            ++ones;
        }
        if (cur.empty())
            break;
        int v = --cur.back();
        int rest = ones + 1;
        while (rest > 0) {
            int take = std::min(v, rest);
            cur.push_back(take);
            rest -= take;
        }
    }
    return out;
}

RestrictedSplit restricted_split(const Partition& p, int modulus)
{
    require(modulus >= 2, "modulus must be at least 2");
    const std::size_t k = p.length();
    std::vector<int> digit(k), quotient(k);
    int prev = 0;
    // Bottom-up: the smallest part fixes the lowest digit, and each earlier digit
    // is the representative of its residue class in [prev, prev + modulus).
    for (std::size_t idx = k; idx-- > 0;) {
        int part = p[idx];
        int d = idx + 1 == k ? part % modulus : prev + ((part - prev) % modulus + modulus) % modulus;
        digit[idx] = d;
        quotient[idx] = (part - d) / modulus;
        prev = d;
    }
    return {Partition::from_parts_with_zeros(std::move(digit)),
            Partition::from_parts_with_zeros(std::move(quotient))};
}

long long LrAdicDecomposition::weight(std::size_t a) const
{
    long long w = l;
    for (std::size_t i = 0; i < a; ++i)
        w = static_cast<long long>(checked_mul(static_cast<std::uint64_t>(w), static_cast<std::uint64_t>(r),
                                               "l*r^a"));
    return w;
}

Partition LrAdicDecomposition::reconstruct() const
{
    std::size_t len = minus1.length();
    for (const auto& h : higher)
        len = std::max(len, h.length());
    std::vector<int> parts(len);
    for (std::size_t i = 0; i < len; ++i) {
        long long v = minus1[i];
        for (std::size_t a = 0; a < higher.size(); ++a)
            v += weight(a) * higher[a][i];
        parts[i] = static_cast<int>(v);
    }
    return Partition::from_parts_with_zeros(std::move(parts));
}

std::string LrAdicDecomposition::to_string() const
{
    std::string out;
    auto term = [&](long long coefficient, const Partition& p) {
        if (p.empty())
            return;
        if (!out.empty())
            out += " + ";
        if (coefficient != 1)
            out += std::to_string(coefficient);
        out += "(" + p.to_string() + ")";
    };
    term(1, minus1);
    for (std::size_t a = 0; a < higher.size(); ++a)
        term(weight(a), higher[a]);
    return out.empty() ? "0" : out;
}

LrAdicDecomposition lr_adic_decomposition(const Partition& p, int l, int r)
{
    require(l >= 2, "l must be at least 2");
    require(is_prime(r), "r must be prime (got " + std::to_string(r) + ")");

    LrAdicDecomposition out;
    out.l = l;
    out.r = r;
    auto first = restricted_split(p, l);
    out.minus1 = std::move(first.digit);
    Partition rest = std::move(first.quotient);
    while (!rest.empty()) {
        auto next = restricted_split(rest, r);
        out.higher.push_back(std::move(next.digit));
        rest = std::move(next.quotient);
    }
    while (!out.higher.empty() && out.higher.back().empty())
        out.higher.pop_back();
    return out;
}

}  // namespace hcext
