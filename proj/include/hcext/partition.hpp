#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hcext {

// An integer partition stored as weakly decreasing positive parts. The empty
// partition (of 0) has no parts.
class Partition {
public:
    Partition() = default;

    // Throws ValidationError unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // Drops trailing zeros, then validates.
    static Partition from_parts_with_zeros(std::vector<int> parts);

    // Grammar: comma separated parts, each optionally "v^k" for k copies of v;
    // "0" (or "") is the empty partition. Example: "2,1^2" == (2,1,1).
    static Partition parse(std::string_view text);

    std::span<const int> parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept { return size_; }

    // Part i, or 0 beyond the last part.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    // Canonical text, e.g. "2,1^2"; the empty partition is "0".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    // Lexicographic on parts; reverse of this is the enumeration order.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

Partition conjugate(const Partition& p);

// No part value occurs l or more times.
bool is_l_regular(const Partition& p, int l);

// The conjugate is l-regular: every difference p_i - p_{i+1} (with a trailing 0) is < l.
bool is_l_restricted(const Partition& p, int l);

// Dominance order a >= b. Throws ValidationError if |a| != |b|.
bool dominates(const Partition& a, const Partition& b);

// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

// lambda = minus1 + l * (higher[0] + r*higher[1] + r^2*higher[2] + ...), part-wise,
// with minus1 l-restricted and every higher[a] r-restricted.
struct LrAdicDecomposition {
    Partition minus1;
    std::vector<Partition> higher;  // no trailing empty entries
    int l = 2;
    int r = 2;

    // Multiplier of higher[a], i.e. l * r^a.
    long long weight(std::size_t a) const;

    // n_a = |higher[a]|.
    int component_size(std::size_t a) const { return a < higher.size() ? higher[a].size() : 0; }

    // Part-wise reconstruction of the decomposed partition.
    Partition reconstruct() const;

    // e.g. "(1^2) + 2(1)"; a sum with no terms renders as "0".
    std::string to_string() const;

    friend bool operator==(const LrAdicDecomposition&, const LrAdicDecomposition&) = default;
};

// The unique l-r-adic decomposition. Requires l >= 2 and r prime.
LrAdicDecomposition lr_adic_decomposition(const Partition& p, int l, int r);

// Splits p into an m-restricted "digit" partition d and a quotient Q with
// p = d + m*Q part-wise. Used for every level of the l-r-adic expansion.
struct RestrictedSplit {
    Partition digit;
    Partition quotient;
};
RestrictedSplit restricted_split(const Partition& p, int modulus);

}  // namespace hcext
