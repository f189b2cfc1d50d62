#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hcext {

// Block sizes of a standard Levi subgroup GL_{m1}(q) x ... x GL_{mk}(q) of
// GL_n(q). Block order carries no meaning, so blocks are kept sorted
// descending and two shapes with the same multiset compare equal.
class LeviShape {
public:
    LeviShape() = default;
    explicit LeviShape(std::vector<int> blocks);

    static LeviShape torus(int n) { return LeviShape(std::vector<int>(static_cast<std::size_t>(n), 1)); }
    static LeviShape whole(int n) { return LeviShape({n}); }

    std::span<const int> blocks() const noexcept { return blocks_; }
    int n() const noexcept { return n_; }

    bool is_torus() const noexcept;
    bool is_whole_group() const noexcept { return blocks_.size() == 1; }

    // e.g. "GL_2(q) x GL_1(q)^2".
    std::string to_string() const;

    friend bool operator==(const LeviShape&, const LeviShape&) = default;

private:
    std::vector<int> blocks_;
    int n_ = 0;
};

// |W| = n! for GL_n.
std::uint64_t weyl_order(int n);

// |W_J| = product of m_i! over the blocks.
std::uint64_t levi_weyl_order(const LeviShape& shape);

// [W : W_J] = n! / product of m_i!.
std::uint64_t weyl_index(const LeviShape& shape);

// Every multiset of block sizes summing to n (one per partition of n).
std::vector<LeviShape> levi_shapes_of(int n);

}  // namespace hcext
