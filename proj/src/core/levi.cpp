#include "hcext/levi.hpp"

#include <algorithm>
#include <functional>

#include "hcext/arith.hpp"
#include "hcext/error.hpp"
#include "hcext/partition.hpp"

namespace hcext {

LeviShape::LeviShape(std::vector<int> blocks) : blocks_(std::move(blocks))
{
    require(!blocks_.empty(), "a Levi shape needs at least one block");
    std::sort(blocks_.begin(), blocks_.end(), std::greater<>());
    for (int m : blocks_) {
        require(m >= 1, "Levi block sizes must be positive");
        n_ += m;
    }
}

bool LeviShape::is_torus() const noexcept
{
    return !blocks_.empty() && blocks_.front() == 1;
}

std::string LeviShape::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < blocks_.size();) {
        std::size_t j = i;
        while (j < blocks_.size() && blocks_[j] == blocks_[i])
            ++j;
        if (!out.empty())
            out += " x ";
        out += "GL_" + std::to_string(blocks_[i]) + "(q)";
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::uint64_t weyl_order(int n)
{
    require(n >= 1, "n must be at least 1");
    return factorial(n);
}

std::uint64_t levi_weyl_order(const LeviShape& shape)
{
    std::uint64_t out = 1;
    for (int m : shape.blocks())
        out = checked_mul(out, factorial(m), "|W_J|");
    return out;
}

std::uint64_t weyl_index(const LeviShape& shape)
{
    return weyl_order(shape.n()) / levi_weyl_order(shape);
}

std::vector<LeviShape> levi_shapes_of(int n)
{
    require(n >= 1, "n must be at least 1");
    std::vector<LeviShape> out;
    for (const auto& p : partitions_of(n))
        out.emplace_back(std::vector<int>(p.parts().begin(), p.parts().end()));
    return out;
}

}  // namespace hcext
