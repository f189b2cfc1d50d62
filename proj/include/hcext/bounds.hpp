#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hcext/group_context.hpp"
#include "hcext/partition.hpp"

namespace hcext {

class DecompositionMatrix;

// Which result a bound value comes from.
enum class BoundTag {
    DistinctSeriesZero,  // Y, V in different principal series: Ext^1 = 0
    CaseOneSameSeries,   // same series, r does not divide |B|: <= |W|
    SameSeriesGeneral,   // same series: <= [W:W(T,X)] |W| + min(dim Y, dim V) e
    IndexBound,          // V with vertex L_J != T: <= |W| / |W_J|
    CuspidalBound,       // V cuspidal: <= 1
    TrivialSourceGT,     // Y trivial, V outside the principal series: <= 1
    MatrixBound,         // max_lambda [X(1,lambda) : D(1,mu)]
};

std::string_view to_string(BoundTag tag);

// base + coefficient * min(dim Y, dim V), for when the dimensions are unknown.
struct SymbolicBound {
    std::uint64_t base = 0;
    std::uint64_t coefficient = 0;

    std::string to_string() const;
    friend bool operator==(const SymbolicBound&, const SymbolicBound&) = default;
};

using BoundValue = std::variant<std::uint64_t, SymbolicBound>;

std::string to_string(const BoundValue& v);

struct BoundEntry {
    BoundTag tag;
    BoundValue value;
};

struct BoundResult {
    std::vector<BoundEntry> entries;
    BoundValue best;
    BoundTag best_tag;
    std::vector<std::string> warnings;

    bool best_is_numeric() const { return std::holds_alternative<std::uint64_t>(best); }
    // Value of the first entry with this tag, if any.
    std::optional<BoundValue> find(BoundTag tag) const;
};

// dim H^n(A, k) for an elementary abelian r-group A of rank e: C(n+e-1, n).
std::uint64_t cohomology_dim(std::uint64_t n, std::uint64_t e);

// Upper bound dim_v * e on dim Ext^1 over a Sylow r-subgroup of T.
std::uint64_t sylow_ext_bound(std::uint64_t dim_v, std::uint64_t e);

struct ModuleDims {
    std::uint64_t dim_y = 1;
    std::uint64_t dim_v = 1;
};

// Bound for Y, V in one principal series Irr_k(G | (T,X)). inertia_index is
// [W : W(T,X)], which is 1 for the unipotent series.
BoundEntry same_series_bound(const GroupContext& ctx, std::uint64_t inertia_index,
                             std::optional<ModuleDims> dims);

// Zero bound for modules in distinct principal series.
BoundEntry distinct_series_bound();

// |W| / |W_J| for the vertex L_J of D(1,mu). Rejects l-regular mu.
std::uint64_t index_bound(const Partition& mu, const GroupContext& ctx);

struct BoundOptions {
    const DecompositionMatrix* matrix = nullptr;
    std::optional<ModuleDims> dims;  // (dim D(1,sigma), dim D(1,mu))
    std::uint64_t inertia_index = 1;
};

// Every applicable bound on dim Ext^1(D(1,sigma), D(1,mu)). sigma must be
// l-regular; otherwise UnsupportedError.
BoundResult best_bound(const Partition& sigma, const Partition& mu, const GroupContext& ctx,
                       const BoundOptions& options = {});

}  // namespace hcext
