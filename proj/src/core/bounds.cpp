#include "hcext/bounds.hpp"

#include <algorithm>

#include "hcext/arith.hpp"
#include "hcext/decomp_matrix.hpp"
#include "hcext/error.hpp"
#include "hcext/harish_chandra.hpp"

namespace hcext {

std::string_view to_string(BoundTag tag)
{
    switch (tag) {
    case BoundTag::DistinctSeriesZero:
        return "DistinctSeriesZero";
    case BoundTag::CaseOneSameSeries:
        return "CaseOneSameSeries";
    case BoundTag::SameSeriesGeneral:
        return "SameSeriesGeneral";
    case BoundTag::IndexBound:
        return "IndexBound";
    case BoundTag::CuspidalBound:
        return "CuspidalBound";
    case BoundTag::TrivialSourceGT:
        return "TrivialSourceGT";
    case BoundTag::MatrixBound:
        return "MatrixBound";
    }
    return "?";
}

std::string SymbolicBound::to_string() const
{
    return std::to_string(base) + " + " + std::to_string(coefficient) + "*min(dimY,dimV)";
}

std::string to_string(const BoundValue& v)
{
    if (const auto* n = std::get_if<std::uint64_t>(&v))
        return std::to_string(*n);
    return std::get<SymbolicBound>(v).to_string();
}

std::optional<BoundValue> BoundResult::find(BoundTag tag) const
{
    for (const auto& e : entries)
        if (e.tag == tag)
            return e.value;
    return std::nullopt;
}

std::uint64_t cohomology_dim(std::uint64_t n, std::uint64_t e)
{
    require(e >= 1, "cohomology_dim needs rank e >= 1");
    return binomial(checked_add(n, e - 1, "n+e-1"), n);
}

std::uint64_t sylow_ext_bound(std::uint64_t dim_v, std::uint64_t e)
{
    require(dim_v >= 1, "module dimension must be at least 1");
    return checked_mul(dim_v, e, "dim V * e");
}

BoundEntry same_series_bound(const GroupContext& ctx, std::uint64_t inertia_index, std::optional<ModuleDims> dims)
{
    require(inertia_index >= 1, "inertia index [W:W(T,X)] must be at least 1");
    const std::uint64_t w = ctx.weyl_order();
    if (case_one_applies(ctx))
        return {BoundTag::CaseOneSameSeries, w};

    const auto e = static_cast<std::uint64_t>(*ctx.e());
    const std::uint64_t base = checked_mul(inertia_index, w, "[W:W(T,X)] |W|");
    if (!dims)
        return {BoundTag::SameSeriesGeneral, SymbolicBound{base, e}};
    require(dims->dim_y >= 1 && dims->dim_v >= 1, "module dimensions must be at least 1");
    const std::uint64_t tail = sylow_ext_bound(std::min(dims->dim_y, dims->dim_v), e);
    return {BoundTag::SameSeriesGeneral, checked_add(base, tail, "same-series bound")};
}

BoundEntry distinct_series_bound()
{
    return {BoundTag::DistinctSeriesZero, std::uint64_t{0}};
}

std::uint64_t index_bound(const Partition& mu, const GroupContext& ctx)
{
    const auto cls = classify(mu, ctx);
    require(cls.label != SeriesLabel::UnipotentPrincipalSeries,
            "(" + mu.to_string() + ") is " + std::to_string(ctx.l())
                + "-regular, so D(1,mu) lies in the principal series and the index bound does not apply");
    return weyl_index(cls.vertex);
}

BoundResult best_bound(const Partition& sigma, const Partition& mu, const GroupContext& ctx,
                       const BoundOptions& options)
{
    const std::string n_str = std::to_string(ctx.n());
    require(sigma.size() == ctx.n(), "sigma = (" + sigma.to_string() + ") is not a partition of n = " + n_str);
    require(mu.size() == ctx.n(), "mu = (" + mu.to_string() + ") is not a partition of n = " + n_str);
    if (!is_l_regular(sigma, ctx.l()))
        throw UnsupportedError("sigma = (" + sigma.to_string() + ") is not " + std::to_string(ctx.l())
                               + "-regular: no bound is available when Y lies outside a principal series "
                                 "for GL_n labels");
    if (options.matrix) {
        const auto& m = *options.matrix;
        require(m.n() == ctx.n() && m.l() == ctx.l(),
                "decomposition matrix has (n, l) = (" + std::to_string(m.n()) + ", " + std::to_string(m.l())
                    + ") but the context has (" + n_str + ", " + std::to_string(ctx.l()) + ")");
    }

    BoundResult out{.entries = {}, .best = std::uint64_t{0}, .best_tag = BoundTag::IndexBound, .warnings = {}};
    if (is_l_regular(mu, ctx.l())) {
        // Both labels lie in Irr_k(G|B) = Irr_k(G|(T,k)).
        out.entries.push_back(same_series_bound(ctx, options.inertia_index, options.dims));
    } else {
        const auto cls = classify(mu, ctx);
        out.entries.push_back({BoundTag::IndexBound, weyl_index(cls.vertex)});
        if (cls.label == SeriesLabel::Cuspidal)
            out.entries.push_back({BoundTag::CuspidalBound, std::uint64_t{1}});
        if (sigma == Partition({ctx.n()}))
            out.entries.push_back({BoundTag::TrivialSourceGT, std::uint64_t{1}});
        if (options.matrix) {
            if (!is_l_restricted(mu, ctx.l()))
                out.warnings.push_back("mu = (" + mu.to_string() + ") is not " + std::to_string(ctx.l())
                                       + "-restricted; the multiplicity bound is applied using only that "
                                         "D(1,mu) lies outside the principal series");
            out.entries.push_back({BoundTag::MatrixBound, matrix_bound(*options.matrix, mu)});
        }
    }

    const BoundEntry* best = nullptr;
    for (const auto& e : out.entries) {
        const auto* v = std::get_if<std::uint64_t>(&e.value);
        if (!v)
            continue;
        if (!best || *v < std::get<std::uint64_t>(best->value))
            best = &e;
    }
    if (!best)
        best = &out.entries.front();
    out.best = best->value;
    out.best_tag = best->tag;
    return out;
}

}  // namespace hcext
