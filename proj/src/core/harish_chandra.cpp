#include "hcext/harish_chandra.hpp"

#include "hcext/error.hpp"

namespace hcext {

std::string_view to_string(SeriesLabel label)
{
    switch (label) {
    case SeriesLabel::UnipotentPrincipalSeries:
        return "UnipotentPrincipalSeries";
    case SeriesLabel::Cuspidal:
        return "NonPrincipalSeries-Cuspidal";
    case SeriesLabel::ProperLevi:
        return "NonPrincipalSeries-ProperLevi";
    }
    return "?";
}

LrAdicDecomposition vertex_decomposition(const Partition& mu, const GroupContext& ctx)
{
    require(mu.size() == ctx.n(), "partition " + mu.to_string() + " is not a partition of n = "
                                      + std::to_string(ctx.n()));
    return lr_adic_decomposition(conjugate(mu), ctx.l(), ctx.r());
}

LeviShape vertex_of(const Partition& mu, const GroupContext& ctx)
{
    const auto dec = vertex_decomposition(mu, ctx);
    std::vector<int> blocks(static_cast<std::size_t>(dec.minus1.size()), 1);
    for (std::size_t a = 0; a < dec.higher.size(); ++a) {
        const auto block = static_cast<int>(dec.weight(a));
        blocks.insert(blocks.end(), static_cast<std::size_t>(dec.component_size(a)), block);
    }
    return LeviShape(std::move(blocks));
}

SeriesClassification classify(const Partition& mu, const GroupContext& ctx)
{
    LeviShape vertex = vertex_of(mu, ctx);
    SeriesLabel label = SeriesLabel::ProperLevi;
    if (vertex.is_torus())
        label = SeriesLabel::UnipotentPrincipalSeries;
    else if (vertex.is_whole_group())
        label = SeriesLabel::Cuspidal;
    return {label, std::move(vertex)};
}

}  // namespace hcext
