#pragma once

#include <string_view>

#include "hcext/group_context.hpp"
#include "hcext/levi.hpp"
#include "hcext/partition.hpp"

namespace hcext {

enum class SeriesLabel {
    UnipotentPrincipalSeries,
    Cuspidal,
    ProperLevi,
};

std::string_view to_string(SeriesLabel label);

struct SeriesClassification {
    SeriesLabel label;
    LeviShape vertex;
};

// Dipper-Du: decompose the conjugate of mu l-r-adically; the vertex of D(1,mu)
// has n_{-1} blocks GL_1, n_0 blocks GL_l, and n_a blocks GL_{l r^a}.
LeviShape vertex_of(const Partition& mu, const GroupContext& ctx);

// The decomposition vertex_of reads its block counts from.
LrAdicDecomposition vertex_decomposition(const Partition& mu, const GroupContext& ctx);

SeriesClassification classify(const Partition& mu, const GroupContext& ctx);

}  // namespace hcext
