#pragma once

#include <json.hpp>

#include "hcext/bounds.hpp"
#include "hcext/decomp_matrix.hpp"
#include "hcext/group_context.hpp"
#include "hcext/harish_chandra.hpp"
#include "hcext/oracles.hpp"

// JSON views of the domain types. Keys are stable; the CLI's text output is
// rendered from these documents.
namespace hcext {

nlohmann::json to_json(const GroupContext& ctx);
nlohmann::json to_json(const LrAdicDecomposition& dec);
nlohmann::json to_json(const LeviShape& shape);
nlohmann::json to_json(const BoundValue& value);
nlohmann::json to_json(const BoundResult& result);
nlohmann::json to_json(const oracles::OracleReport& report);

// {"mu", "mu_conjugate", "decomposition", "vertex", "label", "levi_weyl_order", "index"}
nlohmann::json vertex_json(const Partition& mu, const GroupContext& ctx);

nlohmann::json matrix_json(const DecompositionMatrix& m);

}  // namespace hcext
