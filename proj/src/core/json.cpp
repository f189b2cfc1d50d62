#include "hcext/json.hpp"

namespace hcext {

using nlohmann::json;

json to_json(const GroupContext& ctx)
{
    json j;
    j["n"] = ctx.n();
    j["q"] = ctx.q() ? json(*ctx.q()) : json(nullptr);
    j["r"] = ctx.r();
    j["l"] = ctx.l();
    j["l_overridden"] = ctx.l_overridden();
    j["e"] = ctx.e() ? json(*ctx.e()) : json(nullptr);
    j["weyl_order"] = ctx.weyl_order();
    auto c1 = ctx.case_one();
    j["case_one"] = c1 ? json(*c1) : json(nullptr);
    j["case"] = c1 ? json(*c1 ? "I" : "II") : json(nullptr);
    return j;
}

json to_json(const LrAdicDecomposition& dec)
{
    json j;
    j["l"] = dec.l;
    j["r"] = dec.r;
    j["text"] = dec.to_string();
    j["minus1"] = dec.minus1.to_string();
    j["n_minus1"] = dec.minus1.size();
    json higher = json::array();
    for (std::size_t a = 0; a < dec.higher.size(); ++a)
        higher.push_back({{"a", a}, {"weight", dec.weight(a)}, {"partition", dec.higher[a].to_string()},
                          {"size", dec.higher[a].size()}});
    j["higher"] = std::move(higher);
    return j;
}

json to_json(const LeviShape& shape)
{
    return {{"text", shape.to_string()},
            {"blocks", std::vector<int>(shape.blocks().begin(), shape.blocks().end())},
            {"torus", shape.is_torus()},
            {"whole_group", shape.is_whole_group()}};
}

json to_json(const BoundValue& value)
{
    if (const auto* n = std::get_if<std::uint64_t>(&value))
        return {{"numeric", true}, {"value", *n}, {"text", std::to_string(*n)}};
    const auto& s = std::get<SymbolicBound>(value);
    return {{"numeric", false}, {"base", s.base}, {"coefficient", s.coefficient}, {"text", s.to_string()}};
}

json to_json(const BoundResult& result)
{
    json entries = json::array();
    for (const auto& e : result.entries) {
        json item = to_json(e.value);
        item["tag"] = std::string(to_string(e.tag));
        entries.push_back(std::move(item));
    }
    json best = to_json(result.best);
    best["tag"] = std::string(to_string(result.best_tag));
    return {{"entries", std::move(entries)}, {"best", std::move(best)}, {"warnings", result.warnings}};
}

json to_json(const oracles::OracleReport& report)
{
    json failures = json::array();
    for (const auto& f : report.failures)
        failures.push_back({{"input", f.input}, {"expected", f.expected}, {"got", f.got}});
    return {{"name", report.name}, {"checked", report.checked}, {"failed", report.failures.size()},
            {"failures", std::move(failures)}};
}

json vertex_json(const Partition& mu, const GroupContext& ctx)
{
    const auto dec = vertex_decomposition(mu, ctx);
    const auto cls = classify(mu, ctx);
    json j;
    j["mu"] = mu.to_string();
    j["mu_conjugate"] = conjugate(mu).to_string();
    j["decomposition"] = to_json(dec);
    j["vertex"] = to_json(cls.vertex);
    j["label"] = std::string(to_string(cls.label));
    j["levi_weyl_order"] = levi_weyl_order(cls.vertex);
    j["index"] = weyl_index(cls.vertex);
    return j;
}

json matrix_json(const DecompositionMatrix& m)
{
    json j;
    j["n"] = m.n();
    j["l"] = m.l();
    j["r"] = m.r_note() ? json(*m.r_note()) : json(nullptr);
    j["source"] = m.source();
    j["canonical"] = m.serialize();
    return j;
}

}  // namespace hcext
