#include "hcext/report.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "hcext/error.hpp"
#include "hcext/json.hpp"

namespace hcext {

using nlohmann::json;

namespace {

struct ExampleSpec {
    std::string_view name;
    int n;
    std::uint64_t q;
    int r;
    std::string_view matrix;  // fixture name, empty for none
    std::string_view setting;
};

// q is a representative: every q with the same l and the same r | q-1 answer
// gives the same tables.
constexpr std::array kExamples{
    ExampleSpec{"gl2-r2", 2, 3, 2, "", "r = 2, q odd"},
    ExampleSpec{"gl3-r2", 3, 3, 2, "", "r = 2, q odd"},
    ExampleSpec{"gl3-r3-o1", 3, 4, 3, "", "r = 3, q = 1 mod 3"},
    ExampleSpec{"gl3-r3-o2", 3, 2, 3, "", "r = 3, q = 2 mod 3"},
    ExampleSpec{"gl4-r2", 4, 3, 2, "", "r = 2, q odd"},
    ExampleSpec{"gl3-r2-matrix", 3, 3, 2, "delta3_l2", "r = 2, q odd"},
    ExampleSpec{"gl4-r2-matrix", 4, 3, 2, "delta4_l2", "r = 2, q odd"},
    ExampleSpec{"gl3-r3-o1-matrix", 3, 4, 3, "delta3_l3", "r = 3, q = 1 mod 3"},
    ExampleSpec{"gl3-r3-o2-matrix", 3, 2, 3, "delta3_l2", "r = 3, q = 2 mod 3"},
    ExampleSpec{"gl4-r7-matrix", 4, 2, 7, "delta4_l3", "r = 7, q = 2 (l = 3)"},
};

std::string paren(const std::string& p)
{
    return "(" + p + ")";
}

std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& row : rows)
            width[c] = std::max(width[c], row[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
        std::string out = " ";
        for (std::size_t c = 0; c < cells.size(); ++c) {
            out += " " + cells[c];
            if (c + 1 < cells.size())
                out += std::string(width[c] - cells[c].size() + 1, ' ');
        }
        return out + "\n";
    };
    std::string out = line(header);
    std::size_t total = 1;
    for (auto w : width)
        total += w + 2;
    out += "  " + std::string(total - 3, '-') + "\n";
    for (const auto& row : rows)
        out += line(row);
    return out;
}

}  // namespace

std::vector<std::string> report_names()
{
    std::vector<std::string> out;
    for (const auto& e : kExamples)
        out.emplace_back(e.name);
    return out;
}

json build_report(std::string_view example)
{
    auto it = std::find_if(kExamples.begin(), kExamples.end(), [&](const ExampleSpec& e) { return e.name == example; });
    if (it == kExamples.end())
        throw ValidationError("unknown example \"" + std::string(example) + "\"");
    const ExampleSpec& spec = *it;
    const auto ctx = GroupContext::make(spec.n, spec.q, spec.r);
    std::optional<DecompositionMatrix> matrix;
    if (!spec.matrix.empty())
        matrix = load_fixture(spec.matrix);

    json j;
    j["example"] = std::string(spec.name);
    j["title"] = "GL_" + std::to_string(spec.n) + "(q), " + std::string(spec.setting);
    j["context"] = to_json(ctx);

    const auto all = partitions_of(ctx.n());
    std::vector<Partition> regular, outside;
    for (const auto& p : all)
        (is_l_regular(p, ctx.l()) ? regular : outside).push_back(p);
    // Vertex rows follow the enumeration order of the conjugates mu'.
    std::vector<Partition> by_conjugate = outside;
    std::stable_sort(by_conjugate.begin(), by_conjugate.end(),
                     [](const Partition& a, const Partition& b) { return conjugate(a) > conjugate(b); });

    json series = json::array();
    for (const auto& p : regular)
        series.push_back(p.to_string());
    j["principal_series"] = std::move(series);

    json vertices = json::array();
    for (const auto& mu : by_conjugate)
        vertices.push_back(vertex_json(mu, ctx));
    j["vertices"] = std::move(vertices);

    BoundOptions options;
    if (matrix)
        options.matrix = &*matrix;
    json bounds = json::array();
    for (const auto& sigma : regular)
        for (const auto& mu : by_conjugate) {
            const auto result = best_bound(sigma, mu, ctx, options);
            json b;
            b["sigma"] = sigma.to_string();
            b["mu"] = mu.to_string();
            b["index_bound"] = std::get<std::uint64_t>(*result.find(BoundTag::IndexBound));
            if (auto mb = result.find(BoundTag::MatrixBound))
                b["matrix_bound"] = std::get<std::uint64_t>(*mb);
            b["result"] = to_json(result);
            bounds.push_back(std::move(b));
        }
    j["bounds"] = std::move(bounds);

    if (matrix) {
        j["matrix"] = matrix_json(*matrix);
        j["matrix"]["name"] = std::string(spec.matrix);
        json table = json::array();
        for (auto lambda = all.rbegin(); lambda != all.rend(); ++lambda) {
            json values = json::array();
            for (const auto& nu : outside)
                values.push_back({{"nu", nu.to_string()}, {"value", young_multiplicity(*matrix, *lambda, nu)}});
            table.push_back({{"lambda", lambda->to_string()}, {"values", std::move(values)}});
        }
        j["young_multiplicities"] = std::move(table);
        json maxima = json::array();
        for (const auto& nu : outside)
            maxima.push_back({{"mu", nu.to_string()}, {"value", matrix_bound(*matrix, nu)}});
        j["matrix_bounds"] = std::move(maxima);
    }
    return j;
}

std::string render_report_text(const json& report)
{
    const auto& ctx = report.at("context");
    std::string out = "Example " + report.at("example").get<std::string>() + ": "
                      + report.at("title").get<std::string>() + "\n";
    out += "  n = " + std::to_string(ctx.at("n").get<int>()) + ", q = " + std::to_string(ctx.at("q").get<std::uint64_t>())
           + ", r = " + std::to_string(ctx.at("r").get<int>()) + ", l = " + std::to_string(ctx.at("l").get<int>())
           + ", e = " + std::to_string(ctx.at("e").get<int>())
           + ", |W| = " + std::to_string(ctx.at("weyl_order").get<std::uint64_t>()) + ", Case "
           + ctx.at("case").get<std::string>() + "\n";
    out += "  (q is a representative: the tables depend only on l and on whether r divides q-1)\n\n";

    std::string series;
    for (const auto& p : report.at("principal_series"))
        series += (series.empty() ? "" : ", ") + std::string("D(1,") + paren(p.get<std::string>()) + ")";
    out += "Unipotent principal series Irr_k(G|B): {" + series + "}\n\n";

    out += "Harish-Chandra vertices of D(1,mu) outside Irr_k(G|B)\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& v : report.at("vertices")) {
        const auto mu_conj = v.at("mu_conjugate").get<std::string>();
        rows.push_back({paren(v.at("mu").get<std::string>()), paren(mu_conj),
                        paren(mu_conj) + " = " + v.at("decomposition").at("text").get<std::string>(),
                        v.at("vertex").at("text").get<std::string>(),
                        std::to_string(v.at("levi_weyl_order").get<std::uint64_t>()),
                        std::to_string(v.at("index").get<std::uint64_t>())});
    }
    out += render_table({"mu", "mu'", "l-r-adic decomposition of mu'", "vertex L_J", "|W_J|", "|W|/|W_J|"}, rows);
    out += "\n";

    const bool with_matrix = report.contains("matrix");
    if (with_matrix) {
        const auto& m = report.at("matrix");
        out += "Decomposition matrix " + m.at("name").get<std::string>() + " (n = " + std::to_string(m.at("n").get<int>())
               + ", l = " + std::to_string(m.at("l").get<int>()) + ")\n";
        out += "  source: " + m.at("source").get<std::string>() + "\n\n";
        out += "Young module multiplicities [X(1,lambda) : D(1,mu)]\n";
        std::vector<std::string> header{"X(1,lambda)"};
        for (const auto& v : report.at("young_multiplicities").front().at("values"))
            header.push_back("D(1," + paren(v.at("nu").get<std::string>()) + ")");
        std::vector<std::vector<std::string>> yrows;
        for (const auto& row : report.at("young_multiplicities")) {
            std::vector<std::string> cells{"X(1," + paren(row.at("lambda").get<std::string>()) + ")"};
            for (const auto& v : row.at("values"))
                cells.push_back(std::to_string(v.at("value").get<std::uint64_t>()));
            yrows.push_back(std::move(cells));
        }
        std::vector<std::string> maxima{"max"};
        for (const auto& v : report.at("matrix_bounds"))
            maxima.push_back(std::to_string(v.at("value").get<std::uint64_t>()));
        yrows.push_back(std::move(maxima));
        out += render_table(header, yrows);
        out += "\n";
    }

    out += "Bounds on dim Ext^1(D(1,sigma), D(1,mu))\n";
    std::vector<std::string> header{"sigma", "mu", "index bound"};
    if (with_matrix)
        header.push_back("matrix bound");
    header.insert(header.end(), {"best", "via"});
    std::vector<std::vector<std::string>> brows;
    for (const auto& b : report.at("bounds")) {
        std::vector<std::string> cells{paren(b.at("sigma").get<std::string>()), paren(b.at("mu").get<std::string>()),
                                       std::to_string(b.at("index_bound").get<std::uint64_t>())};
        if (with_matrix)
            cells.push_back(std::to_string(b.at("matrix_bound").get<std::uint64_t>()));
        const auto& best = b.at("result").at("best");
        cells.push_back(best.at("text").get<std::string>());
        cells.push_back(best.at("tag").get<std::string>());
        brows.push_back(std::move(cells));
    }
    out += render_table(header, brows);

    std::vector<std::string> warnings;
    for (const auto& b : report.at("bounds"))
        for (const auto& w : b.at("result").at("warnings"))
            if (std::find(warnings.begin(), warnings.end(), w.get<std::string>()) == warnings.end())
                warnings.push_back(w.get<std::string>());
    for (const auto& w : warnings)
        out += "  warning: " + w + "\n";
    return out;
}

}  // namespace hcext
