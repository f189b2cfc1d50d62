#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hcext/arith.hpp"
#include "hcext/bounds.hpp"
#include "hcext/decomp_matrix.hpp"
#include "hcext/harish_chandra.hpp"
#include "hcext/levi.hpp"
#include "hcext/oracles.hpp"
#include "hcext/report.hpp"

using namespace hcext;

namespace {

struct Check {
    std::vector<std::string> problems;

    template <class A, class B>
    void equal(const std::string& what, const A& got, const B& want)
    {
        if (!(got == want)) {
            std::ostringstream os;
            os << what << ": got " << got << ", want " << want;
            problems.push_back(os.str());
        }
    }
};

std::uint64_t best(const BoundResult& r)
{
    return r.best_is_numeric() ? std::get<std::uint64_t>(r.best) : 0;
}

void criterion1(Check& c)
{
    const auto ctx = GroupContext::make(2, 3, 2);
    const auto cls = classify(Partition{1, 1}, ctx);
    c.equal("label", std::string(to_string(cls.label)), std::string("NonPrincipalSeries-Cuspidal"));
    c.equal("vertex", cls.vertex.to_string(), std::string("GL_2(q)"));
}

void criterion2(Check& c)
{
    const auto ctx = GroupContext::make(3, 3, 2);
    const Partition mu{1, 1, 1};
    c.equal("vertex", vertex_of(mu, ctx).to_string(), LeviShape({1, 2}).to_string());
    c.equal("index_bound", index_bound(mu, ctx), 3u);
    c.equal("best((2,1),(1^3))", best(best_bound(Partition{2, 1}, mu, ctx)), 3u);
    const auto gt = best_bound(Partition{3}, mu, ctx);
    c.equal("best((3),(1^3))", best(gt), 1u);
    c.equal("best tag", std::string(to_string(gt.best_tag)), std::string("TrivialSourceGT"));
}

void criterion3(Check& c)
{
    const Partition mu{1, 1, 1};
    for (auto [q, cuspidal, want] : {std::tuple<std::uint64_t, bool, std::uint64_t>{4, true, 1}, {7, true, 1},
                                     {2, false, 3}, {5, false, 3}}) {
        const auto ctx = GroupContext::make(3, q, 3);
        const std::string tag = "q=" + std::to_string(q) + " ";
        const auto cls = classify(mu, ctx);
        c.equal(tag + "cuspidal", cls.label == SeriesLabel::Cuspidal, cuspidal);
        if (!cuspidal)
            c.equal(tag + "vertex", cls.vertex.to_string(), LeviShape({2, 1}).to_string());
        c.equal(tag + "index_bound", index_bound(mu, ctx), want);
        c.equal(tag + "best((2,1),(1^3))", best(best_bound(Partition{2, 1}, mu, ctx)), want);
    }
}

void criterion4(Check& c)
{
    const auto doc = build_report("gl4-r2");
    std::vector<std::string> decomps, vertices;
    std::vector<std::uint64_t> indices, statements;
    for (const auto& v : doc["vertices"]) {
        decomps.push_back(v["decomposition"]["text"].get<std::string>());
        vertices.push_back(v["vertex"]["text"].get<std::string>());
        indices.push_back(v["index"].get<std::uint64_t>());
    }
    for (const auto& b : doc["bounds"])
        statements.push_back(b["index_bound"].get<std::uint64_t>());
    auto join = [](const auto& xs) {
        std::ostringstream os;
        for (std::size_t i = 0; i < xs.size(); ++i)
            os << (i ? "; " : "") << xs[i];
        return os.str();
    };
    c.equal("decompositions", join(decomps), std::string("4(1); (1^2) + 2(1); 2(1^2)"));
    c.equal("vertices", join(vertices), std::string("GL_4(q); GL_2(q) x GL_1(q)^2; GL_2(q)^2"));
    c.equal("indices", join(indices), std::string("1; 12; 6"));
    c.equal("bound statements", join(statements), std::string("1; 12; 6; 1; 12; 6"));
}

void criterion5(Check& c)
{
    const auto m = load_fixture("delta3_l2");
    const Partition p111{1, 1, 1};
    c.equal("[X(1^3):D(1^3)]", young_multiplicity(m, p111, p111), 1u);
    c.equal("[X(2,1):D(1^3)]", young_multiplicity(m, Partition{2, 1}, p111), 0u);
    c.equal("[X(3):D(1^3)]", young_multiplicity(m, Partition{3}, p111), 0u);
    c.equal("matrix_bound", matrix_bound(m, p111), 1u);
    const auto ctx = GroupContext::make(3, 3, 2);
    for (const auto& sigma : {Partition{3}, Partition{2, 1}})
        c.equal("best(" + sigma.to_string() + ",1^3)", best(best_bound(sigma, p111, ctx, {.matrix = &m})), 1u);
}

void criterion6(Check& c)
{
    const auto m = load_fixture("delta4_l2");
    const Partition p4{4}, p31{3, 1}, p22{2, 2}, p211{2, 1, 1}, p1111{1, 1, 1, 1};
    const std::vector<Partition> columns{p22, p211, p1111};
    const std::vector<std::pair<Partition, std::vector<std::uint64_t>>> table{
        {p1111, {0, 0, 1}}, {p211, {1, 1, 0}}, {p22, {1, 0, 0}}, {p31, {0, 0, 0}}, {p4, {0, 0, 0}},
    };
    for (const auto& [lambda, row] : table)
        for (std::size_t i = 0; i < columns.size(); ++i)
            c.equal("[X(" + lambda.to_string() + "):D(" + columns[i].to_string() + ")]",
                    young_multiplicity(m, lambda, columns[i]), row[i]);
    const auto ctx = GroupContext::make(4, 3, 2);
    for (const auto& sigma : {p4, p31})
        for (const auto& mu : columns)
            c.equal("best(" + sigma.to_string() + "," + mu.to_string() + ")",
                    best(best_bound(sigma, mu, ctx, {.matrix = &m})), 1u);
}

void add_report(Check& c, const oracles::OracleReport& r)
{
    if (r.checked == 0)
        c.problems.push_back(r.name + ": nothing checked");
    for (const auto& f : r.failures)
        c.problems.push_back(r.name + " " + f.input + ": expected " + f.expected + ", got " + f.got);
}

void criterion7(Check& c)
{
    add_report(c, oracles::check_lr_uniqueness(10));
    add_report(c, oracles::check_partition_duality(10));
}

void criterion8(Check& c)
{
    add_report(c, oracles::check_coset_index(6));
    add_report(c, oracles::check_kunneth(20, 6));
}

void criterion9(Check& c)
{
    int contexts = 0;
    for (int n = 1; n <= 5; ++n)
        for (int r : {2, 3, 5})
            for (std::uint64_t q = 2; q <= 32; ++q) {
                if (!is_prime_power(static_cast<long long>(q)) || (q - 1) % static_cast<std::uint64_t>(r) != 0)
                    continue;
                ++contexts;
                const auto ctx = GroupContext::make(n, q, r);
                for (std::uint64_t d : {1, 3}) {
                    const auto res = best_bound(Partition{n}, Partition{n}, ctx, {.dims = ModuleDims{1, d}});
                    c.equal("n=" + std::to_string(n) + " q=" + std::to_string(q) + " r=" + std::to_string(r),
                            best(res), factorial(n) + static_cast<std::uint64_t>(*ctx.e()));
                }
            }
    if (contexts == 0)
        c.problems.push_back("no contexts checked");
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"GL_2 r=2: D(1,(1^2)) is cuspidal", criterion1},
        {"GL_3 r=2: vertex, index bound 3, bounds 3 and 1", criterion2},
        {"GL_3 r=3: cuspidal when q=1 mod 3, vertex GL_2 x GL_1 otherwise", criterion3},
        {"GL_4 r=2 report table", criterion4},
        {"Delta_3 multiplicities and improved bounds", criterion5},
        {"Delta_4 multiplicity table and improved bounds", criterion6},
        {"partition properties and l-r-adic uniqueness", criterion7},
        {"coset and Kunneth oracles", criterion8},
        {"trivial-source bound n! + e", criterion9},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.problems.push_back(std::string("exception: ") + e.what());
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        std::printf("[%s] criterion %zu: %s (%lld ms)\n", c.problems.empty() ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), static_cast<long long>(ms.count()));
        for (const auto& p : c.problems)
            std::printf("    %s\n", p.c_str());
        failed += !c.problems.empty();
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
