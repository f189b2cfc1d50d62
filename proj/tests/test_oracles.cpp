#include <doctest.h>

#include <algorithm>

#include "hcext/decomp_matrix.hpp"
#include "hcext/error.hpp"
#include "hcext/oracles.hpp"

using namespace hcext;
using namespace hcext::oracles;

TEST_CASE("exhaustive lr decompositions")
{
    auto all = exhaustive_lr_decompositions(Partition{3}, 2, 2, default_depth_cap(3, 2, 2));
    REQUIRE(all.size() == 1);
    CHECK(all[0].to_string() == "(1) + 2(1)");

    all = exhaustive_lr_decompositions(Partition{2, 1}, 2, 2, default_depth_cap(3, 2, 2));
    REQUIRE(all.size() == 1);
    CHECK(all[0].minus1 == Partition{2, 1});
    CHECK(all[0].higher.empty());

    for (auto [l, r] : {std::pair{2, 2}, {3, 3}, {2, 5}})
        CHECK(exhaustive_lr_decompositions(Partition{1}, l, r, default_depth_cap(1, l, r)).size() == 1);
}

TEST_CASE("oracle suites pass")
{
    for (const auto& report : run_all(10)) {
        CAPTURE(report.name);
        CHECK(report.checked > 0);
        CHECK(report.ok());
    }
    CHECK_THROWS_AS(run_all(0), ValidationError);
    CHECK_THROWS_AS(run_all(15), ValidationError);
}

TEST_CASE("delta3 constraints force entries")
{
    const auto solutions = delta3_constraint_solve();
    REQUIRE_FALSE(solutions.empty());
    const auto forced = forced_entries(solutions);
    auto value_of = [&](const Partition& row, const Partition& col) -> std::optional<std::uint64_t> {
        for (const auto& f : forced)
            if (f.row == row && f.column == col)
                return f.value;
        return std::nullopt;
    };
    const Partition p3{3}, p21{2, 1}, p111{1, 1, 1};
    CHECK(value_of(p21, p111) == 0u);
    CHECK(value_of(p3, p21) == 0u);
    CHECK(value_of(p3, p3) == 1u);
    CHECK(value_of(p21, p3) == 0u);
    CHECK(value_of(p111, p3) == 1u);

    const auto fixture = load_fixture("delta3_l2");
    for (const auto& f : forced)
        CHECK(fixture.at(f.row, f.column) == f.value);
    const auto parts = partitions_of(3);
    CHECK(std::any_of(solutions.begin(), solutions.end(), [&](const DecompositionMatrix& m) {
        for (const auto& a : parts)
            for (const auto& b : parts)
                if (m.at(a, b) != fixture.at(a, b))
                    return false;
        return true;
    }));
}

TEST_CASE("delta4 fixture is one of the constraint completions")
{
    const auto solutions = delta4_constraint_solve();
    REQUIRE_FALSE(solutions.empty());
    const auto fixture = load_fixture("delta4_l2");
    for (const auto& f : forced_entries(solutions))
        CHECK(fixture.at(f.row, f.column) == f.value);
    const Partition p4{4}, p31{3, 1}, p22{2, 2}, p211{2, 1, 1}, p1111{1, 1, 1, 1};
    for (const auto& s : solutions) {
        CHECK(s.at(p31, p4) == 0);
        CHECK(s.at(p1111, p22) == 0);
    }
}
