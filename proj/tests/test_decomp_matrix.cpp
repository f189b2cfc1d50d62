#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>

#include "hcext/decomp_matrix.hpp"
#include "hcext/error.hpp"

using namespace hcext;

namespace {

const Partition p3{3}, p21{2, 1}, p111{1, 1, 1};
const Partition p4{4}, p31{3, 1}, p22{2, 2}, p211{2, 1, 1}, p1111{1, 1, 1, 1};

std::string error_of(std::string_view text, DecompositionMatrix::LoadOptions opts = {})
{
    try {
        DecompositionMatrix::parse(text, opts);
    } catch (const ValidationError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("delta3 fixture")
{
    const auto m = load_fixture("delta3_l2");
    CHECK(m.n() == 3);
    CHECK(m.l() == 2);
    CHECK(m.at(p3, p3) == 1);
    CHECK(m.at(p21, p3) == 0);
    CHECK(m.at(p111, p3) == 1);
    CHECK(m.at(p111, p111) == 1);
    CHECK(m.at(p3, p111) == 0);
    CHECK(m.at(p3, p21) == 0);
    CHECK(m.at(p21, p111) == 0);

    CHECK(young_multiplicity(m, p111, p111) == 1);
    CHECK(young_multiplicity(m, p21, p111) == 0);
    CHECK(young_multiplicity(m, p3, p111) == 0);
    CHECK(matrix_bound(m, p111) == 1);
    CHECK_THROWS_AS(matrix_bound(m, p21), ValidationError);
    CHECK_THROWS_AS(young_multiplicity(m, p22, p111), ValidationError);
}

TEST_CASE("delta4 fixture reproduces the multiplicity table")
{
    const auto m = load_fixture("delta4_l2");
    CHECK(m.r_note() == 2);
    const std::vector<Partition> columns{p22, p211, p1111};
    const std::vector<std::pair<Partition, std::vector<std::uint64_t>>> table{
        {p1111, {0, 0, 1}}, {p211, {1, 1, 0}}, {p22, {1, 0, 0}}, {p31, {0, 0, 0}}, {p4, {0, 0, 0}},
    };
    for (const auto& [lambda, row] : table)
        for (std::size_t c = 0; c < columns.size(); ++c) {
            CAPTURE(lambda.to_string());
            CAPTURE(columns[c].to_string());
            CHECK(young_multiplicity(m, lambda, columns[c]) == row[c]);
        }
    for (const auto& mu : columns)
        CHECK(matrix_bound(m, mu) == 1);
}

TEST_CASE("delta4 with l = 3")
{
    const auto m = load_fixture("delta4_l3");
    CHECK(m.l() == 3);
    std::uint64_t most = 0;
    for (const auto& lambda : partitions_of(4))
        most = std::max(most, young_multiplicity(m, lambda, p22));
    CHECK(most == 2);
    CHECK(young_multiplicity(m, p1111, p22) == 2);
}

TEST_CASE("identity matrix collapses to a delta")
{
    for (int n = 1; n <= 6; ++n) {
        const auto id = DecompositionMatrix::identity(n, 2);
        const auto parts = partitions_of(n);
        for (const auto& a : parts) {
            for (const auto& b : parts)
                CHECK(young_multiplicity(id, a, b) == (a == b ? 1u : 0u));
            if (!is_l_regular(a, 2))
                CHECK(matrix_bound(id, a) == 1);
        }
    }
}

TEST_CASE("parser errors")
{
    CHECK(error_of("n=3\nl=2\nd 3 1^3 1\n").find("dominance") != std::string::npos);
    CHECK(error_of("n=3\nl=2\nd 3 1^3 1\n", {.relaxed_dominance = true}).empty());
    CHECK(error_of("n=3\nl=2\nd 1^3 3 1\nd 1^3 3 1\n").find("duplicate") != std::string::npos);
    CHECK(error_of("n=3\nl=2\nd 3 3 2\n").find("diagonal") != std::string::npos);
    CHECK(error_of("n=3\nl=2\nd 2,2 4 1\n").find("line 3") != std::string::npos);
    CHECK(error_of("n=3\nl=2\nd 1^3 3\n").find("line 3") != std::string::npos);
    CHECK(error_of("n=3\nl=2\nd 1^3 3 -1\n").find("line 3") != std::string::npos);
    CHECK_FALSE(error_of("n=3\nl=2\nbogus\n").empty());
    CHECK_FALSE(error_of("n=3\nn=3\nl=2\n").empty());
    CHECK_FALSE(error_of("l=2\n").empty());
    CHECK_FALSE(error_of("n=3\n").empty());
    CHECK_FALSE(error_of("n=3\nl=2\nfoo=1\n").empty());

    CHECK(error_of("# comment\nn=3\nl=2\n\n").empty());
    const auto zero = DecompositionMatrix::parse("n=3\nl=2\nd 1^3 3 0\n");
    CHECK(zero.serialize() == "n=3\nl=2\n");
    CHECK(zero.at(p111, p3) == 0);
    CHECK_THROWS_AS(load_fixture("nope"), ValidationError);
    CHECK_THROWS_AS(DecompositionMatrix::load_file("/nonexistent/file.txt"), ValidationError);
}

TEST_CASE("canonical round trip")
{
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const auto m = load_fixture(name);
        const auto text = m.serialize();
        const auto again = DecompositionMatrix::parse(text);
        CHECK(again.serialize() == text);
        for (const auto& a : partitions_of(m.n()))
            for (const auto& b : partitions_of(m.n()))
                CHECK(again.at(a, b) == m.at(a, b));
    }

    // Shuffled input lines serialize canonically.
    const auto shuffled = DecompositionMatrix::parse("l=2\nd 1^4 4 1\nn=4\nd 2,1^2 4 1\n");
    const auto ordered = DecompositionMatrix::parse("n=4\nl=2\nd 2,1^2 4 1\nd 1^4 4 1\n");
    CHECK(shuffled.serialize() == ordered.serialize());
}

TEST_CASE("load from file")
{
    const std::string path = "test_decomp_matrix_tmp.txt";
    {
        std::ofstream out(path);
        out << fixture_text("delta3_l3");
    }
    const auto m = DecompositionMatrix::load_file(path);
    CHECK(m.serialize() == load_fixture("delta3_l3").serialize());
    std::remove(path.c_str());
}
