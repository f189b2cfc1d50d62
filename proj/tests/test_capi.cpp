#include <doctest.h>

#include <cstdlib>
#include <string>
#include <thread>

#include <json.hpp>

#include "hcext/hcext.h"

namespace {

// Takes ownership of an hcext_string.
std::string take(hcext_string* s)
{
    std::string out(hcext_string_data(s), hcext_string_size(s));
    hcext_string_destroy(s);
    return out;
}

struct Context {
    hcext_context* ptr = nullptr;
    Context(int n, std::uint64_t q, int r) { REQUIRE(hcext_context_create(n, q, r, &ptr) == HCEXT_OK); }
    ~Context() { hcext_context_destroy(ptr); }
};

}  // namespace

TEST_CASE("status names and version")
{
    CHECK(std::string(hcext_version()).size() > 0);
    CHECK(std::string(hcext_status_name(HCEXT_OK)) == "ok");
    CHECK(HCEXT_ERR_VALIDATION == 2);
    CHECK(HCEXT_ERR_UNSUPPORTED == 3);
    CHECK(HCEXT_ERR_ORACLE == 4);
}

TEST_CASE("partitions")
{
    hcext_string* s = nullptr;
    REQUIRE(hcext_partition_canonical("2,1,1", &s) == HCEXT_OK);
    CHECK(take(s) == "2,1^2");
    REQUIRE(hcext_partition_conjugate("3,1", &s) == HCEXT_OK);
    CHECK(take(s) == "2,1^2");
    int flag = -1;
    REQUIRE(hcext_partition_is_l_regular("2,2", 2, &flag) == HCEXT_OK);
    CHECK(flag == 0);
    REQUIRE(hcext_partition_is_l_restricted("2,1", 2, &flag) == HCEXT_OK);
    CHECK(flag == 1);
    REQUIRE(hcext_lr_decomposition("3,1", 2, 2, &s) == HCEXT_OK);
    CHECK(nlohmann::json::parse(take(s))["text"] == "(1^2) + 2(1)");

    CHECK(hcext_partition_canonical("1,2", &s) == HCEXT_ERR_VALIDATION);
    CHECK(std::string(hcext_last_error()).size() > 0);
    CHECK(hcext_partition_canonical(nullptr, &s) == HCEXT_ERR_VALIDATION);
    CHECK(hcext_partition_canonical("1", nullptr) == HCEXT_ERR_USAGE);
}

TEST_CASE("context")
{
    Context ctx(3, 4, 3);
    hcext_context_info info{};
    REQUIRE(hcext_context_get_info(ctx.ptr, &info) == HCEXT_OK);
    CHECK(info.l == 3);
    CHECK(info.e == 3);
    CHECK(info.case_one == 0);
    CHECK(info.weyl_order == 6);

    hcext_context* bad = nullptr;
    CHECK(hcext_context_create(3, 6, 5, &bad) == HCEXT_ERR_VALIDATION);
    CHECK(bad == nullptr);

    hcext_context* no_q = nullptr;
    REQUIRE(hcext_context_create_with_l(4, 0, 2, 3, &no_q) == HCEXT_OK);
    REQUIRE(hcext_context_get_info(no_q, &info) == HCEXT_OK);
    CHECK(info.q == 0);
    CHECK(info.e == -1);
    CHECK(info.case_one == -1);
    hcext_bound_request req{"4", "3,1", nullptr, 0, 0, 0};
    hcext_string* s = nullptr;
    CHECK(hcext_bound_json(no_q, &req, &s) == HCEXT_ERR_UNSUPPORTED);
    hcext_context_destroy(no_q);

    REQUIRE(hcext_context_json(ctx.ptr, &s) == HCEXT_OK);
    const auto j = nlohmann::json::parse(take(s));
    for (const char* key : {"n", "q", "r", "l", "e", "weyl_order", "case_one"})
        CHECK(j.contains(key));
}

TEST_CASE("vertices and bounds")
{
    Context gl3(3, 5, 2);
    int label = -1;
    REQUIRE(hcext_classify(gl3.ptr, "1^3", &label) == HCEXT_OK);
    CHECK(label == 2);
    REQUIRE(hcext_classify(gl3.ptr, "3", &label) == HCEXT_OK);
    CHECK(label == 0);
    std::uint64_t v = 0;
    REQUIRE(hcext_index_bound(gl3.ptr, "1^3", &v) == HCEXT_OK);
    CHECK(v == 3);
    CHECK(hcext_index_bound(gl3.ptr, "2,1", &v) == HCEXT_ERR_VALIDATION);
    REQUIRE(hcext_cohomology_dim(2, 3, &v) == HCEXT_OK);
    CHECK(v == 6);
    REQUIRE(hcext_sylow_ext_bound(3, 2, &v) == HCEXT_OK);
    CHECK(v == 6);

    hcext_string* s = nullptr;
    REQUIRE(hcext_vertex_json(gl3.ptr, "1^3", &s) == HCEXT_OK);
    const auto vj = nlohmann::json::parse(take(s));
    CHECK(vj["index"] == 3);

    hcext_bound_request req{"2,1", "1^3", nullptr, 0, 0, 0};
    REQUIRE(hcext_bound_json(gl3.ptr, &req, &s) == HCEXT_OK);
    auto bj = nlohmann::json::parse(take(s));
    CHECK(bj["best"]["value"] == 3);
    CHECK(bj["best"]["tag"] == "IndexBound");

    hcext_matrix* m = nullptr;
    REQUIRE(hcext_matrix_fixture("delta3_l2", &m) == HCEXT_OK);
    req.matrix = m;
    REQUIRE(hcext_bound_json(gl3.ptr, &req, &s) == HCEXT_OK);
    bj = nlohmann::json::parse(take(s));
    CHECK(bj["best"]["value"] == 1);
    CHECK(bj["best"]["tag"] == "MatrixBound");
    hcext_matrix_destroy(m);

    hcext_bound_request bad{"1^3", "3", nullptr, 0, 0, 0};
    CHECK(hcext_bound_json(gl3.ptr, &bad, &s) == HCEXT_ERR_UNSUPPORTED);
}

TEST_CASE("matrices")
{
    hcext_matrix* m = nullptr;
    REQUIRE(hcext_matrix_fixture("delta4_l2", &m) == HCEXT_OK);
    int n = 0, l = 0;
    REQUIRE(hcext_matrix_dims(m, &n, &l) == HCEXT_OK);
    CHECK(n == 4);
    CHECK(l == 2);
    std::uint64_t v = 0;
    REQUIRE(hcext_young_multiplicity(m, "2,1^2", "2^2", &v) == HCEXT_OK);
    CHECK(v == 1);
    REQUIRE(hcext_matrix_bound(m, "2,1^2", &v) == HCEXT_OK);
    CHECK(v == 1);
    hcext_string* s = nullptr;
    REQUIRE(hcext_matrix_serialize(m, &s) == HCEXT_OK);
    const auto text = take(s);
    hcext_matrix_destroy(m);

    REQUIRE(hcext_matrix_parse(text.c_str(), 0, &m) == HCEXT_OK);
    REQUIRE(hcext_matrix_serialize(m, &s) == HCEXT_OK);
    CHECK(take(s) == text);
    REQUIRE(hcext_matrix_entry(m, "1^4", "4", &v) == HCEXT_OK);
    hcext_matrix_destroy(m);

    CHECK(hcext_matrix_parse("n=3\nl=2\nd 3 1^3 1\n", 0, &m) == HCEXT_ERR_VALIDATION);
    CHECK(std::string(hcext_last_error()).find("dominance") != std::string::npos);
    REQUIRE(hcext_matrix_parse("n=3\nl=2\nd 3 1^3 1\n", 1, &m) == HCEXT_OK);
    hcext_matrix_destroy(m);

    REQUIRE(hcext_matrix_identity(3, 2, &m) == HCEXT_OK);
    REQUIRE(hcext_young_multiplicity(m, "3", "3", &v) == HCEXT_OK);
    CHECK(v == 1);
    hcext_matrix_destroy(m);

    if (const char* dir = std::getenv("HCEXT_DATA_DIR")) {
        const std::string path = std::string(dir) + "/delta3_l2.txt";
        REQUIRE(hcext_matrix_load_file(path.c_str(), 0, &m) == HCEXT_OK);
        hcext_matrix_destroy(m);
    }
    CHECK(hcext_matrix_load_file("/nonexistent", 0, &m) == HCEXT_ERR_VALIDATION);
}

TEST_CASE("last error is per thread")
{
    hcext_string* s = nullptr;
    CHECK(hcext_partition_canonical("x", &s) == HCEXT_ERR_VALIDATION);
    const std::string main_error = hcext_last_error();
    std::string other;
    std::thread t([&] {
        hcext_string* u = nullptr;
        CHECK(hcext_partition_canonical("2", &u) == HCEXT_OK);
        hcext_string_destroy(u);
        other = hcext_last_error();
    });
    t.join();
    CHECK(other.empty());
    CHECK(std::string(hcext_last_error()) == main_error);
}

TEST_CASE("verify and report")
{
    hcext_string* s = nullptr;
    REQUIRE(hcext_verify_json(6, &s) == HCEXT_OK);
    const auto suites = nlohmann::json::parse(take(s));
    CHECK(suites["suites"].size() == 5);
    CHECK(suites["failed"] == 0);
    CHECK(hcext_verify_json(0, &s) == HCEXT_ERR_VALIDATION);

    REQUIRE(hcext_report_names(&s) == HCEXT_OK);
    CHECK(take(s).find("gl4-r2") != std::string::npos);
    REQUIRE(hcext_report("gl4-r2", 0, &s) == HCEXT_OK);
    CHECK(take(s).find("GL_2(q)^2") != std::string::npos);
    REQUIRE(hcext_report("gl4-r2", 1, &s) == HCEXT_OK);
    CHECK(nlohmann::json::parse(take(s))["example"] == "gl4-r2");
    CHECK(hcext_report("nope", 0, &s) == HCEXT_ERR_VALIDATION);
}
