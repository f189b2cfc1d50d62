#include "hcext/hcext.h"

#include <new>
#include <string>

#include "hcext/bounds.hpp"
#include "hcext/decomp_matrix.hpp"
#include "hcext/error.hpp"
#include "hcext/harish_chandra.hpp"
#include "hcext/json.hpp"
#include "hcext/oracles.hpp"
#include "hcext/report.hpp"

struct hcext_context {
    hcext::GroupContext value;
};

struct hcext_matrix {
    hcext::DecompositionMatrix value;
};

struct hcext_string {
    std::string value;
};

namespace {

std::string& last_error()
{
    thread_local std::string message;
    return message;
}

hcext_status fail(hcext_status status, const char* what)
{
    try {
        last_error() = what;
    } catch (...) {
    }
    return status;
}

hcext_status status_of(hcext::ErrorKind kind)
{
    switch (kind) {
    case hcext::ErrorKind::Validation:
        return HCEXT_ERR_VALIDATION;
    case hcext::ErrorKind::Unsupported:
        return HCEXT_ERR_UNSUPPORTED;
    case hcext::ErrorKind::Overflow:
        return HCEXT_ERR_OVERFLOW;
    case hcext::ErrorKind::Oracle:
        return HCEXT_ERR_ORACLE;
    }
    return HCEXT_ERR_INTERNAL;
}

// Runs body, translating exceptions into status codes.
template <class F>
hcext_status guarded(F&& body) noexcept
{
    try {
        body();
        return HCEXT_OK;
    } catch (const hcext::Error& e) {
        return fail(status_of(e.kind()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(HCEXT_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(HCEXT_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(HCEXT_ERR_INTERNAL, "unknown error");
    }
}

#define HCEXT_REQUIRE_NONNULL(ptr)                                           \
    do {                                                                     \
        if ((ptr) == nullptr)                                                \
            return fail(HCEXT_ERR_USAGE, "null argument: " #ptr);            \
    } while (0)

hcext::Partition parse_partition(const char* text)
{
    if (text == nullptr)
        throw hcext::ValidationError("missing partition");
    return hcext::Partition::parse(text);
}

void emit(hcext_string** out, std::string value)
{
    *out = new hcext_string{std::move(value)};
}

void emit(hcext_string** out, const nlohmann::json& j)
{
    emit(out, j.dump(2));
}

}  // namespace

extern "C" {

const char* hcext_version(void)
{
    return "1.0.0";
}

const char* hcext_last_error(void)
{
    return last_error().c_str();
}

const char* hcext_status_name(hcext_status status)
{
    switch (status) {
    case HCEXT_OK:
        return "ok";
    case HCEXT_ERR_USAGE:
        return "usage error";
    case HCEXT_ERR_VALIDATION:
        return "validation error";
    case HCEXT_ERR_UNSUPPORTED:
        return "unsupported pair";
    case HCEXT_ERR_ORACLE:
        return "oracle failure";
    case HCEXT_ERR_OVERFLOW:
        return "overflow";
    case HCEXT_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char* hcext_string_data(const hcext_string* s)
{
    return s ? s->value.c_str() : "";
}

size_t hcext_string_size(const hcext_string* s)
{
    return s ? s->value.size() : 0;
}

void hcext_string_destroy(hcext_string* s)
{
    delete s;
}

hcext_status hcext_partition_canonical(const char* partition, hcext_string** out)
{
    HCEXT_REQUIRE_NONNULL(out);
    return guarded([&] { emit(out, parse_partition(partition).to_string()); });
}

hcext_status hcext_partition_conjugate(const char* partition, hcext_string** out)
{
    HCEXT_REQUIRE_NONNULL(out);
    return guarded([&] { emit(out, hcext::conjugate(parse_partition(partition)).to_string()); });
}

hcext_status hcext_partition_is_l_regular(const char* partition, int l, int* out)
{
    HCEXT_REQUIRE_NONNULL(out);
    return guarded([&] { *out = hcext::is_l_regular(parse_partition(partition), l) ? 1 : 0; });
}

hcext_status hcext_partition_is_l_restricted(const char* partition, int l, int* out)
{
    HCEXT_REQUIRE_NONNULL(out);
    return guarded([&] { *out = hcext::is_l_restricted(parse_partition(partition), l) ? 1 : 0; });
}

hcext_status hcext_lr_decomposition(const char* partition, int l, int r, hcext_string** out)
{
    HCEXT_REQUIRE_NONNULL(out);
    return guarded([&] { emit(out, hcext::to_json(hcext::lr_adic_decomposition(parse_partition(partition), l, r))); });
}

hcext_status hcext_context_create(int n, uint64_t q, int r, hcext_context** out)
{
    HCEXT_REQUIRE_NONNULL(out);
    return guarded([&] { *out = new hcext_context{hcext::GroupContext::make(n, q, r)}; });
}

hcext_status hcext_context_create_with_l(int n, uint64_t q, int r, int l, hcext_context** out)
{
    HCEXT_REQUIRE_NONNULL(out);
    return guarded([&] {
        std::optional<std::uint64_t> maybe_q;
        if (q != 0)
            maybe_q = q;
        *out = new hcext_context{hcext::GroupContext::with_l_override(n, maybe_q, r, l)};
    });
}

void hcext_context_destroy(hcext_context* ctx)
{
    delete ctx;
}

hcext_status hcext_context_get_info(const hcext_context* ctx, hcext_context_info* out)
{
    HCEXT_REQUIRE_NONNULL(ctx);
    HCEXT_REQUIRE_NONNULL(out);
    return guarded([&] {
        const auto& c = ctx->value;
        out->n = c.n();
        out->q = c.q().value_or(0);
        out->r = c.r();
        out->l = c.l();
        out->l_overridden = c.l_overridden() ? 1 : 0;
        out->e = c.e().value_or(-1);
        out->weyl_order = c.weyl_order();
        auto c1 = c.case_one();
        out->case_one = c1 ? (*c1 ? 1 : 0) : -1;
    });
}

hcext_status hcext_context_json(const hcext_context* ctx, hcext_string** out)
{
    HCEXT_REQUIRE_NONNULL(ctx);
    HCEXT_REQUIRE_NONNULL(out);
    return guarded([&] { emit(out, hcext::to_json(ctx->value)); });
}

hcext_status hcext_vertex_json(const hcext_context* ctx, const char* mu, hcext_string** out)
{
    HCEXT_REQUIRE_NONNULL(ctx);
    HCEXT_REQUIRE_NONNULL(out);
    return guarded([&] { emit(out, hcext::vertex_json(parse_partition(mu), ctx->value)); });
}

hcext_status hcext_classify(const hcext_context* ctx, const char* mu, int* label)
{
    HCEXT_REQUIRE_NONNULL(ctx);
    HCEXT_REQUIRE_NONNULL(label);
    return guarded([&] { *label = static_cast<int>(hcext::classify(parse_partition(mu), ctx->value).label); });
}

hcext_status hcext_index_bound(const hcext_context* ctx, const char* mu, uint64_t* out)
{
    HCEXT_REQUIRE_NONNULL(ctx);
    HCEXT_REQUIRE_NONNULL(out);
    return guarded([&] { *out = hcext::index_bound(parse_partition(mu), ctx->value); });
}

hcext_status hcext_cohomology_dim(uint64_t n, uint64_t e, uint64_t* out)
{
    HCEXT_REQUIRE_NONNULL(out);
    return guarded([&] { *out = hcext::cohomology_dim(n, e); });
}

hcext_status hcext_sylow_ext_bound(uint64_t dim_v, uint64_t e, uint64_t* out)
{
    HCEXT_REQUIRE_NONNULL(out);
    return guarded([&] { *out = hcext::sylow_ext_bound(dim_v, e); });
}

hcext_status hcext_bound_json(const hcext_context* ctx, const hcext_bound_request* request, hcext_string** out)
{
    HCEXT_REQUIRE_NONNULL(ctx);
    HCEXT_REQUIRE_NONNULL(request);
    HCEXT_REQUIRE_NONNULL(out);
    return guarded([&] {
        const auto sigma = parse_partition(request->sigma);
        const auto mu = parse_partition(request->mu);
        hcext::BoundOptions options;
        if (request->matrix)
            options.matrix = &request->matrix->value;
        if ((request->dim_sigma == 0) != (request->dim_mu == 0))
            throw hcext::ValidationError("give both module dimensions or neither");
        if (request->dim_sigma != 0)
            options.dims = hcext::ModuleDims{request->dim_sigma, request->dim_mu};
        options.inertia_index = request->inertia_index == 0 ? 1 : request->inertia_index;
        auto j = hcext::to_json(hcext::best_bound(sigma, mu, ctx->value, options));
        j["sigma"] = sigma.to_string();
        j["mu"] = mu.to_string();
        emit(out, j);
    });
}

hcext_status hcext_matrix_parse(const char* text, int relaxed_dominance, hcext_matrix** out)
{
    HCEXT_REQUIRE_NONNULL(text);
    HCEXT_REQUIRE_NONNULL(out);
    return guarded([&] {
        *out = new hcext_matrix{hcext::DecompositionMatrix::parse(text, {.relaxed_dominance = relaxed_dominance != 0})};
    });
}

hcext_status hcext_matrix_load_file(const char* path, int relaxed_dominance, hcext_matrix** out)
{
    HCEXT_REQUIRE_NONNULL(path);
    HCEXT_REQUIRE_NONNULL(out);
    return guarded([&] {
        *out = new hcext_matrix{
            hcext::DecompositionMatrix::load_file(path, {.relaxed_dominance = relaxed_dominance != 0})};
    });
}

hcext_status hcext_matrix_fixture(const char* name, hcext_matrix** out)
{
    HCEXT_REQUIRE_NONNULL(name);
    HCEXT_REQUIRE_NONNULL(out);
    return guarded([&] { *out = new hcext_matrix{hcext::load_fixture(name)}; });
}

hcext_status hcext_matrix_identity(int n, int l, hcext_matrix** out)
{
    HCEXT_REQUIRE_NONNULL(out);
    return guarded([&] { *out = new hcext_matrix{hcext::DecompositionMatrix::identity(n, l)}; });
}

void hcext_matrix_destroy(hcext_matrix* m)
{
    delete m;
}

hcext_status hcext_matrix_dims(const hcext_matrix* m, int* n, int* l)
{
    HCEXT_REQUIRE_NONNULL(m);
    HCEXT_REQUIRE_NONNULL(n);
    HCEXT_REQUIRE_NONNULL(l);
    *n = m->value.n();
    *l = m->value.l();
    return HCEXT_OK;
}

hcext_status hcext_matrix_entry(const hcext_matrix* m, const char* row, const char* column, uint64_t* out)
{
    HCEXT_REQUIRE_NONNULL(m);
    HCEXT_REQUIRE_NONNULL(out);
    return guarded([&] { *out = m->value.at(parse_partition(row), parse_partition(column)); });
}

hcext_status hcext_matrix_serialize(const hcext_matrix* m, hcext_string** out)
{
    HCEXT_REQUIRE_NONNULL(m);
    HCEXT_REQUIRE_NONNULL(out);
    return guarded([&] { emit(out, m->value.serialize()); });
}

hcext_status hcext_matrix_json(const hcext_matrix* m, hcext_string** out)
{
    HCEXT_REQUIRE_NONNULL(m);
    HCEXT_REQUIRE_NONNULL(out);
    return guarded([&] { emit(out, hcext::matrix_json(m->value)); });
}

hcext_status hcext_young_multiplicity(const hcext_matrix* m, const char* lambda, const char* nu, uint64_t* out)
{
    HCEXT_REQUIRE_NONNULL(m);
    HCEXT_REQUIRE_NONNULL(out);
    return guarded([&] { *out = hcext::young_multiplicity(m->value, parse_partition(lambda), parse_partition(nu)); });
}

hcext_status hcext_matrix_bound(const hcext_matrix* m, const char* mu, uint64_t* out)
{
    HCEXT_REQUIRE_NONNULL(m);
    HCEXT_REQUIRE_NONNULL(out);
    return guarded([&] { *out = hcext::matrix_bound(m->value, parse_partition(mu)); });
}

hcext_status hcext_verify_json(int max_n, hcext_string** out)
{
    HCEXT_REQUIRE_NONNULL(out);
    bool failed = false;
    auto status = guarded([&] {
        nlohmann::json suites = nlohmann::json::array();
        std::size_t failures = 0;
        for (const auto& report : hcext::oracles::run_all(max_n)) {
            failures += report.failures.size();
            suites.push_back(hcext::to_json(report));
        }
        failed = failures != 0;
        emit(out, nlohmann::json{{"max_n", max_n}, {"suites", std::move(suites)}, {"failed", failures}});
    });
    if (status == HCEXT_OK && failed)
        return fail(HCEXT_ERR_ORACLE, "oracle suites reported failures");
    return status;
}

hcext_status hcext_report_names(hcext_string** out)
{
    HCEXT_REQUIRE_NONNULL(out);
    return guarded([&] {
        std::string text;
        for (const auto& name : hcext::report_names())
            text += name + "\n";
        emit(out, std::move(text));
    });
}

hcext_status hcext_report(const char* example, int format, hcext_string** out)
{
    HCEXT_REQUIRE_NONNULL(example);
    HCEXT_REQUIRE_NONNULL(out);
    return guarded([&] {
        auto doc = hcext::build_report(example);
        if (format == 1)
            emit(out, doc);
        else
            emit(out, hcext::render_report_text(doc));
    });
}

}  // extern "C"
