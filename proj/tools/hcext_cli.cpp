// hcext: command-line front end over the libhcext C API.
//
// Exit status: 0 success, 1 usage error, 2 validation error (including
// overflow and internal errors), 3 unsupported pair, 4 oracle failure.

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hcext/hcext.h"

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kUsage = 1, kValidation = 2, kUnsupported = 3, kOracle = 4 };

struct ApiError {
    hcext_status status;
    std::string message;
};

int exit_code(hcext_status status)
{
    switch (status) {
    case HCEXT_OK:
        return kOk;
    case HCEXT_ERR_USAGE:
        return kUsage;
    case HCEXT_ERR_UNSUPPORTED:
        return kUnsupported;
    case HCEXT_ERR_ORACLE:
        return kOracle;
    default:
        return kValidation;
    }
}

void check(hcext_status status)
{
    if (status != HCEXT_OK)
        throw ApiError{status, hcext_last_error()};
}

struct StringDeleter {
    void operator()(hcext_string* s) const { hcext_string_destroy(s); }
};
struct ContextDeleter {
    void operator()(hcext_context* c) const { hcext_context_destroy(c); }
};
struct MatrixDeleter {
    void operator()(hcext_matrix* m) const { hcext_matrix_destroy(m); }
};
using String = std::unique_ptr<hcext_string, StringDeleter>;
using Context = std::unique_ptr<hcext_context, ContextDeleter>;
using Matrix = std::unique_ptr<hcext_matrix, MatrixDeleter>;

std::string take(hcext_string* raw)
{
    String s(raw);
    return std::string(hcext_string_data(s.get()), hcext_string_size(s.get()));
}

json take_json(hcext_string* raw)
{
    return json::parse(take(raw));
}

struct ContextFlags {
    int n = 0;
    std::optional<std::uint64_t> q;
    int r = 0;
    std::optional<int> l;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--n", n, "rank n of GL_n(q)")->required();
        cmd->add_option("--q", q, "field size q (a prime power); optional with --l");
        cmd->add_option("--r", r, "characteristic r of k (a prime not dividing q)")->required();
        cmd->add_option("--l", l, "use this l instead of deriving it from q and r");
    }

    Context make() const
    {
        hcext_context* raw = nullptr;
        if (l)
            check(hcext_context_create_with_l(n, q.value_or(0), r, *l, &raw));
        else if (!q)
            throw ApiError{HCEXT_ERR_USAGE, "--q is required unless --l is given"};
        else
            check(hcext_context_create(n, *q, r, &raw));
        return Context(raw);
    }
};

std::string paren(const std::string& p)
{
    return "(" + p + ")";
}

std::string group_line(const json& ctx)
{
    std::string out = "GL_" + std::to_string(ctx.at("n").get<int>()) + "(q)";
    if (!ctx.at("q").is_null())
        out += ", q = " + std::to_string(ctx.at("q").get<std::uint64_t>());
    out += ", r = " + std::to_string(ctx.at("r").get<int>()) + ", l = " + std::to_string(ctx.at("l").get<int>());
    if (ctx.at("l_overridden").get<bool>())
        out += " (override)";
    return out;
}

std::string vertex_phrase(const json& v)
{
    const auto& vertex = v.at("vertex");
    const auto text = vertex.at("text").get<std::string>();
    if (vertex.at("torus").get<bool>())
        return "maximal torus T (" + text + ")";
    if (vertex.at("whole_group").get<bool>())
        return "cuspidal (" + text + ")";
    return text;
}

void print(const json& j, bool as_json, const std::string& text)
{
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_info(const ContextFlags& flags, bool as_json)
{
    auto ctx = flags.make();
    auto j = take_json([&] {
        hcext_string* s = nullptr;
        check(hcext_context_json(ctx.get(), &s));
        return s;
    }());
    std::string text = group_line(j) + "\n";
    text += "  l = " + std::to_string(j.at("l").get<int>()) + "\n";
    text += "  e = " + (j.at("e").is_null() ? std::string("unknown (q not given)") : std::to_string(j.at("e").get<int>()))
            + "\n";
    text += "  |W| = " + std::to_string(j.at("weyl_order").get<std::uint64_t>()) + "\n";
    if (j.at("case_one").is_null())
        text += "  case: unknown (q not given)\n";
    else if (j.at("case_one").get<bool>())
        text += "  case: I (r does not divide |B|)\n";
    else
        text += "  case: II (r divides |B|)\n";
    print(j, as_json, text);
    return kOk;
}

json vertex_doc(const Context& ctx, const std::string& mu)
{
    hcext_string* s = nullptr;
    check(hcext_vertex_json(ctx.get(), mu.c_str(), &s));
    return take_json(s);
}

json context_doc(const Context& ctx)
{
    hcext_string* s = nullptr;
    check(hcext_context_json(ctx.get(), &s));
    return take_json(s);
}

int cmd_vertex(const ContextFlags& flags, const std::string& mu, bool as_json)
{
    auto ctx = flags.make();
    auto v = vertex_doc(ctx, mu);
    v["context"] = context_doc(ctx);
    const auto mu_conj = v.at("mu_conjugate").get<std::string>();
    std::string text = "D(1," + paren(v.at("mu").get<std::string>()) + ") in " + group_line(v.at("context")) + "\n";
    text += "  mu' = " + paren(mu_conj) + "\n";
    text += "  l-r-adic decomposition: " + paren(mu_conj) + " = " + v.at("decomposition").at("text").get<std::string>()
            + "\n";
    text += "  vertex: " + vertex_phrase(v) + "\n";
    text += "  |W_J| = " + std::to_string(v.at("levi_weyl_order").get<std::uint64_t>())
            + ", |W|/|W_J| = " + std::to_string(v.at("index").get<std::uint64_t>()) + "\n";
    print(v, as_json, text);
    return kOk;
}

int cmd_series(const ContextFlags& flags, const std::string& mu, bool as_json)
{
    auto ctx = flags.make();
    auto v = vertex_doc(ctx, mu);
    json j{{"mu", v.at("mu")}, {"label", v.at("label")}, {"vertex", v.at("vertex")}, {"context", context_doc(ctx)}};
    std::string text = "D(1," + paren(v.at("mu").get<std::string>()) + ") in " + group_line(j.at("context")) + "\n";
    text += "  series: " + v.at("label").get<std::string>() + "\n";
    text += "  vertex: " + vertex_phrase(v) + "\n";
    print(j, as_json, text);
    return kOk;
}

struct BoundFlags {
    std::string sigma, mu, matrix;
    bool relaxed = false;
    std::optional<std::uint64_t> dim_sigma, dim_mu;
    std::uint64_t inertia = 1;
};

Matrix load_matrix(const std::string& path, bool relaxed)
{
    hcext_matrix* raw = nullptr;
    check(hcext_matrix_load_file(path.c_str(), relaxed ? 1 : 0, &raw));
    return Matrix(raw);
}

int cmd_bound(const ContextFlags& flags, const BoundFlags& b, bool as_json)
{
    auto ctx = flags.make();
    Matrix matrix;
    if (!b.matrix.empty())
        matrix = load_matrix(b.matrix, b.relaxed);
    if (b.dim_sigma.has_value() != b.dim_mu.has_value())
        throw ApiError{HCEXT_ERR_USAGE, "--dim-sigma and --dim-mu must be given together"};

    hcext_bound_request req{};
    req.sigma = b.sigma.c_str();
    req.mu = b.mu.c_str();
    req.matrix = matrix.get();
    req.dim_sigma = b.dim_sigma.value_or(0);
    req.dim_mu = b.dim_mu.value_or(0);
    req.inertia_index = b.inertia;
    hcext_string* s = nullptr;
    check(hcext_bound_json(ctx.get(), &req, &s));
    auto j = take_json(s);
    j["context"] = context_doc(ctx);

    std::string text = "dim Ext^1(D(1," + paren(j.at("sigma").get<std::string>()) + "), D(1,"
                       + paren(j.at("mu").get<std::string>()) + ")) in " + group_line(j.at("context")) + "\n";
    for (const auto& e : j.at("entries"))
        text += "  " + e.at("tag").get<std::string>() + ": " + e.at("text").get<std::string>() + "\n";
    for (const auto& w : j.at("warnings"))
        text += "  warning: " + w.get<std::string>() + "\n";
    const auto& best = j.at("best");
    text += "best: " + best.at("text").get<std::string>() + " (" + best.at("tag").get<std::string>() + ")\n";
    print(j, as_json, text);
    return kOk;
}

int cmd_check_matrix(const std::string& path, bool relaxed, bool as_json)
{
    auto m = load_matrix(path, relaxed);
    hcext_string* s = nullptr;
    check(hcext_matrix_json(m.get(), &s));
    auto j = take_json(s);
    print(j, as_json, j.at("canonical").get<std::string>());
    return kOk;
}

int cmd_verify(int max_n, bool as_json)
{
    hcext_string* s = nullptr;
    auto status = hcext_verify_json(max_n, &s);
    if (status != HCEXT_OK && status != HCEXT_ERR_ORACLE)
        check(status);
    auto j = take_json(s);
    std::string text;
    for (const auto& suite : j.at("suites")) {
        const bool ok = suite.at("failed").get<std::size_t>() == 0;
        text += std::string(ok ? "[ok]   " : "[FAIL] ") + suite.at("name").get<std::string>() + ": "
                + std::to_string(suite.at("checked").get<std::size_t>()) + " checked, "
                + std::to_string(suite.at("failed").get<std::size_t>()) + " failed\n";
        for (const auto& f : suite.at("failures"))
            text += "         " + f.at("input").get<std::string>() + ": expected " + f.at("expected").get<std::string>()
                    + ", got " + f.at("got").get<std::string>() + "\n";
    }
    text += "total failures: " + std::to_string(j.at("failed").get<std::size_t>()) + "\n";
    print(j, as_json, text);
    return status == HCEXT_OK ? kOk : kOracle;
}

int cmd_report(const std::string& example, bool as_json)
{
    hcext_string* s = nullptr;
    check(hcext_report(example.c_str(), as_json ? 1 : 0, &s));
    std::cout << take(s);
    if (as_json)
        std::cout << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Harish-Chandra vertices and Ext^1 bounds for unipotent modules of GL_n(q)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(hcext_version()));

    std::string format = "text";
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    };

    ContextFlags ctx_flags;
    std::string mu;
    BoundFlags bound_flags;
    std::string matrix_path;
    bool relaxed = false;
    int max_n = 10;
    std::string example;

    auto* info = app.add_subcommand("info", "print l, e, |W| and the Case I/II split");
    ctx_flags.attach(info);
    add_format(info);

    auto* vertex = app.add_subcommand("vertex", "l-r-adic decomposition of mu' and the vertex of D(1,mu)");
    ctx_flags.attach(vertex);
    vertex->add_option("--mu", mu, "partition mu, e.g. 2,1^2")->required();
    add_format(vertex);

    auto* series = app.add_subcommand("series", "Harish-Chandra series of D(1,mu)");
    ctx_flags.attach(series);
    series->add_option("--mu", mu, "partition mu")->required();
    add_format(series);

    auto* bound = app.add_subcommand("bound", "bounds on dim Ext^1(D(1,sigma), D(1,mu))");
    ctx_flags.attach(bound);
    bound->add_option("--sigma", bound_flags.sigma, "l-regular partition sigma")->required();
    bound->add_option("--mu", bound_flags.mu, "partition mu")->required();
    bound->add_option("--matrix", bound_flags.matrix, "decomposition matrix file");
    bound->add_flag("--relaxed", bound_flags.relaxed, "skip the dominance check when loading --matrix");
    bound->add_option("--dim-sigma", bound_flags.dim_sigma, "dim D(1,sigma)")->check(CLI::PositiveNumber);
    bound->add_option("--dim-mu", bound_flags.dim_mu, "dim D(1,mu)")->check(CLI::PositiveNumber);
    bound->add_option("--inertia-index", bound_flags.inertia, "[W:W(T,X)] for the same-series bound")
        ->check(CLI::PositiveNumber);
    add_format(bound);

    auto* check_matrix = app.add_subcommand("check-matrix", "validate a matrix file and print its canonical form");
    check_matrix->add_option("file", matrix_path, "matrix file")->required();
    check_matrix->add_flag("--relaxed", relaxed, "skip the dominance check");
    add_format(check_matrix);

    auto* verify = app.add_subcommand("verify", "run the brute-force oracle suites");
    verify->add_option("--max-n", max_n, "largest n for the partition suites")->check(CLI::Range(1, 14));
    add_format(verify);

    auto* report = app.add_subcommand("report", "reproduce a worked example");
    report->add_option("--example", example, "example name")->required();
    add_format(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    const bool as_json = format == "json";
    try {
        if (info->parsed())
            return cmd_info(ctx_flags, as_json);
        if (vertex->parsed())
            return cmd_vertex(ctx_flags, mu, as_json);
        if (series->parsed())
            return cmd_series(ctx_flags, mu, as_json);
        if (bound->parsed())
            return cmd_bound(ctx_flags, bound_flags, as_json);
        if (check_matrix->parsed())
            return cmd_check_matrix(matrix_path, relaxed, as_json);
        if (verify->parsed())
            return cmd_verify(max_n, as_json);
        if (report->parsed())
            return cmd_report(example, as_json);
    } catch (const ApiError& e) {
        std::cerr << "error: " << e.message << "\n";
        return exit_code(e.status);
    }
    return kUsage;
}
