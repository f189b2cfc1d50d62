#include "hcext/decomp_matrix.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "hcext/arith.hpp"
#include "hcext/error.hpp"

namespace hcext {

namespace {

[[noreturn]] void fail_line(std::size_t line_no, const std::string& what)
{
    throw ValidationError("line " + std::to_string(line_no) + ": " + what);
}

long long parse_number(std::string_view s, std::size_t line_no, std::string_view what)
{
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        fail_line(line_no, "malformed " + std::string(what) + " \"" + std::string(s) + "\"");
    return v;
}

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

struct RawEntry {
    std::size_t line_no;
    Partition row;
    Partition column;
    long long value;
};

}  // namespace

DecompositionMatrix DecompositionMatrix::parse(std::string_view text, LoadOptions options)
{
    DecompositionMatrix m;
    std::optional<int> n, l;
    bool have_source = false;
    std::vector<RawEntry> raw;

    std::size_t line_no = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);

        auto fields = split_ws(line);
        if (fields.empty() || fields.front().front() == '#')
            continue;

        if (fields.front() == "d") {
            if (fields.size() != 4)
                fail_line(line_no, "entry lines have the form \"d <row> <column> <value>\"");
            try {
                raw.push_back({line_no, Partition::parse(fields[1]), Partition::parse(fields[2]),
                               parse_number(fields[3], line_no, "entry value")});
            } catch (const ValidationError& e) {
                fail_line(line_no, e.what());
            }
            continue;
        }

        auto eq = line.find('=');
        if (eq == std::string_view::npos)
            fail_line(line_no, "unrecognised line \"" + std::string(line) + "\"");
        std::string_view key = line.substr(0, eq);
        while (!key.empty() && (key.front() == ' ' || key.front() == '\t'))
            key.remove_prefix(1);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t'))
            key.remove_suffix(1);
        std::string_view value = line.substr(eq + 1);

        if (key == "source") {
            if (have_source)
                fail_line(line_no, "duplicate header \"source\"");
            have_source = true;
            m.source_ = std::string(value);
            continue;
        }
        auto fs = split_ws(value);
        if (fs.size() != 1)
            fail_line(line_no, "header \"" + std::string(key) + "\" needs one integer");
        long long v = parse_number(fs.front(), line_no, "header value");
        auto set_once = [&](std::optional<int>& slot) {
            if (slot)
                fail_line(line_no, "duplicate header \"" + std::string(key) + "\"");
            slot = static_cast<int>(v);
        };
        if (key == "n") {
            if (v < 1 || v > 60)
                fail_line(line_no, "n out of range");
            set_once(n);
        } else if (key == "l") {
            if (v < 2 || v > 1000)
                fail_line(line_no, "l must be at least 2");
            set_once(l);
        } else if (key == "r") {
            if (v < 2 || v > 1'000'000 || !is_prime(v))
                fail_line(line_no, "r must be prime");
            set_once(m.r_note_);
        } else {
            fail_line(line_no, "unknown header \"" + std::string(key) + "\"");
        }
    }

    if (!n)
        throw ValidationError("missing header n=<int>");
    if (!l)
        throw ValidationError("missing header l=<int>");
    m.n_ = *n;
    m.l_ = *l;

    std::set<std::pair<Partition, Partition>> seen;
    for (auto& e : raw) {
        if (e.row.size() != m.n_ || e.column.size() != m.n_)
            fail_line(e.line_no, "entry indices must be partitions of n = " + std::to_string(m.n_));
        if (e.value < 0)
            fail_line(e.line_no, "entries must be nonnegative");
        if (!seen.insert({e.row, e.column}).second)
            fail_line(e.line_no, "duplicate entry for (" + e.row.to_string() + ", " + e.column.to_string() + ")");
        if (e.row == e.column) {
            if (e.value != 1)
                fail_line(e.line_no, "diagonal entry d_(" + e.row.to_string() + ")(" + e.row.to_string()
                                         + ") must be 1");
            continue;
        }
        if (e.value == 0)
            continue;
        if (!options.relaxed_dominance && !dominates(e.column, e.row))
            fail_line(e.line_no, "dominance violation: d_(" + e.row.to_string() + ")(" + e.column.to_string()
                                     + ") is nonzero but (" + e.column.to_string() + ") does not dominate ("
                                     + e.row.to_string() + ")");
        m.entries_.emplace(std::make_pair(std::move(e.row), std::move(e.column)),
                           static_cast<std::uint64_t>(e.value));
    }
    return m;
}

DecompositionMatrix DecompositionMatrix::load_file(const std::string& path, LoadOptions options)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot open matrix file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), options);
}

DecompositionMatrix DecompositionMatrix::identity(int n, int l)
{
    require(n >= 1, "n must be at least 1");
    require(l >= 2, "l must be at least 2");
    DecompositionMatrix m;
    m.n_ = n;
    m.l_ = l;
    m.source_ = "identity";
    return m;
}

std::uint64_t DecompositionMatrix::at(const Partition& row, const Partition& column) const
{
    if (row == column)
        return 1;
    auto it = entries_.find({row, column});
    return it == entries_.end() ? 0 : it->second;
}

std::string DecompositionMatrix::serialize() const
{
    std::string out = "n=" + std::to_string(n_) + "\nl=" + std::to_string(l_) + "\n";
    if (r_note_)
        out += "r=" + std::to_string(*r_note_) + "\n";
    if (!source_.empty())
        out += "source=" + source_ + "\n";
    const auto parts = partitions_of(n_);
    for (const auto& row : parts)
        for (const auto& column : parts)
            if (auto it = entries_.find({row, column}); it != entries_.end())
                out += "d " + row.to_string() + " " + column.to_string() + " " + std::to_string(it->second) + "\n";
    return out;
}

std::uint64_t young_multiplicity(const DecompositionMatrix& m, const Partition& lambda, const Partition& nu)
{
    require(lambda.size() == m.n() && nu.size() == m.n(),
            "Young multiplicity needs partitions of n = " + std::to_string(m.n()));
    const Partition lambda_conj = conjugate(lambda);
    std::uint64_t total = 0;
    for (const auto& mu : partitions_of(m.n())) {
        const std::uint64_t a = m.at(conjugate(mu), lambda_conj);
        if (a == 0)
            continue;
        total = checked_add(total, checked_mul(a, m.at(mu, nu), "Young multiplicity"), "Young multiplicity");
    }
    return total;
}

std::uint64_t matrix_bound(const DecompositionMatrix& m, const Partition& mu)
{
    require(mu.size() == m.n(), "matrix bound needs a partition of n = " + std::to_string(m.n()));
    require(!is_l_regular(mu, m.l()), "the multiplicity bound needs D(1,mu) outside the principal series, but ("
                                          + mu.to_string() + ") is " + std::to_string(m.l()) + "-regular");
    std::uint64_t best = 0;
    for (const auto& lambda : partitions_of(m.n()))
        best = std::max(best, young_multiplicity(m, lambda, mu));
    return best;
}

DecompositionMatrix load_fixture(std::string_view name)
{
    return DecompositionMatrix::parse(fixture_text(name));
}

}  // namespace hcext
