#include "hcext/oracles.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <set>

#include "hcext/arith.hpp"
#include "hcext/bounds.hpp"
#include "hcext/error.hpp"

namespace hcext::oracles {

namespace {

bool restricted_by(const std::vector<int>& parts, int m)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        int next = i + 1 < parts.size() ? parts[i + 1] : 0;
        if (parts[i] - next >= m)
            return false;
    }
    return true;
}

bool prefix_dominates(const Partition& a, const Partition& b)
{
    int sa = 0, sb = 0;
    for (std::size_t k = 0; k < std::max(a.length(), b.length()); ++k) {
        sa += a[k];
        sb += b[k];
        if (sa < sb)
            return false;
    }
    return true;
}

std::string show(const LrAdicDecomposition& d)
{
    std::string out = "[" + d.minus1.to_string();
    for (const auto& h : d.higher)
        out += "; " + h.to_string();
    return out + "]";
}

std::string lr_label(const Partition& p, int l, int r)
{
    return "(" + p.to_string() + ") l=" + std::to_string(l) + " r=" + std::to_string(r);
}

}  // namespace

int default_depth_cap(int n, int l, int r)
{
    require(l >= 2 && r >= 2, "l and r must be at least 2");
    int cap = 0;
    long long w = l;
    while (w <= n) {
        w *= r;
        ++cap;
    }
    return cap;
}

std::vector<LrAdicDecomposition> exhaustive_lr_decompositions(const Partition& p, int l, int r, int depth_cap)
{
    require(l >= 2 && r >= 2, "l and r must be at least 2");
    require(depth_cap >= 0, "depth cap must be nonnegative");
    long long top = l;
    for (int i = 0; i < depth_cap; ++i)
        top *= r;
    require(top > p.size(), "depth cap too small: l*r^cap must exceed |p|");

    const std::size_t len = p.length();
    // Level 0 is the l-restricted component (weight 1); level a+1 has weight l r^a.
    std::vector<long long> weights{1};
    for (int a = 0; a <= depth_cap; ++a)
        weights.push_back(a == 0 ? l : weights.back() * r);

    std::vector<LrAdicDecomposition> out;
    std::vector<Partition> chosen;
    std::vector<long long> acc(len, 0);

    std::function<void(std::size_t, long long)> search = [&](std::size_t level, long long remaining) {
        if (level == weights.size()) {
            if (remaining != 0)
                return;
            for (std::size_t i = 0; i < len; ++i)
                if (acc[i] != p[i])
                    return;
            LrAdicDecomposition d;
            d.l = l;
            d.r = r;
            d.minus1 = chosen.front();
            d.higher.assign(chosen.begin() + 1, chosen.end());
            while (!d.higher.empty() && d.higher.back().empty())
                d.higher.pop_back();
            out.push_back(std::move(d));
            return;
        }
        const long long w = weights[level];
        const int modulus = level == 0 ? l : r;
        for (long long size = 0; size * w <= remaining; ++size) {
            for (const auto& cand : partitions_of(static_cast<int>(size))) {
                if (cand.length() > len)
                    continue;
                std::vector<int> parts(cand.parts().begin(), cand.parts().end());
                if (!restricted_by(parts, modulus))
                    continue;
                bool fits = true;
                for (std::size_t i = 0; i < parts.size() && fits; ++i)
                    fits = acc[i] + w * parts[i] <= p[i];
                if (!fits)
                    continue;
                for (std::size_t i = 0; i < parts.size(); ++i)
                    acc[i] += w * parts[i];
                chosen.push_back(cand);
                search(level + 1, remaining - size * w);
                chosen.pop_back();
                for (std::size_t i = 0; i < parts.size(); ++i)
                    acc[i] -= w * parts[i];
            }
        }
    };
    search(0, p.size());
    return out;
}

std::uint64_t coset_count(int n, const LeviShape& shape)
{
    require(n >= 1 && n <= 7, "coset enumeration is limited to n <= 7");
    require(shape.n() == n, "Levi shape does not partition n");

    std::vector<int> block_of;
    int id = 0;
    for (int m : shape.blocks()) {
        block_of.insert(block_of.end(), static_cast<std::size_t>(m), id);
        ++id;
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    // g and g' share a left coset of the Young subgroup iff they send every
    // block to the same set, i.e. produce the same image labelling.
    std::set<std::vector<int>> images;
    do {
        std::vector<int> image(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x)
            image[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])] = block_of[static_cast<std::size_t>(x)];
        images.insert(std::move(image));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return images.size();
}

std::uint64_t kunneth_dim(int n, int e)
{
    require(n >= 0 && e >= 1, "kunneth_dim needs n >= 0 and e >= 1");
    std::map<std::pair<int, int>, std::uint64_t> memo;
    std::function<std::uint64_t(int, int)> f = [&](int nn, int ee) -> std::uint64_t {
        if (ee == 1)
            return 1;
        if (auto it = memo.find({nn, ee}); it != memo.end())
            return it->second;
        std::uint64_t total = 0;
        for (int i = 0; i <= nn; ++i)
            total = checked_add(total, f(i, ee - 1), "Kunneth sum");
        memo[{nn, ee}] = total;
        return total;
    };
    return f(n, e);
}

std::vector<DecompositionMatrix> solve_completions(int n, int l, const std::vector<EntryConstraint>& entries,
                                                   const std::vector<MultiplicityConstraint>& multiplicities,
                                                   std::uint64_t max_entry)
{
    const auto parts = partitions_of(n);
    const std::size_t k = parts.size();
    auto index_of = [&](const Partition& p) {
        auto it = std::find(parts.begin(), parts.end(), p);
        require(it != parts.end(), "(" + p.to_string() + ") is not a partition of " + std::to_string(n));
        return static_cast<std::size_t>(it - parts.begin());
    };
    std::vector<std::size_t> conj(k);
    for (std::size_t i = 0; i < k; ++i)
        conj[i] = index_of(conjugate(parts[i]));

    // -1 marks a free cell; otherwise the cell is pinned.
    std::vector<std::vector<long long>> cell(k, std::vector<long long>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            cell[i][j] = i == j ? 1 : (prefix_dominates(parts[j], parts[i]) ? -1 : 0);
    for (const auto& c : entries) {
        auto i = index_of(c.row), j = index_of(c.column);
        auto v = static_cast<long long>(c.value);
        if (cell[i][j] >= 0 && cell[i][j] != v)
            return {};
        cell[i][j] = v;
    }
    std::vector<std::pair<std::size_t, std::size_t>> free_cells;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (cell[i][j] < 0)
                free_cells.emplace_back(i, j);

    struct Target {
        std::size_t lambda, nu;
        std::uint64_t value;
    };
    std::vector<Target> targets;
    for (const auto& c : multiplicities)
        targets.push_back({index_of(c.lambda), index_of(c.nu), c.value});

    std::vector<DecompositionMatrix> out;
    std::vector<std::vector<std::uint64_t>> d(k, std::vector<std::uint64_t>(k, 0));
    std::vector<std::uint64_t> digits(free_cells.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                d[i][j] = cell[i][j] < 0 ? 0 : static_cast<std::uint64_t>(cell[i][j]);
        for (std::size_t c = 0; c < free_cells.size(); ++c)
            d[free_cells[c].first][free_cells[c].second] = digits[c];

        bool ok = true;
        for (const auto& t : targets) {
            std::uint64_t sum = 0;
            for (std::size_t mu = 0; mu < k; ++mu)
                sum += d[conj[mu]][conj[t.lambda]] * d[mu][t.nu];
            if (sum != t.value) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::string text = "n=" + std::to_string(n) + "\nl=" + std::to_string(l) + "\n";
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    if (i != j && d[i][j] != 0)
                        text += "d " + parts[i].to_string() + " " + parts[j].to_string() + " "
                                + std::to_string(d[i][j]) + "\n";
            out.push_back(DecompositionMatrix::parse(text));
        }

        std::size_t c = 0;
        while (c < digits.size() && digits[c] == max_entry)
            digits[c++] = 0;
        if (c == digits.size())
            break;
        ++digits[c];
    }
    return out;
}

std::vector<DecompositionMatrix> delta3_constraint_solve(std::uint64_t max_entry)
{
    const Partition p3{3}, p21{2, 1}, p111{1, 1, 1};
    return solve_completions(3, 2,
                             {{p3, p3, 1}, {p21, p3, 0}, {p111, p3, 1}, {p111, p111, 1}, {p3, p111, 0}},
                             {{p111, p111, 1}, {p21, p111, 0}, {p3, p111, 0}}, max_entry);
}

std::vector<DecompositionMatrix> delta4_constraint_solve(std::uint64_t max_entry)
{
    const Partition p4{4}, p31{3, 1}, p22{2, 2}, p211{2, 1, 1}, p1111{1, 1, 1, 1};
    const std::vector<Partition> columns{p22, p211, p1111};
    const std::vector<std::pair<Partition, std::vector<std::uint64_t>>> table{
        {p1111, {0, 0, 1}}, {p211, {1, 1, 0}}, {p22, {1, 0, 0}}, {p31, {0, 0, 0}}, {p4, {0, 0, 0}},
    };
    std::vector<MultiplicityConstraint> mult;
    for (const auto& [lambda, row] : table)
        for (std::size_t c = 0; c < columns.size(); ++c)
            mult.push_back({lambda, columns[c], row[c]});
    return solve_completions(4, 2, {}, mult, max_entry);
}

std::vector<EntryConstraint> forced_entries(const std::vector<DecompositionMatrix>& solutions)
{
    std::vector<EntryConstraint> out;
    if (solutions.empty())
        return out;
    const auto parts = partitions_of(solutions.front().n());
    for (const auto& row : parts)
        for (const auto& column : parts) {
            const auto v = solutions.front().at(row, column);
            bool same = std::all_of(solutions.begin(), solutions.end(),
                                    [&](const DecompositionMatrix& m) { return m.at(row, column) == v; });
            if (same)
                out.push_back({row, column, v});
        }
    return out;
}

OracleReport check_lr_uniqueness(int max_n)
{
    OracleReport report{.name = "lr-adic uniqueness (exhaustive vs greedy)", .checked = 0, .failures = {}};
    const std::vector<std::pair<int, int>> pairs{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}};

    std::vector<std::future<OracleReport>> jobs;
    for (auto [l, r] : pairs) {
        jobs.push_back(std::async(std::launch::async, [=] {
            OracleReport part;
            for (int n = 0; n <= max_n; ++n)
                for (const auto& p : partitions_of(n)) {
                    auto all = exhaustive_lr_decompositions(p, l, r, default_depth_cap(n, l, r));
                    auto greedy = lr_adic_decomposition(p, l, r);
                    ++part.checked;
                    if (all.size() != 1)
                        part.failures.push_back({lr_label(p, l, r), "exactly one decomposition",
                                                 std::to_string(all.size()) + " decompositions"});
                    else if (!(all.front() == greedy))
                        part.failures.push_back({lr_label(p, l, r), show(all.front()), show(greedy)});
                }
            return part;
        }));
    }
    for (auto& job : jobs) {
        auto part = job.get();
        report.checked += part.checked;
        report.failures.insert(report.failures.end(), part.failures.begin(), part.failures.end());
    }
    return report;
}

OracleReport check_partition_duality(int max_n)
{
    OracleReport report{.name = "conjugation involution and regular/restricted duality", .checked = 0, .failures = {}};
    for (int n = 0; n <= max_n; ++n) {
        const auto parts = partitions_of(n);
        for (const auto& p : parts) {
            ++report.checked;
            if (!(conjugate(conjugate(p)) == p))
                report.failures.push_back({"(" + p.to_string() + ")''", p.to_string(), conjugate(conjugate(p)).to_string()});
            for (int l = 2; l <= 7; ++l)
                if (is_l_regular(p, l) != is_l_restricted(conjugate(p), l))
                    report.failures.push_back({"(" + p.to_string() + ") l=" + std::to_string(l),
                                               "regular(p) == restricted(p')", "mismatch"});
        }
        for (int l = 2; l <= 7; ++l) {
            auto regular = std::count_if(parts.begin(), parts.end(), [&](const Partition& p) { return is_l_regular(p, l); });
            auto restricted = std::count_if(parts.begin(), parts.end(), [&](const Partition& p) { return is_l_restricted(p, l); });
            if (regular != restricted)
                report.failures.push_back({"n=" + std::to_string(n) + " l=" + std::to_string(l),
                                           std::to_string(regular), std::to_string(restricted)});
        }
    }
    return report;
}

OracleReport check_coset_index(int max_n)
{
    OracleReport report{.name = "Young subgroup coset count vs n!/prod m_i!", .checked = 0, .failures = {}};
    for (int n = 1; n <= std::min(max_n, 6); ++n)
        for (const auto& shape : levi_shapes_of(n)) {
            ++report.checked;
            auto brute = coset_count(n, shape);
            auto formula = weyl_index(shape);
            if (brute != formula)
                report.failures.push_back({shape.to_string(), std::to_string(brute), std::to_string(formula)});
        }
    return report;
}

OracleReport check_kunneth(int max_n, int max_e)
{
    OracleReport report{.name = "Kunneth recursion vs binomial cohomology dimension", .checked = 0, .failures = {}};
    for (int e = 1; e <= max_e; ++e)
        for (int n = 0; n <= max_n; ++n) {
            ++report.checked;
            auto rec = kunneth_dim(n, e);
            auto closed = cohomology_dim(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(e));
            if (rec != closed)
                report.failures.push_back({"n=" + std::to_string(n) + " e=" + std::to_string(e), std::to_string(rec),
                                           std::to_string(closed)});
        }
    return report;
}

OracleReport check_fixtures()
{
    OracleReport report{.name = "bundled matrices vs constraint solver", .checked = 0, .failures = {}};
    auto agree = [&](const std::string& name, const std::vector<DecompositionMatrix>& solutions) {
        const auto fixture = load_fixture(name);
        if (solutions.empty()) {
            report.failures.push_back({name, "at least one consistent completion", "none"});
            return;
        }
        for (const auto& c : forced_entries(solutions)) {
            ++report.checked;
            auto got = fixture.at(c.row, c.column);
            if (got != c.value)
                report.failures.push_back({name + " d_(" + c.row.to_string() + ")(" + c.column.to_string() + ")",
                                           std::to_string(c.value), std::to_string(got)});
        }
        const auto parts = partitions_of(fixture.n());
        bool member = std::any_of(solutions.begin(), solutions.end(), [&](const DecompositionMatrix& m) {
            for (const auto& row : parts)
                for (const auto& col : parts)
                    if (m.at(row, col) != fixture.at(row, col))
                        return false;
            return true;
        });
        ++report.checked;
        if (!member)
            report.failures.push_back({name, "fixture among the consistent completions", "not found"});
    };
    agree("delta3_l2", delta3_constraint_solve());
    agree("delta4_l2", delta4_constraint_solve());

    const Partition p3{3}, p21{2, 1}, p111{1, 1, 1};
    const std::vector<MultiplicityConstraint> l3_constraints{{p111, p111, 1}, {p21, p111, 0}, {p3, p111, 0}};
    agree("delta3_l3", solve_completions(3, 3, {}, l3_constraints, 2));
    return report;
}

std::vector<OracleReport> run_all(int max_n)
{
    require(max_n >= 1 && max_n <= 14, "verify supports --max-n between 1 and 14");
    auto lr = std::async(std::launch::async, check_lr_uniqueness, max_n);
    std::vector<OracleReport> out;
    out.push_back(check_partition_duality(max_n));
    out.push_back(check_coset_index(max_n));
    out.push_back(check_kunneth(20, 6));
    out.push_back(check_fixtures());
    out.insert(out.begin(), lr.get());
    return out;
}

}  // namespace hcext::oracles
