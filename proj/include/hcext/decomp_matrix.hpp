#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hcext/partition.hpp"

namespace hcext {

struct MatrixLoadOptions {
    bool relaxed_dominance = false;
};

// Unipotent decomposition numbers d_{lambda mu} = [S(1,lambda) : D(1,mu)] of
// GL_n(q), stored sparsely. Rows and columns are partitions of n; unstored
// off-diagonal entries are 0 and the diagonal is 1.
//
// File format (line oriented, '#' starts a comment line):
//
//   n=3
//   l=2
//   r=2                optional
//   source=<text>      optional
//   d 1^3 3 1          d <row> <column> <value>
//
// Validation: partitions have size n, the diagonal is 1, no entry appears
// twice, and nonzero d_{lambda mu} requires mu to dominate lambda (checked
// unless loaded in relaxed mode).
class DecompositionMatrix {
public:
    using LoadOptions = MatrixLoadOptions;

    static DecompositionMatrix parse(std::string_view text, LoadOptions options);
    static DecompositionMatrix parse(std::string_view text) { return parse(text, LoadOptions{}); }
    static DecompositionMatrix load_file(const std::string& path, LoadOptions options = {});

    // Unit matrix on partitions of n.
    static DecompositionMatrix identity(int n, int l);

    int n() const noexcept { return n_; }
    int l() const noexcept { return l_; }
    std::optional<int> r_note() const noexcept { return r_note_; }
    const std::string& source() const noexcept { return source_; }

    // d_{row, column}; 1 on the diagonal, 0 when absent.
    std::uint64_t at(const Partition& row, const Partition& column) const;

    // Canonical text: headers n, l, r, source, then the nonzero off-diagonal
    // entries ordered by row and then column in enumeration order.
    std::string serialize() const;

private:
    DecompositionMatrix() = default;

    int n_ = 0;
    int l_ = 2;
    std::optional<int> r_note_;
    std::string source_;
    // off-diagonal nonzero entries only
    std::map<std::pair<Partition, Partition>, std::uint64_t> entries_;
};

// [X(1,lambda) : D(1,nu)] = sum over mu of d_{mu' lambda'} d_{mu nu}.
std::uint64_t young_multiplicity(const DecompositionMatrix& m, const Partition& lambda, const Partition& nu);

// max over lambda of [X(1,lambda) : D(1,mu)]; rejects l-regular mu.
std::uint64_t matrix_bound(const DecompositionMatrix& m, const Partition& mu);

// Names of the matrices bundled with the library (see data/).
std::vector<std::string> fixture_names();

// Text of a bundled matrix; throws ValidationError for an unknown name.
std::string_view fixture_text(std::string_view name);

DecompositionMatrix load_fixture(std::string_view name);

}  // namespace hcext
