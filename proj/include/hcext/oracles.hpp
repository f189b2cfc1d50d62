#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hcext/decomp_matrix.hpp"
#include "hcext/levi.hpp"
#include "hcext/partition.hpp"

// Brute-force checks that share no code path with the routines they verify.
namespace hcext::oracles {

struct OracleFailure {
    std::string input;
    std::string expected;
    std::string got;
};

struct OracleReport {
    std::string name;
    std::size_t checked = 0;
    std::vector<OracleFailure> failures;

    bool ok() const noexcept { return failures.empty(); }
};

// Smallest cap with l * r^cap > n.
int default_depth_cap(int n, int l, int r);

// Every way to write p part-wise as minus1 + sum_a l r^a higher[a] with minus1
// l-restricted and each higher[a] r-restricted, a <= depth_cap, found by
// enumerating the candidate component partitions level by level.
std::vector<LrAdicDecomposition> exhaustive_lr_decompositions(const Partition& p, int l, int r, int depth_cap);

// Left cosets of the Young subgroup for `shape` in S_n, counted by listing all
// n! permutations. n <= 7.
std::uint64_t coset_count(int n, const LeviShape& shape);

// f(n,1) = 1, f(n,e) = sum_{i<=n} f(i,e-1): the Kunneth count for dim H^n.
std::uint64_t kunneth_dim(int n, int e);

struct EntryConstraint {
    Partition row;
    Partition column;
    std::uint64_t value;
};

struct MultiplicityConstraint {
    Partition lambda;  // Young module X(1,lambda)
    Partition nu;      // composition factor D(1,nu)
    std::uint64_t value;
};

// All unitriangular, dominance-respecting matrices over partitions of n with
// entries in [0, max_entry] that satisfy every constraint.
std::vector<DecompositionMatrix> solve_completions(int n, int l, const std::vector<EntryConstraint>& entries,
                                                   const std::vector<MultiplicityConstraint>& multiplicities,
                                                   std::uint64_t max_entry);

// Completions of Delta_3 (l = 2) consistent with the quoted column (3) and
// the multiplicities [X(1,lambda) : D(1,(1^3))] = 1, 0, 0.
std::vector<DecompositionMatrix> delta3_constraint_solve(std::uint64_t max_entry = 2);

// Completions of Delta_4 (l = 2) consistent with the fifteen target
// multiplicities of D(1,(2^2)), D(1,(2,1^2)), D(1,(1^4)) in X(1,lambda).
std::vector<DecompositionMatrix> delta4_constraint_solve(std::uint64_t max_entry = 2);

// Cells (row, column) on which every solution agrees, with the common value.
std::vector<EntryConstraint> forced_entries(const std::vector<DecompositionMatrix>& solutions);

// Suites run by `verify`.
OracleReport check_lr_uniqueness(int max_n);
OracleReport check_partition_duality(int max_n);
OracleReport check_coset_index(int max_n);
OracleReport check_kunneth(int max_n, int max_e);
OracleReport check_fixtures();

std::vector<OracleReport> run_all(int max_n);

}  // namespace hcext::oracles
