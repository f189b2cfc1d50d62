#pragma once

#include <cstdint>
#include <optional>

namespace hcext {

// Least d >= 1 with q^d = 1 (mod r). Requires r prime and r not dividing q.
int mult_order(std::uint64_t q, int r);

// r when q = 1 (mod r), otherwise the multiplicative order of q mod r.
int compute_l(std::uint64_t q, int r);

// r-rank of the split maximal torus (F_q^x)^n of GL_n(q): n if r | q-1, else 0.
int torus_r_rank(int n, std::uint64_t q, int r);

// Arithmetic of GL_n(q) over a field of characteristic r (r not dividing q).
//
// The usual construction derives l and e from q. `with_l_override` instead
// fixes l directly (James's parameter, often called e there); q may then be
// omitted, in which case the torus rank and the r | |B| split are unknown.
class GroupContext {
public:
    static GroupContext make(int n, std::uint64_t q, int r);
    static GroupContext with_l_override(int n, std::optional<std::uint64_t> q, int r, int l);

    int n() const noexcept { return n_; }
    std::optional<std::uint64_t> q() const noexcept { return q_; }
    int r() const noexcept { return r_; }
    int l() const noexcept { return l_; }
    bool l_overridden() const noexcept { return l_overridden_; }

    // Torus r-rank; empty when q is unknown.
    std::optional<int> e() const noexcept { return e_; }

    // |W| = n!.
    std::uint64_t weyl_order() const;

    // True iff r does not divide |B| = q^{n(n-1)/2}(q-1)^n. Empty when q is unknown.
    std::optional<bool> case_one() const;

private:
    GroupContext() = default;

    int n_ = 1;
    std::optional<std::uint64_t> q_;
    int r_ = 2;
    int l_ = 2;
    bool l_overridden_ = false;
    std::optional<int> e_;
};

bool case_one_applies(const GroupContext& ctx);

}  // namespace hcext
