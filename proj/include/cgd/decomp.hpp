#pragma once

// Decomposition of Y(r) into tilting modules and of nabla(r) (x) Delta(s) into
// the indecomposable Clebsch-Gordan modules T(m)_I.

#include <vector>

#include "cgd/basep.hpp"
#include "cgd/charring.hpp"

namespace cgd {

/// (Y(r) | T(s)) != 0, by the digit test: with u = (r - s)/2 and s = (p^N - 1) + sigma,
/// sigma_i + u_i <= p - 1 for i < N and sigma_N + u_N < p - 1.
/// False when s > r or r - s is odd.
bool y_has_tilting(Int r, Int s, Prime p);

/// The same predicate in admissible-triple form: some admissible (N, sigma, delta)
/// has s = (p^N - 1) + sigma and r = s + 2 delta (mod 2 p^{N+1}).
bool y_has_tilting_by_triple(Int r, Int s, Prime p);

/// Highest weights s of the tilting summands of Y(r), descending.
std::vector<Int> decompose_y(Int r, Prime p);

/// The indecomposable Clebsch-Gordan module T(m)_I.
struct Summand {
    Int m = 0;
    IndexSet I;
    std::vector<Int> sections;  // nabla-section weights, highest first
    Character character;

    [[nodiscard]] Int dim() const { return character.dimension(); }
    friend bool operator==(const Summand&, const Summand&) = default;
};

struct Decomposition {
    Prime p;
    Int r = 0;
    Int s = 0;
    /// Set when r < s: the summands listed are those of nabla(s) (x) Delta(r),
    /// and the actual summands are their duals.
    bool dual = false;
    std::vector<Summand> summands;  // descending m

    [[nodiscard]] Character character() const;
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

enum class DualPolicy { Reject, Dualize };

/// Summands T(m)_I of nabla(r) (x) Delta(s). For r < s, throws DomainError under
/// DualPolicy::Reject and otherwise returns the (s, r) decomposition tagged dual.
Decomposition decompose_tensor(Int r, Int s, Prime p, DualPolicy policy = DualPolicy::Reject);

/// Closed-form test for nabla(t) being a summand of nabla(r) (x) Delta(s), r >= s:
/// t >= r - s, r + s - t even, the digit test for (Y(r+s) | T(t)), and, when S(t)
/// is nonempty with least element m, t - 2 p^m sigma_m < r - s.
bool nabla_is_summand(Int t, Int r, Int s, Prime p);

}  // namespace cgd
