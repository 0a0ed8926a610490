#pragma once

// Base-p digit arithmetic: expansions, standard expressions r = (p^N - 1) + sigma,
// partial digit sums sigma_I, support sets S(m) and the total order on subsets.

#include <cstdint>
#include <vector>

#include "cgd/errors.hpp"

namespace cgd {

using Int = std::int64_t;

/// Weights are bounded so that every intermediate (2 p^{N+1}, 3r+3, ...) fits in 64 bits.
inline constexpr Int kMaxWeight = Int{1} << 40;
inline constexpr Int kMaxPrime = Int{1} << 20;

/// Sorted, duplicate-free list of digit positions.
using IndexSet = std::vector<int>;

bool is_prime(Int n);

/// A validated prime characteristic.
class Prime {
public:
    explicit Prime(Int p);

    [[nodiscard]] Int value() const noexcept { return p_; }
    [[nodiscard]] bool is_odd() const noexcept { return p_ != 2; }

    friend bool operator==(Prime, Prime) = default;

private:
    Int p_;
};

/// Throws DomainError unless 0 <= w < kMaxWeight.
void check_weight(Int w, const char* what);

/// p^e, throwing DomainError on overflow.
Int ipow(Int p, int e);

struct Digits {
    Prime p;
    Int value = 0;
    std::vector<int> digits;  // least significant first, no trailing zeros

    /// d_i, zero beyond the stored range.
    [[nodiscard]] int digit(std::size_t i) const noexcept {
        return i < digits.size() ? digits[i] : 0;
    }
};

Digits digits(Int n, Prime p);

struct StandardForm {
    Prime p;
    Int r = 0;
    int N = 0;
    Digits sigma;

    [[nodiscard]] Int p_to_N() const { return ipow(p.value(), N); }
};

/// The unique (N, sigma) with p^N - 1 <= r < p^{N+1} - 1 and r = (p^N - 1) + sigma.
StandardForm standard_form(Int r, Prime p);

/// sigma_I = sum_{i in I} p^i sigma_i. Indices outside the digit range contribute 0.
Int sigma_subset(const Digits& sigma, const IndexSet& I);

struct SupportSet {
    Int m = 0;
    IndexSet indices;
};

/// S(m) = { i < N : sigma_i != 0 } for the standard form of m.
SupportSet support(Int m, Prime p);

/// I <= J in the total order on subsets, defined by sigma_I <= sigma_J.
bool subset_leq(const IndexSet& I, const IndexSet& J, const Digits& sigma);

/// The same order characterized by max(I \ J) <= max(J \ I), with max of the empty set below every index.
bool subset_leq_by_max(const IndexSet& I, const IndexSet& J);

/// Every subset of `indices`, in order of increasing bitmask over the given positions.
std::vector<IndexSet> all_subsets(const IndexSet& indices);

/// True if I is sorted, duplicate-free and contained in `super`.
bool is_subset_of(const IndexSet& I, const IndexSet& super);

}  // namespace cgd
