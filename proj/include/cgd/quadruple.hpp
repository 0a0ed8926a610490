#pragma once

// Admissible triples (N, sigma, delta) and quadruples (N, sigma, delta, I), and
// the unique quadruple attached to a pair (r, t) with r >= t, r - t even.
//
// A quadruple is a solution for (r, t) when
//     t = (p^N - 1) + sigma - 2 sigma_I
//     r = (p^N - 1) + sigma + 2 delta   (mod 2 p^{N+1}).
// Two independent solvers are provided: exhaustive enumeration (any p) and the
// digit-by-digit recursion that peels off the lowest base-p digit (odd p).

#include <ostream>
#include <vector>

#include "cgd/basep.hpp"

namespace cgd {

struct Quadruple {
    int N = 0;
    Int sigma = 0;
    Int delta = 0;
    IndexSet I;

    friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

std::ostream& operator<<(std::ostream& os, const Quadruple& q);

bool is_admissible_triple(int N, Int sigma, Int delta, Prime p);

/// Admissible triple plus I contained in { i : sigma_i != 0, i != N }.
bool is_admissible_quadruple(const Quadruple& q, Prime p);

/// Throws DomainError unless r >= t >= 0 and r - t is even.
void check_pair(Int r, Int t);

/// Throws DomainError on a bad pair (see check_pair).
bool is_quadruple_for(const Quadruple& q, Int r, Int t, Prime p);

/// Every admissible quadruple for (r, t), found by exhaustive search over N and sigma.
/// Throws InvariantViolation if a solution appears in the guard band of N values
/// that cannot carry one.
std::vector<Quadruple> solve_by_enumeration(Int r, Int t, Prime p);

/// The unique quadruple built by the lowest-digit case analysis. Odd p only;
/// throws UnsupportedRecursion for p = 2.
Quadruple solve_recursive(Int r, Int t, Prime p);

/// The unique admissible quadruple for (r, t): recursion for odd p, enumeration for p = 2.
Quadruple solve(Int r, Int t, Prime p);

}  // namespace cgd
