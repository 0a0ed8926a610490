#pragma once

// Brute-force verification: the multiplicity-matrix identity A B = C
// (A = tilting summands of Y(r), B = nabla-sections of T(s), C = nabla-sections
// of Y(r)) and a sweep over every cross-module invariant.

#include <cstdint>
#include <string>
#include <vector>

#include "cgd/basep.hpp"

namespace cgd {

/// Square integer matrix indexed by weights 0..n.
class MultMatrix {
public:
    explicit MultMatrix(Int n) : n_(n), entries_(static_cast<std::size_t>((n + 1) * (n + 1)), 0) {}

    [[nodiscard]] Int bound() const noexcept { return n_; }
    [[nodiscard]] Int at(Int r, Int s) const { return entries_[index(r, s)]; }
    Int& at(Int r, Int s) { return entries_[index(r, s)]; }

    [[nodiscard]] bool is_lower_unitriangular() const;

    friend MultMatrix operator*(const MultMatrix& a, const MultMatrix& b);
    friend bool operator==(const MultMatrix&, const MultMatrix&) = default;

private:
    [[nodiscard]] std::size_t index(Int r, Int s) const {
        return static_cast<std::size_t>(r * (n_ + 1) + s);
    }

    Int n_;
    std::vector<Int> entries_;
};

/// a_rs = (Y(r) | T(s)) by the digit test.
MultMatrix build_A(Int n, Prime p);
/// b_rs = (T(r) : nabla(s)).
MultMatrix build_B(Int n, Prime p);
/// c_rt = (Y(r) : nabla(t)) = 1 iff r >= t and r - t even.
MultMatrix build_C(Int n, Prime p);

/// Solves X B = C by back-substitution against the unitriangular B.
/// Throws InvariantViolation if an entry is not 0 or 1.
MultMatrix recover_A(Int n, Prime p);

struct CheckResult {
    std::string name;
    bool passed = true;
    std::uint64_t cases = 0;
    std::string counterexample;  // first failure, empty on success
};

struct Report {
    Int p = 0;
    Int bound = 0;
    std::vector<CheckResult> checks;

    [[nodiscard]] bool all_passed() const;
    /// One "PASS|FAIL <name> cases=<n>[ counterexample: ...]" line per check plus a summary line.
    [[nodiscard]] std::string to_text() const;
};

/// Runs every invariant family for weights up to `bound`. Families run concurrently.
/// The explicit F_p checks are capped at r + s <= kExplicitSweepCap.
Report verify_all(Prime p, Int bound);

inline constexpr Int kExplicitSweepCap = 16;

}  // namespace cgd
