#pragma once

// Good-filtration sections of the indecomposable tilting modules T(r) and of
// their quotients T(m)_I.

#include <optional>
#include <vector>

#include "cgd/basep.hpp"
#include "cgd/charring.hpp"

namespace cgd {

struct Section {
    IndexSet subset;
    Int weight = 0;  // r - 2 sigma_I
};

/// The nabla-sections of T(r). Each section occurs once; sections are listed
/// in increasing order of subset, i.e. decreasing weight.
struct TiltingProfile {
    Prime p;
    Int r = 0;
    StandardForm form;
    std::vector<Section> sections;
};

TiltingProfile tilting_profile(Int r, Prime p);

/// (T(r) : nabla(s)), which is 0 or 1.
int tilting_nabla_mult(Int r, Int s, Prime p);

Character tilting_char(Int r, Prime p);

/// Character of T(m)_I: sum of chi(m - 2 sigma_J) over J <= I.
/// Throws InvalidSubset unless I is a subset of S(m).
Character truncated_tilting_char(Int m, const IndexSet& I, Prime p);

/// Section weights m - 2 sigma_J of T(m)_I, highest first.
std::vector<Int> truncated_section_weights(Int m, const IndexSet& I, Prime p);

struct OPiSplit {
    /// Largest I whose section lies outside pi, so that T(m)/O_pi(T(m)) = T(m)_I.
    /// Empty when every section lies in pi and the quotient is zero.
    std::optional<IndexSet> kept;
    /// Character of O_pi(T(m)).
    Character discarded;
};

OPiSplit o_pi_tilting_sections(Int m, const SaturatedSet& pi, Prime p);

}  // namespace cgd
