#include "cgd/tilting.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace cgd {

TiltingProfile tilting_profile(Int r, Prime p) {
    StandardForm form = standard_form(r, p);
    // Digits above N vanish since sigma < p^{N+1}, and position N is excluded,
    // so the admissible index set is exactly S(r).
    const SupportSet s = support(r, p);
    TiltingProfile prof{p, r, form, {}};
    std::set<Int> seen;
    for (IndexSet& I : all_subsets(s.indices)) {
        const Int w = r - 2 * sigma_subset(form.sigma, I);
        if (!seen.insert(w).second) {
            throw InvariantViolation("tilting_profile: repeated section weight " + std::to_string(w));
        }
        prof.sections.push_back({std::move(I), w});
    }
    std::sort(prof.sections.begin(), prof.sections.end(),
              [](const Section& a, const Section& b) { return a.weight > b.weight; });
    return prof;
}

int tilting_nabla_mult(Int r, Int s, Prime p) {
    check_weight(s, "s");
    const TiltingProfile prof = tilting_profile(r, p);
    return std::any_of(prof.sections.begin(), prof.sections.end(),
                       [s](const Section& sec) { return sec.weight == s; })
               ? 1
               : 0;
}

Character tilting_char(Int r, Prime p) {
    Character c;
    for (const Section& sec : tilting_profile(r, p).sections) c += chi(sec.weight);
    return c;
}

std::vector<Int> truncated_section_weights(Int m, const IndexSet& I, Prime p) {
    const TiltingProfile prof = tilting_profile(m, p);
    if (!is_subset_of(I, support(m, p).indices)) {
        throw InvalidSubset("I is not a subset of S(" + std::to_string(m) + ")");
    }
    const Int floor = m - 2 * sigma_subset(prof.form.sigma, I);
    std::vector<Int> out;
    for (const Section& sec : prof.sections) {
        if (sec.weight >= floor) out.push_back(sec.weight);
    }
    return out;
}

Character truncated_tilting_char(Int m, const IndexSet& I, Prime p) {
    Character c;
    for (Int w : truncated_section_weights(m, I, p)) c += chi(w);
    return c;
}

OPiSplit o_pi_tilting_sections(Int m, const SaturatedSet& pi, Prime p) {
    const TiltingProfile prof = tilting_profile(m, p);
    OPiSplit out;
    // All section weights share the parity of m, so the kept sections form an
    // initial segment of the (weight-descending) section list.
    bool inside_started = false;
    for (const Section& sec : prof.sections) {
        if (pi.contains(sec.weight)) {
            inside_started = true;
            out.discarded += chi(sec.weight);
        } else {
            if (inside_started) throw InvariantViolation("o_pi_tilting_sections: kept sections not an initial segment");
            out.kept = sec.subset;
        }
    }
    return out;
}

}  // namespace cgd
