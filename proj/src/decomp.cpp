#include "cgd/decomp.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "cgd/quadruple.hpp"
#include "cgd/tilting.hpp"

namespace cgd {

bool y_has_tilting(Int r, Int s, Prime p) {
    check_weight(r, "r");
    check_weight(s, "s");
    if (s > r || (r - s) % 2 != 0) return false;
    const StandardForm form = standard_form(s, p);
    const Digits u = digits((r - s) / 2, p);
    const auto n = static_cast<std::size_t>(form.N);
    const Int top = p.value() - 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (form.sigma.digit(i) + u.digit(i) > top) return false;
    }
    return form.sigma.digit(n) + u.digit(n) < top;
}

bool y_has_tilting_by_triple(Int r, Int s, Prime p) {
    check_weight(r, "r");
    check_weight(s, "s");
    if (s > r || (r - s) % 2 != 0) return false;
    // s = (p^N - 1) + sigma with an admissible sigma forces the standard form of s.
    const StandardForm form = standard_form(s, p);
    const Int pN1 = form.p_to_N() * p.value();
    // r = s + 2 delta (mod 2 p^{N+1})  <=>  delta = (r - s)/2 (mod p^{N+1})
    const Int delta = ((r - s) / 2) % pN1;
    return is_admissible_triple(form.N, form.sigma.value, delta, p);
}

std::vector<Int> decompose_y(Int r, Prime p) {
    check_weight(r, "r");
    std::vector<Int> out;
    for (Int s = r; s >= 0; s -= 2) {
        if (y_has_tilting(r, s, p)) out.push_back(s);
    }
    return out;
}

Character Decomposition::character() const {
    Character c;
    for (const Summand& sm : summands) c += sm.character;
    return c;
}

namespace {

Summand make_summand(Int m, IndexSet I, Prime p) {
    Summand sm{m, std::move(I), {}, {}};
    sm.sections = truncated_section_weights(m, sm.I, p);
    for (Int w : sm.sections) sm.character += chi(w);
    return sm;
}

}  // namespace

Decomposition decompose_tensor(Int r, Int s, Prime p, DualPolicy policy) {
    check_weight(r, "r");
    check_weight(s, "s");
    if (r < s) {
        if (policy == DualPolicy::Reject) {
            throw DomainError("decompose_tensor needs r >= s; nabla(" + std::to_string(r) + ") (x) Delta(" +
                              std::to_string(s) + ") is dual to the (s, r) case");
        }
        Decomposition d = decompose_tensor(s, r, p, DualPolicy::Reject);
        d.dual = true;
        return d;
    }

    Decomposition d{p, r, s, false, {}};
    const Int floor = r - s;
    std::set<std::pair<Int, IndexSet>> seen;
    for (Int m : decompose_y(r + s, p)) {
        if (m < floor) continue;
        const StandardForm form = standard_form(m, p);
        // scan subsets of S(m) by decreasing sigma_I; the first admissible one is the maximizer
        std::vector<std::pair<Int, IndexSet>> ranked;
        for (IndexSet& I : all_subsets(support(m, p).indices)) {
            ranked.emplace_back(sigma_subset(form.sigma, I), std::move(I));
        }
        std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
        for (std::size_t k = 0; k + 1 < ranked.size(); ++k) {
            if (ranked[k].first == ranked[k + 1].first) {
                throw InvariantViolation("decompose_tensor: two subsets of S(m) share sigma_I");
            }
        }
        const auto best = std::find_if(ranked.begin(), ranked.end(),
                                       [&](const auto& e) { return m - 2 * e.first >= floor; });
        // I = {} always qualifies since m >= r - s
        if (!seen.emplace(m, best->second).second) {
            throw InvariantViolation("decompose_tensor: repeated summand");
        }
        d.summands.push_back(make_summand(m, best->second, p));
    }
    return d;
}

bool nabla_is_summand(Int t, Int r, Int s, Prime p) {
    check_weight(t, "t");
    check_weight(r, "r");
    check_weight(s, "s");
    if (r < s) throw DomainError("nabla_is_summand needs r >= s");
    if (t < r - s || t > r + s || (r + s - t) % 2 != 0) return false;
    const StandardForm form = standard_form(t, p);
    const Digits u = digits((r + s - t) / 2, p);
    const auto n = static_cast<std::size_t>(form.N);
    const Int top = p.value() - 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (form.sigma.digit(i) + u.digit(i) > top) return false;
    }
    if (form.sigma.digit(n) + u.digit(n) >= top) return false;
    // least m < N with sigma_m != 0; its section t - 2 p^m sigma_m must fall below r - s
    for (std::size_t m = 0; m < n; ++m) {
        if (form.sigma.digit(m) == 0) continue;
        return t - 2 * ipow(p.value(), static_cast<int>(m)) * form.sigma.digit(m) < r - s;
    }
    return true;
}

}  // namespace cgd
