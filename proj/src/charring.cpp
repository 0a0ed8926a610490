#include "cgd/charring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cgd {

Int Character::coeff(Int weight) const {
    const auto it = terms_.find(weight);
    return it == terms_.end() ? 0 : it->second;
}

void Character::add_term(Int weight, Int c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(weight, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool Character::is_symmetric() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [this](const auto& kv) { return coeff(-kv.first) == kv.second; });
}

Int Character::dimension() const {
    Int d = 0;
    for (const auto& [w, c] : terms_) d += c;
    return d;
}

Int Character::max_weight() const {
    if (terms_.empty()) throw DomainError("max_weight of the zero character");
    return terms_.rbegin()->first;
}

Character& Character::operator+=(const Character& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

Character& Character::operator-=(const Character& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, -c);
    return *this;
}

Character operator*(const Character& a, const Character& b) {
    Character out;
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) out.add_term(wa + wb, ca * cb);
    }
    return out;
}

std::string Character::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [w, c] = *it;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        const Int mag = c < 0 ? -c : c;
        if (w == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << "x";
        if (w != 1) os << "^" << w;
    }
    return os.str();
}

Character chi(Int r) {
    check_weight(r, "r");
    Character c;
    for (Int w = r; w >= -r; w -= 2) c.add_term(w, 1);
    return c;
}

Character mul(const Character& a, const Character& b) { return a * b; }

Character y_char(Int r) {
    check_weight(r, "r");
    Character c;
    for (Int t = r; t >= 0; t -= 2) c += chi(t);
    return c;
}

Character ChiExpansion::character() const {
    Character c;
    for (const auto& [t, m] : mults) {
        Character part = chi(t);
        for (const auto& [w, k] : part.terms()) c.add_term(w, k * m);
    }
    return c;
}

bool ChiExpansion::is_nonnegative() const {
    return std::all_of(mults.begin(), mults.end(), [](const auto& kv) { return kv.second >= 0; });
}

ChiExpansion chi_expand(const Character& c) {
    if (!c.is_symmetric()) throw DomainError("chi_expand: character is not symmetric");
    ChiExpansion out;
    Character rest = c;
    while (!rest.is_zero()) {
        const Int top = rest.max_weight();
        // symmetric and nonzero, so the top weight is >= 0
        const Int m = rest.coeff(top);
        out.mults[top] += m;
        for (Int w = top; w >= -top; w -= 2) rest.add_term(w, -m);
    }
    return out;
}

SaturatedSet SaturatedSet::below(Int bound) {
    const Int b = std::max<Int>(bound, 0);
    return {b, b};
}

SaturatedSet SaturatedSet::by_parity(Int even_bound, Int odd_bound) {
    return {std::max<Int>(even_bound, 0), std::max<Int>(odd_bound, 0)};
}

SaturatedSet SaturatedSet::from_members(const std::vector<Int>& members) {
    const std::set<Int> s(members.begin(), members.end());
    Int even_bound = 0;
    Int odd_bound = 0;
    for (Int n : s) {
        if (n < 0) throw DomainError("saturated set members must be non-negative");
        if (n >= 2 && !s.contains(n - 2)) {
            throw DomainError("set is not saturated: contains " + std::to_string(n) + " but not " +
                              std::to_string(n - 2));
        }
        Int& bound = (n % 2 == 0) ? even_bound : odd_bound;
        bound = std::max(bound, n + 1);
    }
    return {even_bound, odd_bound};
}

bool SaturatedSet::contains(Int t) const noexcept {
    if (t < 0) return false;
    return t < (t % 2 == 0 ? even_bound_ : odd_bound_);
}

std::pair<ChiExpansion, ChiExpansion> truncate_expansion(const ChiExpansion& e, const SaturatedSet& pi) {
    ChiExpansion inside;
    ChiExpansion outside;
    for (const auto& [t, m] : e.mults) {
        if (m == 0) continue;
        (pi.contains(t) ? inside : outside).mults[t] = m;
    }
    return {inside, outside};
}

}  // namespace cgd
