#pragma once

// The character ring of the diagonal torus: integer Laurent polynomials in x,
// the characters chi(r) of the induced modules and expansion in the chi-basis.

#include <map>
#include <string>
#include <utility>

#include "cgd/basep.hpp"

namespace cgd {

/// Sparse Laurent polynomial sum_w c_w x^w with integer coefficients.
/// Only nonzero coefficients are stored.
class Character {
public:
    using Terms = std::map<Int, Int>;

    Character() = default;

    [[nodiscard]] Int coeff(Int weight) const;
    void add_term(Int weight, Int c);

    [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] bool is_symmetric() const;
    /// Sum of coefficients, i.e. the dimension for a module character.
    [[nodiscard]] Int dimension() const;
    /// Largest weight with a nonzero coefficient; throws DomainError on the zero character.
    [[nodiscard]] Int max_weight() const;

    Character& operator+=(const Character& other);
    Character& operator-=(const Character& other);

    friend Character operator+(Character a, const Character& b) { return a += b; }
    friend Character operator-(Character a, const Character& b) { return a -= b; }
    friend Character operator*(const Character& a, const Character& b);
    friend bool operator==(const Character&, const Character&) = default;

    /// Human-readable form, highest weight first, e.g. "x^3 + x + x^-1 + x^-3".
    [[nodiscard]] std::string to_string() const;

private:
    Terms terms_;
};

/// chi(r) = x^r + x^{r-2} + ... + x^{-r}.
Character chi(Int r);

Character mul(const Character& a, const Character& b);

/// ch Y(r) = chi(r) + chi(r-2) + ... ending at chi(0) or chi(1).
Character y_char(Int r);

/// Multiplicities (V : nabla(t)) indexed by t >= 0.
struct ChiExpansion {
    std::map<Int, Int> mults;

    [[nodiscard]] Character character() const;
    [[nodiscard]] bool is_nonnegative() const;
    friend bool operator==(const ChiExpansion&, const ChiExpansion&) = default;
};

/// Writes a symmetric character in the chi-basis by peeling off the highest weight.
/// Throws DomainError if c is not symmetric under w -> -w.
ChiExpansion chi_expand(const Character& c);

/// A set pi of non-negative integers closed downward along steps of 2.
/// Each parity class of such a set is an initial segment, so it is stored as
/// two exclusive bounds: t is a member iff t < bound of its parity.
class SaturatedSet {
public:
    static constexpr Int kUnbounded = kMaxWeight;

    SaturatedSet() = default;

    /// { t : t < bound }.
    static SaturatedSet below(Int bound);
    /// { t : t even, t < even_bound } u { t : t odd, t < odd_bound }.
    static SaturatedSet by_parity(Int even_bound, Int odd_bound);
    /// Validates an explicit finite member list; throws DomainError if it is not saturated.
    static SaturatedSet from_members(const std::vector<Int>& members);

    [[nodiscard]] bool contains(Int t) const noexcept;
    [[nodiscard]] bool empty() const noexcept { return even_bound_ <= 0 && odd_bound_ <= 1; }

private:
    SaturatedSet(Int even_bound, Int odd_bound) : even_bound_(even_bound), odd_bound_(odd_bound) {}

    Int even_bound_ = 0;
    Int odd_bound_ = 0;
};

/// Splits e into the part indexed inside pi (the O_pi submodule) and the part outside it (the quotient).
std::pair<ChiExpansion, ChiExpansion> truncate_expansion(const ChiExpansion& e, const SaturatedSet& pi);

}  // namespace cgd
