#pragma once

// Explicit weight-graded modules over F_p with matrices for the divided-power
// operators f_a (lowering) and e_a (raising), and the map
//     theta : nabla(r) (x) Delta(s) -> nabla(r+1) (x) Delta(s-1)
// whose kernel is nabla(r - s).

#include <string>
#include <vector>

#include "cgd/charring.hpp"
#include "cgd/fp_linalg.hpp"

namespace cgd::fp {

/// Largest p accepted by the explicit constructions.
inline constexpr Int kMaxExplicitPrime = 97;

class FpModule {
public:
    /// f_ops[a-1] and e_ops[a-1] hold f_a and e_a for a = 1..degree.
    FpModule(Prime p, std::vector<Int> weights, std::vector<std::string> labels, std::vector<Matrix> f_ops,
             std::vector<Matrix> e_ops);

    [[nodiscard]] Prime prime() const noexcept { return p_; }
    [[nodiscard]] std::size_t dim() const noexcept { return weights_.size(); }
    [[nodiscard]] const std::vector<Int>& weights() const noexcept { return weights_; }
    [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(f_ops_.size()); }

    /// f_0 is the identity; throws DomainError for a > degree().
    [[nodiscard]] Matrix f(int a) const;
    [[nodiscard]] Matrix e(int a) const;

    [[nodiscard]] Character character() const;

    /// Every f_a sends weight w to w - 2a and every e_a sends w to w + 2a.
    [[nodiscard]] bool operators_respect_weights() const;

private:
    Prime p_;
    std::vector<Int> weights_;
    std::vector<std::string> labels_;
    std::vector<Matrix> f_ops_;
    std::vector<Matrix> e_ops_;
};

/// S^r E on the monomials x1^a x2^b (a + b = r), listed by increasing b.
/// f_i x1^a x2^b = C(a, i) x1^{a-i} x2^{b+i},  e_i x1^a x2^b = C(b, i) x1^{a+i} x2^{b-i}.
/// Operators are stored for a = 1..degree (default r).
FpModule nabla_module(Int r, Prime p, int degree = -1);

/// The Weyl module on v_i = f_i l_+ (0 <= i <= s), weight s - 2i.
/// f_a v_i = C(a+i, i) v_{a+i},  e_a v_i = C(s-i+a, a) v_{i-a}.
FpModule delta_module(Int s, Prime p, int degree = -1);

/// Tensor product with f_a(x (x) y) = sum_{b+c=a} f_b x (x) f_c y (likewise e_a).
/// Basis index i * B.dim() + j for the pair (i, j). Degree is the smaller of the two.
FpModule tensor(const FpModule& A, const FpModule& B);

struct LinearMap {
    FpModule domain;
    FpModule codomain;
    Matrix matrix;  // codomain.dim() x domain.dim()

    /// matrix * X = X * matrix for every stored f_a and e_a.
    [[nodiscard]] bool commutes_with_operators() const;
};

/// theta = (alpha (x) id) o (id (x) beta) with alpha the multiplication S^r E (x) E -> S^{r+1} E
/// and beta(f_i l_+) = x1 (x) f_i m_+ + x2 (x) f_{i-1} m_+. Needs r >= s > 0.
/// Operators are stored up to degree r + s, beyond which all of them vanish.
LinearMap theta_map(Int r, Int s, Prime p);

struct SesReport {
    Int r = 0;
    Int s = 0;
    Int p = 0;
    std::size_t domain_dim = 0;
    std::size_t codomain_dim = 0;
    std::size_t rank = 0;
    std::size_t kernel_dim = 0;
    Character kernel_character;
    bool homomorphism = false;
    bool surjective = false;
    bool kernel_is_nabla = false;     // kernel character equals chi(r - s)
    bool kernel_stable = false;       // f_a K and e_a K lie in span K
    bool highest_weight_ok = false;   // weight r - s line of the kernel is killed by every e_a
    bool telescoping_ok = false;
    std::string failure;              // first failed condition, empty if all pass

    [[nodiscard]] bool passed() const { return failure.empty(); }
    [[nodiscard]] std::string to_text() const;
};

/// Checks exactness of 0 -> nabla(r-s) -> nabla(r) (x) Delta(s) -> nabla(r+1) (x) Delta(s-1) -> 0
/// through ranks over F_p. Needs r >= s > 0.
SesReport verify_ses(Int r, Int s, Prime p);

}  // namespace cgd::fp
