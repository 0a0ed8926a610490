#include "cgd/fp_module.hpp"

#include <map>
#include <sstream>
#include <utility>

namespace cgd::fp {

namespace {

void check_explicit_prime(Prime p) {
    if (p.value() > kMaxExplicitPrime) {
        throw DomainError("explicit F_p constructions support p <= 97, got p = " + std::to_string(p.value()));
    }
}

int resolve_degree(int degree, Int fallback) {
    if (degree < 0) return static_cast<int>(fallback);
    return degree;
}

}  // namespace

FpModule::FpModule(Prime p, std::vector<Int> weights, std::vector<std::string> labels, std::vector<Matrix> f_ops,
                   std::vector<Matrix> e_ops)
    : p_(p),
      weights_(std::move(weights)),
      labels_(std::move(labels)),
      f_ops_(std::move(f_ops)),
      e_ops_(std::move(e_ops)) {
    if (labels_.size() != weights_.size()) throw DomainError("FpModule: one label per basis vector");
    if (f_ops_.size() != e_ops_.size()) throw DomainError("FpModule: f and e operator counts differ");
    for (const auto* ops : {&f_ops_, &e_ops_}) {
        for (const Matrix& m : *ops) {
            if (m.rows() != dim() || m.cols() != dim()) throw DomainError("FpModule: operator shape mismatch");
        }
    }
}

Matrix FpModule::f(int a) const {
    if (a == 0) return Matrix::identity(dim(), p_);
    if (a < 0 || a > degree()) throw DomainError("f_" + std::to_string(a) + " is not stored");
    return f_ops_[static_cast<std::size_t>(a - 1)];
}

Matrix FpModule::e(int a) const {
    if (a == 0) return Matrix::identity(dim(), p_);
    if (a < 0 || a > degree()) throw DomainError("e_" + std::to_string(a) + " is not stored");
    return e_ops_[static_cast<std::size_t>(a - 1)];
}

Character FpModule::character() const {
    Character c;
    for (Int w : weights_) c.add_term(w, 1);
    return c;
}

bool FpModule::operators_respect_weights() const {
    for (int a = 1; a <= degree(); ++a) {
        const Matrix& fa = f_ops_[static_cast<std::size_t>(a - 1)];
        const Matrix& ea = e_ops_[static_cast<std::size_t>(a - 1)];
        for (std::size_t i = 0; i < dim(); ++i) {
            for (std::size_t j = 0; j < dim(); ++j) {
                if (fa.at(i, j) != 0 && weights_[i] != weights_[j] - 2 * a) return false;
                if (ea.at(i, j) != 0 && weights_[i] != weights_[j] + 2 * a) return false;
            }
        }
    }
    return true;
}

FpModule nabla_module(Int r, Prime p, int degree) {
    check_weight(r, "r");
    check_explicit_prime(p);
    const int deg = resolve_degree(degree, r);
    const auto n = static_cast<std::size_t>(r + 1);
    std::vector<Int> weights;
    std::vector<std::string> labels;
    for (std::size_t b = 0; b < n; ++b) {
        const Int a = r - static_cast<Int>(b);
        weights.push_back(a - static_cast<Int>(b));
        labels.push_back("x1^" + std::to_string(a) + "x2^" + std::to_string(b));
    }
    std::vector<Matrix> fs;
    std::vector<Matrix> es;
    for (int i = 1; i <= deg; ++i) {
        Matrix f(n, n, p);
        Matrix e(n, n, p);
        for (std::size_t b = 0; b < n; ++b) {
            const Int a = r - static_cast<Int>(b);
            if (b + static_cast<std::size_t>(i) < n) f.at(b + static_cast<std::size_t>(i), b) = binomial_mod(a, i, p);
            if (b >= static_cast<std::size_t>(i)) e.at(b - static_cast<std::size_t>(i), b) = binomial_mod(static_cast<Int>(b), i, p);
        }
        fs.push_back(std::move(f));
        es.push_back(std::move(e));
    }
    return {p, std::move(weights), std::move(labels), std::move(fs), std::move(es)};
}

FpModule delta_module(Int s, Prime p, int degree) {
    check_weight(s, "s");
    check_explicit_prime(p);
    const int deg = resolve_degree(degree, s);
    const auto n = static_cast<std::size_t>(s + 1);
    std::vector<Int> weights;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        weights.push_back(s - 2 * static_cast<Int>(i));
        labels.push_back("f" + std::to_string(i) + "l+");
    }
    std::vector<Matrix> fs;
    std::vector<Matrix> es;
    for (int a = 1; a <= deg; ++a) {
        const auto ua = static_cast<std::size_t>(a);
        Matrix f(n, n, p);
        Matrix e(n, n, p);
        for (std::size_t i = 0; i < n; ++i) {
            const Int ii = static_cast<Int>(i);
            if (i + ua < n) f.at(i + ua, i) = binomial_mod(a + ii, ii, p);
            if (i >= ua) e.at(i - ua, i) = binomial_mod(s - ii + a, a, p);
        }
        fs.push_back(std::move(f));
        es.push_back(std::move(e));
    }
    return {p, std::move(weights), std::move(labels), std::move(fs), std::move(es)};
}

namespace {

// coproduct: op_a on A (x) B = sum_{b+c=a} op_b (x) op_c, assembled column by column
Matrix coproduct(const std::vector<Matrix>& a_ops, const std::vector<Matrix>& b_ops, int a, Prime p) {
    const std::size_t da = a_ops.front().rows();
    const std::size_t db = b_ops.front().rows();
    Matrix out(da * db, da * db, p);
    const std::uint64_t q = static_cast<std::uint64_t>(p.value());
    for (int b = 0; b <= a; ++b) {
        const Matrix& x = a_ops[static_cast<std::size_t>(b)];
        const Matrix& y = b_ops[static_cast<std::size_t>(a - b)];
        for (std::size_t i = 0; i < da; ++i) {
            for (std::size_t i2 = 0; i2 < da; ++i2) {
                const std::uint64_t xv = x.at(i2, i);
                if (xv == 0) continue;
                for (std::size_t j = 0; j < db; ++j) {
                    for (std::size_t j2 = 0; j2 < db; ++j2) {
                        const std::uint64_t yv = y.at(j2, j);
                        if (yv == 0) continue;
                        out.add(i2 * db + j2, i * db + j, static_cast<Int>(xv * yv % q));
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace

FpModule tensor(const FpModule& A, const FpModule& B) {
    if (!(A.prime() == B.prime())) throw DomainError("tensor: modules over different primes");
    const Prime p = A.prime();
    const int deg = std::min(A.degree(), B.degree());
    std::vector<Int> weights;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < A.dim(); ++i) {
        for (std::size_t j = 0; j < B.dim(); ++j) {
            weights.push_back(A.weights()[i] + B.weights()[j]);
            labels.push_back(A.labels()[i] + "(x)" + B.labels()[j]);
        }
    }
    std::vector<Matrix> af;
    std::vector<Matrix> ae;
    std::vector<Matrix> bf;
    std::vector<Matrix> be;
    for (int a = 0; a <= deg; ++a) {
        af.push_back(A.f(a));
        ae.push_back(A.e(a));
        bf.push_back(B.f(a));
        be.push_back(B.e(a));
    }
    std::vector<Matrix> fs;
    std::vector<Matrix> es;
    for (int a = 1; a <= deg; ++a) {
        fs.push_back(coproduct(af, bf, a, p));
        es.push_back(coproduct(ae, be, a, p));
    }
    return {p, std::move(weights), std::move(labels), std::move(fs), std::move(es)};
}

bool LinearMap::commutes_with_operators() const {
    const int deg = std::min(domain.degree(), codomain.degree());
    for (int a = 1; a <= deg; ++a) {
        if (!(matrix * domain.f(a) == codomain.f(a) * matrix)) return false;
        if (!(matrix * domain.e(a) == codomain.e(a) * matrix)) return false;
    }
    return true;
}

LinearMap theta_map(Int r, Int s, Prime p) {
    check_weight(r, "r");
    check_weight(s, "s");
    if (s == 0) throw DomainError("theta_map needs s > 0");
    if (r < s) throw DomainError("theta_map needs r >= s");
    const int deg = static_cast<int>(r + s);
    FpModule domain = tensor(nabla_module(r, p, deg), delta_module(s, p, deg));
    FpModule codomain = tensor(nabla_module(r + 1, p, deg), delta_module(s - 1, p, deg));

    // domain basis (b, i) = x1^{r-b} x2^b (x) f_i l_+ ; codomain (b', j) = x1^{r+1-b'} x2^{b'} (x) f_j m_+
    const auto ds = static_cast<std::size_t>(s + 1);
    const auto cs = static_cast<std::size_t>(s);
    Matrix m(codomain.dim(), domain.dim(), p);
    for (std::size_t b = 0; b <= static_cast<std::size_t>(r); ++b) {
        for (std::size_t i = 0; i < ds; ++i) {
            const std::size_t col = b * ds + i;
            if (i < cs) m.add(b * cs + i, col, 1);            // x1 . x1^a x2^b (x) f_i m_+
            if (i >= 1) m.add((b + 1) * cs + (i - 1), col, 1);  // x2 . x1^a x2^b (x) f_{i-1} m_+
        }
    }
    return {std::move(domain), std::move(codomain), std::move(m)};
}

std::string SesReport::to_text() const {
    std::ostringstream os;
    os << (passed() ? "PASS" : "FAIL") << " ses p=" << p << " r=" << r << " s=" << s << " dim=" << domain_dim
       << " rank=" << rank << " kernel_dim=" << kernel_dim << " kernel_char=" << kernel_character.to_string();
    if (!passed()) os << " failure: " << failure;
    return os.str();
}

SesReport verify_ses(Int r, Int s, Prime p) {
    SesReport rep;
    rep.r = r;
    rep.s = s;
    rep.p = p.value();
    const LinearMap theta = theta_map(r, s, p);
    const FpModule& dom = theta.domain;
    rep.domain_dim = dom.dim();
    rep.codomain_dim = theta.codomain.dim();

    auto fail = [&rep](const std::string& why) {
        if (rep.failure.empty()) rep.failure = why;
    };

    rep.homomorphism = theta.commutes_with_operators();
    if (!rep.homomorphism) fail("theta does not commute with the divided-power operators");

    rep.rank = rank(theta.matrix);
    rep.surjective = rep.rank == rep.codomain_dim;
    if (!rep.surjective) fail("theta is not surjective");

    // kernel character, one weight block at a time
    std::map<Int, std::vector<std::size_t>> dom_blocks;
    std::map<Int, std::vector<std::size_t>> cod_blocks;
    for (std::size_t k = 0; k < dom.dim(); ++k) dom_blocks[dom.weights()[k]].push_back(k);
    for (std::size_t k = 0; k < theta.codomain.dim(); ++k) cod_blocks[theta.codomain.weights()[k]].push_back(k);
    for (const auto& [w, cols] : dom_blocks) {
        const auto rows_it = cod_blocks.find(w);
        const std::size_t block_rank =
            rows_it == cod_blocks.end() ? 0 : rank(theta.matrix.select(rows_it->second, cols));
        rep.kernel_character.add_term(w, static_cast<Int>(cols.size() - block_rank));
    }
    rep.kernel_is_nabla = rep.kernel_character == chi(r - s);
    if (!rep.kernel_is_nabla) fail("kernel character is " + rep.kernel_character.to_string());

    const Matrix K = kernel(theta.matrix);
    rep.kernel_dim = K.cols();
    if (rep.kernel_dim + rep.rank != rep.domain_dim) fail("rank-nullity mismatch");
    if (rep.kernel_dim != static_cast<std::size_t>(r - s + 1)) fail("kernel dimension differs from r - s + 1");

    rep.kernel_stable = true;
    for (int a = 1; a <= dom.degree() && rep.kernel_stable; ++a) {
        for (const Matrix& op : {dom.f(a), dom.e(a)}) {
            if (rank(K.hconcat(op * K)) != rep.kernel_dim) {
                rep.kernel_stable = false;
                fail("kernel not stable under divided power of degree " + std::to_string(a));
                break;
            }
        }
    }

    // the weight r - s part of the kernel is a line killed by every e_a
    std::vector<std::size_t> top_cols;
    for (std::size_t k = 0; k < K.cols(); ++k) {
        bool pure = true;
        bool hits = false;
        for (std::size_t i = 0; i < K.rows(); ++i) {
            if (K.at(i, k) == 0) continue;
            if (dom.weights()[i] == r - s) hits = true;
            else pure = false;
        }
        if (hits && pure) top_cols.push_back(k);
    }
    rep.highest_weight_ok = top_cols.size() == 1;
    if (rep.highest_weight_ok) {
        const Matrix v = K.column(top_cols.front());
        for (int a = 1; a <= dom.degree(); ++a) {
            if (!(dom.e(a) * v).is_zero()) {
                rep.highest_weight_ok = false;
                break;
            }
        }
    }
    if (!rep.highest_weight_ok) fail("kernel has no highest weight line of weight r - s killed by all e_a");

    // theta( sum_{i=1}^{s-1} (-1)^{i-1} x1^{i-1} x2^{r-i+1} (x) f_i l_+ )
    //   = x2^{r+1} (x) m_+ + (-1)^{s-2} x1^{s-1} x2^{r-s+2} (x) f_{s-1} m_+
    {
        const auto ds = static_cast<std::size_t>(s + 1);
        const auto cs = static_cast<std::size_t>(s);
        Matrix v(dom.dim(), 1, p);
        for (Int i = 1; i <= s - 1; ++i) {
            const auto b = static_cast<std::size_t>(r - i + 1);
            v.add(b * ds + static_cast<std::size_t>(i), 0, (i % 2 == 1) ? 1 : -1);
        }
        Matrix expected(theta.codomain.dim(), 1, p);
        expected.add(static_cast<std::size_t>(r + 1) * cs + 0, 0, 1);
        expected.add(static_cast<std::size_t>(r - s + 2) * cs + static_cast<std::size_t>(s - 1), 0,
                     (s % 2 == 0) ? 1 : -1);
        rep.telescoping_ok = theta.matrix * v == expected;
        if (!rep.telescoping_ok) fail("telescoping identity fails");
    }
    return rep;
}

}  // namespace cgd::fp
