#include "cgd/fp_linalg.hpp"

#include <utility>

namespace cgd::fp {

Elem reduce(Int v, Prime p) {
    const Int q = p.value();
    Int r = v % q;
    if (r < 0) r += q;
    return static_cast<Elem>(r);
}

Elem inverse(Elem a, Prime p) {
    // a^{p-2} by square and multiply
    const std::uint64_t q = static_cast<std::uint64_t>(p.value());
    if (a % q == 0) throw DomainError("inverse of zero in F_p");
    std::uint64_t base = a % q;
    std::uint64_t out = 1;
    for (std::uint64_t e = q - 2; e > 0; e >>= 1) {
        if (e & 1U) out = out * base % q;
        base = base * base % q;
    }
    return static_cast<Elem>(out);
}

Matrix Matrix::identity(std::size_t n, Prime p) {
    Matrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void Matrix::add(std::size_t i, std::size_t j, Int v) {
    Elem& e = at(i, j);
    e = reduce(static_cast<Int>(e) + v, p_);
}

bool Matrix::is_zero() const {
    for (Elem e : data_) {
        if (e != 0) return false;
    }
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    }
    return t;
}

Matrix Matrix::hconcat(const Matrix& other) const {
    if (other.rows_ != rows_) throw DomainError("hconcat: row count mismatch");
    Matrix m(rows_, cols_ + other.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j) m.at(i, cols_ + j) = other.at(i, j);
    }
    return m;
}

Matrix Matrix::select(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const {
    Matrix m(row_idx.size(), col_idx.size(), p_);
    for (std::size_t i = 0; i < row_idx.size(); ++i) {
        for (std::size_t j = 0; j < col_idx.size(); ++j) m.at(i, j) = at(row_idx[i], col_idx[j]);
    }
    return m;
}

Matrix Matrix::column(std::size_t j) const {
    Matrix m(rows_, 1, p_);
    for (std::size_t i = 0; i < rows_; ++i) m.at(i, 0) = at(i, j);
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_ || !(a.p_ == b.p_)) throw DomainError("matrix product: shape or field mismatch");
    const std::uint64_t q = static_cast<std::uint64_t>(a.p_.value());
    Matrix c(a.rows_, b.cols_, a.p_);
    std::vector<std::uint64_t> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const std::uint64_t x = a.at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Elem y = b.at(k, j);
                if (y != 0) acc[j] = (acc[j] + x * y) % q;
            }
        }
        for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) = static_cast<Elem>(acc[j]);
    }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sum: shape mismatch");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] = reduce(Int{a.data_[k]} + b.data_[k], a.p_);
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix difference: shape mismatch");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] = reduce(Int{a.data_[k]} - b.data_[k], a.p_);
    return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.p_ == b.p_ && a.data_ == b.data_;
}

RowEchelon rref(Matrix m) {
    const Prime p = m.prime();
    const std::uint64_t q = static_cast<std::uint64_t>(p.value());
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
        }
        const std::uint64_t inv = inverse(m.at(row, col), p);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = static_cast<Elem>(m.at(row, j) * inv % q);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            const std::uint64_t factor = m.at(i, col);
            if (factor == 0) continue;
            for (std::size_t j = col; j < m.cols(); ++j) {
                const std::uint64_t sub = factor * m.at(row, j) % q;
                m.at(i, j) = static_cast<Elem>((m.at(i, j) + q - sub) % q);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivot_cols.size(); }

Matrix kernel(const Matrix& m) {
    const RowEchelon e = rref(m);
    const Prime p = m.prime();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }
    Matrix basis(m.cols(), free_cols.size(), p);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t f = free_cols[k];
        basis.at(f, k) = 1;
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
            basis.at(e.pivot_cols[i], k) = reduce(-Int{e.reduced.at(i, f)}, p);
        }
    }
    return basis;
}

Elem binomial_lucas(Int n, Int k, Prime p) {
    if (k < 0 || n < 0 || k > n) return 0;
    const Int q = p.value();
    std::uint64_t out = 1;
    while (n > 0 || k > 0) {
        const Int nd = n % q;
        const Int kd = k % q;
        if (kd > nd) return 0;
        // small binomial C(nd, kd) mod p by the multiplicative formula
        std::uint64_t num = 1;
        std::uint64_t den = 1;
        for (Int i = 0; i < kd; ++i) {
            num = num * static_cast<std::uint64_t>(nd - i) % static_cast<std::uint64_t>(q);
            den = den * static_cast<std::uint64_t>(i + 1) % static_cast<std::uint64_t>(q);
        }
        out = out * num % static_cast<std::uint64_t>(q) * inverse(static_cast<Elem>(den), p) % static_cast<std::uint64_t>(q);
        n /= q;
        k /= q;
    }
    return static_cast<Elem>(out);
}

namespace {
__extension__ using U128 = unsigned __int128;
}  // namespace

Elem binomial_mod(Int n, Int k, Prime p) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (n > 66) return binomial_lucas(n, k, p);
    if (k > n - k) k = n - k;
    // C(n, i) = C(n, i-1) (n - i + 1) / i stays integral and below 2^64 for n <= 66
    U128 c = 1;
    for (Int i = 1; i <= k; ++i) c = c * static_cast<U128>(n - i + 1) / static_cast<U128>(i);
    return static_cast<Elem>(static_cast<std::uint64_t>(c % static_cast<U128>(p.value())));
}

}  // namespace cgd::fp
