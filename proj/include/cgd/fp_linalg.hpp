#pragma once

// Dense matrices over the prime field F_p and the exact elimination routines
// (rank, reduced row echelon form, kernel) used by the explicit module checks.

#include <cstdint>
#include <vector>

#include "cgd/basep.hpp"

namespace cgd::fp {

using Elem = std::uint32_t;

class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, Prime p) : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

    static Matrix identity(std::size_t n, Prime p);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] Prime prime() const noexcept { return p_; }

    [[nodiscard]] Elem at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    /// Adds v (any integer, reduced mod p) to entry (i, j).
    void add(std::size_t i, std::size_t j, Int v);

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] Matrix transpose() const;
    /// Columns of *this followed by the columns of other.
    [[nodiscard]] Matrix hconcat(const Matrix& other) const;
    /// Sub-matrix on the given row and column indices.
    [[nodiscard]] Matrix select(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const;
    [[nodiscard]] Matrix column(std::size_t j) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_;
    std::size_t cols_;
    Prime p_;
    std::vector<Elem> data_;
};

Elem reduce(Int v, Prime p);
Elem inverse(Elem a, Prime p);

struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
RowEchelon rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of { x : m x = 0 }, one column per free variable.
Matrix kernel(const Matrix& m);

/// C(n, k) mod p: exact for n <= 66, by Lucas' theorem beyond.
Elem binomial_mod(Int n, Int k, Prime p);

/// C(n, k) mod p by Lucas' theorem only.
Elem binomial_lucas(Int n, Int k, Prime p);

}  // namespace cgd::fp
