#ifndef MOMENTKIT_LINALG_HPP
#define MOMENTKIT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "momentkit/rational.hpp"

namespace momentkit {

/// Dense row-major matrix over Q. Exact Gaussian elimination only.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Matrix whose rows are the given vectors (all of equal length).
    static Matrix from_rows(const std::vector<RationalVec>& rows);
    /// Matrix whose columns are the given vectors.
    static Matrix from_columns(const std::vector<RationalVec>& cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalVec row(std::size_t r) const;
    void append_row(const RationalVec& r);

    RationalVec operator*(const RationalVec& x) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

struct RowEchelon {
    Matrix reduced;                    ///< reduced row echelon form
    std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
};

RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
Rational determinant(Matrix m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<RationalVec> nullspace(const Matrix& m);
/// The unique solution of m x = b for square invertible m; nullopt if singular.
std::optional<RationalVec> solve(const Matrix& m, const RationalVec& b);
/// Inverse of a square matrix; nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace momentkit

#endif
