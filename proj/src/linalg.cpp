#include "momentkit/linalg.hpp"

#include <utility>

namespace momentkit {

Matrix Matrix::from_rows(const std::vector<RationalVec>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < m.rows_; ++r)
        for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    return m;
}

Matrix Matrix::from_columns(const std::vector<RationalVec>& cols) {
    Matrix m(cols.empty() ? 0 : cols.front().size(), cols.size());
    for (std::size_t r = 0; r < m.rows_; ++r)
        for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = cols[c][r];
    return m;
}

RationalVec Matrix::row(std::size_t r) const {
    RationalVec v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
    return v;
}

void Matrix::append_row(const RationalVec& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

RationalVec Matrix::operator*(const RationalVec& x) const {
    RationalVec y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * x[c];
        y[r] = s;
    }
    return y;
}

RowEchelon row_reduce(Matrix m) {
    RowEchelon out;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
        std::size_t piv = lead_row;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != lead_row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(lead_row, c));
        const Rational inv = 1 / m(lead_row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(lead_row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, col) == 0) continue;
            const Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(lead_row, c);
        }
        out.pivots.push_back(col);
        ++lead_row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Rational determinant(Matrix m) {
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m(piv, col) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(piv, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col) == 0) continue;
            const Rational f = m(r, col) / m(col, col);
            for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

std::vector<RationalVec> nullspace(const Matrix& m) {
    const RowEchelon ech = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    std::vector<RationalVec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RationalVec v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RationalVec> solve(const Matrix& m, const RationalVec& b) {
    const std::size_t n = m.rows();
    if (n == 0) return RationalVec{};
    Matrix aug(n, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n) = b[r];
    }
    RowEchelon ech = row_reduce(std::move(aug));
    if (ech.pivots.size() != n || ech.pivots.back() != n - 1) return std::nullopt;
    RationalVec x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = ech.reduced(r, n);
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Matrix{};
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    RowEchelon ech = row_reduce(std::move(aug));
    if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = ech.reduced(r, n + c);
    return inv;
}

}  // namespace momentkit
