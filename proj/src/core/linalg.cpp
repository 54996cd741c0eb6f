#include "linalg.hpp"

#include "error.hpp"

namespace folham {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

bool RationalMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw InternalError("matrix shapes do not match");
    RationalMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

std::size_t RationalMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    std::vector<std::vector<Integer>> m(rows_, std::vector<Integer>(cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
        Integer lcm = 1;
        for (std::size_t j = 0; j < cols_; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), (*this)(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rational& v = (*this)(i, j);
            m[i][j] = v.get_num() * (lcm / v.get_den());
        }
    }
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && m[pivot][col] == 0) ++pivot;
        if (pivot == rows_) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t i = rank + 1; i < rows_; ++i) {
            for (std::size_t j = col + 1; j < cols_; ++j) {
                Integer v = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = v;
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rational>> RationalMatrix::nullspace() const {
    RationalMatrix a(*this);
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t p = row;
        while (p < rows_ && a(p, col) == 0) ++p;
        if (p == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(a(p, j), a(row, j));
        Rational inv = 1 / a(row, col);
        for (std::size_t j = 0; j < cols_; ++j) a(row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || a(i, col) == 0) continue;
            Rational f = a(i, col);
            for (std::size_t j = 0; j < cols_; ++j) a(i, j) -= f * a(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -a(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols) {
    RationalMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw InternalError("column has the wrong length");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

}  // namespace folham
