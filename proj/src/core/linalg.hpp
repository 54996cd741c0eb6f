#pragma once

#include <vector>

#include "poly.hpp"

namespace folham {

// Dense matrix of rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

    // Fraction-free (Bareiss) elimination after clearing denominators row by row.
    std::size_t rank() const;
    // Basis of {x : A x = 0}, one vector per free column.
    std::vector<std::vector<Rational>> nullspace() const;

    static RationalMatrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

}  // namespace folham
