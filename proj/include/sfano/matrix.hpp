#ifndef SFANO_MATRIX_HPP
#define SFANO_MATRIX_HPP

#include "sfano/field.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace sfano {

// Dense exact matrix over a Field, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Field field = Field::rationals())
        : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar(0)) {}
    Matrix(const std::vector<std::vector<Scalar>>& rows, Field field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::vector<Scalar> row(std::size_t r) const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
    bool is_zero() const;

    // Exact rank. Over the rationals the rows are cleared to integers and
    // reduced with fraction-free (Bareiss) elimination.
    std::size_t rank() const;

    struct Echelon;
    Echelon rref() const;

    // Basis of the right kernel {v : M v = 0}, one vector per free column.
    std::vector<std::vector<Scalar>> kernel() const;
    // Throws Error if singular or not square.
    Matrix inverse() const;

    std::vector<std::vector<std::string>> to_strings() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    Field field_;
    std::vector<Scalar> data_;
};

struct Matrix::Echelon {
    Matrix reduced;                   // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

}  // namespace sfano

#endif
