#include "sfano/matrix.hpp"

#include "sfano/errors.hpp"

#include <utility>

namespace sfano {

Matrix::Matrix(const std::vector<std::vector<Scalar>>& rows, Field field)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()), field_(field) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InputError("ragged matrix rows");
        for (const auto& v : r) data_.push_back(field_.from_rational(v));
    }
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix dimension mismatch");
    Matrix out(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (Field::is_zero(a)) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) = field_.add(out(i, j), field_.mul(a, o(k, j)));
        }
    return out;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw Error("vector length mismatch");
    std::vector<Scalar> out(rows_, Scalar(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] = field_.add(out[i], field_.mul((*this)(i, j), v[j]));
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& v : data_)
        if (!Field::is_zero(v)) return false;
    return true;
}

std::size_t Matrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    if (field_.is_prime_field()) return rref().pivots.size();

    // Clear denominators row by row, then Bareiss.
    std::vector<mpz_class> a(rows_ * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < cols_; ++c) l = lcm(l, (*this)(r, c).get_den());
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& v = (*this)(r, c);
            a[r * cols_ + c] = v.get_num() * (l / v.get_den());
        }
    }
    auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * cols_ + c]; };
    mpz_class prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t piv = rank;
        while (piv < rows_ && at(piv, col) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != rank)
            for (std::size_t c = 0; c < cols_; ++c) std::swap(at(piv, c), at(rank, c));
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            for (std::size_t c = col + 1; c < cols_; ++c) {
                mpz_class v = at(rank, col) * at(r, c) - at(r, col) * at(rank, c);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                at(r, c) = std::move(v);
            }
            at(r, col) = 0;
        }
        prev = at(rank, col);
        ++rank;
    }
    return rank;
}

Matrix::Echelon Matrix::rref() const {
    Echelon e{*this, {}};
    Matrix& m = e.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && Field::is_zero(m(piv, c))) ++piv;
        if (piv == rows_) continue;
        if (piv != r)
            for (std::size_t k = 0; k < cols_; ++k) std::swap(m(piv, k), m(r, k));
        const Scalar inv = field_.inv(m(r, c));
        for (std::size_t k = c; k < cols_; ++k) m(r, k) = field_.mul(m(r, k), inv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || Field::is_zero(m(i, c))) continue;
            const Scalar f = m(i, c);
            for (std::size_t k = c; k < cols_; ++k) m(i, k) = field_.sub(m(i, k), field_.mul(f, m(r, k)));
        }
        e.pivots.push_back(c);
        ++r;
    }
    return e;
}

std::vector<std::vector<Scalar>> Matrix::kernel() const {
    const Echelon e = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols_, Scalar(0));
        v[free] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = field_.neg(e.reduced(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw Error("inverse of a non-square matrix");
    Matrix aug(rows_, 2 * cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
        aug(i, cols_ + i) = 1;
    }
    const Echelon e = aug.rref();
    if (e.pivots.size() < rows_ || e.pivots[rows_ - 1] >= cols_) throw Error("matrix is singular");
    Matrix inv(rows_, cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = e.reduced(i, cols_ + j);
    return inv;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r].push_back((*this)(r, c).get_str());
    return out;
}

}  // namespace sfano
