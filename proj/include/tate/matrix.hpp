#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tate/field.hpp"

namespace tate {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a single field.
class Matrix {
public:
    Matrix(const FieldCtx& ctx, std::size_t rows, std::size_t cols);

    static Matrix identity(const FieldCtx& ctx, std::size_t n);
    /// Every row must have `cols` entries; `cols` is needed for the 0-row case.
    static Matrix from_rows(const FieldCtx& ctx, std::size_t cols, const std::vector<Vector>& rows);
    static Matrix from_ints(const FieldCtx& ctx,
                            std::initializer_list<std::initializer_list<long>> rows);

    const FieldCtx& ctx() const noexcept { return ctx_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vector row_vector(std::size_t r) const;

    Matrix operator*(const Matrix& o) const;
    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    FieldCtx ctx_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix matrix;
    std::vector<std::size_t> pivots;
};

/// Unique reduced row echelon form. Zero rows are kept at the bottom.
RrefResult rref(const Matrix& m);
/// Generic Scalar elimination; rref() routes small primes through the SIMD
/// kernels instead. Exposed for equivalence tests.
RrefResult rref_generic(const Matrix& m);
RrefResult rref_modp_kernel(const Matrix& m);

std::size_t rank(const Matrix& m);
Scalar det(const Matrix& m);

/// Basis (as rows) of { x : x * m = 0 }.
Matrix left_kernel(const Matrix& m);

}  // namespace tate
