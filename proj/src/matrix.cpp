#include "tate/matrix.hpp"

#include <sstream>
#include <utility>

#include "tate/errors.hpp"
#include "tate/simd/modp_kernels.hpp"

namespace tate {

Matrix::Matrix(const FieldCtx& ctx, std::size_t rows, std::size_t cols)
    : ctx_(ctx), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(ctx)) {}

Matrix Matrix::identity(const FieldCtx& ctx, std::size_t n) {
    Matrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(ctx);
    return m;
}

Matrix Matrix::from_rows(const FieldCtx& ctx, std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(ctx, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw AmbientMismatch("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!(rows[r][c].ctx() == ctx)) throw FieldMismatch("matrix entry from another field");
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

Matrix Matrix::from_ints(const FieldCtx& ctx,
                         std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t cols = rows.size() ? rows.begin()->size() : 0;
    Matrix m(ctx, rows.size(), cols);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols) throw AmbientMismatch("ragged matrix rows");
        std::size_t c = 0;
        for (long v : row) m(r, c++) = Scalar(ctx, v);
        ++r;
    }
    return m;
}

Vector Matrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return Vector(s.begin(), s.end());
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (!(ctx_ == o.ctx_)) throw FieldMismatch("matrix product across fields");
    if (cols_ != o.rows_) throw AmbientMismatch("matrix product shape mismatch");
    Matrix out(ctx_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
        }
    }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.ctx_ == b.ctx_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
        os << ']';
    }
    os << ']';
    return os.str();
}

RrefResult rref_generic(const Matrix& m) {
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        std::size_t sel = lead;
        while (sel < a.rows() && a(sel, col).is_zero()) ++sel;
        if (sel == a.rows()) continue;
        if (sel != lead) {
            for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(sel, c), a(lead, c));
        }
        const Scalar inv = a(lead, col).inverse();
        for (std::size_t c = col; c < a.cols(); ++c) a(lead, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead || a(r, col).is_zero()) continue;
            const Scalar f = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(lead, c);
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(a), std::move(pivots)};
}

RrefResult rref_modp_kernel(const Matrix& m) {
    const FieldCtx& ctx = m.ctx();
    if (!ctx.is_prime() || ctx.modulus() >= (std::uint64_t{1} << 32)) {
        throw FieldMismatch("rref_modp_kernel needs a prime below 2^32");
    }
    const auto p = static_cast<std::uint32_t>(ctx.modulus());
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::uint32_t> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            a[r * cols + c] = static_cast<std::uint32_t>(m(r, c).residue_value());
        }
    }
    auto row = [&](std::size_t r) { return std::span<std::uint32_t>(a.data() + r * cols, cols); };

    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t sel = lead;
        while (sel < rows && a[sel * cols + col] == 0) ++sel;
        if (sel == rows) continue;
        if (sel != lead) {
            auto x = row(sel), y = row(lead);
            std::swap_ranges(x.begin(), x.end(), y.begin());
        }
        const auto inv =
            static_cast<std::uint32_t>(powmod(a[lead * cols + col], p - 2, p));
        simd::scale_mod(row(lead).subspan(col), inv, p);
        for (std::size_t r = 0; r < rows; ++r) {
            const std::uint32_t f = a[r * cols + col];
            if (r == lead || f == 0) continue;
            simd::axpy_mod(row(r).subspan(col), row(lead).subspan(col), p - f, p);
        }
        pivots.push_back(col);
        ++lead;
    }

    Matrix out(ctx, rows, cols);
    for (std::size_t i = 0; i < rows * cols; ++i) {
        if (a[i]) out(i / cols, i % cols) = Scalar::residue(ctx, a[i]);
    }
    return {std::move(out), std::move(pivots)};
}

RrefResult rref(const Matrix& m) {
    if (m.ctx().is_prime() && m.ctx().modulus() < (std::uint64_t{1} << 32) && m.cols() >= 8) {
        return rref_modp_kernel(m);
    }
    return rref_generic(m);
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Scalar det(const Matrix& m) {
    if (m.rows() != m.cols()) throw NonSquare("det of a non-square matrix");
    Matrix a = m;
    const std::size_t n = a.rows();
    Scalar result = Scalar::one(m.ctx());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a(sel, col).is_zero()) ++sel;
        if (sel == n) return Scalar::zero(m.ctx());
        if (sel != col) {
            for (std::size_t c = col; c < n; ++c) std::swap(a(sel, c), a(col, c));
            result = -result;
        }
        const Scalar piv = a(col, col);
        result *= piv;
        const Scalar inv = piv.inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) continue;
            const Scalar f = a(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return result;
}

Matrix left_kernel(const Matrix& m) {
    // Row-reduce [m | I]; rows whose m-part vanishes carry kernel vectors.
    const std::size_t r = m.rows(), c = m.cols();
    Matrix aug(m.ctx(), r, c + r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) aug(i, j) = m(i, j);
        aug(i, c + i) = Scalar::one(m.ctx());
    }
    auto red = rref(aug).matrix;
    std::vector<Vector> kernel;
    for (std::size_t i = 0; i < r; ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < c && left_zero; ++j) left_zero = red(i, j).is_zero();
        if (!left_zero) continue;
        Vector v;
        v.reserve(r);
        for (std::size_t j = 0; j < r; ++j) v.push_back(red(i, c + j));
        kernel.push_back(std::move(v));
    }
    return Matrix::from_rows(m.ctx(), r, kernel);
}

}  // namespace tate
