#include "tate/subspace.hpp"

#include "tate/errors.hpp"

namespace tate {
namespace {

void check_compatible(const Subspace& a, const Subspace& b) {
    if (!(a.ctx() == b.ctx())) throw FieldMismatch("subspaces over different fields");
    if (a.ambient_dim() != b.ambient_dim()) {
        throw AmbientMismatch("subspaces of k^" + std::to_string(a.ambient_dim()) + " and k^" +
                              std::to_string(b.ambient_dim()));
    }
}

Matrix stack(const Matrix& a, const Matrix& b) {
    Matrix s(a.ctx(), a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) s(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) s(a.rows() + r, c) = b(r, c);
    return s;
}

}  // namespace

Subspace Subspace::span(const Matrix& generators) {
    auto [red, pivots] = rref(generators);
    Matrix basis(generators.ctx(), pivots.size(), generators.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < generators.cols(); ++c) basis(r, c) = red(r, c);
    return Subspace(std::move(basis), std::move(pivots));
}

Subspace Subspace::span(const FieldCtx& ctx, std::size_t ambient_dim,
                        const std::vector<Vector>& generators) {
    return span(Matrix::from_rows(ctx, ambient_dim, generators));
}

Subspace Subspace::zero(const FieldCtx& ctx, std::size_t ambient_dim) {
    return Subspace(Matrix(ctx, 0, ambient_dim), {});
}

Subspace Subspace::whole(const FieldCtx& ctx, std::size_t ambient_dim) {
    std::vector<std::size_t> piv(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) piv[i] = i;
    return Subspace(Matrix::identity(ctx, ambient_dim), std::move(piv));
}

Vector Subspace::reduce(std::span<const Scalar> v) const {
    if (v.size() != ambient_dim()) throw AmbientMismatch("vector length differs from ambient dim");
    Vector out(v.begin(), v.end());
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        const Scalar f = out[pivots_[r]];
        if (f.is_zero()) continue;
        auto row = basis_.row(r);
        for (std::size_t c = pivots_[r]; c < out.size(); ++c) {
            if (!row[c].is_zero()) out[c] -= f * row[c];
        }
    }
    return out;
}

bool Subspace::contains_vector(std::span<const Scalar> v) const {
    for (const auto& x : reduce(v))
        if (!x.is_zero()) return false;
    return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    check_compatible(a, b);
    return Subspace::span(stack(a.basis(), b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    check_compatible(a, b);
    // (x, y) with x*A + y*B = 0 gives x*A in both row spaces.
    const Matrix kernel = left_kernel(stack(a.basis(), b.basis()));
    Matrix xs(a.ctx(), kernel.rows(), a.dim());
    for (std::size_t r = 0; r < kernel.rows(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) xs(r, c) = kernel(r, c);
    if (xs.rows() == 0) return Subspace::zero(a.ctx(), a.ambient_dim());
    return Subspace::span(xs * a.basis());
}

bool subspace_contains(const Subspace& a, const Subspace& b) {
    check_compatible(a, b);
    if (b.dim() > a.dim()) return false;
    for (std::size_t r = 0; r < b.dim(); ++r)
        if (!a.contains_vector(b.basis().row(r))) return false;
    return true;
}

std::size_t quotient_dim(const Subspace& sub, const Subspace& sup) {
    if (!subspace_contains(sup, sub)) throw NotContained("quotient of non-nested subspaces");
    return sup.dim() - sub.dim();
}

QuotientBasis quotient_basis(const Subspace& sub, const Subspace& sup) {
    if (!subspace_contains(sup, sub)) throw NotContained("quotient of non-nested subspaces");
    Matrix reduced(sup.ctx(), sup.dim(), sup.ambient_dim());
    for (std::size_t r = 0; r < sup.dim(); ++r) {
        Vector v = sub.reduce(sup.basis().row(r));
        for (std::size_t c = 0; c < v.size(); ++c) reduced(r, c) = v[c];
    }
    Subspace q = Subspace::span(reduced);
    return {q.basis(), q.pivots()};
}

Vector quotient_coordinates(const Subspace& sub, const QuotientBasis& q,
                            std::span<const Scalar> v) {
    Vector rest = sub.reduce(v);
    Vector coords;
    coords.reserve(q.pivots.size());
    for (std::size_t j = 0; j < q.pivots.size(); ++j) {
        const Scalar c = rest[q.pivots[j]];
        coords.push_back(c);
        if (c.is_zero()) continue;
        auto row = q.reps.row(j);
        for (std::size_t k = 0; k < rest.size(); ++k) {
            if (!row[k].is_zero()) rest[k] -= c * row[k];
        }
    }
    for (const auto& x : rest)
        if (!x.is_zero()) throw NotContained("vector does not lie in the quotient's numerator");
    return coords;
}

}  // namespace tate
