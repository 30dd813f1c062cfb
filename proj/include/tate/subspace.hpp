#pragma once

#include <cstddef>
#include <vector>

#include "tate/matrix.hpp"

namespace tate {

/// A subspace of k^n stored as its reduced row echelon basis. Two subspaces
/// are equal iff their canonical bases are equal entry by entry.
class Subspace {
public:
    /// Row span of `generators` (any rank).
    static Subspace span(const Matrix& generators);
    static Subspace span(const FieldCtx& ctx, std::size_t ambient_dim,
                         const std::vector<Vector>& generators);
    static Subspace zero(const FieldCtx& ctx, std::size_t ambient_dim);
    static Subspace whole(const FieldCtx& ctx, std::size_t ambient_dim);

    const FieldCtx& ctx() const noexcept { return basis_.ctx(); }
    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains_vector(std::span<const Scalar> v) const;
    /// v minus its projection along the pivot columns; zero iff v is in the span.
    Vector reduce(std::span<const Scalar> v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.basis_ == b.basis_;
    }

private:
    Subspace(Matrix basis, std::vector<std::size_t> pivots)
        : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
/// True iff b ⊆ a.
bool subspace_contains(const Subspace& a, const Subspace& b);

/// dim(sup) - dim(sub); NotContained unless sub ⊆ sup.
std::size_t quotient_dim(const Subspace& sub, const Subspace& sup);

/// Canonical coset representatives of sup/sub: the echelon basis of
/// { v in sup : v vanishes on the pivot columns of sub }, ordered by pivot.
struct QuotientBasis {
    Matrix reps;
    std::vector<std::size_t> pivots;
};
QuotientBasis quotient_basis(const Subspace& sub, const Subspace& sup);

/// Coordinates of v + sub in the basis `q` of sup/sub. NotContained if v is
/// not in sup.
Vector quotient_coordinates(const Subspace& sub, const QuotientBasis& q,
                            std::span<const Scalar> v);

}  // namespace tate
