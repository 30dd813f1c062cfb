#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tate/laurent.hpp"

namespace tate {

/// V = k((t))^n.
struct TateSpace {
    FieldCtx ctx;
    int rank = 1;

    friend bool operator==(const TateSpace& a, const TateSpace& b) {
        return a.ctx == b.ctx && a.rank == b.rank;
    }
    std::string to_string() const;
};

using LaurentVector = std::vector<LaurentPoly>;

/// Multiplication by a unit of k((t)) on every coordinate.
struct MultBy {
    TruncSeries f;
};

/// A matrix over k[t, t^-1] with determinant c*t^m.
struct GLn {
    LaurentMatrix m;
    LaurentMatrix inv;
    LaurentPoly det;
};

using AutFactor = std::variant<MultBy, GLn>;

/// An automorphism of V, stored as a product of factors; factors()[0] is
/// applied first. Adjacent factors of the same kind are merged and identity
/// factors dropped, so the identity has no factors.
class Automorphism {
public:
    static Automorphism identity(const TateSpace& space);
    static Automorphism mult_by(const TateSpace& space, const TruncSeries& f);
    static Automorphism mult_by(const TateSpace& space, const LaurentPoly& f);
    /// NotInvertibleInLaurentRing unless det(m) is a unit monomial.
    static Automorphism gl(const LaurentMatrix& m);

    const TateSpace& space() const noexcept { return space_; }
    const std::vector<AutFactor>& factors() const noexcept { return factors_; }
    bool is_identity() const noexcept { return factors_.empty(); }

    /// The series f when this is multiplication by f (1 for the identity).
    /// NotMultiplicationAutomorphism otherwise.
    TruncSeries as_mult_by() const;

    /// v(det) of the automorphism: n*v(f) for MultBy, v(det m) for GLn.
    long det_valuation() const;

    /// Series inverses of inexact factors keep their precision; exact
    /// non-monomial series are inverted to `precision` coefficients.
    Automorphism inverse(int precision) const;

    std::string to_string() const;

private:
    explicit Automorphism(const TateSpace& space) : space_(space) {}
    void push(const AutFactor& f);

    TateSpace space_;
    std::vector<AutFactor> factors_;

    friend Automorphism compose(const Automorphism& g, const Automorphism& h);
};

/// g∘h (h applied first).
Automorphism compose(const Automorphism& g, const Automorphism& h);

/// Least exponent by which a factor can lower valuations.
long factor_min_exponent(const AutFactor& f);

/// One factor applied to v, modulo t^level.
LaurentVector apply_factor(const AutFactor& f, const LaurentVector& v, long level);

/// g(v) modulo t^level, for a vector with finite support. Reads only the
/// series coefficients needed for exponents below `level`; raises
/// InsufficientPrecision if one is missing.
LaurentVector apply_truncated(const Automorphism& g, const LaurentVector& v, long level);

}  // namespace tate
