#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tate/automorphism.hpp"
#include "tate/subspace.hpp"

namespace tate {

/// Exponent window [lo, hi) of k((t))^n, flattened to k^{n(hi-lo)} with
/// slot (e - lo) * n + i for the monomial t^e in coordinate i.
struct Window {
    int n = 1;
    long lo = 0;
    long hi = 0;

    std::size_t dim() const { return static_cast<std::size_t>(n) * static_cast<std::size_t>(hi - lo); }
    std::size_t slot(long e, int i) const {
        return static_cast<std::size_t>(e - lo) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i);
    }
    /// Terms at exponent >= hi are dropped; AmbientMismatch for terms below lo.
    Vector to_slots(const FieldCtx& ctx, const LaurentVector& v) const;
    LaurentVector from_slots(const FieldCtx& ctx, std::span<const Scalar> v) const;
};

/// An open bounded subspace L with t^a O^n ⊆ L ⊆ t^{-b} O^n, stored as the
/// image W of L in t^{-b}O^n / t^a O^n. a and b are tight.
class Lattice {
public:
    /// L = S + t^hi O^n for a subspace S of the window [lo, hi).
    static Lattice from_window(const TateSpace& space, long lo, long hi, const Subspace& s);
    static Lattice from_generators(const TateSpace& space, long lo, long hi,
                                   const std::vector<LaurentVector>& gens);

    const TateSpace& space() const noexcept { return space_; }
    long a() const noexcept { return a_; }
    long b() const noexcept { return b_; }
    const Subspace& w() const noexcept { return w_; }
    Window window() const { return {space_.rank, -b_, a_}; }

    /// L / t^hi O^n inside the window [lo, hi); needs lo <= -b and hi >= a.
    Subspace in_window(const Window& win) const;
    bool contains(const LaurentVector& v) const;

    friend bool operator==(const Lattice& x, const Lattice& y) {
        return x.space_ == y.space_ && x.a_ == y.a_ && x.b_ == y.b_ && x.w_ == y.w_;
    }
    friend bool operator!=(const Lattice& x, const Lattice& y) { return !(x == y); }

    std::string to_string() const;

private:
    Lattice(TateSpace space, long a, long b, Subspace w)
        : space_(std::move(space)), a_(a), b_(b), w_(std::move(w)) {}

    TateSpace space_;
    long a_;
    long b_;
    Subspace w_;
};

/// ⊕ t^{shift_i} O.
Lattice std_lattice(const TateSpace& space, const std::vector<long>& shifts);
Lattice std_lattice(const TateSpace& space, long shift = 0);

/// Smallest window containing the bounds of every lattice.
Window common_window(const std::vector<const Lattice*>& ls);

bool leq(const Lattice& l, const Lattice& m);
Lattice join(const Lattice& l, const Lattice& m);
Lattice meet(const Lattice& l, const Lattice& m);

struct LatticeQuotient {
    long dim = 0;
    /// Coset representatives, ordered by leading monomial ascending.
    std::vector<LaurentVector> basis;
};
/// M / L; NotNested unless L ≤ M.
LatticeQuotient quotient(const Lattice& l, const Lattice& m);
long quotient_dim(const Lattice& l, const Lattice& m);

/// g·L, normalized. InsufficientPrecision when a needed series coefficient
/// of g is unknown.
Lattice act(const Automorphism& g, const Lattice& l);

nlohmann::json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const FieldCtx& ctx, const nlohmann::json& j);

}  // namespace tate
