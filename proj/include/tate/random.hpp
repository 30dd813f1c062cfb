#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tate/lattice.hpp"

namespace tate {

/// mt19937_64 with a fixed bounded-integer mapping, so draws are identical
/// on every platform for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }
    /// Uniform in [lo, hi].
    long uniform(long lo, long hi);
    bool coin() { return (next() >> 63) != 0; }
    /// Independent stream for case `id`.
    Rng fork(std::uint64_t id);

private:
    std::mt19937_64 gen_;
};

Scalar random_scalar(Rng& rng, const FieldCtx& ctx, bool nonzero = false);
/// Support in [vmin, vmax], nonzero.
LaurentPoly random_poly(Rng& rng, const FieldCtx& ctx, long vmin, long vmax);
/// Valuation exactly v, up to `extra` further terms.
LaurentPoly random_unit_poly(Rng& rng, const FieldCtx& ctx, long v, int extra = 2);
/// n×n matrix with determinant c*t^m, |m| kept small, entries of bounded degree.
LaurentMatrix random_gl(Rng& rng, const FieldCtx& ctx, int n, int steps = 3);
/// MultBy a random unit (valuation in [-vmax, vmax]) or, in rank >= 2, a random GLn.
Automorphism random_automorphism(Rng& rng, const TateSpace& space, long vmax = 2);
/// A lattice with t^bound O^n ⊆ L ⊆ t^-bound O^n.
Lattice random_lattice(Rng& rng, const TateSpace& space, long bound);

}  // namespace tate
