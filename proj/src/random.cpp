#include "tate/random.hpp"

#include "tate/errors.hpp"

namespace tate {

long Rng::uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
}

Rng Rng::fork(std::uint64_t id) {
    // splitmix64 of (draw, id) as the child seed
    std::uint64_t z = next() + 0x9e3779b97f4a7c15ULL * (id + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Rng(z ^ (z >> 31));
}

Scalar random_scalar(Rng& rng, const FieldCtx& ctx, bool nonzero) {
    for (;;) {
        Scalar s(ctx);
        if (ctx.is_prime()) {
            const auto p = static_cast<long>(std::min<std::uint64_t>(ctx.modulus(), 1u << 30));
            s = Scalar(ctx, rng.uniform(0, p - 1));
        } else {
            const long num = rng.uniform(-9, 9);
            const long den = rng.uniform(1, 4);
            s = Scalar(ctx, mpq_class(mpz_class(num), mpz_class(den)));
        }
        if (!nonzero || !s.is_zero()) return s;
    }
}

LaurentPoly random_poly(Rng& rng, const FieldCtx& ctx, long vmin, long vmax) {
    for (;;) {
        LaurentPoly f(ctx);
        for (long e = vmin; e <= vmax; ++e)
            if (rng.coin()) f.add_term(e, random_scalar(rng, ctx));
        if (!f.is_zero()) return f;
    }
}

LaurentPoly random_unit_poly(Rng& rng, const FieldCtx& ctx, long v, int extra) {
    LaurentPoly f(random_scalar(rng, ctx, true), v);
    const long more = rng.uniform(0, extra);
    for (long e = 1; e <= more; ++e) f.add_term(v + e, random_scalar(rng, ctx));
    return f;
}

LaurentMatrix random_gl(Rng& rng, const FieldCtx& ctx, int n, int steps) {
    std::vector<LaurentPoly> diag;
    for (int i = 0; i < n; ++i) diag.emplace_back(random_scalar(rng, ctx, true), rng.uniform(-1, 1));
    LaurentMatrix m = LaurentMatrix::diagonal(diag);
    if (n == 1) return m;
    for (int s = 0; s < steps; ++s) {
        // elementary row operation: row r += c t^e row q
        const int r = static_cast<int>(rng.uniform(0, n - 1));
        int q = static_cast<int>(rng.uniform(0, n - 2));
        if (q >= r) ++q;
        LaurentMatrix el = LaurentMatrix::identity(ctx, n);
        el(r, q) = LaurentPoly(random_scalar(rng, ctx, true), rng.uniform(-1, 1));
        m = rng.coin() ? el * m : m * el;
    }
    return m;
}

Automorphism random_automorphism(Rng& rng, const TateSpace& space, long vmax) {
    if (space.rank >= 2 && rng.coin()) return Automorphism::gl(random_gl(rng, space.ctx, space.rank, 2));
    for (;;) {
        auto g = Automorphism::mult_by(space, random_unit_poly(rng, space.ctx, rng.uniform(-vmax, vmax)));
        if (!g.is_identity()) return g;
    }
}

Lattice random_lattice(Rng& rng, const TateSpace& space, long bound) {
    const long lo = -rng.uniform(0, bound);
    const long hi = rng.uniform(std::max(lo, -bound), bound);
    const Window win{space.rank, lo, hi};
    const long gens = rng.uniform(0, static_cast<long>(win.dim()));
    std::vector<Vector> rows;
    for (long g = 0; g < gens; ++g) {
        Vector v(win.dim(), Scalar::zero(space.ctx));
        // sparse-ish rows so both monomial and mixed lattices occur
        for (auto& x : v)
            if (rng.uniform(0, 2) == 0) x = random_scalar(rng, space.ctx);
        rows.push_back(std::move(v));
    }
    return Lattice::from_window(space, lo, hi, Subspace::span(space.ctx, win.dim(), rows));
}

}  // namespace tate
