#include "tate/det_lines.hpp"

#include <algorithm>

#include "tate/errors.hpp"

namespace tate {

std::string mode_name(LineMode m) { return m == LineMode::Graded ? "graded" : "ungraded"; }

LineMode parse_mode(const std::string& text) {
    if (text == "graded") return LineMode::Graded;
    if (text == "ungraded") return LineMode::Ungraded;
    throw ParseError("mode must be 'graded' or 'ungraded', got '" + text + "'");
}

LineIso compose(const LineIso& g, const LineIso& f) {
    if (f.target.tag != g.source.tag || f.target.grade != g.source.grade) {
        throw AmbientMismatch("composing isomorphisms of different lines");
    }
    return {f.source, g.target, g.scalar * f.scalar};
}

LineIso swap_iso(const FieldCtx& ctx, const GradedLine& l, const GradedLine& m) {
    const bool odd = (l.grade % 2 != 0) && (m.grade % 2 != 0);
    GradedLine src{l.grade + m.grade, l.tag + " ⊗ " + m.tag};
    GradedLine dst{l.grade + m.grade, m.tag + " ⊗ " + l.tag};
    return {std::move(src), std::move(dst), Scalar(ctx, odd ? -1L : 1L)};
}

GradedLine rel_det(const Lattice& f1, const Lattice& f2) {
    if (!(f1.space() == f2.space())) throw SpaceMismatch("rel_det of lattices in different spaces");
    const Lattice n = meet(f1, f2);
    return {quotient_dim(n, f2) - quotient_dim(n, f1), "(" + f1.to_string() + " | " + f2.to_string() + ")"};
}

namespace {

/// Rows of a quotient basis, last row first.
std::vector<Vector> descending(const QuotientBasis& q) {
    std::vector<Vector> out;
    for (std::size_t r = q.pivots.size(); r-- > 0;) out.push_back(q.reps.row_vector(r));
    return out;
}

/// det of the coordinates of `vs` in the descending basis of q = sup/sub.
Scalar coordinate_det(const FieldCtx& ctx, const Subspace& sub, const QuotientBasis& q,
                      const std::vector<Vector>& vs) {
    const std::size_t k = q.pivots.size();
    if (vs.size() != k) throw NotContained("vector count differs from quotient dimension");
    if (k == 0) return Scalar::one(ctx);
    Matrix m(ctx, k, k);
    for (std::size_t r = 0; r < k; ++r) {
        const Vector c = quotient_coordinates(sub, q, vs[r]);
        for (std::size_t j = 0; j < k; ++j) m(r, j) = c[k - 1 - j];
    }
    return det(m);
}

}  // namespace

Scalar wedge_scalar(const Lattice& m, const Lattice& n, const Lattice& f) {
    if (!leq(m, n) || !leq(n, f)) throw NotNested("wedge_scalar needs M <= N <= F");
    const Window win = common_window({&m, &n, &f});
    const Subspace sm = m.in_window(win), sn = n.in_window(win), sf = f.in_window(win);
    std::vector<Vector> vs = descending(quotient_basis(sm, sn));
    for (auto& v : descending(quotient_basis(sn, sf))) vs.push_back(std::move(v));
    return coordinate_det(m.space().ctx, sm, quotient_basis(sm, sf), vs);
}

Scalar omega(const Lattice& f1, const Lattice& f2, const Lattice& f3, LineMode) {
    if (!(f1.space() == f2.space()) || !(f2.space() == f3.space())) {
        throw SpaceMismatch("omega of lattices in different spaces");
    }
    const Lattice m = meet(meet(f1, f2), f3);
    // (Fi|Fj) generator in terms of δ(Fi/M)^∨ ⊗ δ(Fj/M)
    auto s = [&](const Lattice& fi, const Lattice& fj) {
        const Lattice n = meet(fi, fj);
        return wedge_scalar(m, n, fj) / wedge_scalar(m, n, fi);
    };
    return s(f1, f2) * s(f2, f3) / s(f1, f3);
}

bool cocycle_check(const Lattice& f1, const Lattice& f2, const Lattice& f3, const Lattice& f4, LineMode mode) {
    const bool scalars = omega(f1, f2, f3, mode) * omega(f1, f3, f4, mode) ==
                         omega(f2, f3, f4, mode) * omega(f1, f2, f4, mode);
    if (mode == LineMode::Ungraded) return scalars;
    const long g12 = rel_det(f1, f2).grade, g23 = rel_det(f2, f3).grade, g34 = rel_det(f3, f4).grade;
    const long g13 = rel_det(f1, f3).grade, g24 = rel_det(f2, f4).grade, g14 = rel_det(f1, f4).grade;
    return scalars && g12 + g23 == g13 && g13 + g34 == g14 && g23 + g34 == g24 && g12 + g24 == g14;
}

namespace {

/// det of g applied to the descending reps of F/N, in the descending reps of gF/gN.
Scalar translation_part(const Automorphism& g, const Lattice& n, const Lattice& f, const Lattice& gn,
                        const Lattice& gf) {
    const FieldCtx& ctx = n.space().ctx;
    const Window win = common_window({&n, &f});
    const Window gwin = common_window({&gn, &gf});
    const Subspace sgn = gn.in_window(gwin);
    const QuotientBasis gq = quotient_basis(sgn, gf.in_window(gwin));
    std::vector<Vector> images;
    for (const auto& rep : descending(quotient_basis(n.in_window(win), f.in_window(win)))) {
        const LaurentVector image = apply_truncated(g, win.from_slots(ctx, rep), gwin.hi);
        images.push_back(gwin.to_slots(ctx, image));
    }
    return coordinate_det(ctx, sgn, gq, images);
}

}  // namespace

Scalar translation_scalar(const Automorphism& g, const Lattice& f1, const Lattice& f2) {
    if (!(f1.space() == f2.space()) || !(g.space() == f1.space())) {
        throw SpaceMismatch("translation across different spaces");
    }
    const Lattice n = meet(f1, f2);
    const Lattice gn = act(g, n);
    return translation_part(g, n, f2, gn, act(g, f2)) / translation_part(g, n, f1, gn, act(g, f1));
}

long DimensionTheory::eval(const Lattice& l) const {
    const Lattice n = meet(l, base);
    return value_at_base + quotient_dim(n, l) - quotient_dim(n, base);
}

GradedLine DeterminantTheory::eval(const Lattice& l) const { return rel_det(base, l); }

LineIso DeterminantTheory::step(const Lattice& l, const Lattice& lp) const {
    const GradedLine a = eval(l), b = rel_det(l, lp);
    GradedLine src{a.grade + b.grade, a.tag + " ⊗ " + b.tag};
    return {std::move(src), eval(lp), omega(base, l, lp)};
}

bool DeterminantTheory::coherence(const Lattice& l, const Lattice& lp, const Lattice& lpp) const {
    if (!leq(l, lp) || !leq(lp, lpp)) throw NotNested("coherence needs L <= L' <= L''");
    const Scalar via_middle = step(l, lp).scalar * step(lp, lpp).scalar;
    const Scalar via_wedge = wedge_scalar(l, lp, lpp) * step(l, lpp).scalar;
    return via_middle == via_wedge;
}

ExtElement ext_lift(const Automorphism& g, LineMode mode, const Lattice& base) {
    if (!(g.space() == base.space())) throw SpaceMismatch("base lattice in another space");
    return {g, Scalar::one(g.space().ctx), mode, base};
}

ExtElement ext_lift(const Automorphism& g, LineMode mode) { return ext_lift(g, mode, std_lattice(g.space())); }

ExtElement ext_mul(const ExtElement& x, const ExtElement& y) {
    if (x.mode != y.mode) throw ModeMismatch("multiplying graded and ungraded elements");
    if (!(x.g.space() == y.g.space())) throw SpaceMismatch("extension elements over different spaces");
    if (x.base != y.base) throw SpaceMismatch("extension elements anchored at different lattices");
    const Automorphism gh = compose(x.g, y.g);
    const Lattice& l0 = x.base;
    const Scalar c = translation_scalar(x.g, l0, act(y.g, l0)) * omega(l0, act(x.g, l0), act(gh, l0), x.mode);
    return {gh, x.z * y.z * c, x.mode, l0};
}

Scalar commutator(const Automorphism& f, const Automorphism& g, LineMode mode, const Lattice& base) {
    f.as_mult_by();
    g.as_mult_by();
    const ExtElement x = ext_lift(f, mode, base), y = ext_lift(g, mode, base);
    Scalar c = ext_mul(y, x).z / ext_mul(x, y).z;
    if (mode == LineMode::Graded) {
        const auto ctx = base.space().ctx;
        c *= swap_iso(ctx, rel_det(base, act(f, base)), rel_det(base, act(g, base))).scalar;
    }
    return c;
}

Scalar commutator(const Automorphism& f, const Automorphism& g, LineMode mode) {
    return commutator(f, g, mode, std_lattice(f.space()));
}

Scalar tame_symbol(const TruncSeries& f, const TruncSeries& g) {
    if (!(f.ctx() == g.ctx())) throw FieldMismatch("tame symbol across fields");
    const long vf = f.valuation(), vg = g.valuation();
    Scalar r = f.coeff(0).pow(vg) / g.coeff(0).pow(vf);
    if ((vf % 2 != 0) && (vg % 2 != 0)) r = -r;
    return r;
}

Scalar tame_symbol(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroElement("tame symbol of zero");
    return tame_symbol(TruncSeries::from_poly(f), TruncSeries::from_poly(g));
}

}  // namespace tate
