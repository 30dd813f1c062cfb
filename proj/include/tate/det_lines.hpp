#pragma once

#include <string>

#include "tate/lattice.hpp"

namespace tate {

enum class LineMode { Ungraded, Graded };

std::string mode_name(LineMode m);
/// "graded" or "ungraded"; ParseError otherwise.
LineMode parse_mode(const std::string& text);

/// A rank-one graded object with a canonical generator. `tag` names the
/// line, e.g. the pair of lattices it is the relative determinant of.
struct GradedLine {
    long grade = 0;
    std::string tag;
};

/// An isomorphism between lines, recorded as the scalar taking the source
/// generator to a multiple of the target generator.
struct LineIso {
    GradedLine source;
    GradedLine target;
    Scalar scalar;
};

/// g∘f; AmbientMismatch unless f.target and g.source agree.
LineIso compose(const LineIso& g, const LineIso& f);
/// L ⊗ M -> M ⊗ L, scalar (-1)^{grade L * grade M}.
LineIso swap_iso(const FieldCtx& ctx, const GradedLine& l, const GradedLine& m);

/// (F1|F2): grade dim(F2/N) - dim(F1/N) for N = F1 ∩ F2. The canonical
/// generator is δ_N(F1)^∨ ⊗ δ_N(F2), where δ_N(F) is the wedge of the
/// coset representatives of F/N in descending order of leading monomial.
GradedLine rel_det(const Lattice& f1, const Lattice& f2);

/// Scalar of δ(N/M) ∧ δ(F/N) against δ(F/M) for M ⊆ N ⊆ F.
Scalar wedge_scalar(const Lattice& m, const Lattice& n, const Lattice& f);

/// ω(F1|F2|F3): (F1|F2) ⊗ (F2|F3) -> (F1|F3) in canonical generators.
Scalar omega(const Lattice& f1, const Lattice& f2, const Lattice& f3, LineMode mode = LineMode::Ungraded);

/// ω(F1,F2,F3) ω(F1,F3,F4) == ω(F2,F3,F4) ω(F1,F2,F4); graded mode also
/// checks that grades add.
bool cocycle_check(const Lattice& f1, const Lattice& f2, const Lattice& f3, const Lattice& f4,
                   LineMode mode = LineMode::Ungraded);

/// Scalar of g_*: (F1|F2) -> (gF1|gF2) in canonical generators.
Scalar translation_scalar(const Automorphism& g, const Lattice& f1, const Lattice& f2);

struct DimensionTheory {
    Lattice base;
    long value_at_base = 0;

    long eval(const Lattice& l) const;
    DimensionTheory shifted(long k) const { return {base, value_at_base + k}; }
};

struct DeterminantTheory {
    Lattice base;

    /// Δ(L) = (base|L).
    GradedLine eval(const Lattice& l) const;
    /// Δ(L) ⊗ (L|L') -> Δ(L').
    LineIso step(const Lattice& l, const Lattice& lp) const;
    /// The two routes Δ(L) ⊗ det(L'/L) ⊗ det(L''/L') -> Δ(L'') agree.
    /// NotNested unless L ≤ L' ≤ L''.
    bool coherence(const Lattice& l, const Lattice& lp, const Lattice& lpp) const;
};

/// (g, z): z times the canonical generator of (L0|gL0).
struct ExtElement {
    Automorphism g;
    Scalar z;
    LineMode mode;
    Lattice base;
};

ExtElement ext_lift(const Automorphism& g, LineMode mode, const Lattice& base);
ExtElement ext_lift(const Automorphism& g, LineMode mode);
/// ModeMismatch or SpaceMismatch on incompatible inputs; also rejects
/// different base lattices.
ExtElement ext_mul(const ExtElement& x, const ExtElement& y);

/// c with ỹx̃ = c·x̃ỹ for lifts x̃ of f and ỹ of g. Graded mode composes with
/// the symmetry of graded lines. NotMultiplicationAutomorphism unless f and g
/// are MultBy units.
Scalar commutator(const Automorphism& f, const Automorphism& g, LineMode mode, const Lattice& base);
Scalar commutator(const Automorphism& f, const Automorphism& g, LineMode mode);

/// (-1)^{v(f)v(g)} (f^{v(g)}/g^{v(f)})(0), from leading coefficients.
Scalar tame_symbol(const TruncSeries& f, const TruncSeries& g);
Scalar tame_symbol(const LaurentPoly& f, const LaurentPoly& g);

}  // namespace tate
