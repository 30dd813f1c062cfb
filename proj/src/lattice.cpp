#include "tate/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "tate/errors.hpp"

namespace tate {

Vector Window::to_slots(const FieldCtx& ctx, const LaurentVector& v) const {
    if (static_cast<int>(v.size()) != n) throw SpaceMismatch("vector rank differs from window");
    Vector out(dim(), Scalar::zero(ctx));
    for (int i = 0; i < n; ++i) {
        for (const auto& [e, c] : v[static_cast<std::size_t>(i)].terms()) {
            if (e >= hi) break;
            if (e < lo) throw AmbientMismatch("term t^" + std::to_string(e) + " below window");
            out[slot(e, i)] = c;
        }
    }
    return out;
}

LaurentVector Window::from_slots(const FieldCtx& ctx, std::span<const Scalar> v) const {
    LaurentVector out(static_cast<std::size_t>(n), LaurentPoly(ctx));
    for (long e = lo; e < hi; ++e)
        for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)].add_term(e, v[slot(e, i)]);
    return out;
}

namespace {

void check_space(const Lattice& l, const Lattice& m) {
    if (!(l.space() == m.space())) {
        throw SpaceMismatch("lattices in " + l.space().to_string() + " and " + m.space().to_string());
    }
}

Vector unit(const FieldCtx& ctx, std::size_t dim, std::size_t slot) {
    Vector v(dim, Scalar::zero(ctx));
    v[slot] = Scalar::one(ctx);
    return v;
}

}  // namespace

Lattice Lattice::from_window(const TateSpace& space, long lo, long hi, const Subspace& s) {
    const Window win{space.rank, lo, hi};
    if (hi < lo) throw SpaceMismatch("window with hi < lo");
    if (!(s.ctx() == space.ctx)) throw FieldMismatch("window subspace over another field");
    if (s.ambient_dim() != win.dim()) throw AmbientMismatch("window subspace has the wrong ambient dimension");
    const FieldCtx& ctx = space.ctx;
    const int n = space.rank;
    if (s.dim() == 0) return Lattice(space, hi, -hi, Subspace::zero(ctx, 0));

    const long b = -(lo + static_cast<long>(s.pivots().front()) / n);
    long a = hi;
    while (a > -b) {
        bool all = true;
        for (int i = 0; i < n && all; ++i) all = s.contains_vector(unit(ctx, win.dim(), win.slot(a - 1, i)));
        if (!all) break;
        --a;
    }
    const Window tight{n, -b, a};
    const std::size_t first = win.slot(-b, 0);
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < s.dim(); ++r) {
        auto row = s.basis().row(r);
        rows.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(first),
                          row.begin() + static_cast<std::ptrdiff_t>(first + tight.dim()));
    }
    return Lattice(space, a, b, Subspace::span(ctx, tight.dim(), rows));
}

Lattice Lattice::from_generators(const TateSpace& space, long lo, long hi,
                                 const std::vector<LaurentVector>& gens) {
    const Window win{space.rank, lo, hi};
    std::vector<Vector> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) rows.push_back(win.to_slots(space.ctx, g));
    return from_window(space, lo, hi, Subspace::span(space.ctx, win.dim(), rows));
}

Subspace Lattice::in_window(const Window& win) const {
    if (win.n != space_.rank || win.lo > -b_ || win.hi < a_) {
        throw AmbientMismatch("window does not contain the lattice bounds");
    }
    const FieldCtx& ctx = space_.ctx;
    const std::size_t offset = win.slot(-b_, 0);
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < w_.dim(); ++r) {
        Vector v(win.dim(), Scalar::zero(ctx));
        auto row = w_.basis().row(r);
        std::copy(row.begin(), row.end(), v.begin() + static_cast<std::ptrdiff_t>(offset));
        rows.push_back(std::move(v));
    }
    for (long e = a_; e < win.hi; ++e)
        for (int i = 0; i < win.n; ++i) rows.push_back(unit(ctx, win.dim(), win.slot(e, i)));
    return Subspace::span(ctx, win.dim(), rows);
}

bool Lattice::contains(const LaurentVector& v) const {
    for (const auto& x : v)
        if (!x.is_zero() && x.valuation() < -b_) return false;
    return w_.contains_vector(window().to_slots(space_.ctx, v));
}

std::string Lattice::to_string() const {
    std::ostringstream os;
    os << "Lattice(" << space_.to_string() << ", a=" << a_ << ", b=" << b_;
    const Window win = window();
    for (std::size_t r = 0; r < w_.dim(); ++r) {
        os << (r ? ", " : "; ");
        const auto v = win.from_slots(space_.ctx, w_.basis().row(r));
        os << '(';
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].to_string();
        os << ')';
    }
    os << ')';
    return os.str();
}

Lattice std_lattice(const TateSpace& space, const std::vector<long>& shifts) {
    if (static_cast<int>(shifts.size()) != space.rank) throw SpaceMismatch("one shift per coordinate");
    const long lo = *std::min_element(shifts.begin(), shifts.end());
    const long hi = *std::max_element(shifts.begin(), shifts.end());
    const Window win{space.rank, lo, hi};
    std::vector<Vector> rows;
    for (int i = 0; i < space.rank; ++i)
        for (long e = shifts[static_cast<std::size_t>(i)]; e < hi; ++e)
            rows.push_back(unit(space.ctx, win.dim(), win.slot(e, i)));
    return Lattice::from_window(space, lo, hi, Subspace::span(space.ctx, win.dim(), rows));
}

Lattice std_lattice(const TateSpace& space, long shift) {
    return std_lattice(space, std::vector<long>(static_cast<std::size_t>(space.rank), shift));
}

Window common_window(const std::vector<const Lattice*>& ls) {
    Window win{ls.front()->space().rank, -ls.front()->b(), ls.front()->a()};
    for (const Lattice* l : ls) {
        win.lo = std::min(win.lo, -l->b());
        win.hi = std::max(win.hi, l->a());
    }
    return win;
}

bool leq(const Lattice& l, const Lattice& m) {
    check_space(l, m);
    if (l.b() > m.b() || l.a() < m.a()) return false;
    const Window win = common_window({&l, &m});
    return subspace_contains(m.in_window(win), l.in_window(win));
}

Lattice join(const Lattice& l, const Lattice& m) {
    check_space(l, m);
    const Window win = common_window({&l, &m});
    return Lattice::from_window(l.space(), win.lo, win.hi, subspace_sum(l.in_window(win), m.in_window(win)));
}

Lattice meet(const Lattice& l, const Lattice& m) {
    check_space(l, m);
    const Window win = common_window({&l, &m});
    return Lattice::from_window(l.space(), win.lo, win.hi,
                                subspace_intersect(l.in_window(win), m.in_window(win)));
}

LatticeQuotient quotient(const Lattice& l, const Lattice& m) {
    if (!leq(l, m)) throw NotNested("quotient M/L needs L <= M");
    const Window win = common_window({&l, &m});
    const QuotientBasis q = quotient_basis(l.in_window(win), m.in_window(win));
    LatticeQuotient out;
    out.dim = static_cast<long>(q.pivots.size());
    for (std::size_t r = 0; r < q.pivots.size(); ++r) out.basis.push_back(win.from_slots(l.space().ctx, q.reps.row(r)));
    return out;
}

long quotient_dim(const Lattice& l, const Lattice& m) {
    if (!leq(l, m)) throw NotNested("quotient M/L needs L <= M");
    const Window win = common_window({&l, &m});
    return static_cast<long>(m.in_window(win).dim()) - static_cast<long>(l.in_window(win).dim());
}

namespace {

Lattice act_factor(const AutFactor& f, const Lattice& l) {
    const TateSpace& space = l.space();
    const FieldCtx& ctx = space.ctx;
    const int n = space.rank;
    const Window src = l.window();
    std::vector<LaurentVector> gens;
    for (std::size_t r = 0; r < l.w().dim(); ++r) gens.push_back(src.from_slots(ctx, l.w().basis().row(r)));

    long lo, hi;
    if (const auto* m = std::get_if<MultBy>(&f)) {
        const long v = m->f.valuation();
        lo = -l.b() + v;
        hi = l.a() + v;
    } else {
        const auto& g = std::get<GLn>(f);
        const long emin = g.m.min_exponent();
        const long fmin = g.inv.min_exponent();
        lo = -l.b() + emin;
        hi = std::max(l.a() - fmin, lo);
        // t^e e_i for e >= a lies in L; its image matters below hi.
        for (long e = l.a(); e < hi - emin; ++e) {
            for (int i = 0; i < n; ++i) {
                LaurentVector u(static_cast<std::size_t>(n), LaurentPoly(ctx));
                u[static_cast<std::size_t>(i)] = LaurentPoly(Scalar::one(ctx), e);
                gens.push_back(std::move(u));
            }
        }
    }
    const Window dst{n, lo, hi};
    std::vector<Vector> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) rows.push_back(dst.to_slots(ctx, apply_factor(f, g, hi)));
    return Lattice::from_window(space, lo, hi, Subspace::span(ctx, dst.dim(), rows));
}

}  // namespace

Lattice act(const Automorphism& g, const Lattice& l) {
    if (!(g.space() == l.space())) throw SpaceMismatch("automorphism and lattice live in different spaces");
    Lattice cur = l;
    for (const auto& f : g.factors()) cur = act_factor(f, cur);
    return cur;
}

namespace {

nlohmann::json scalar_json(const Scalar& s) {
    if (s.ctx().is_prime()) return s.residue_value();
    return s.to_string();
}

Scalar scalar_from_json(const FieldCtx& ctx, const nlohmann::json& j) {
    if (j.is_number_integer()) return Scalar(ctx, j.get<long>());
    if (j.is_string()) return Scalar::parse(ctx, j.get<std::string>());
    throw ParseError("scalar must be an integer or a string");
}

}  // namespace

nlohmann::json lattice_to_json(const Lattice& l) {
    nlohmann::json basis = nlohmann::json::array();
    for (std::size_t r = 0; r < l.w().dim(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& x : l.w().basis().row(r)) row.push_back(scalar_json(x));
        basis.push_back(std::move(row));
    }
    return {{"field", l.space().ctx.name()}, {"rank", l.space().rank}, {"a", l.a()}, {"b", l.b()},
            {"basis", std::move(basis)}};
}

Lattice lattice_from_json(const FieldCtx& ctx, const nlohmann::json& j) {
    try {
        const TateSpace space{ctx, j.at("rank").get<int>()};
        if (space.rank <= 0) throw ParseError("rank must be positive");
        const long a = j.at("a").get<long>();
        const long b = j.at("b").get<long>();
        if (a + b < 0) throw ParseError("need a + b >= 0");
        const Window win{space.rank, -b, a};
        std::vector<Vector> rows;
        for (const auto& row : j.at("basis")) {
            if (row.size() != win.dim()) throw ParseError("basis row has the wrong length");
            Vector v;
            for (const auto& x : row) v.push_back(scalar_from_json(ctx, x));
            rows.push_back(std::move(v));
        }
        return Lattice::from_window(space, -b, a, Subspace::span(ctx, win.dim(), rows));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad lattice JSON: ") + e.what());
    }
}

}  // namespace tate
