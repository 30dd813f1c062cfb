#include "tate/automorphism.hpp"

#include <algorithm>

#include "tate/errors.hpp"

namespace tate {

std::string TateSpace::to_string() const {
    return ctx.name() + "((t))^" + std::to_string(rank);
}

namespace {

bool is_trivial(const AutFactor& f) {
    if (const auto* m = std::get_if<MultBy>(&f)) return m->f.is_one();
    return std::get<GLn>(f).m.is_identity();
}

AutFactor invert_factor(const AutFactor& f, int precision) {
    if (const auto* m = std::get_if<MultBy>(&f)) {
        const int n = m->f.exact() ? precision : m->f.precision();
        return MultBy{m->f.inverse(n)};
    }
    const auto& g = std::get<GLn>(f);
    const auto& [k, c] = *g.det.terms().begin();
    return GLn{g.inv, g.m, LaurentPoly(c.inverse(), -k)};
}

}  // namespace

LaurentVector apply_factor(const AutFactor& f, const LaurentVector& v, long level) {
    const FieldCtx& ctx = v.front().ctx();
    LaurentVector out;
    out.reserve(v.size());
    if (const auto* m = std::get_if<MultBy>(&f)) {
        const TruncSeries& s = m->f;
        for (const auto& x : v) {
            LaurentPoly y(ctx);
            if (!x.is_zero()) {
                for (long e = x.valuation() + s.valuation(); e < level; ++e) {
                    Scalar acc = Scalar::zero(ctx);
                    for (const auto& [ex, cx] : x.terms()) {
                        if (e - ex < s.valuation()) break;
                        acc += cx * s.coeff_at(e - ex);
                    }
                    y.add_term(e, acc);
                }
            }
            out.push_back(std::move(y));
        }
        return out;
    }
    for (auto& y : std::get<GLn>(f).m.apply(v)) out.push_back(y.truncated(level));
    return out;
}

void Automorphism::push(const AutFactor& f) {
    if (is_trivial(f)) return;
    if (!factors_.empty() && factors_.back().index() == f.index()) {
        AutFactor merged = factors_.back();
        if (auto* m = std::get_if<MultBy>(&merged)) {
            m->f = std::get<MultBy>(f).f * m->f;
        } else {
            auto& g = std::get<GLn>(merged);
            const auto& h = std::get<GLn>(f);
            g = GLn{h.m * g.m, g.inv * h.inv, h.det * g.det};
        }
        factors_.pop_back();
        if (!is_trivial(merged)) factors_.push_back(std::move(merged));
        return;
    }
    factors_.push_back(f);
}

Automorphism Automorphism::identity(const TateSpace& space) { return Automorphism(space); }

Automorphism Automorphism::mult_by(const TateSpace& space, const TruncSeries& f) {
    if (!(f.ctx() == space.ctx)) throw FieldMismatch("series field differs from the space");
    Automorphism a(space);
    a.push(MultBy{f});
    return a;
}

Automorphism Automorphism::mult_by(const TateSpace& space, const LaurentPoly& f) {
    if (f.is_zero()) throw ZeroElement("multiplication by zero is not an automorphism");
    return mult_by(space, TruncSeries::from_poly(f));
}

Automorphism Automorphism::gl(const LaurentMatrix& m) {
    LaurentPoly d = det_laurent(m);
    LaurentMatrix inv = gl_inverse(m);
    Automorphism a(TateSpace{m.ctx(), m.n()});
    a.push(GLn{m, std::move(inv), std::move(d)});
    return a;
}

TruncSeries Automorphism::as_mult_by() const {
    if (factors_.empty()) return TruncSeries(0, {Scalar::one(space_.ctx)}, true);
    if (factors_.size() == 1) {
        if (const auto* m = std::get_if<MultBy>(&factors_[0])) return m->f;
    }
    throw NotMultiplicationAutomorphism("automorphism " + to_string() + " is not multiplication by a unit");
}

long Automorphism::det_valuation() const {
    long v = 0;
    for (const auto& f : factors_) {
        if (const auto* m = std::get_if<MultBy>(&f)) {
            v += space_.rank * m->f.valuation();
        } else {
            v += std::get<GLn>(f).det.valuation();
        }
    }
    return v;
}

Automorphism Automorphism::inverse(int precision) const {
    Automorphism a(space_);
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) a.push(invert_factor(*it, precision));
    return a;
}

std::string Automorphism::to_string() const {
    if (factors_.empty()) return "id";
    std::string s;
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
        if (!s.empty()) s += " o ";
        if (const auto* m = std::get_if<MultBy>(&*it)) {
            s += "mul(" + m->f.to_string() + ")";
        } else {
            s += "mat(" + std::get<GLn>(*it).m.to_string() + ")";
        }
    }
    return s;
}

Automorphism compose(const Automorphism& g, const Automorphism& h) {
    if (!(g.space_ == h.space_)) throw SpaceMismatch("composing automorphisms of different spaces");
    Automorphism a = h;
    for (const auto& f : g.factors_) a.push(f);
    return a;
}

long factor_min_exponent(const AutFactor& f) {
    if (const auto* m = std::get_if<MultBy>(&f)) return m->f.valuation();
    return std::get<GLn>(f).m.min_exponent();
}

LaurentVector apply_truncated(const Automorphism& g, const LaurentVector& v, long level) {
    if (static_cast<int>(v.size()) != g.space().rank) throw SpaceMismatch("vector rank differs from space");
    const auto& fs = g.factors();
    // levels[k]: precision needed on the input of factor k.
    std::vector<long> levels(fs.size() + 1);
    levels[fs.size()] = level;
    for (std::size_t k = fs.size(); k-- > 0;) levels[k] = levels[k + 1] - factor_min_exponent(fs[k]);
    LaurentVector cur;
    for (const auto& x : v) cur.push_back(x.truncated(levels[0]));
    for (std::size_t k = 0; k < fs.size(); ++k) cur = apply_factor(fs[k], cur, levels[k + 1]);
    return cur;
}

}  // namespace tate
