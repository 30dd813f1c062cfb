#include "tate/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include "tate/errors.hpp"

namespace tate {

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(const Scalar& c, long exponent) : ctx_(c.ctx()) {
    if (!c.is_zero()) terms_.emplace(exponent, c);
}

void LaurentPoly::check_same(const LaurentPoly& o) const {
    if (!(ctx_ == o.ctx_)) {
        throw FieldMismatch("Laurent polynomials over " + ctx_.name() + " and " + o.ctx_.name());
    }
}

long LaurentPoly::valuation() const {
    if (terms_.empty()) throw ZeroElement("valuation of zero");
    return terms_.begin()->first;
}

long LaurentPoly::degree() const {
    if (terms_.empty()) throw ZeroElement("degree of zero");
    return terms_.rbegin()->first;
}

Scalar LaurentPoly::coeff(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Scalar::zero(ctx_) : it->second;
}

void LaurentPoly::add_term(long exponent, const Scalar& c) {
    if (!(c.ctx() == ctx_)) throw FieldMismatch("term from another field");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(ctx_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same(b);
    LaurentPoly r(a.ctx_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly operator*(const Scalar& c, const LaurentPoly& a) {
    LaurentPoly r(a.ctx_);
    if (c.is_zero()) return r;
    for (const auto& [e, x] : a.terms_) r.terms_.emplace(e, c * x);
    return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly r(ctx_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
}

LaurentPoly LaurentPoly::truncated(long bound) const {
    LaurentPoly r(ctx_);
    for (const auto& [e, c] : terms_) {
        if (e >= bound) break;
        r.terms_.emplace(e, c);
    }
    return r;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.to_string();
        if (e != 0) os << "*t^" << e;
    }
    return os.str();
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

namespace {

class PolyParser {
public:
    PolyParser(const FieldCtx& ctx, const std::string& text) : ctx_(ctx), original_(text) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
    }

    LaurentPoly parse() {
        if (s_.empty()) fail("empty polynomial");
        LaurentPoly out(ctx_);
        bool first = true;
        while (pos_ < s_.size()) {
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = peek() == '-';
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [coeff, exponent] = term();
            out.add_term(exponent, negative ? -coeff : coeff);
        }
        return out;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("cannot parse Laurent polynomial '" + original_ + "': " + why);
    }

    std::string digits() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits at offset " + std::to_string(start));
        return s_.substr(start, pos_ - start);
    }

    std::pair<Scalar, long> term() {
        Scalar coeff = Scalar::one(ctx_);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = digits();
            if (peek() == '/') {
                ++pos_;
                num += "/" + digits();
            }
            coeff = Scalar::parse(ctx_, num);
            have_coeff = true;
            if (peek() == '*') {
                ++pos_;
                if (peek() != 't') fail("expected 't' after '*'");
            }
        }
        long exponent = 0;
        if (peek() == 't') {
            ++pos_;
            exponent = 1;
            if (peek() == '^') {
                ++pos_;
                bool neg = false;
                if (peek() == '-' || peek() == '+') {
                    neg = peek() == '-';
                    ++pos_;
                }
                std::string d = digits();
                if (d.size() > 9) fail("exponent too large");
                exponent = std::stol(d) * (neg ? -1 : 1);
            }
        } else if (!have_coeff) {
            fail("expected a coefficient or 't'");
        }
        return {coeff, exponent};
    }

    FieldCtx ctx_;
    std::string original_;
    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(const FieldCtx& ctx, const std::string& text) {
    return PolyParser(ctx, text).parse();
}

// ---------------------------------------------------------------- TruncSeries

TruncSeries::TruncSeries(long valuation, std::vector<Scalar> coeffs, bool exact)
    : v_(valuation), coeffs_(std::move(coeffs)), exact_(exact) {
    if (coeffs_.empty()) throw ZeroElement("truncated series needs at least one coefficient");
    if (coeffs_.front().is_zero()) throw ZeroElement("leading coefficient of a series is zero");
    if (exact_) {
        while (coeffs_.back().is_zero()) coeffs_.pop_back();
    }
}

TruncSeries TruncSeries::from_poly(const LaurentPoly& f) {
    const long v = f.valuation();
    std::vector<Scalar> c(static_cast<std::size_t>(f.degree() - v + 1), Scalar::zero(f.ctx()));
    for (const auto& [e, x] : f.terms()) c[static_cast<std::size_t>(e - v)] = x;
    return TruncSeries(v, std::move(c), true);
}

Scalar TruncSeries::coeff(long j) const {
    if (j < 0) return Scalar::zero(ctx());
    if (j < precision()) return coeffs_[static_cast<std::size_t>(j)];
    if (exact_) return Scalar::zero(ctx());
    throw InsufficientPrecision("series known to " + std::to_string(precision()) +
                                    " coefficients, coefficient " + std::to_string(j) +
                                    " requested (required precision " + std::to_string(j + 1) +
                                    ")",
                                static_cast<int>(j + 1));
}

LaurentPoly TruncSeries::to_poly() const {
    if (!exact_) throw InsufficientPrecision("series is not a Laurent polynomial", precision());
    LaurentPoly p(ctx());
    for (std::size_t j = 0; j < coeffs_.size(); ++j) p.add_term(v_ + static_cast<long>(j), coeffs_[j]);
    return p;
}

bool TruncSeries::is_one() const {
    return exact_ && v_ == 0 && coeffs_.size() == 1 && coeffs_[0].is_one();
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    if (!(a.ctx() == b.ctx())) throw FieldMismatch("series over different fields");
    long n;
    if (a.exact_ && b.exact_) {
        n = a.precision() + b.precision() - 1;
    } else if (a.exact_) {
        n = b.precision();
    } else if (b.exact_) {
        n = a.precision();
    } else {
        n = std::min(a.precision(), b.precision());
    }
    std::vector<Scalar> c(static_cast<std::size_t>(n), Scalar::zero(a.ctx()));
    for (long j = 0; j < n; ++j) {
        const long lo = std::max(0L, j - (b.exact_ ? b.precision() - 1 : j));
        const long hi = std::min(j, a.exact_ ? a.precision() - 1L : j);
        for (long i = lo; i <= hi; ++i) c[static_cast<std::size_t>(j)] += a.coeff(i) * b.coeff(j - i);
    }
    return TruncSeries(a.v_ + b.v_, std::move(c), a.exact_ && b.exact_);
}

TruncSeries TruncSeries::inverse(int precision) const {
    if (exact_ && coeffs_.size() == 1) {
        return TruncSeries(-v_, {coeffs_[0].inverse()}, true);
    }
    if (precision < 1) throw InsufficientPrecision("inverse needs precision >= 1", 1);
    const Scalar inv0 = coeffs_[0].inverse();
    std::vector<Scalar> d;
    d.reserve(static_cast<std::size_t>(precision));
    d.push_back(inv0);
    for (long j = 1; j < precision; ++j) {
        Scalar acc = Scalar::zero(ctx());
        for (long i = 1; i <= j; ++i) acc += coeff(i) * d[static_cast<std::size_t>(j - i)];
        d.push_back(-(inv0 * acc));
    }
    return TruncSeries(-v_, std::move(d), false);
}

std::string TruncSeries::to_string() const {
    LaurentPoly p(ctx());
    for (std::size_t j = 0; j < coeffs_.size(); ++j) p.add_term(v_ + static_cast<long>(j), coeffs_[j]);
    std::string s = p.to_string();
    if (!exact_) s += " + O(t^" + std::to_string(v_ + precision()) + ")";
    return s;
}

TruncSeries invert_series(const LaurentPoly& f, int precision) {
    if (f.is_zero()) throw ZeroElement("inverse of zero");
    return TruncSeries::from_poly(f).inverse(precision);
}

// -------------------------------------------------------------- LaurentMatrix

LaurentMatrix::LaurentMatrix(const FieldCtx& ctx, int n)
    : ctx_(ctx), n_(n), entries_(static_cast<std::size_t>(n * n), LaurentPoly(ctx)) {
    if (n <= 0) throw SpaceMismatch("Laurent matrix size must be positive");
}

LaurentMatrix LaurentMatrix::identity(const FieldCtx& ctx, int n) {
    LaurentMatrix m(ctx, n);
    for (int i = 0; i < n; ++i) m(i, i) = LaurentPoly::constant(ctx, 1);
    return m;
}

LaurentMatrix LaurentMatrix::diagonal(const std::vector<LaurentPoly>& diag) {
    if (diag.empty()) throw SpaceMismatch("empty diagonal");
    LaurentMatrix m(diag.front().ctx(), static_cast<int>(diag.size()));
    for (int i = 0; i < m.n(); ++i) m(i, i) = diag[static_cast<std::size_t>(i)];
    return m;
}

LaurentMatrix LaurentMatrix::parse(const FieldCtx& ctx, const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream rs(text);
    std::string row;
    while (std::getline(rs, row, ';')) {
        std::vector<std::string> cells;
        std::stringstream cs(row);
        std::string cell;
        while (std::getline(cs, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw ParseError("empty matrix");
    LaurentMatrix m(ctx, n);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != n) {
            throw ParseError("matrix '" + text + "' is not square");
        }
        for (int c = 0; c < n; ++c) {
            m(r, c) = LaurentPoly::parse(ctx, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        }
    }
    return m;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
    if (!(ctx_ == o.ctx_) || n_ != o.n_) throw SpaceMismatch("Laurent matrix product shape mismatch");
    LaurentMatrix r(ctx_, n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            if ((*this)(i, k).is_zero()) continue;
            for (int j = 0; j < n_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
        }
    return r;
}

std::vector<LaurentPoly> LaurentMatrix::apply(const std::vector<LaurentPoly>& v) const {
    if (static_cast<int>(v.size()) != n_) throw SpaceMismatch("vector length differs from matrix size");
    std::vector<LaurentPoly> out(static_cast<std::size_t>(n_), LaurentPoly(ctx_));
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) out[static_cast<std::size_t>(i)] += (*this)(i, k) * v[static_cast<std::size_t>(k)];
    return out;
}

bool LaurentMatrix::is_identity() const { return *this == identity(ctx_, n_); }

long LaurentMatrix::min_exponent() const {
    bool any = false;
    long best = 0;
    for (const auto& e : entries_) {
        if (e.is_zero()) continue;
        best = any ? std::min(best, e.valuation()) : e.valuation();
        any = true;
    }
    return best;
}

std::string LaurentMatrix::to_string() const {
    std::string s;
    for (int r = 0; r < n_; ++r) {
        if (r) s += "; ";
        for (int c = 0; c < n_; ++c) {
            if (c) s += ", ";
            s += (*this)(r, c).to_string();
        }
    }
    return s;
}

namespace {

// Laplace expansion along rows, memoized on the set of unused columns.
LaurentPoly det_rows(const LaurentMatrix& m, const std::vector<int>& rows,
                     const std::vector<int>& cols) {
    const int k = static_cast<int>(rows.size());
    std::unordered_map<unsigned, LaurentPoly> memo;
    auto rec = [&](auto&& self, int r, unsigned mask) -> LaurentPoly {
        if (r == k) return LaurentPoly::constant(m.ctx(), 1);
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        LaurentPoly acc(m.ctx());
        int position = 0;
        for (int j = 0; j < k; ++j) {
            if (!(mask & (1u << j))) continue;
            const LaurentPoly& a = m(rows[static_cast<std::size_t>(r)], cols[static_cast<std::size_t>(j)]);
            if (!a.is_zero()) {
                LaurentPoly term = a * self(self, r + 1, mask & ~(1u << j));
                if (position % 2) acc -= term; else acc += term;
            }
            ++position;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(rec, 0, k == 0 ? 0u : ((1u << k) - 1));
}

}  // namespace

LaurentPoly det_laurent(const LaurentMatrix& m) {
    if (m.n() > 20) throw SpaceMismatch("det_laurent supports n <= 20");
    std::vector<int> idx(static_cast<std::size_t>(m.n()));
    for (int i = 0; i < m.n(); ++i) idx[static_cast<std::size_t>(i)] = i;
    return det_rows(m, idx, idx);
}

LaurentMatrix gl_inverse(const LaurentMatrix& m) {
    const LaurentPoly d = det_laurent(m);
    if (!d.is_monomial()) {
        throw NotInvertibleInLaurentRing("determinant " + d.to_string() + " is not a unit of k[t,t^-1]");
    }
    const auto& [k, c] = *d.terms().begin();
    const LaurentPoly dinv(c.inverse(), -k);
    const int n = m.n();
    LaurentMatrix inv(m.ctx(), n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            // inv(i, j) = (-1)^{i+j} det(minor without row j and column i) / det
            std::vector<int> rows, cols;
            for (int r = 0; r < n; ++r)
                if (r != j) rows.push_back(r);
            for (int cc = 0; cc < n; ++cc)
                if (cc != i) cols.push_back(cc);
            LaurentPoly minor = det_rows(m, rows, cols);
            if ((i + j) % 2) minor = -minor;
            inv(i, j) = minor * dinv;
        }
    }
    return inv;
}

}  // namespace tate
