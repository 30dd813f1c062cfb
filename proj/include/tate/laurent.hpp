#pragma once

#include <map>
#include <string>
#include <vector>

#include "tate/field.hpp"

namespace tate {

/// Element of k[t, t^-1]. No zero coefficients are stored; the empty map is 0.
class LaurentPoly {
public:
    explicit LaurentPoly(const FieldCtx& ctx) : ctx_(ctx) {}
    LaurentPoly(const Scalar& c, long exponent);

    static LaurentPoly constant(const FieldCtx& ctx, long c) {
        return LaurentPoly(Scalar(ctx, c), 0);
    }
    static LaurentPoly monomial(const FieldCtx& ctx, long c, long exponent) {
        return LaurentPoly(Scalar(ctx, c), exponent);
    }
    /// Grammar: term = coefficient ["*t^" exponent] | [coefficient "*"] "t" ["^" exponent];
    /// coefficient = integer | integer "/" integer; terms joined by '+' or '-'.
    static LaurentPoly parse(const FieldCtx& ctx, const std::string& text);

    const FieldCtx& ctx() const noexcept { return ctx_; }
    const std::map<long, Scalar>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Least exponent; ZeroElement on 0.
    long valuation() const;
    /// Greatest exponent; ZeroElement on 0.
    long degree() const;
    Scalar coeff(long exponent) const;
    /// Single-term polynomial c*t^k with c != 0.
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    void add_term(long exponent, const Scalar& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const Scalar& c, const LaurentPoly& a);
    /// Multiplication by t^k.
    LaurentPoly shifted(long k) const;
    /// Terms with exponent < bound.
    LaurentPoly truncated(long bound) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Exponents ascending, e.g. "3*t^-2 + 1 + 5*t^3".
    std::string to_string() const;

private:
    void check_same(const LaurentPoly& o) const;

    FieldCtx ctx_;
    std::map<long, Scalar> terms_;
};

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);

/// t^v * (c_0 + c_1 t + ... + c_{N-1} t^{N-1} + O(t^N)), c_0 != 0.
/// When `exact` is set the series is the Laurent polynomial given by the
/// stored coefficients and every later coefficient is zero.
class TruncSeries {
public:
    TruncSeries(long valuation, std::vector<Scalar> coeffs, bool exact);
    /// Exact series of a nonzero Laurent polynomial.
    static TruncSeries from_poly(const LaurentPoly& f);

    const FieldCtx& ctx() const noexcept { return coeffs_.front().ctx(); }
    long valuation() const noexcept { return v_; }
    /// Number of known coefficients N.
    int precision() const noexcept { return static_cast<int>(coeffs_.size()); }
    bool exact() const noexcept { return exact_; }
    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of t^{v+j}. InsufficientPrecision if j >= N and not exact.
    Scalar coeff(long j) const;
    /// Coefficient of t^e.
    Scalar coeff_at(long exponent) const { return coeff(exponent - v_); }

    /// Only for exact series.
    LaurentPoly to_poly() const;
    bool is_one() const;

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    /// Inverse with `precision` coefficients (exact for unit monomials).
    TruncSeries inverse(int precision) const;

    /// Same valuation, precision and coefficients.
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.v_ == b.v_ && a.exact_ == b.exact_ && a.coeffs_ == b.coeffs_;
    }

    std::string to_string() const;

private:
    long v_;
    std::vector<Scalar> coeffs_;
    bool exact_;
};

/// f^{-1} with N coefficients: f * g = 1 + O(t^N).
TruncSeries invert_series(const LaurentPoly& f, int precision);

/// Square matrix over k[t, t^-1].
class LaurentMatrix {
public:
    LaurentMatrix(const FieldCtx& ctx, int n);
    static LaurentMatrix identity(const FieldCtx& ctx, int n);
    static LaurentMatrix diagonal(const std::vector<LaurentPoly>& diag);
    /// Rows separated by ';', entries by ','.
    static LaurentMatrix parse(const FieldCtx& ctx, const std::string& text);

    const FieldCtx& ctx() const noexcept { return ctx_; }
    int n() const noexcept { return n_; }
    LaurentPoly& operator()(int r, int c) { return entries_[static_cast<std::size_t>(r * n_ + c)]; }
    const LaurentPoly& operator()(int r, int c) const {
        return entries_[static_cast<std::size_t>(r * n_ + c)];
    }

    LaurentMatrix operator*(const LaurentMatrix& o) const;
    std::vector<LaurentPoly> apply(const std::vector<LaurentPoly>& v) const;
    bool is_identity() const;
    /// Least exponent over nonzero entries (0 for the zero matrix).
    long min_exponent() const;

    friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
        return a.ctx_ == b.ctx_ && a.n_ == b.n_ && a.entries_ == b.entries_;
    }

    std::string to_string() const;

private:
    FieldCtx ctx_;
    int n_;
    std::vector<LaurentPoly> entries_;
};

LaurentPoly det_laurent(const LaurentMatrix& m);
/// NotInvertibleInLaurentRing unless det is c*t^k with c != 0.
LaurentMatrix gl_inverse(const LaurentMatrix& m);

}  // namespace tate
