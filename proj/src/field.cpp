#include "tate/field.hpp"

#include <ostream>

#include "tate/errors.hpp"

namespace tate {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    static constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto p : small) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto a : small) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldCtx FieldCtx::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 63) || !is_prime_u64(p)) {
        throw InvalidField("modulus " + std::to_string(p) + " is not a prime below 2^63");
    }
    return FieldCtx(Kind::PrimeField, p);
}

FieldCtx FieldCtx::parse(const std::string& text) {
    if (text == "Q" || text == "q") return rationals();
    std::string digits;
    if (text.rfind("Fp:", 0) == 0) {
        digits = text.substr(3);
    } else if (!text.empty() && (text[0] == 'F' || text[0] == 'f')) {
        digits = text.substr(1);
    } else {
        throw ParseError("unknown field '" + text + "' (expected Q, Fp:<p> or F<p>)");
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
        digits.size() > 19) {
        throw ParseError("bad prime in field '" + text + "'");
    }
    return prime(std::stoull(digits));
}

std::string FieldCtx::name() const {
    return is_prime() ? "F" + std::to_string(modulus_) : "Q";
}

Scalar::Scalar(const FieldCtx& ctx) : ctx_(ctx) {
    if (ctx.is_prime()) {
        value_ = std::uint64_t{0};
    } else {
        value_ = mpq_class(0);
    }
}

Scalar::Scalar(const FieldCtx& ctx, long value) : ctx_(ctx) {
    if (ctx.is_prime()) {
        const auto m = static_cast<__int128>(ctx.modulus());
        __int128 r = static_cast<__int128>(value) % m;
        if (r < 0) r += m;
        value_ = static_cast<std::uint64_t>(r);
    } else {
        value_ = mpq_class(value);
    }
}

Scalar::Scalar(const FieldCtx& ctx, const mpq_class& value) : ctx_(ctx) {
    if (ctx.is_prime()) {
        mpz_class m(std::to_string(ctx.modulus()));
        mpz_class num = value.get_num() % m;
        if (num < 0) num += m;
        mpz_class den = value.get_den() % m;
        if (den == 0) throw DivisionByZero("denominator vanishes in " + ctx.name());
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
        mpz_class r = (num * inv) % m;
        value_ = static_cast<std::uint64_t>(std::stoull(r.get_str()));
    } else {
        mpq_class q(value);
        q.canonicalize();
        value_ = std::move(q);
    }
}

Scalar Scalar::parse(const FieldCtx& ctx, const std::string& text) {
    auto is_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        return i < s.size() && s.find_first_not_of("0123456789", i) == std::string::npos;
    };
    auto strip_plus = [](std::string s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') {
        throw ParseError("bad scalar '" + text + "'");
    }
    mpz_class n(strip_plus(num)), d(den);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar(ctx, q);
}

Scalar Scalar::residue(const FieldCtx& ctx, std::uint64_t r) {
    if (!ctx.is_prime()) return Scalar(ctx, static_cast<long>(r));
    Scalar s(ctx);
    s.value_ = r % ctx.modulus();
    return s;
}

bool Scalar::is_zero() const {
    if (auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
    if (auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
    return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
    if (ctx_.is_prime()) throw FieldMismatch("rational() called on an F_p scalar");
    return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue_value() const {
    if (!ctx_.is_prime()) throw FieldMismatch("residue_value() called on a rational scalar");
    return std::get<std::uint64_t>(value_);
}

void Scalar::check_same(const Scalar& o) const {
    if (!(ctx_ == o.ctx_)) {
        throw FieldMismatch("scalar arithmetic between " + ctx_.name() + " and " + o.ctx_.name());
    }
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    if (auto* v = std::get_if<std::uint64_t>(&r.value_)) {
        if (*v != 0) *v = ctx_.modulus() - *v;
    } else {
        auto& q = std::get<mpq_class>(r.value_);
        q = -q;
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in " + ctx_.name());
    Scalar r(*this);
    if (auto* v = std::get_if<std::uint64_t>(&r.value_)) {
        *v = powmod(*v, ctx_.modulus() - 2, ctx_.modulus());
    } else {
        auto& q = std::get<mpq_class>(r.value_);
        q = 1 / q;
        q.canonicalize();
    }
    return r;
}

Scalar Scalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar base(*this), acc = one(ctx_);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(o);
    if (auto* v = std::get_if<std::uint64_t>(&value_)) {
        const std::uint64_t m = ctx_.modulus();
        const std::uint64_t w = std::get<std::uint64_t>(o.value_);
        *v = (*v >= m - w) ? *v - (m - w) : *v + w;
    } else {
        std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(o);
    if (auto* v = std::get_if<std::uint64_t>(&value_)) {
        *v = mulmod(*v, std::get<std::uint64_t>(o.value_), ctx_.modulus());
    } else {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same(o);
    return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.ctx_ == b.ctx_)) return false;
    return a.value_ == b.value_;
}

std::string Scalar::to_string() const {
    if (auto* v = std::get_if<std::uint64_t>(&value_)) return std::to_string(*v);
    return std::get<mpq_class>(value_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace tate
