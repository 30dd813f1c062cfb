#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace tate {

/// Base field k: either Q or F_p for a prime p < 2^63.
class FieldCtx {
public:
    enum class Kind { Rationals, PrimeField };

    static FieldCtx rationals() { return FieldCtx(Kind::Rationals, 0); }
    /// Throws InvalidField unless `p` is prime.
    static FieldCtx prime(std::uint64_t p);
    /// Accepts "Q", "Fp:<p>" and "F<p>".
    static FieldCtx parse(const std::string& text);

    Kind kind() const noexcept { return kind_; }
    bool is_prime() const noexcept { return kind_ == Kind::PrimeField; }
    /// Zero for Q.
    std::uint64_t modulus() const noexcept { return modulus_; }
    std::string name() const;

    friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
        return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
    }

private:
    FieldCtx(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    Kind kind_;
    std::uint64_t modulus_;
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// An element of k. Rationals are kept reduced with positive denominator,
/// residues in [0, p). Mixing contexts raises FieldMismatch.
class Scalar {
public:
    explicit Scalar(const FieldCtx& ctx);  // zero
    Scalar(const FieldCtx& ctx, long value);
    Scalar(const FieldCtx& ctx, const mpq_class& value);

    static Scalar zero(const FieldCtx& ctx) { return Scalar(ctx); }
    static Scalar one(const FieldCtx& ctx) { return Scalar(ctx, 1L); }
    /// Parses "n" or "n/d" (arbitrary size). Over F_p the denominator is inverted.
    static Scalar parse(const FieldCtx& ctx, const std::string& text);
    /// Residue constructor; `r` is reduced mod p.
    static Scalar residue(const FieldCtx& ctx, std::uint64_t r);

    const FieldCtx& ctx() const noexcept { return ctx_; }
    bool is_zero() const;
    bool is_one() const;

    /// Only valid over Q.
    const mpq_class& rational() const;
    /// Only valid over F_p.
    std::uint64_t residue_value() const;

    Scalar operator-() const;
    Scalar inverse() const;  // DivisionByZero on zero
    Scalar pow(long long e) const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// "a/b" or "a" over Q, the residue over F_p.
    std::string to_string() const;

private:
    void check_same(const Scalar& o) const;

    FieldCtx ctx_;
    std::variant<std::uint64_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

}  // namespace tate
