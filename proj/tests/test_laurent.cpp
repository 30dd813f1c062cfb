#include <doctest.h>

#include "oracles.hpp"
#include "tate/errors.hpp"
#include "tate/random.hpp"

using namespace tate;

namespace {

const FieldCtx Q = FieldCtx::rationals();
const FieldCtx F5 = FieldCtx::prime(5);

LaurentPoly P(const FieldCtx& ctx, const std::string& s) { return LaurentPoly::parse(ctx, s); }

}  // namespace

TEST_CASE("polynomial arithmetic examples") {
    CHECK(P(Q, "1 + t") * P(Q, "1 - t") == P(Q, "1 - t^2"));
    CHECK(P(Q, "t^-1") * P(Q, "t") == LaurentPoly::constant(Q, 1));
    CHECK(lp_add(P(F5, "1 + 2*t"), P(F5, "3*t^-2")) == P(F5, "3*t^-2 + 1 + 2*t"));
    CHECK(lp_mul(P(F5, "2*t"), P(F5, "3")) == P(F5, "t"));
    CHECK((P(Q, "t") - P(Q, "t")).is_zero());
    CHECK_THROWS_AS(lp_add(P(Q, "1"), P(F5, "1")), FieldMismatch);
}

TEST_CASE("valuation examples") {
    CHECK(P(Q, "t").valuation() == 1);
    CHECK(P(Q, "3*t^-2 + t^5").valuation() == -2);
    CHECK(P(Q, "1 - t").valuation() == 0);
    CHECK_THROWS_AS(LaurentPoly(Q).valuation(), ZeroElement);
}

TEST_CASE("parser and printer") {
    // The printer always writes c*t^e so its output stays inside the strict grammar.
    CHECK(P(Q, "3*t^-2 + 1 + 5*t^3").to_string() == "3*t^-2 + 1 + 5*t^3");
    CHECK(P(Q, " 5*t^3+1 +3*t^-2").to_string() == "3*t^-2 + 1 + 5*t^3");
    CHECK(P(Q, "1/2*t - 2/4").to_string() == "-1/2 + 1/2*t^1");
    CHECK(P(F5, "7*t").to_string() == "2*t^1");
    CHECK(P(Q, "t + t").to_string() == "2*t^1");
    CHECK(P(Q, "0").is_zero());
    CHECK_THROWS_AS(P(Q, "t^"), ParseError);
    CHECK_THROWS_AS(P(Q, "1 +"), ParseError);
    CHECK_THROWS_AS(P(Q, "x"), ParseError);
    CHECK_THROWS_AS(P(Q, ""), ParseError);
}

TEST_CASE("invert_series examples") {
    const auto g = invert_series(P(Q, "1 - t"), 4);
    CHECK(g.valuation() == 0);
    CHECK(g.precision() == 4);
    CHECK_FALSE(g.exact());
    for (int j = 0; j < 4; ++j) CHECK(g.coeff(j).is_one());
    CHECK_THROWS_AS(g.coeff(4), InsufficientPrecision);

    const auto m = invert_series(P(Q, "t^2"), 1);
    CHECK(m.exact());
    CHECK(m.to_poly() == P(Q, "t^-2"));

    const auto h = invert_series(P(Q, "2 + t"), 2);
    CHECK(h.coeff(0) == Scalar::parse(Q, "1/2"));
    CHECK(h.coeff(1) == Scalar::parse(Q, "-1/4"));

    CHECK_THROWS_AS(invert_series(LaurentPoly(Q), 3), ZeroElement);
}

TEST_CASE("insufficient precision reports the coefficient count needed") {
    const auto g = invert_series(P(Q, "1 - t"), 3);
    try {
        (void)g.coeff(7);
        FAIL("expected InsufficientPrecision");
    } catch (const InsufficientPrecision& e) {
        CHECK(e.required() == 8);
    }
}

TEST_CASE("valuation is additive") {
    Rng rng(31);
    for (const FieldCtx& ctx : {Q, F5}) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto f = random_poly(rng, ctx, -5, 5), g = random_poly(rng, ctx, -5, 5);
            CHECK((f * g).valuation() == f.valuation() + g.valuation());
            CHECK((f * g).terms() == oracle::poly_mul(f, g));
        }
    }
}

TEST_CASE("invert_series then multiply gives 1 to the promised precision") {
    Rng rng(32);
    for (const FieldCtx& ctx : {Q, F5}) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto f = random_unit_poly(rng, ctx, rng.uniform(-5, 5), 3);
            const int n = static_cast<int>(rng.uniform(1, 8));
            const auto g = invert_series(f, n);
            CHECK(g.valuation() == -f.valuation());
            // Schoolbook product of f with the known part of g.
            LaurentPoly gp(ctx);
            for (int j = 0; j < g.precision(); ++j) gp.add_term(g.valuation() + j, g.coeff(j));
            const auto prod = (f * gp).truncated(n);
            CHECK(prod == LaurentPoly::constant(ctx, 1));
            const auto series = TruncSeries::from_poly(f) * g;
            CHECK(series.valuation() == 0);
            for (int j = 0; j < series.precision(); ++j) CHECK(series.coeff(j) == Scalar(ctx, j == 0 ? 1L : 0L));
        }
    }
}

TEST_CASE("series printing") {
    CHECK(invert_series(P(Q, "1 - t"), 2).to_string() == "1 + 1*t^1 + O(t^2)");
    CHECK(TruncSeries::from_poly(P(Q, "t^-1 + 2")).to_string() == "1*t^-1 + 2");
}

TEST_CASE("gl examples") {
    const auto d = LaurentMatrix::parse(Q, "t,0;0,t^2");
    CHECK(det_laurent(d) == P(Q, "t^3"));
    CHECK(gl_inverse(d) == LaurentMatrix::parse(Q, "t^-1,0;0,t^-2"));

    const auto u = LaurentMatrix::parse(Q, "1,1;0,1");
    CHECK(det_laurent(u) == P(Q, "1"));
    CHECK(gl_inverse(u) == LaurentMatrix::parse(Q, "1,-1;0,1"));

    const auto m = LaurentMatrix::parse(Q, "1,t;t^-1,2");
    CHECK(det_laurent(m) == P(Q, "1"));
    CHECK(gl_inverse(m) == LaurentMatrix::parse(Q, "2,-t;-t^-1,1"));

    CHECK_THROWS_AS(gl_inverse(LaurentMatrix::parse(Q, "1+t,0;0,1")), NotInvertibleInLaurentRing);
    CHECK_THROWS_AS(LaurentMatrix::parse(Q, "1,0;0"), ParseError);
}

TEST_CASE("gl_inverse is two-sided and det is multiplicative") {
    Rng rng(33);
    const FieldCtx F3 = FieldCtx::prime(3);
    for (const FieldCtx& ctx : {Q, F3}) {
        for (int trial = 0; trial < 40; ++trial) {
            const int n = static_cast<int>(rng.uniform(1, 3));
            const auto a = random_gl(rng, ctx, n), b = random_gl(rng, ctx, n);
            const auto ai = gl_inverse(a);
            CHECK((a * ai).is_identity());
            CHECK((ai * a).is_identity());
            CHECK(det_laurent(a * b) == det_laurent(a) * det_laurent(b));
            CHECK(det_laurent(a).is_monomial());
        }
    }
}
