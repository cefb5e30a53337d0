#include <doctest.h>

#include <hironaka/expr.hpp>
#include <hironaka/surface.hpp>

using namespace hironaka;

namespace {
const FieldSpec Q = FieldSpec::rationals();

Poly P(const char* text) { return parse_poly(text, Q); }

WeierstrassSurface S(const char* text) { return WeierstrassSurface::from_poly(P(text)); }
} // namespace

TEST_CASE("weierstrass validation accepts the right shapes") {
    WeierstrassSurface f = S("Z^3 + X^19*Z + (X-Y)^4");
    CHECK(f.multiplicity() == 3);
    CHECK(f.z_coefficient(3) == P("1"));
    CHECK(f.z_coefficient(2).is_zero());
    CHECK(f.z_coefficient(1) == P("X^19"));
    CHECK(f.z_coefficient(0) == P("(X-Y)^4"));
    CHECK(f.z_profile().size() == 3);
    CHECK(f.z_profile()[1] == P("X^19"));

    CHECK(S("Z^2").multiplicity() == 2);
    CHECK(S("Z^2 + X*Z + Y^3").multiplicity() == 2);
    CHECK(S("Z + X^2").multiplicity() == 1);

    CHECK_THROWS_AS(f.z_coefficient(4), precondition_error);
}

TEST_CASE("weierstrass validation rejects the wrong shapes") {
    CHECK_THROWS_AS(WeierstrassSurface::from_poly(Poly(Q)), precondition_error);
    CHECK_THROWS_AS(S("X^2 + Y^2"), precondition_error);     // no Z at all
    CHECK_THROWS_AS(S("2*Z^2 + X^3"), precondition_error);   // not monic
    CHECK_THROWS_AS(S("Z^2 + X*Z^2"), precondition_error);   // top Z-degree not Z^n alone
    CHECK_THROWS_AS(S("Z^2 + X"), precondition_error);       // order 1, Z-degree 2
    CHECK_THROWS_AS(S("Z^2 + Z"), precondition_error);       // order 1, Z-degree 2
    CHECK_THROWS_AS(S("Z^2 + 1"), precondition_error);       // order 0
}

TEST_CASE("z translation") {
    WeierstrassSurface s = S("Z^2 + Y^3");
    CHECK(z_translate(s, P("X")) == S("Z^2 + 2*X*Z + X^2 + Y^3"));
    CHECK(z_translate(s, P("0")) == s);
    CHECK(z_translate(z_translate(s, P("X")), P("-X")) == s);

    CHECK_THROWS_AS(z_translate(s, P("Z")), precondition_error);
    CHECK_THROWS_AS(z_translate(s, P("X + 1")), precondition_error);

    FieldSpec F5 = FieldSpec::prime_field(5);
    Poly other = parse_poly("X", F5);
    CHECK_THROWS_AS(z_translate(s, other), precondition_error);
}

TEST_CASE("tchirnhausen kills the subleading coefficient") {
    WeierstrassSurface s = S("Z^2 + 2*X*Z");
    CHECK(!is_wt(s));
    WeierstrassSurface t = tchirnhausen(s);
    CHECK(is_wt(t));
    CHECK(t == S("Z^2 - X^2"));
    CHECK(tchirnhausen(t) == t);

    WeierstrassSurface f = S("Z^3 + X^19*Z + (X-Y)^4");
    CHECK(is_wt(f));
    CHECK(tchirnhausen(f) == f);

    WeierstrassSurface cubic = S("Z^3 + 3*Y*Z^2 + X^4");
    WeierstrassSurface wt = tchirnhausen(cubic);
    CHECK(is_wt(wt));
    // (Z - Y)^3 + 3 Y (Z - Y)^2 + X^4 = Z^3 - 3 Y^2 Z + 2 Y^3 + X^4
    CHECK(wt == S("Z^3 - 3*Y^2*Z + 2*Y^3 + X^4"));
}

TEST_CASE("tchirnhausen needs the multiplicity invertible") {
    FieldSpec F2 = FieldSpec::prime_field(2);
    auto s = WeierstrassSurface::from_poly(parse_poly("Z^2 + X*Z + Y^3", F2));
    CHECK_THROWS_AS(tchirnhausen(s), precondition_error);

    FieldSpec F3 = FieldSpec::prime_field(3);
    auto t = WeierstrassSurface::from_poly(parse_poly("Z^2 + X*Z + Y^3", F3));
    CHECK(is_wt(tchirnhausen(t)));
}
