#include <doctest.h>

#include <hironaka/expr.hpp>
#include <hironaka/polyring.hpp>

using namespace hironaka;

namespace {
const FieldSpec Q = FieldSpec::rationals();

Poly P(const char* text) { return parse_poly(text, Q); }

Scalar q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return Scalar(Q, r);
}
} // namespace

TEST_CASE("term construction and cancellation") {
    Poly p(Q);
    CHECK(p.is_zero());
    p.add_term(Exponent{1, 2, 0}, q(3));
    CHECK(p.term_count() == 1);
    CHECK(p.coefficient(Exponent{1, 2, 0}) == q(3));
    CHECK(p.coefficient(Exponent{0, 0, 0}).is_zero());
    p.add_term(Exponent{1, 2, 0}, q(-3));
    CHECK(p.is_zero());
    p.add_term(Exponent{0, 0, 0}, q(0));
    CHECK(p.is_zero());
}

TEST_CASE("order, degree, involvement") {
    Poly p = P("X^2*Y + X^5");
    CHECK(p.order() == 3);
    CHECK(p.degree_in(Var::X) == 5);
    CHECK(p.degree_in(Var::Y) == 1);
    CHECK(p.degree_in(Var::Z) == 0);
    CHECK(p.involves(Var::X));
    CHECK(!p.involves(Var::Z));

    CHECK(P("1").order() == 0);
    CHECK_THROWS_AS(Poly(Q).order(), precondition_error);
    CHECK(Poly(Q).degree_in(Var::X) == 0);
}

TEST_CASE("ring arithmetic") {
    CHECK(P("X + Y") * P("X - Y") == P("X^2 - Y^2"));
    CHECK(P("X + Y") + P("X - Y") == P("2*X"));
    CHECK(P("X + Y") - P("X + Y") == Poly(Q));
    CHECK(-P("X - 2*Y") == P("2*Y - X"));
    CHECK(q(3) * P("X + 1") == P("3*X + 3"));
    CHECK(pow(P("X + Y"), 2) == P("X^2 + 2*X*Y + Y^2"));
    CHECK(pow(P("X - Y"), 0) == P("1"));
    CHECK(pow(Poly(Q), 3).is_zero());

    Poly f4 = pow(P("X - Y"), 4);
    CHECK(f4.term_count() == 5);
    CHECK(f4.coefficient(Exponent{2, 2, 0}) == q(6));
    CHECK(f4.coefficient(Exponent{1, 3, 0}) == q(-4));

    FieldSpec F5 = FieldSpec::prime_field(5);
    CHECK_THROWS_AS(P("X") + Poly(F5), precondition_error);
}

TEST_CASE("substitution is a ring homomorphism") {
    std::map<Var, Poly> shear{{Var::Y, P("X*(Y + 1)")}};
    CHECK(substitute(pow(P("X - Y"), 4), shear) == P("X^4*Y^4"));

    std::map<Var, Poly> translate{{Var::Z, P("Z + X")}};
    CHECK(substitute(P("Z^2 + Y"), translate) == P("Z^2 + 2*X*Z + X^2 + Y"));

    std::map<Var, Poly> collapse{{Var::X, P("0")}};
    CHECK(substitute(P("X^3 + X*Y + Z"), collapse) == P("Z"));

    CHECK(substitute(P("X + Y + Z"), {}) == P("X + Y + Z"));
    CHECK(substitute(Poly(Q), shear).is_zero());
}

TEST_CASE("exact division by a variable power") {
    CHECK(divide_exact_power(P("X^3*Y^2 + X^2*Z"), Var::X, 2) == P("X*Y^2 + Z"));
    CHECK(divide_exact_power(P("Y^4"), Var::X, 0) == P("Y^4"));
    CHECK(divide_exact_power(Poly(Q), Var::X, 5).is_zero());
    CHECK_THROWS_AS(divide_exact_power(P("X^3 + Y"), Var::X, 1), precondition_error);
}

TEST_CASE("exact division by a polynomial") {
    auto d1 = divide_exact(P("X^2 - Y^2"), P("X - Y"));
    REQUIRE(d1.has_value());
    CHECK(*d1 == P("X + Y"));

    auto d2 = divide_exact(pow(P("X - Y"), 4), pow(P("X - Y"), 2));
    REQUIRE(d2.has_value());
    CHECK(*d2 == P("X^2 - 2*X*Y + Y^2"));

    CHECK(!divide_exact(P("X^2 + Y"), P("X - Y")).has_value());
    CHECK(!divide_exact(P("X"), P("X^2")).has_value());

    auto d3 = divide_exact(P("6*X^2*Y^3"), P("3*X*Y"));
    REQUIRE(d3.has_value());
    CHECK(*d3 == P("2*X*Y^2"));

    auto d0 = divide_exact(Poly(Q), P("X - Y"));
    REQUIRE(d0.has_value());
    CHECK(d0->is_zero());

    CHECK_THROWS_AS(divide_exact(P("X"), Poly(Q)), precondition_error);
}

TEST_CASE("power divisibility tests") {
    Poly g = P("X - Y");
    CHECK(divides_power(g, 4, pow(g, 4)));
    CHECK(divides_power(g, 3, pow(g, 4) * P("Z + 1")));
    CHECK(!divides_power(g, 5, pow(g, 4)));
    CHECK(divides_power(g, 0, P("X + 1")));
    CHECK(divides_power(g, 7, Poly(Q)));
    CHECK(!divides_power(P("X"), 1, P("X^2 + Y")));
    CHECK_THROWS_AS(divides_power(Poly(Q), 1, P("X")), precondition_error);
}

TEST_CASE("univariate views") {
    auto u = univariate_view(P("3*Y^2 + Y^5"), Var::Y);
    REQUIRE(u.size() == 6);
    CHECK(u[0].is_zero());
    CHECK(u[2] == q(3));
    CHECK(u[5] == q(1));

    CHECK(univariate_view(Poly(Q), Var::Y).empty());
    CHECK(univariate_view(P("4"), Var::X) == std::vector<Scalar>{q(4)});
    CHECK_THROWS_AS(univariate_view(P("X*Y"), Var::Y), precondition_error);
}

TEST_CASE("root multiplicity by synthetic division") {
    // (Y - 1)^3 (Y + 2) = Y^4 - Y^3 - 3 Y^2 + 5 Y - 2
    std::vector<Scalar> u{q(-2), q(5), q(-3), q(-1), q(1)};
    CHECK(root_multiplicity(u, q(1)) == 3);
    CHECK(root_multiplicity(u, q(-2)) == 1);
    CHECK(root_multiplicity(u, q(5)) == 0);

    FieldSpec F2 = FieldSpec::prime_field(2);
    auto one = Scalar::one(F2);
    // Y^2 + 1 = (Y + 1)^2 over F_2; derivative-based counting would miss it.
    std::vector<Scalar> sq{one, Scalar::zero(F2), one};
    CHECK(root_multiplicity(sq, one) == 2);

    CHECK_THROWS_AS(root_multiplicity(std::vector<Scalar>{}, q(1)), precondition_error);
}

TEST_CASE("rational roots over Q") {
    // 2 Y^3 - 3 Y^2 - 3 Y + 2 has roots -1, 1/2, 2.
    std::vector<Scalar> u{q(2), q(-3), q(-3), q(2)};
    CHECK(rational_roots(u) == std::vector<Scalar>{q(-1), q(1, 2), q(2)});

    std::vector<Scalar> shifted{q(0), q(0), q(1)};
    CHECK(rational_roots(shifted) == std::vector<Scalar>{q(0)});

    std::vector<Scalar> none{q(1), q(0), q(1)};
    CHECK(rational_roots(none).empty());

    CHECK(rational_roots(std::vector<Scalar>{q(5)}).empty());
    CHECK_THROWS_AS(rational_roots(std::vector<Scalar>{}), precondition_error);
}

TEST_CASE("rational roots over a prime field") {
    FieldSpec F5 = FieldSpec::prime_field(5);
    auto r = [&](long v) { return Scalar::from_integer(F5, v); };
    std::vector<Scalar> u{r(1), r(0), r(1)};
    CHECK(rational_roots(u) == std::vector<Scalar>{r(2), r(3)});
}
