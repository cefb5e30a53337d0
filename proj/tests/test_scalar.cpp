#include <doctest.h>

#include <hironaka/scalar.hpp>

using namespace hironaka;

namespace {
Scalar q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return Scalar(FieldSpec::rationals(), r);
}
} // namespace

TEST_CASE("field spec construction and identity") {
    FieldSpec Q = FieldSpec::rationals();
    CHECK(Q.is_rationals());
    CHECK(Q.characteristic() == 0);
    CHECK(Q.to_string() == "Q");

    FieldSpec F7 = FieldSpec::prime_field(7);
    CHECK(F7.is_prime_field());
    CHECK(F7.modulus() == 7);
    CHECK(F7.characteristic() == 7);
    CHECK(Q != F7);
    CHECK(F7 == FieldSpec::prime_field(7));
    CHECK(FieldSpec::prime_field(5) != F7);

    CHECK_THROWS_AS(FieldSpec::prime_field(1), precondition_error);
    CHECK_THROWS_AS(FieldSpec::prime_field(6), precondition_error);
    CHECK_THROWS_AS(FieldSpec::prime_field(-3), precondition_error);
    CHECK_THROWS_AS(Q.modulus(), precondition_error);
}

TEST_CASE("rational scalars reduce to canonical form") {
    CHECK(Scalar(FieldSpec::rationals(), Rational(2, 4)) == q(1, 2));
    CHECK(Scalar(FieldSpec::rationals(), Rational(-3, -6)) == q(1, 2));
    CHECK(q(0).is_zero());
    CHECK(q(1).is_one());
    CHECK(q(-3, 2).to_string() == "-3/2");
    CHECK(q(4, 2).to_string() == "2");
}

TEST_CASE("rational arithmetic") {
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
    CHECK(q(1, 2) - q(1, 3) == q(1, 6));
    CHECK(q(2, 3) * q(9, 4) == q(3, 2));
    CHECK(q(2, 3) / q(4, 3) == q(1, 2));
    CHECK(-q(5, 7) == q(-5, 7));
    CHECK(q(3, 4).inverse() == q(4, 3));
    CHECK(q(-2).pow(3) == q(-8));
    CHECK(q(-2).pow(0) == q(1));
    CHECK(q(1, 2).pow(4) == q(1, 16));

    CHECK_THROWS_AS(q(1) / q(0), precondition_error);
    CHECK_THROWS_AS(q(0).inverse(), precondition_error);
}

TEST_CASE("prime field scalars fold into [0, p)") {
    FieldSpec F7 = FieldSpec::prime_field(7);
    CHECK(Scalar::from_integer(F7, 10) == Scalar::from_integer(F7, 3));
    CHECK(Scalar::from_integer(F7, -1) == Scalar::from_integer(F7, 6));
    CHECK(Scalar::from_integer(F7, 14).is_zero());
    CHECK(Scalar(F7, Rational(1, 2)) == Scalar::from_integer(F7, 4));
    CHECK(Scalar(F7, Rational(3, 5)) == Scalar::from_integer(F7, 2));
    CHECK(Scalar::from_integer(F7, 12).to_string() == "5");

    CHECK_THROWS_AS(Scalar(F7, Rational(1, 7)), precondition_error);
    CHECK_THROWS_AS(Scalar(F7, Rational(3, 14)), precondition_error);
}

TEST_CASE("prime field arithmetic") {
    FieldSpec F5 = FieldSpec::prime_field(5);
    auto r = [&](long v) { return Scalar::from_integer(F5, v); };
    CHECK(r(3) + r(4) == r(2));
    CHECK(r(1) - r(3) == r(3));
    CHECK(r(2) * r(4) == r(3));
    CHECK(r(3) / r(2) == r(4));
    CHECK(r(2).inverse() == r(3));
    CHECK(r(2).pow(4) == r(1));
    CHECK(r(0).pow(0) == r(1));
    CHECK(-r(2) == r(3));
    CHECK_THROWS_AS(r(0).inverse(), precondition_error);
}

TEST_CASE("operations across fields are rejected") {
    FieldSpec F5 = FieldSpec::prime_field(5);
    Scalar a = q(1);
    Scalar b = Scalar::from_integer(F5, 1);
    CHECK_THROWS_AS(a + b, precondition_error);
    CHECK_THROWS_AS(a * b, precondition_error);
    CHECK(a != b);
}

TEST_CASE("canonical scalar order") {
    CHECK(Scalar::cmp(q(-1), q(1, 2)) < 0);
    CHECK(Scalar::cmp(q(1, 3), q(1, 2)) < 0);
    CHECK(Scalar::cmp(q(2), q(2)) == 0);
    CHECK(q(-5) < q(-4));

    FieldSpec F7 = FieldSpec::prime_field(7);
    CHECK(Scalar::from_integer(F7, 2) < Scalar::from_integer(F7, 6));
    CHECK(Scalar::from_integer(F7, -1) == Scalar::from_integer(F7, 6));
}

TEST_CASE("nth roots over the rationals") {
    auto roots = [&](long num, long den, unsigned e) { return nth_roots(q(num, den), e); };

    CHECK(roots(8, 1, 3) == std::vector<Scalar>{q(2)});
    CHECK(roots(-8, 1, 3) == std::vector<Scalar>{q(-2)});
    CHECK(roots(4, 1, 2) == std::vector<Scalar>{q(-2), q(2)});
    CHECK(roots(-4, 1, 2).empty());
    CHECK(roots(2, 1, 2).empty());
    CHECK(roots(8, 27, 3) == std::vector<Scalar>{q(2, 3)});
    CHECK(roots(9, 4, 2) == std::vector<Scalar>{q(-3, 2), q(3, 2)});
    CHECK(roots(0, 1, 4) == std::vector<Scalar>{q(0)});
    CHECK(roots(-7, 3, 1) == std::vector<Scalar>{q(-7, 3)});
    CHECK(roots(1, 1, 6) == std::vector<Scalar>{q(-1), q(1)});
}

TEST_CASE("nth roots over small prime fields") {
    FieldSpec F7 = FieldSpec::prime_field(7);
    auto r = [&](long v) { return Scalar::from_integer(F7, v); };

    CHECK(nth_roots(r(6), 3) == std::vector<Scalar>{r(3), r(5), r(6)});
    CHECK(nth_roots(r(1), 2) == std::vector<Scalar>{r(1), r(6)});
    CHECK(nth_roots(r(3), 2).empty());
    CHECK(nth_roots(r(0), 2) == std::vector<Scalar>{r(0)});
}

TEST_CASE("root enumeration refuses huge prime fields") {
    FieldSpec big = FieldSpec::prime_field(1048583);
    Scalar x = Scalar::from_integer(big, 2);
    CHECK_THROWS_AS(nth_roots(x, 2), precondition_error);
}

TEST_CASE("binomial coefficients reduced into the field") {
    FieldSpec Q = FieldSpec::rationals();
    CHECK(binomial_in_field(5, 2, Q) == q(10));
    CHECK(binomial_in_field(5, 0, Q) == q(1));
    CHECK(binomial_in_field(5, 5, Q) == q(1));

    FieldSpec F5 = FieldSpec::prime_field(5);
    CHECK(binomial_in_field(5, 2, F5).is_zero());
    CHECK(binomial_in_field(5, 1, F5).is_zero());
    CHECK(binomial_in_field(4, 2, F5) == Scalar::from_integer(F5, 1));
}
