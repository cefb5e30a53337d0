#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hironaka/errors.hpp"

namespace hironaka {

using Integer = mpz_class;
using Rational = mpq_class;

/// Coefficient field of the computation: the rationals, or a prime field F_p.
class FieldSpec {
public:
    enum class Kind { rationals, prime_field };

    static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }

    /// p must be a prime >= 2.
    static FieldSpec prime_field(Integer p);

    Kind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == Kind::rationals; }
    bool is_prime_field() const { return kind_ == Kind::prime_field; }

    /// Valid only for prime fields.
    const Integer& modulus() const;

    /// 0 for the rationals, p for F_p.
    Integer characteristic() const { return p_; }

    std::string to_string() const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }

private:
    FieldSpec(Kind kind, Integer p) : kind_(kind), p_(std::move(p)) {}

    Kind kind_;
    Integer p_;
};

/// An exact field element. Over Q the value is a reduced fraction with
/// positive denominator; over F_p it is the canonical residue in [0, p).
class Scalar {
public:
    Scalar(FieldSpec field, Rational value);

    static Scalar zero(const FieldSpec& f) { return Scalar(f, Rational(0)); }
    static Scalar one(const FieldSpec& f) { return Scalar(f, Rational(1)); }
    static Scalar from_integer(const FieldSpec& f, Integer n) {
        return Scalar(f, Rational(std::move(n)));
    }

    const FieldSpec& field() const { return field_; }
    const Rational& value() const { return value_; }

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(unsigned long e) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Canonical total order inside one field: numeric order of the value
    /// (residues compare as integers in [0, p)). Used wherever a
    /// deterministic enumeration of field elements is needed.
    static int cmp(const Scalar& a, const Scalar& b);
    friend bool operator<(const Scalar& a, const Scalar& b) { return cmp(a, b) < 0; }

    std::string to_string() const;

private:
    void reduce_();
    static void require_same_field_(const Scalar& a, const Scalar& b);

    FieldSpec field_;
    Rational value_;
};

/// All y in the field with y^e = x, sorted canonically. Over Q this is
/// complete by unique factorization; over F_p it enumerates the field and
/// is intended for small p.
std::vector<Scalar> nth_roots(const Scalar& x, unsigned e);

/// binom(n, k) reduced into the field. Requires k <= n.
Scalar binomial_in_field(unsigned long n, unsigned long k, const FieldSpec& f);

} // namespace hironaka
