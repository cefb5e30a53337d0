#include "hironaka/scalar.hpp"

#include <utility>

namespace hironaka {

FieldSpec FieldSpec::prime_field(Integer p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) {
        throw precondition_error("prime_field: modulus " + p.get_str() + " is not prime");
    }
    return FieldSpec(Kind::prime_field, std::move(p));
}

const Integer& FieldSpec::modulus() const {
    if (!is_prime_field()) {
        throw precondition_error("modulus: field is the rationals");
    }
    return p_;
}

std::string FieldSpec::to_string() const {
    return is_rationals() ? "Q" : "F_" + p_.get_str();
}

Scalar::Scalar(FieldSpec field, Rational value)
    : field_(std::move(field)), value_(std::move(value)) {
    reduce_();
}

void Scalar::reduce_() {
    value_.canonicalize();
    if (!field_.is_prime_field()) return;

    const Integer& p = field_.modulus();
    Integer num = value_.get_num();
    Integer den = value_.get_den();
    if (den != 1) {
        // Fold the denominator in as a field inverse.
        Integer den_mod;
        mpz_fdiv_r(den_mod.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
        Integer inv;
        if (mpz_invert(inv.get_mpz_t(), den_mod.get_mpz_t(), p.get_mpz_t()) == 0) {
            throw precondition_error("scalar: denominator vanishes in " + field_.to_string());
        }
        num *= inv;
    }
    Integer res;
    mpz_fdiv_r(res.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    value_ = Rational(res);
}

void Scalar::require_same_field_(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) {
        throw precondition_error("scalar arithmetic across fields: " + a.field_.to_string() +
                                 " vs " + b.field_.to_string());
    }
}

Scalar Scalar::operator-() const {
    return Scalar(field_, -value_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) {
        throw precondition_error("inverse of zero in " + field_.to_string());
    }
    return Scalar(field_, 1 / value_);
}

Scalar Scalar::pow(unsigned long e) const {
    if (field_.is_prime_field()) {
        Integer base = value_.get_num();
        Integer out;
        mpz_powm_ui(out.get_mpz_t(), base.get_mpz_t(), e, field_.modulus().get_mpz_t());
        return Scalar(field_, Rational(out));
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den().get_mpz_t(), e);
    Rational r(num, den);
    r.canonicalize();
    return Scalar(field_, r);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar::require_same_field_(a, b);
    return Scalar(a.field_, a.value_ + b.value_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar::require_same_field_(a, b);
    return Scalar(a.field_, a.value_ - b.value_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar::require_same_field_(a, b);
    return Scalar(a.field_, a.value_ * b.value_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    return a * b.inverse();
}

int Scalar::cmp(const Scalar& a, const Scalar& b) {
    require_same_field_(a, b);
    return ::cmp(a.value_, b.value_);
}

std::string Scalar::to_string() const {
    return value_.get_str();
}

namespace {

// Exhaustive search in F_p stays practical only for small moduli.
constexpr unsigned long kEnumerationLimit = 1u << 20;

void require_small_field(const FieldSpec& f, const char* who) {
    if (f.modulus() > kEnumerationLimit) {
        throw precondition_error(std::string(who) + ": prime field too large for enumeration");
    }
}

} // namespace

std::vector<Scalar> nth_roots(const Scalar& x, unsigned e) {
    if (e == 0) {
        throw precondition_error("nth_roots: the exponent must be positive");
    }
    const FieldSpec& f = x.field();
    std::vector<Scalar> out;

    if (f.is_rationals()) {
        if (x.is_zero()) {
            out.push_back(Scalar::zero(f));
            return out;
        }
        const Rational& v = x.value();
        Integer num = v.get_num();
        Integer den = v.get_den();
        bool negative = num < 0;
        Integer anum = abs(num);

        Integer root_num, root_den;
        bool exact_num = mpz_root(root_num.get_mpz_t(), anum.get_mpz_t(), e) != 0;
        bool exact_den = mpz_root(root_den.get_mpz_t(), den.get_mpz_t(), e) != 0;
        if (!exact_num || !exact_den) return out;

        Rational r(root_num, root_den);
        r.canonicalize();
        if (e % 2 == 1) {
            out.push_back(Scalar(f, negative ? -r : r));
        } else {
            if (negative) return out;
            out.push_back(Scalar(f, -r));
            out.push_back(Scalar(f, r));
        }
        return out;
    }

    require_small_field(f, "nth_roots");
    const Integer& p = f.modulus();
    const Integer target = x.value().get_num();
    for (Integer y = 0; y < p; ++y) {
        Integer t;
        mpz_powm_ui(t.get_mpz_t(), y.get_mpz_t(), e, p.get_mpz_t());
        if (t == target) out.push_back(Scalar(f, Rational(y)));
    }
    return out;
}

Scalar binomial_in_field(unsigned long n, unsigned long k, const FieldSpec& f) {
    if (k > n) {
        throw precondition_error("binomial_in_field: k exceeds n");
    }
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Scalar(f, Rational(b));
}

} // namespace hironaka
