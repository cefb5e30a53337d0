#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hironaka/scalar.hpp"

namespace hironaka {

enum class Var { X = 0, Y = 1, Z = 2 };

constexpr const char* var_name(Var v) {
    switch (v) {
        case Var::X: return "X";
        case Var::Y: return "Y";
        case Var::Z: return "Z";
    }
    return "?";
}

struct Exponent {
    unsigned x = 0;
    unsigned y = 0;
    unsigned z = 0;

    unsigned degree() const { return x + y + z; }

    unsigned get(Var v) const {
        switch (v) {
            case Var::X: return x;
            case Var::Y: return y;
            case Var::Z: return z;
        }
        return 0;
    }

    void set(Var v, unsigned e) {
        switch (v) {
            case Var::X: x = e; break;
            case Var::Y: y = e; break;
            case Var::Z: z = e; break;
        }
    }

    friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// The canonical term order: lexicographic with Z > Y > X, ascending.
/// Printing walks it backwards, so equations come out Z-major, the way a
/// Weierstrass form is usually written.
struct TermOrder {
    bool operator()(const Exponent& a, const Exponent& b) const {
        if (a.z != b.z) return a.z < b.z;
        if (a.y != b.y) return a.y < b.y;
        return a.x < b.x;
    }
};

/// Sparse polynomial in X, Y, Z over a fixed field. The zero polynomial
/// keeps its field, so every value knows where it lives.
class Poly {
public:
    using TermMap = std::map<Exponent, Scalar, TermOrder>;

    explicit Poly(FieldSpec field) : field_(std::move(field)) {}

    static Poly zero(const FieldSpec& f) { return Poly(f); }
    static Poly constant(const Scalar& c) { return monomial(c, Exponent{}); }
    static Poly variable(const FieldSpec& f, Var v) {
        Exponent e;
        e.set(v, 1);
        return monomial(Scalar::one(f), e);
    }
    static Poly monomial(const Scalar& c, const Exponent& e);

    const FieldSpec& field() const { return field_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient at e; zero if the term is absent.
    Scalar coefficient(const Exponent& e) const;

    /// Minimal total degree of a term (the multiplicity of the germ at the
    /// origin). Errors on the zero polynomial.
    unsigned order() const;

    /// Largest exponent of v across all terms; 0 for the zero polynomial.
    unsigned degree_in(Var v) const;

    bool involves(Var v) const;

    /// Adds c * X^.. Y^.. Z^.. in place, dropping the term if it cancels.
    Poly& add_term(const Exponent& e, const Scalar& c);

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Scalar& c, const Poly& p);

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.field_ == b.field_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    static void require_same_field_(const Poly& a, const Poly& b);

    FieldSpec field_;
    TermMap terms_;
};

Poly pow(const Poly& p, unsigned e);

/// Simultaneous substitution: a variable absent from the map is kept.
/// Assigned polynomials must live over the same field; the result is the
/// image under the induced ring homomorphism.
Poly substitute(const Poly& p, const std::map<Var, Poly>& assignment);

/// Divides by v^r, requiring exactness. Errors when some term has a
/// v-exponent below r.
Poly divide_exact_power(const Poly& p, Var v, unsigned r);

/// Quotient of an exact division A / G, or nullopt when G does not divide A.
/// Long division by the single divisor G under the canonical term order;
/// for an exact-divisibility verdict any admissible order agrees.
std::optional<Poly> divide_exact(const Poly& a, const Poly& g);

/// Does G^r divide A? G must be nonzero. The zero polynomial is divisible
/// by everything.
bool divides_power(const Poly& g, unsigned r, const Poly& a);

/// Dense coefficient list of a polynomial involving only v, lowest degree
/// first, trailing zeros trimmed. The zero polynomial gives the empty list.
std::vector<Scalar> univariate_view(const Poly& a, Var v);

/// Multiplicity of c as a root of u (coefficients lowest-first), computed by
/// repeated synthetic division; no derivatives, so any characteristic works.
/// u must not be identically zero.
unsigned root_multiplicity(const std::vector<Scalar>& u, const Scalar& c);

/// All roots of u lying in the coefficient field, sorted canonically.
/// Over Q: rational root theorem on the primitive integer form, candidates
/// verified by evaluation. Over F_p: exhaustive scan. u must not be
/// identically zero.
std::vector<Scalar> rational_roots(const std::vector<Scalar>& u);

} // namespace hironaka
