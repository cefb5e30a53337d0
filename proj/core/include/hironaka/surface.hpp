#pragma once

#include <vector>

#include "hironaka/polyring.hpp"

namespace hironaka {

/// An embedded surface germ in Weierstrass form:
///
///   F = Z^n + a_{n-1}(X,Y) Z^{n-1} + ... + a_0(X,Y),   order(F) = n.
///
/// F is monic in Z and n is simultaneously the Z-degree and the multiplicity
/// of the germ at the origin, which forces order(a_k) >= n - k for every k.
class WeierstrassSurface {
public:
    /// Validates the shape above; errors otherwise.
    static WeierstrassSurface from_poly(const Poly& p);

    const Poly& equation() const { return eq_; }
    const FieldSpec& field() const { return eq_.field(); }
    unsigned multiplicity() const { return n_; }

    /// The bivariate coefficient a_k of Z^k, for k <= n.
    Poly z_coefficient(unsigned k) const;

    /// a_0, ..., a_{n-1}.
    std::vector<Poly> z_profile() const;

    friend bool operator==(const WeierstrassSurface& a, const WeierstrassSurface& b) {
        return a.eq_ == b.eq_;
    }

private:
    WeierstrassSurface(Poly eq, unsigned n) : eq_(std::move(eq)), n_(n) {}

    Poly eq_;
    unsigned n_;
};

/// Coordinate change Z |-> Z + alpha with alpha a bivariate polynomial in
/// X, Y without constant term. Preserves the multiplicity.
WeierstrassSurface z_translate(const WeierstrassSurface& s, const Poly& alpha);

/// Kills the Z^{n-1} coefficient via Z |-> Z - a_{n-1}/n. Needs n invertible
/// in the field, i.e. characteristic not dividing n. Idempotent.
WeierstrassSurface tchirnhausen(const WeierstrassSurface& s);

/// Whether a_{n-1} = 0 already.
bool is_wt(const WeierstrassSurface& s);

} // namespace hironaka
