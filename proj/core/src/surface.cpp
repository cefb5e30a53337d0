#include "hironaka/surface.hpp"

namespace hironaka {

WeierstrassSurface WeierstrassSurface::from_poly(const Poly& p) {
    if (p.is_zero()) {
        throw precondition_error("surface: the zero polynomial");
    }
    unsigned n = p.degree_in(Var::Z);
    if (n == 0) {
        throw precondition_error("surface: equation does not involve Z");
    }
    Exponent zn;
    zn.set(Var::Z, n);
    if (p.coefficient(zn) != Scalar::one(p.field()) || p.terms().rbegin()->first != zn) {
        throw precondition_error("surface: equation is not monic in Z with leading term Z^" +
                                 std::to_string(n));
    }
    if (p.order() != n) {
        throw precondition_error("surface: multiplicity " + std::to_string(p.order()) +
                                 " differs from the Z-degree " + std::to_string(n));
    }
    return WeierstrassSurface(p, n);
}

Poly WeierstrassSurface::z_coefficient(unsigned k) const {
    if (k > n_) {
        throw precondition_error("z_coefficient: index exceeds the multiplicity");
    }
    Poly out(field());
    for (const auto& [e, c] : eq_.terms()) {
        if (e.z != k) continue;
        Exponent b{e.x, e.y, 0};
        out.add_term(b, c);
    }
    return out;
}

std::vector<Poly> WeierstrassSurface::z_profile() const {
    std::vector<Poly> out;
    out.reserve(n_);
    for (unsigned k = 0; k < n_; ++k) out.push_back(z_coefficient(k));
    return out;
}

WeierstrassSurface z_translate(const WeierstrassSurface& s, const Poly& alpha) {
    if (alpha.field() != s.field()) {
        throw precondition_error("z_translate: shift over a different field");
    }
    if (alpha.involves(Var::Z)) {
        throw precondition_error("z_translate: shift involves Z");
    }
    if (!alpha.is_zero() && alpha.order() == 0) {
        throw precondition_error("z_translate: shift has a constant term");
    }
    Poly z = Poly::variable(s.field(), Var::Z);
    Poly image = substitute(s.equation(), {{Var::Z, z + alpha}});
    return WeierstrassSurface::from_poly(image);
}

WeierstrassSurface tchirnhausen(const WeierstrassSurface& s) {
    unsigned n = s.multiplicity();
    Scalar n_in_field = Scalar::from_integer(s.field(), n);
    if (n_in_field.is_zero()) {
        throw precondition_error("tchirnhausen: characteristic divides the multiplicity " +
                                 std::to_string(n));
    }
    Poly shift = -(n_in_field.inverse() * s.z_coefficient(n - 1));
    return z_translate(s, shift);
}

bool is_wt(const WeierstrassSurface& s) {
    return s.z_coefficient(s.multiplicity() - 1).is_zero();
}

} // namespace hironaka
