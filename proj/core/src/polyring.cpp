#include "hironaka/polyring.hpp"

#include <algorithm>
#include <set>

namespace hironaka {

Poly Poly::monomial(const Scalar& c, const Exponent& e) {
    Poly p(c.field());
    p.add_term(e, c);
    return p;
}

Scalar Poly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

unsigned Poly::order() const {
    if (terms_.empty()) {
        throw precondition_error("order of the zero polynomial");
    }
    unsigned best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        unsigned d = e.degree();
        if (first || d < best) {
            best = d;
            first = false;
        }
    }
    return best;
}

unsigned Poly::degree_in(Var v) const {
    unsigned best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, e.get(v));
    return best;
}

bool Poly::involves(Var v) const {
    for (const auto& [e, c] : terms_) {
        if (e.get(v) > 0) return true;
    }
    return false;
}

Poly& Poly::add_term(const Exponent& e, const Scalar& c) {
    if (c.field() != field_) {
        throw precondition_error("add_term: coefficient from " + c.field().to_string() +
                                 " into a polynomial over " + field_.to_string());
    }
    if (c.is_zero()) return *this;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

void Poly::require_same_field_(const Poly& a, const Poly& b) {
    if (a.field_ != b.field_) {
        throw precondition_error("polynomial arithmetic across fields: " +
                                 a.field_.to_string() + " vs " + b.field_.to_string());
    }
}

Poly Poly::operator-() const {
    Poly out(field_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly::require_same_field_(a, b);
    Poly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly::require_same_field_(a, b);
    Poly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly::require_same_field_(a, b);
    Poly out(a.field_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e{ea.x + eb.x, ea.y + eb.y, ea.z + eb.z};
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Poly operator*(const Scalar& c, const Poly& p) {
    if (c.field() != p.field()) {
        throw precondition_error("scalar-polynomial product across fields");
    }
    Poly out(p.field());
    if (c.is_zero()) return out;
    for (const auto& [e, pc] : p.terms()) out.add_term(e, c * pc);
    return out;
}

Poly pow(const Poly& p, unsigned e) {
    Poly out = Poly::constant(Scalar::one(p.field()));
    Poly base = p;
    while (e > 0) {
        if (e & 1u) out = out * base;
        base = base * base;
        e >>= 1u;
    }
    return out;
}

Poly substitute(const Poly& p, const std::map<Var, Poly>& assignment) {
    const FieldSpec& f = p.field();
    for (const auto& [v, q] : assignment) {
        if (q.field() != f) {
            throw precondition_error("substitute: image of " + std::string(var_name(v)) +
                                     " lives over a different field");
        }
    }

    // Power caches keyed by exponent, one per substituted variable.
    std::map<Var, std::map<unsigned, Poly>> cache;
    auto image_power = [&](Var v, unsigned e) -> const Poly& {
        auto& powers = cache[v];
        auto it = powers.find(e);
        if (it == powers.end()) {
            it = powers.emplace(e, pow(assignment.at(v), e)).first;
        }
        return it->second;
    };

    Poly out(f);
    for (const auto& [e, c] : p.terms()) {
        Poly term = Poly::constant(c);
        Exponent kept;
        for (Var v : {Var::X, Var::Y, Var::Z}) {
            unsigned ev = e.get(v);
            if (ev == 0) continue;
            if (assignment.count(v)) {
                term = term * image_power(v, ev);
            } else {
                kept.set(v, ev);
            }
        }
        if (kept.degree() > 0) {
            term = term * Poly::monomial(Scalar::one(f), kept);
        }
        out = out + term;
    }
    return out;
}

Poly divide_exact_power(const Poly& p, Var v, unsigned r) {
    if (r == 0) return p;
    Poly out(p.field());
    for (const auto& [e, c] : p.terms()) {
        unsigned ev = e.get(v);
        if (ev < r) {
            throw precondition_error("divide_exact_power: " + std::string(var_name(v)) + "^" +
                                     std::to_string(r) + " does not divide the polynomial");
        }
        Exponent q = e;
        q.set(v, ev - r);
        out.add_term(q, c);
    }
    return out;
}

namespace {

bool exponent_divides(const Exponent& g, const Exponent& a) {
    return g.x <= a.x && g.y <= a.y && g.z <= a.z;
}

} // namespace

std::optional<Poly> divide_exact(const Poly& a, const Poly& g) {
    if (g.is_zero()) {
        throw precondition_error("divide_exact: zero divisor");
    }
    if (a.field() != g.field()) {
        throw precondition_error("divide_exact: operands over different fields");
    }

    const Exponent& lead_e = g.terms().rbegin()->first;
    const Scalar& lead_c = g.terms().rbegin()->second;

    Poly rem = a;
    Poly quot(a.field());
    while (!rem.is_zero()) {
        const Exponent& re = rem.terms().rbegin()->first;
        const Scalar& rc = rem.terms().rbegin()->second;
        if (!exponent_divides(lead_e, re)) return std::nullopt;
        Exponent qe{re.x - lead_e.x, re.y - lead_e.y, re.z - lead_e.z};
        Scalar qc = rc / lead_c;
        quot.add_term(qe, qc);
        rem = rem - Poly::monomial(qc, qe) * g;
    }
    return quot;
}

bool divides_power(const Poly& g, unsigned r, const Poly& a) {
    if (g.is_zero()) {
        throw precondition_error("divides_power: zero divisor");
    }
    Poly cur = a;
    for (unsigned i = 0; i < r; ++i) {
        if (cur.is_zero()) return true;
        auto q = divide_exact(cur, g);
        if (!q) return false;
        cur = *q;
    }
    return true;
}

std::vector<Scalar> univariate_view(const Poly& a, Var v) {
    std::vector<Scalar> out;
    if (a.is_zero()) return out;
    out.assign(a.degree_in(v) + 1, Scalar::zero(a.field()));
    for (const auto& [e, c] : a.terms()) {
        if (e.degree() != e.get(v)) {
            throw precondition_error("univariate_view: polynomial involves another variable");
        }
        out[e.get(v)] = c;
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

unsigned root_multiplicity(const std::vector<Scalar>& u, const Scalar& c) {
    std::vector<Scalar> cur = u;
    while (!cur.empty() && cur.back().is_zero()) cur.pop_back();
    if (cur.empty()) {
        throw precondition_error("root_multiplicity of the zero polynomial");
    }

    unsigned mult = 0;
    while (cur.size() > 1 || (cur.size() == 1 && mult == 0)) {
        // Synthetic division of cur by (t - c): b_i = a_{i+1} + c * b_{i+1}.
        std::vector<Scalar> q(cur.size() - 1, Scalar::zero(c.field()));
        Scalar carry = Scalar::zero(c.field());
        for (std::size_t i = cur.size(); i-- > 1;) {
            carry = cur[i] + c * carry;
            q[i - 1] = carry;
        }
        Scalar remainder = cur[0] + c * carry;
        if (!remainder.is_zero()) break;
        ++mult;
        cur = std::move(q);
        while (!cur.empty() && cur.back().is_zero()) cur.pop_back();
        if (cur.empty()) break;
        if (cur.size() == 1) {
            // Nonzero constant left: no further factors of (t - c).
            break;
        }
    }
    return mult;
}

namespace {

std::vector<Scalar> sorted_unique(std::vector<Scalar> v) {
    std::sort(v.begin(), v.end(),
              [](const Scalar& a, const Scalar& b) { return Scalar::cmp(a, b) < 0; });
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

Scalar evaluate(const std::vector<Scalar>& u, const Scalar& c) {
    Scalar acc = Scalar::zero(c.field());
    for (std::size_t i = u.size(); i-- > 0;) acc = acc * c + u[i];
    return acc;
}

std::vector<Integer> positive_divisors(const Integer& n) {
    Integer a = abs(n);
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            Integer q = a / d;
            if (q != d) out.push_back(q);
        }
    }
    return out;
}

} // namespace

std::vector<Scalar> rational_roots(const std::vector<Scalar>& u) {
    std::vector<Scalar> cur = u;
    while (!cur.empty() && cur.back().is_zero()) cur.pop_back();
    if (cur.empty()) {
        throw precondition_error("rational_roots of the zero polynomial");
    }
    const FieldSpec f = cur[0].field();

    if (f.is_prime_field()) {
        if (f.modulus() > (1 << 20)) {
            throw precondition_error("rational_roots: prime field too large for enumeration");
        }
        std::vector<Scalar> out;
        for (Integer r = 0; r < f.modulus(); ++r) {
            Scalar c(f, Rational(r));
            if (evaluate(cur, c).is_zero()) out.push_back(c);
        }
        return out;
    }

    std::vector<Scalar> out;
    std::size_t shift = 0;
    while (shift < cur.size() && cur[shift].is_zero()) ++shift;
    if (shift > 0) {
        out.push_back(Scalar::zero(f));
        cur.erase(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(shift));
    }
    if (cur.size() <= 1) return sorted_unique(std::move(out));

    // Clear denominators to a primitive integer polynomial.
    Integer lcm_den = 1;
    for (const Scalar& s : cur) {
        Integer den = s.value().get_den();
        Integer g = gcd(lcm_den, den);
        lcm_den = lcm_den / g * den;
    }
    std::vector<Integer> zu;
    zu.reserve(cur.size());
    for (const Scalar& s : cur) {
        Rational v = s.value() * Rational(lcm_den);
        v.canonicalize();
        zu.push_back(v.get_num());
    }

    const Integer& a0 = zu.front();
    const Integer& an = zu.back();
    for (const Integer& p : positive_divisors(a0)) {
        for (const Integer& q : positive_divisors(an)) {
            if (gcd(p, q) != 1) continue;
            for (int sign : {1, -1}) {
                Rational cand(sign * p, q);
                cand.canonicalize();
                Scalar c(f, cand);
                if (evaluate(cur, c).is_zero()) out.push_back(c);
            }
        }
    }
    return sorted_unique(std::move(out));
}

} // namespace hironaka
