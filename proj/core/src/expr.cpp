#include "hironaka/expr.hpp"

#include <cctype>
#include <cstdint>

namespace hironaka {

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const FieldSpec& field) : text_(text), field_(field) {}

    Poly parse() {
        Poly p = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

    Scalar parse_scalar_only() {
        skip_ws();
        bool negative = false;
        if (peek() == '-') {
            ++pos_;
            negative = true;
        }
        skip_ws();
        Scalar s = scalar();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return negative ? -s : s;
    }

private:
    [[noreturn]] void fail(const std::string& message) {
        throw parse_error(message, pos_ + 1);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_variable() const {
        char c = peek();
        return c == 'X' || c == 'Y' || c == 'Z';
    }

    Poly expression() {
        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        Poly acc = term();
        if (negative) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            Poly next = term();
            acc = c == '+' ? acc + next : acc - next;
        }
        return acc;
    }

    Poly term() {
        bool juxtaposable = false;
        Poly acc = factor(juxtaposable);
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                bool j = false;
                acc = acc * factor(j);
                juxtaposable = j;
            } else if (at_variable() && juxtaposable) {
                bool j = false;
                acc = acc * factor(j);
                juxtaposable = j;
            } else {
                break;
            }
        }
        return acc;
    }

    // juxtaposable reports whether the factor ended in a variable or a
    // closing parenthesis, the only positions after which an implicit
    // product with a following variable is allowed.
    Poly factor(bool& juxtaposable) {
        Poly base = primary(juxtaposable);
        for (;;) {
            skip_ws();
            if (peek() != '^') break;
            ++pos_;
            skip_ws();
            base = pow(base, exponent());
            juxtaposable = false;
        }
        return base;
    }

    Poly primary(bool& juxtaposable) {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly inner = expression();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            juxtaposable = true;
            return inner;
        }
        if (c == 'X' || c == 'Y' || c == 'Z') {
            ++pos_;
            juxtaposable = true;
            Var v = c == 'X' ? Var::X : c == 'Y' ? Var::Y : Var::Z;
            return Poly::variable(field_, v);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            juxtaposable = false;
            return Poly::constant(scalar());
        }
        fail("expected a scalar, a variable, or '('");
    }

    Scalar scalar() {
        Integer num = natural();
        skip_ws();
        if (peek() != '/') return Scalar(field_, Rational(num));
        if (field_.is_prime_field()) {
            fail("fraction literals are not allowed over " + field_.to_string());
        }
        ++pos_;
        skip_ws();
        std::size_t den_pos = pos_;
        Integer den = natural();
        if (den == 0) {
            pos_ = den_pos;
            fail("zero denominator");
        }
        Rational r(num, den);
        r.canonicalize();
        return Scalar(field_, r);
    }

    Integer natural() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            digits.push_back(text_[pos_]);
            ++pos_;
        }
        return Integer(digits, 10);
    }

    unsigned exponent() {
        std::size_t start = pos_;
        Integer value = natural();
        if (value > Integer(UINT32_MAX)) {
            pos_ = start;
            fail("exponent does not fit in 32 bits");
        }
        return static_cast<unsigned>(value.get_ui());
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    FieldSpec field_;
};

std::string monomial_text(const Exponent& e) {
    std::string out;
    auto append = [&](const char* name, unsigned exp) {
        if (exp == 0) return;
        if (!out.empty()) out += "*";
        out += name;
        if (exp > 1) {
            out += "^";
            out += std::to_string(exp);
        }
    };
    append("X", e.x);
    append("Y", e.y);
    append("Z", e.z);
    return out;
}

} // namespace

Poly parse_poly(std::string_view text, const FieldSpec& field) {
    return PolyParser(text, field).parse();
}

std::string print_canonical(const Poly& p) {
    if (p.is_zero()) return "0";

    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;

        bool negative = false;
        Scalar magnitude = c;
        if (p.field().is_rationals() && c.value() < 0) {
            negative = true;
            magnitude = -c;
        }

        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }

        std::string mono = monomial_text(e);
        if (mono.empty()) {
            out += magnitude.to_string();
        } else if (magnitude.is_one()) {
            out += mono;
        } else {
            out += magnitude.to_string();
            out += "*";
            out += mono;
        }
    }
    return out;
}

std::variant<Direction, CurveCenter> parse_center(std::string_view text,
                                                  const FieldSpec& field) {
    std::size_t begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string_view::npos) {
        throw parse_error("empty center", 1);
    }
    std::size_t end = text.find_last_not_of(" \t\r\n");
    std::string_view body = text.substr(begin, end - begin + 1);

    char kind = body[0];
    if ((kind != 'Q' && kind != 'M') || body.size() < 2 ||
        !std::isspace(static_cast<unsigned char>(body[1]))) {
        throw parse_error("center must start with 'Q ' or 'M '", begin + 1);
    }
    std::size_t rest_off = body.find_first_not_of(" \t", 1);
    std::string_view rest = body.substr(rest_off);

    if (kind == 'M') {
        return CurveCenter(parse_poly(rest, field));
    }

    std::size_t c1 = rest.find(':');
    std::size_t c2 = c1 == std::string_view::npos ? c1 : rest.find(':', c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos ||
        rest.find(':', c2 + 1) != std::string_view::npos) {
        throw parse_error("direction must have the form a:b:0", begin + rest_off + 1);
    }
    std::string_view p0 = rest.substr(0, c1);
    std::string_view p1 = rest.substr(c1 + 1, c2 - c1 - 1);
    std::string_view p2 = rest.substr(c2 + 1);

    if (p2 != "0") {
        throw parse_error("direction must end in :0 (points of the plane Z = 0)",
                          begin + rest_off + c2 + 2);
    }
    if (p0 == "0") {
        if (p1 != "1") {
            throw parse_error("the point at infinity is written 0:1:0",
                              begin + rest_off + c1 + 2);
        }
        return Direction::y_chart(field);
    }
    if (p0 != "1") {
        throw parse_error("direction must start with 1: or 0:", begin + rest_off + 1);
    }
    try {
        Scalar c = PolyParser(p1, field).parse_scalar_only();
        return Direction::x_chart(c);
    } catch (const parse_error& e) {
        throw parse_error(std::string("bad direction parameter: ") + e.what(),
                          begin + rest_off + c1 + 1 + e.position());
    }
}

std::vector<std::variant<Direction, CurveCenter>> parse_script(std::string_view text,
                                                               const FieldSpec& field) {
    std::vector<std::variant<Direction, CurveCenter>> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
            try {
                out.push_back(parse_center(line, field));
            } catch (const parse_error& e) {
                throw parse_error("line " + std::to_string(line_no) + ": " + e.what(),
                                  e.position());
            }
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return out;
}

} // namespace hironaka
