#include "traceideal/parser.hpp"

#include <cctype>
#include <sstream>

namespace traceideal {

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at column " + std::to_string(pos + 1) + " in '" + s + "'");
    }

    std::string integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return s.substr(start, pos - start);
    }

    std::string name() {
        skip_ws();
        size_t start = pos;
        if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
            fail("expected name");
        ++pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
};

// coefficient numeral: "3", "3/2"
mpq_class parse_numeral(Cursor& c) {
    std::string num = c.integer();
    if (c.accept('/')) {
        std::string den = c.integer();
        mpq_class q(num + "/" + den);
        q.canonicalize();
        return q;
    }
    return mpq_class(num);
}

// one term: [coeff][*][i][*][var[^exp]]... (any atom order, '*' optional)
Polynomial parse_term(Cursor& c, const RingPtr& ring) {
    const FieldSpec& f = ring->field();
    FieldElement coef = FieldElement::one(f);
    Monomial mon = Monomial::one(ring->nvars());
    bool any = false;
    for (;;) {
        char ch = c.peek();
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            coef = coef * FieldElement::from_mpq(f, parse_numeral(c));
            any = true;
        } else if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::string id = c.name();
            if (id == "i") {
                if (!f.has_imaginary_unit())
                    throw ParseError("imaginary unit 'i' requires field QQi or F_p with p = 1 mod 4 (field is " +
                                     f.str() + ")");
                coef = coef * FieldElement::imaginary_unit(f);
            } else {
                int idx = ring->var_index(id);
                if (idx < 0) c.fail("unknown variable '" + id + "'");
                int exp = 1;
                if (c.accept('^')) exp = std::stoi(c.integer());
                mon.e[idx] = static_cast<uint16_t>(mon.e[idx] + exp);
            }
            any = true;
        } else {
            break;
        }
        c.accept('*');
    }
    if (!any) c.fail("expected term");
    return Polynomial::term(ring, coef, mon);
}

Polynomial parse_poly_expr(Cursor& c, const RingPtr& ring) {
    Polynomial p = Polynomial::zero(ring);
    bool first = true;
    for (;;) {
        bool neg = false;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            neg = ch == '-';
            ++c.pos;
        } else if (!first) {
            break;
        }
        Polynomial t = parse_term(c, ring);
        p = neg ? p - t : p + t;
        first = false;
    }
    return p;
}

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    Cursor c{text};
    Polynomial p = parse_poly_expr(c, ring);
    if (!c.done()) c.fail("trailing input");
    return p;
}

std::vector<Polynomial> parse_generators(const RingPtr& ring, const std::string& text) {
    Cursor c{text};
    if (!c.accept('(')) c.fail("expected '('");
    std::vector<Polynomial> gens;
    for (;;) {
        gens.push_back(parse_poly_expr(c, ring));
        if (c.accept(',')) continue;
        break;
    }
    if (!c.accept(')')) c.fail("expected ')'");
    if (!c.done()) c.fail("trailing input");
    return gens;
}

std::vector<std::vector<Polynomial>> parse_matrix(const RingPtr& ring, const std::string& text) {
    Cursor c{text};
    if (!c.accept('[')) c.fail("expected '['");
    std::vector<std::vector<Polynomial>> rows;
    for (;;) {
        if (!c.accept('[')) c.fail("expected '[' starting a row");
        std::vector<Polynomial> row;
        for (;;) {
            row.push_back(parse_poly_expr(c, ring));
            if (c.accept(',')) continue;
            break;
        }
        if (!c.accept(']')) c.fail("expected ']' ending a row");
        rows.push_back(std::move(row));
        if (c.accept(';')) continue;
        break;
    }
    if (!c.accept(']')) c.fail("expected final ']'");
    if (!c.done()) c.fail("trailing input");
    size_t w = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != w) throw ParseError("ragged matrix rows");
    return rows;
}

RingPtr parse_ring(const std::string& spec, MonomialOrder order) {
    // vars ; field ; defining polys (comma separated, may be empty)
    size_t a = spec.find(';');
    size_t b = a == std::string::npos ? std::string::npos : spec.find(';', a + 1);
    if (a == std::string::npos)
        throw ParseError("ring spec must be '<vars>;<field>[;<defining polys>]', got '" + spec + "'");
    std::string vars_part = spec.substr(0, a);
    std::string field_part = b == std::string::npos ? spec.substr(a + 1) : spec.substr(a + 1, b - a - 1);
    std::string q_part = b == std::string::npos ? "" : spec.substr(b + 1);

    auto trim = [](std::string s) {
        size_t x = s.find_first_not_of(" \t");
        size_t y = s.find_last_not_of(" \t");
        return x == std::string::npos ? std::string() : s.substr(x, y - x + 1);
    };

    std::vector<std::string> vars;
    std::istringstream vs(vars_part);
    std::string item;
    while (std::getline(vs, item, ',')) {
        item = trim(item);
        if (!item.empty()) vars.push_back(item);
    }
    if (vars.empty()) throw ParseError("ring spec has no variables: '" + spec + "'");

    FieldSpec field = FieldSpec::parse(trim(field_part));
    RingPtr amb = Ring::make(vars, field, order);

    std::vector<Polynomial> qgens;
    std::istringstream qs(q_part);
    while (std::getline(qs, item, ',')) {
        item = trim(item);
        if (!item.empty()) qgens.push_back(parse_polynomial(amb, item));
    }
    return qgens.empty() ? amb : Ring::quotient(amb, std::move(qgens));
}

}  // namespace traceideal
