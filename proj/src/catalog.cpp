#include "traceideal/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "traceideal/parser.hpp"

#ifndef TRACEIDEAL_SOURCE_CATALOG
#define TRACEIDEAL_SOURCE_CATALOG ""
#endif

namespace traceideal {

// --------------------------------------------------------------------------
// parameter expressions

struct ParamExpr::Node {
    enum class Op { Num, Var, Add, Sub, Mul, DivExact, DivFloor, Mod, Min, Max, Neg } op;
    long value = 0;
    std::string name;
    std::shared_ptr<const Node> a, b;
};

namespace {

struct ECursor {
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool accept_str(const std::string& w) {
        skip();
        if (s.compare(pos, w.size(), w) == 0) {
            pos += w.size();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at column " + std::to_string(pos + 1) + " in '" + s + "'");
    }
};

using NodePtr = std::shared_ptr<const ParamExpr::Node>;

NodePtr mknode(ParamExpr::Node n) {
    return std::make_shared<const ParamExpr::Node>(std::move(n));
}

NodePtr parse_expr(ECursor& c);

NodePtr parse_atom(ECursor& c) {
    char ch = c.peek();
    if (ch == '(') {
        ++c.pos;
        NodePtr e = parse_expr(c);
        if (!c.accept(')')) c.fail("expected ')'");
        return e;
    }
    if (ch == '-') {
        ++c.pos;
        ParamExpr::Node n{ParamExpr::Node::Op::Neg};
        n.a = parse_atom(c);
        return mknode(std::move(n));
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
        size_t start = c.pos;
        while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
        ParamExpr::Node n{ParamExpr::Node::Op::Num};
        n.value = std::stol(c.s.substr(start, c.pos - start));
        return mknode(std::move(n));
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
        size_t start = c.pos;
        while (c.pos < c.s.size() &&
               (std::isalnum(static_cast<unsigned char>(c.s[c.pos])) || c.s[c.pos] == '_'))
            ++c.pos;
        std::string id = c.s.substr(start, c.pos - start);
        if (id == "min" || id == "max") {
            if (!c.accept('(')) c.fail("expected '(' after " + id);
            ParamExpr::Node n{id == "min" ? ParamExpr::Node::Op::Min : ParamExpr::Node::Op::Max};
            n.a = parse_expr(c);
            if (!c.accept(',')) c.fail("expected ','");
            n.b = parse_expr(c);
            if (!c.accept(')')) c.fail("expected ')'");
            return mknode(std::move(n));
        }
        ParamExpr::Node n{ParamExpr::Node::Op::Var};
        n.name = id;
        return mknode(std::move(n));
    }
    c.fail("expected expression");
}

NodePtr parse_product(ECursor& c) {
    NodePtr lhs = parse_atom(c);
    for (;;) {
        ParamExpr::Node::Op op;
        if (c.accept_str("//"))
            op = ParamExpr::Node::Op::DivFloor;
        else if (c.accept('*'))
            op = ParamExpr::Node::Op::Mul;
        else if (c.accept('/'))
            op = ParamExpr::Node::Op::DivExact;
        else if (c.accept('%'))
            op = ParamExpr::Node::Op::Mod;
        else
            break;
        ParamExpr::Node n{op};
        n.a = lhs;
        n.b = parse_atom(c);
        lhs = mknode(std::move(n));
    }
    return lhs;
}

NodePtr parse_expr(ECursor& c) {
    NodePtr lhs = parse_product(c);
    for (;;) {
        ParamExpr::Node::Op op;
        if (c.accept('+'))
            op = ParamExpr::Node::Op::Add;
        else if (c.accept('-'))
            op = ParamExpr::Node::Op::Sub;
        else
            break;
        ParamExpr::Node n{op};
        n.a = lhs;
        n.b = parse_product(c);
        lhs = mknode(std::move(n));
    }
    return lhs;
}

long eval_node(const ParamExpr::Node& n, const std::map<std::string, long>& env) {
    using Op = ParamExpr::Node::Op;
    switch (n.op) {
        case Op::Num: return n.value;
        case Op::Var: {
            auto it = env.find(n.name);
            if (it == env.end()) throw DomainError("unbound parameter '" + n.name + "'");
            return it->second;
        }
        case Op::Neg: return -eval_node(*n.a, env);
        case Op::Add: return eval_node(*n.a, env) + eval_node(*n.b, env);
        case Op::Sub: return eval_node(*n.a, env) - eval_node(*n.b, env);
        case Op::Mul: return eval_node(*n.a, env) * eval_node(*n.b, env);
        case Op::DivExact: {
            long a = eval_node(*n.a, env), b = eval_node(*n.b, env);
            if (b == 0 || a % b != 0)
                throw DomainError("inexact division " + std::to_string(a) + "/" + std::to_string(b));
            return a / b;
        }
        case Op::DivFloor: {
            long a = eval_node(*n.a, env), b = eval_node(*n.b, env);
            if (b == 0) throw DomainError("division by zero");
            long q = a / b;
            if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
            return q;
        }
        case Op::Mod: {
            long a = eval_node(*n.a, env), b = eval_node(*n.b, env);
            if (b == 0) throw DomainError("modulo by zero");
            long r = a % b;
            if (r < 0) r += std::abs(b);
            return r;
        }
        case Op::Min: return std::min(eval_node(*n.a, env), eval_node(*n.b, env));
        case Op::Max: return std::max(eval_node(*n.a, env), eval_node(*n.b, env));
    }
    throw Error("internal: bad expression node");
}

}  // namespace

ParamExpr ParamExpr::parse(const std::string& text) {
    ECursor c{text};
    ParamExpr e;
    e.root_ = parse_expr(c);
    c.skip();
    if (c.pos != text.size()) c.fail("trailing input in expression");
    e.text_ = text;
    return e;
}

long ParamExpr::eval(const std::map<std::string, long>& env) const {
    if (!root_) throw Error("internal: empty expression");
    return eval_node(*root_, env);
}

ParamCond ParamCond::parse(const std::string& text) {
    ParamCond cond;
    cond.text_ = text;
    std::string t = text;
    size_t start = 0;
    std::vector<std::string> parts;
    for (;;) {
        size_t p = t.find(" and ", start);
        if (p == std::string::npos) {
            parts.push_back(t.substr(start));
            break;
        }
        parts.push_back(t.substr(start, p - start));
        start = p + 5;
    }
    for (const auto& part : parts) {
        if (part.find_first_not_of(" \t") == std::string::npos) continue;
        static const char* ops[] = {"==", "!=", "<=", ">=", "<", ">"};
        size_t opos = std::string::npos;
        std::string op;
        for (const char* o : ops) {
            size_t p = part.find(o);
            if (p != std::string::npos && (opos == std::string::npos || p < opos)) {
                opos = p;
                op = o;
            }
        }
        if (opos == std::string::npos)
            throw ParseError("condition without comparison: '" + part + "'");
        Clause cl{ParamExpr::parse(part.substr(0, opos)),
                  ParamExpr::parse(part.substr(opos + op.size())), op};
        cond.clauses_.push_back(std::move(cl));
    }
    return cond;
}

bool ParamCond::eval(const std::map<std::string, long>& env) const {
    for (const auto& cl : clauses_) {
        long a = cl.lhs.eval(env), b = cl.rhs.eval(env);
        bool ok = cl.op == "==" ? a == b
                : cl.op == "!=" ? a != b
                : cl.op == "<=" ? a <= b
                : cl.op == ">=" ? a >= b
                : cl.op == "<"  ? a < b
                                : a > b;
        if (!ok) return false;
    }
    return true;
}

// --------------------------------------------------------------------------
// template polynomials

TemplatePoly TemplatePoly::parse(const std::string& text) {
    TemplatePoly tp;
    tp.text_ = text;
    ECursor c{text};
    bool first = true;
    for (;;) {
        c.skip();
        if (c.pos >= text.size()) {
            if (first) throw ParseError("empty polynomial template");
            break;
        }
        TTerm term;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            term.negative = ch == '-';
            ++c.pos;
        } else if (!first) {
            c.fail("expected '+' or '-'");
        }
        bool any = false;
        for (;;) {
            ch = c.peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                size_t start = c.pos;
                while (c.pos < text.size() && std::isdigit(static_cast<unsigned char>(text[c.pos])))
                    ++c.pos;
                mpq_class num(text.substr(start, c.pos - start));
                if (c.accept('/')) {
                    size_t dstart = c.pos;
                    while (c.pos < text.size() &&
                           std::isdigit(static_cast<unsigned char>(text[c.pos])))
                        ++c.pos;
                    if (dstart == c.pos) c.fail("expected denominator");
                    num /= mpq_class(text.substr(dstart, c.pos - dstart));
                }
                term.coef *= num;
                any = true;
            } else if (std::isalpha(static_cast<unsigned char>(ch))) {
                size_t start = c.pos;
                while (c.pos < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[c.pos])) || text[c.pos] == '_'))
                    ++c.pos;
                std::string id = text.substr(start, c.pos - start);
                if (id == "i") {
                    term.has_i = !term.has_i;  // i*i folds via coef sign below
                    if (!term.has_i) term.coef = -term.coef;
                } else {
                    ParamExpr exp = ParamExpr::parse("1");
                    if (c.accept('^')) {
                        auto scan_group = [&] {
                            size_t depth = 1;
                            ++c.pos;  // past '('
                            while (c.pos < text.size() && depth) {
                                if (text[c.pos] == '(') ++depth;
                                if (text[c.pos] == ')') --depth;
                                ++c.pos;
                            }
                            if (depth) c.fail("unbalanced '(' in exponent");
                        };
                        size_t estart = c.pos;
                        if (c.peek() == '(') {
                            scan_group();
                            exp = ParamExpr::parse(text.substr(estart + 1, c.pos - 2 - estart));
                        } else {
                            // name or number, optionally a min(...)/max(...) call
                            while (c.pos < text.size() &&
                                   (std::isalnum(static_cast<unsigned char>(text[c.pos])) ||
                                    text[c.pos] == '_'))
                                ++c.pos;
                            if (estart == c.pos) c.fail("expected exponent");
                            if (c.pos < text.size() && text[c.pos] == '(') scan_group();
                            exp = ParamExpr::parse(text.substr(estart, c.pos - estart));
                        }
                    }
                    term.powers.emplace_back(id, std::move(exp));
                }
                any = true;
            } else {
                break;
            }
            c.accept('*');
        }
        if (!any) c.fail("expected term");
        tp.terms_.push_back(std::move(term));
        first = false;
    }
    return tp;
}

Polynomial TemplatePoly::instantiate(const RingPtr& ring,
                                     const std::map<std::string, long>& env) const {
    Polynomial result = Polynomial::zero(ring);
    const FieldSpec& f = ring->field();
    for (const auto& t : terms_) {
        FieldElement c = FieldElement::from_mpq(f, t.negative ? -t.coef : t.coef);
        if (t.has_i) c = c * FieldElement::imaginary_unit(f);
        Monomial mon = Monomial::one(ring->nvars());
        for (const auto& [var, expr] : t.powers) {
            long e = expr.eval(env);
            if (e < 0)
                throw DomainError("negative exponent " + std::to_string(e) + " for " + var +
                                  " in '" + text_ + "'");
            if (e == 0) continue;
            int idx = ring->var_index(var);
            if (idx < 0) throw DomainError("unknown variable '" + var + "' in '" + text_ + "'");
            mon.e[idx] = static_cast<uint16_t>(mon.e[idx] + e);
        }
        result = result + Polynomial::term(ring, c, mon);
    }
    return result;
}

// --------------------------------------------------------------------------
// catalog files

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    size_t b = s.find_last_not_of(" \t\r\n");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

std::vector<std::vector<TemplatePoly>> parse_template_matrix(const std::string& text) {
    // [[a,b];[c,d]] with template entries
    std::vector<std::vector<TemplatePoly>> rows;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos >= text.size() || text[pos] != '[') throw ParseError("matrix must start with '['");
    ++pos;
    for (;;) {
        skip_ws();
        if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '[' starting a row");
        ++pos;
        std::vector<TemplatePoly> row;
        size_t start = pos;
        int depth = 0;
        for (; pos < text.size(); ++pos) {
            char ch = text[pos];
            if (ch == '(') ++depth;
            if (ch == ')') --depth;
            if (depth == 0 && (ch == ',' || ch == ']')) {
                row.push_back(TemplatePoly::parse(trim(text.substr(start, pos - start))));
                start = pos + 1;
                if (ch == ']') break;
            }
        }
        if (pos >= text.size()) throw ParseError("unterminated matrix row");
        ++pos;  // past ']'
        rows.push_back(std::move(row));
        skip_ws();
        if (pos < text.size() && text[pos] == ';') {
            ++pos;
            continue;
        }
        break;
    }
    skip_ws();
    if (pos >= text.size() || text[pos] != ']') throw ParseError("matrix must end with ']'");
    ++pos;
    size_t w = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != w) throw ParseError("ragged matrix rows");
    return rows;
}

std::vector<TemplatePoly> parse_template_ideal(const std::string& text) {
    std::string t = trim(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw ParseError("ideal must be parenthesized: '" + text + "'");
    std::string inner = t.substr(1, t.size() - 2);
    std::vector<TemplatePoly> gens;
    size_t start = 0;
    int depth = 0;
    for (size_t i = 0; i <= inner.size(); ++i) {
        if (i < inner.size() && inner[i] == '(') ++depth;
        if (i < inner.size() && inner[i] == ')') --depth;
        if (i == inner.size() || (depth == 0 && inner[i] == ',')) {
            std::string part = trim(inner.substr(start, i - start));
            if (!part.empty()) gens.push_back(TemplatePoly::parse(part));
            start = i + 1;
        }
    }
    if (gens.empty()) throw ParseError("empty ideal literal: '" + text + "'");
    return gens;
}

// file grammar, one entry per file:
//   key: value                  headers (family, ring, field, badchar, param,
//                               domain, equation, zvar)
//   module <label> [for j = a .. b] [if <cond>]:
//     matrix: [[...];[...]]      (z-form)  or  presentation: [[...]]
//     partner: [[...]]           optional factorization partner
//     tau: (...)                 or  tau derived: (...)
//   tau_mcm: (...)
// '#' starts a comment; a value continues onto following lines until its
// brackets balance.
struct FileReader {
    std::ifstream in;
    std::string path;
    int lineno = 0;

    explicit FileReader(const std::string& p) : in(p), path(p) {
        if (!in) throw ParseError("cannot open catalog file " + p);
    }

    std::optional<std::string> next_line() {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            size_t hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            if (trim(line).empty()) continue;
            return line;
        }
        return std::nullopt;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(path + ":" + std::to_string(lineno) + ": " + msg);
    }
};

int bracket_balance(const std::string& s) {
    int bal = 0;
    for (char c : s) {
        if (c == '[' || c == '(') ++bal;
        if (c == ']' || c == ')') --bal;
    }
    return bal;
}

}  // namespace

std::string Catalog::default_dir() {
    if (const char* env = std::getenv("TRACEIDEAL_CATALOG_DIR")) return env;
    if (std::filesystem::is_directory("data/catalog")) return "data/catalog";
    return TRACEIDEAL_SOURCE_CATALOG;
}

Catalog Catalog::load(const std::string& dir) {
    std::string d = dir.empty() ? default_dir() : dir;
    if (!std::filesystem::is_directory(d))
        throw ParseError("catalog directory not found: '" + d + "'");
    Catalog cat;
    std::vector<std::string> files;
    for (const auto& e : std::filesystem::directory_iterator(d))
        if (e.path().extension() == ".cat") files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        FileReader reader(f);
        CatalogEntry entry;
        entry.source_path = f;
        CatalogModuleSpec* current = nullptr;

        auto read_value = [&](std::string value) {
            // continuation until brackets balance
            int bal = bracket_balance(value);
            while (bal > 0) {
                auto more = reader.next_line();
                if (!more) reader.fail("unterminated bracketed value");
                value += " " + trim(*more);
                bal = bracket_balance(value);
            }
            return trim(value);
        };

        for (auto line = reader.next_line(); line; line = reader.next_line()) {
            std::string l = trim(*line);
            size_t colon = l.find(':');
            if (colon == std::string::npos) reader.fail("expected 'key: value' line");
            std::string key = trim(l.substr(0, colon));
            std::string value = read_value(trim(l.substr(colon + 1)));

            if (key.rfind("module", 0) == 0) {
                // module <label> [for <v> = <lo> .. <hi>] [if <cond>]
                std::string head = trim(key.substr(6));
                CatalogModuleSpec spec;
                size_t forpos = head.find(" for ");
                size_t ifpos = head.find(" if ");
                std::string label =
                    head.substr(0, std::min(forpos == std::string::npos ? head.size() : forpos,
                                            ifpos == std::string::npos ? head.size() : ifpos));
                spec.label = trim(label);
                if (forpos != std::string::npos) {
                    size_t end = ifpos != std::string::npos && ifpos > forpos ? ifpos : head.size();
                    std::string ranged = trim(head.substr(forpos + 5, end - forpos - 5));
                    size_t eq = ranged.find('=');
                    size_t dots = ranged.find("..");
                    if (eq == std::string::npos || dots == std::string::npos)
                        reader.fail("bad range in '" + head + "'");
                    spec.index_var = trim(ranged.substr(0, eq));
                    spec.range_lo = ParamExpr::parse(trim(ranged.substr(eq + 1, dots - eq - 1)));
                    spec.range_hi = ParamExpr::parse(trim(ranged.substr(dots + 2)));
                }
                if (ifpos != std::string::npos)
                    spec.condition = ParamCond::parse(trim(head.substr(ifpos + 4)));
                entry.modules.push_back(std::move(spec));
                current = &entry.modules.back();
                if (!value.empty()) reader.fail("module header takes no value");
                continue;
            }

            if (key == "family") {
                entry.family = value;
            } else if (key == "ring") {
                std::istringstream vs(value);
                std::string item;
                while (std::getline(vs, item, ',')) entry.ring_vars.push_back(trim(item));
            } else if (key == "field") {
                entry.min_field = FieldSpec::parse(value);
            } else if (key == "badchar") {
                std::istringstream vs(value);
                std::string item;
                while (std::getline(vs, item, ','))
                    entry.bad_chars.push_back(std::stoul(trim(item)));
            } else if (key == "param") {
                entry.param = value;
            } else if (key == "domain") {
                entry.domain = ParamCond::parse(value);
            } else if (key == "equation") {
                entry.equation = TemplatePoly::parse(value);
            } else if (key == "zvar") {
                entry.zvar = value;
            } else if (key == "matrix") {
                if (!current) reader.fail("matrix outside a module block");
                current->matrix = parse_template_matrix(value);
            } else if (key == "presentation") {
                if (!current) reader.fail("presentation outside a module block");
                current->matrix = parse_template_matrix(value);
                current->is_presentation = true;
            } else if (key == "partner") {
                if (!current) reader.fail("partner outside a module block");
                current->partner = parse_template_matrix(value);
            } else if (key == "tau" || key == "tau derived") {
                if (!current) reader.fail("tau outside a module block");
                current->tau = parse_template_ideal(value);
                current->tau_derived = key == "tau derived";
            } else if (key == "tau_mcm") {
                entry.tau_mcm = parse_template_ideal(value);
            } else {
                reader.fail("unknown key '" + key + "'");
            }
        }
        if (entry.family.empty()) reader.fail("missing family");
        if (entry.ring_vars.empty()) reader.fail("missing ring");
        cat.entries_.push_back(std::move(entry));
    }
    if (cat.entries_.empty()) throw ParseError("no catalog entries in '" + d + "'");
    return cat;
}

std::vector<std::string> Catalog::families() const {
    std::vector<std::string> out;
    for (const auto& e : entries_) out.push_back(e.family);
    return out;
}

const CatalogEntry& Catalog::entry(const std::string& family) const {
    for (const auto& e : entries_)
        if (e.family == family) return e;
    throw DomainError("unknown catalog family '" + family + "'");
}

namespace {

std::string expand_label(const std::string& tmpl, const std::map<std::string, long>& env) {
    std::string out;
    for (size_t i = 0; i < tmpl.size(); ++i) {
        if (tmpl[i] == '{') {
            size_t close = tmpl.find('}', i);
            if (close == std::string::npos) throw ParseError("unbalanced '{' in label " + tmpl);
            std::string name = tmpl.substr(i + 1, close - i - 1);
            out += std::to_string(ParamExpr::parse(name).eval(env));
            i = close;
        } else {
            out += tmpl[i];
        }
    }
    return out;
}

PolyMatrix instantiate_matrix(const std::vector<std::vector<TemplatePoly>>& tmpl,
                              const RingPtr& ring, const std::map<std::string, long>& env) {
    PolyMatrix m;
    for (const auto& row : tmpl) {
        std::vector<Polynomial> r;
        for (const auto& e : row) r.push_back(e.instantiate(ring, env));
        m.push_back(std::move(r));
    }
    return m;
}

}  // namespace

CatalogInstance Catalog::instantiate(const std::string& family, std::optional<long> param,
                                     std::optional<FieldSpec> field_override) const {
    const CatalogEntry& e = entry(family);

    std::map<std::string, long> env;
    if (e.param) {
        if (!param)
            throw DomainError("family " + family + " needs parameter " + *e.param);
        env[*e.param] = *param;
        if (!e.domain.eval(env))
            throw DomainError("parameter " + *e.param + "=" + std::to_string(*param) +
                              " violates the family constraint '" + e.domain.text() + "'");
    } else if (param) {
        throw DomainError("family " + family + " takes no parameter");
    }

    FieldSpec field = field_override.value_or(e.min_field);
    if (e.min_field.kind == FieldKind::Gaussian && !field.has_imaginary_unit())
        throw DomainError("family " + family + " needs sqrt(-1); field " + field.str() +
                          " cannot express i (use QQi or F_p with p = 1 mod 4)");
    if (field.kind == FieldKind::Prime)
        for (unsigned long bad : e.bad_chars)
            if (field.p == bad)
                throw DomainError("family " + family + " excludes characteristic " +
                                  std::to_string(bad));

    CatalogInstance inst;
    inst.family = family;
    inst.param = param;

    RingPtr amb = Ring::make(e.ring_vars, field);
    Polynomial equation = e.equation.instantiate(amb, env);
    inst.ring = Ring::quotient(amb, {equation});

    int zidx = -1;
    if (e.zvar) {
        zidx = amb->var_index(*e.zvar);
        if (zidx < 0) throw ParseError("zvar '" + *e.zvar + "' is not a ring variable");
    }

    auto build_module = [&](const CatalogModuleSpec& spec, std::map<std::string, long>& menv) {
        CatalogModule cm;
        cm.label = expand_label(spec.label, menv);
        PolyMatrix mat = instantiate_matrix(spec.matrix, amb, menv);
        if (spec.is_presentation) {
            if (!spec.partner.empty()) {
                // transcription-integrity gate for plain presentations
                PolyMatrix partner = instantiate_matrix(spec.partner, amb, menv);
                FactorizationCheck c = verify_factorization(mat, partner, equation);
                if (!c.ok)
                    throw ValidationError(family + " " + cm.label +
                                          ": presentation and partner do not factor the equation (" +
                                          c.which + " residual " + c.residual.str() + ")");
            }
            cm.module = McmModule::from_presentation(ModulePresentation(inst.ring, mat));
        } else {
            if (zidx < 0) throw ParseError(family + ": z-form module without zvar");
            Polynomial g = equation - Polynomial::variable(amb, zidx, 2);
            cm.module = McmModule::from_zform(ZFormFactorization(mat, g, zidx));
        }
        if (!spec.tau.empty()) {
            std::vector<Polynomial> gens;
            for (const auto& t : spec.tau) gens.push_back(t.instantiate(amb, menv));
            cm.expected_tau = Ideal(inst.ring, std::move(gens));
            cm.tau_derived = spec.tau_derived;
        }
        return cm;
    };

    for (const auto& spec : e.modules) {
        if (!spec.index_var) {
            std::map<std::string, long> menv = env;
            if (!spec.condition.eval(menv)) continue;
            inst.modules.push_back(build_module(spec, menv));
            continue;
        }
        long lo = spec.range_lo.eval(env);
        long hi = spec.range_hi.eval(env);
        for (long j = lo; j <= hi; ++j) {
            std::map<std::string, long> menv = env;
            menv[*spec.index_var] = j;
            if (!spec.condition.eval(menv)) continue;
            CatalogModule cm = build_module(spec, menv);
            // free entries are excluded computationally: trace ideal (1)
            Ideal tau = cm.module.zform ? trace_ideal_cor(*cm.module.zform, inst.ring)
                                        : trace_ideal_oracle(*cm.module.presentation);
            if (tau.is_unit()) {
                inst.excluded_free.push_back(cm.label);
                continue;
            }
            inst.modules.push_back(std::move(cm));
        }
    }

    if (!e.tau_mcm.empty()) {
        std::vector<Polynomial> gens;
        for (const auto& t : e.tau_mcm) gens.push_back(t.instantiate(amb, env));
        inst.expected_tau_mcm = Ideal(inst.ring, std::move(gens));
    }
    return inst;
}

std::vector<GridItem> acceptance_grid() {
    std::vector<GridItem> grid;
    grid.push_back({"Ainf-dim1", 10});
    grid.push_back({"Dinf-dim1", std::nullopt});
    for (long n : {3, 5, 7, 9}) grid.push_back({"An-dim1-odd", n});
    grid.push_back({"A1-dim2", 3});
    grid.push_back({"X9-dim2", 5});
    for (long n = 1; n <= 6; ++n) grid.push_back({"An-dim2", n});
    for (long n = 4; n <= 8; ++n) grid.push_back({"Dn-dim2", n});
    grid.push_back({"E6", std::nullopt});
    grid.push_back({"E7", std::nullopt});
    grid.push_back({"E8", std::nullopt});
    grid.push_back({"Veronese2", std::nullopt});
    return grid;
}

}  // namespace traceideal
