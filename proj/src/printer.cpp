#include "traceideal/printer.hpp"

#include <algorithm>
#include <sstream>

namespace traceideal {

namespace {

void print_mon(std::ostream& os, const Ring& ring, const Monomial& m, bool had_coef) {
    bool first = !had_coef;
    for (int i = 0; i < m.nvars; ++i) {
        if (!m.e[i]) continue;
        if (!first) os << "*";
        first = false;
        os << ring.vars()[i];
        if (m.e[i] > 1) os << "^" << m.e[i];
    }
}

// One printed addend: sign, optional rational coefficient, optional i, monomial.
void print_addend(std::ostream& os, const Ring& ring, const mpq_class& c, bool with_i,
                  const Monomial& m, bool leading) {
    mpq_class a = c;
    if (a < 0) {
        os << "-";
        a = -a;
    } else if (!leading) {
        os << "+";
    }
    bool coef_shown = false;
    if (a != 1 || (!with_i && m.is_one())) {
        os << a.get_str();
        coef_shown = true;
    }
    if (with_i) {
        if (coef_shown) os << "*";
        os << "i";
        coef_shown = true;
    }
    print_mon(os, ring, m, coef_shown);
}

void print_fp_addend(std::ostream& os, const Ring& ring, unsigned long c, const Monomial& m,
                     bool leading) {
    if (!leading) os << "+";
    bool coef_shown = false;
    if (c != 1 || m.is_one()) {
        os << c;
        coef_shown = true;
    }
    print_mon(os, ring, m, coef_shown);
}

}  // namespace

std::string print_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    const Ring& ring = *p.ring();
    bool leading = true;
    for (const auto& t : p.terms()) {
        switch (t.coef.spec().kind) {
            case FieldKind::Rational:
                print_addend(os, ring, t.coef.re(), false, t.mon, leading);
                break;
            case FieldKind::Gaussian:
                if (t.coef.re() != 0) {
                    print_addend(os, ring, t.coef.re(), false, t.mon, leading);
                    leading = false;
                }
                if (t.coef.im() != 0) print_addend(os, ring, t.coef.im(), true, t.mon, leading);
                break;
            case FieldKind::Prime:
                print_fp_addend(os, ring, t.coef.residue(), t.mon, leading);
                break;
        }
        leading = false;
    }
    return os.str();
}

std::string print_generators(const std::vector<Polynomial>& gens) {
    if (gens.empty()) return "(0)";
    for (const auto& g : gens)
        if (!g.is_zero() && g.lead_mon().is_one()) return "(1)";
    // display order: descending under plain lex, the convention used by the
    // catalog's expected-ideal lines
    std::vector<Polynomial> sorted = gens;
    MonomialOrder lex = MonomialOrder::lex();
    std::stable_sort(sorted.begin(), sorted.end(), [&](const Polynomial& a, const Polynomial& b) {
        return lex.compare(a.lead_mon(), b.lead_mon()) > 0;
    });
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (i) os << ", ";
        os << print_polynomial(sorted[i]);
    }
    os << ")";
    return os.str();
}

std::string print_matrix(const std::vector<std::vector<Polynomial>>& m) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) os << ";";
        os << "[";
        for (size_t j = 0; j < m[i].size(); ++j) {
            if (j) os << ",";
            os << print_polynomial(m[i][j]);
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace traceideal
