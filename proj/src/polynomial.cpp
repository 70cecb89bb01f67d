#include "traceideal/polynomial.hpp"

#include <algorithm>

#include "traceideal/printer.hpp"

namespace traceideal {

Polynomial Polynomial::constant(const RingPtr& r, const FieldElement& c) {
    if (c.is_zero()) return zero(r);
    return Polynomial(r, {Term{Monomial::one(r->nvars()), c}});
}

Polynomial Polynomial::from_int(const RingPtr& r, long v) {
    return constant(r, FieldElement::from_int(r->field(), v));
}

Polynomial Polynomial::variable(const RingPtr& r, int idx, int exp) {
    if (idx < 0 || idx >= r->nvars()) throw DomainError("variable index out of range");
    if (exp == 0) return from_int(r, 1);
    return Polynomial(r, {Term{Monomial::var(r->nvars(), idx, exp), FieldElement::one(r->field())}});
}

Polynomial Polynomial::term(const RingPtr& r, const FieldElement& c, const Monomial& m) {
    if (c.is_zero()) return zero(r);
    return Polynomial(r, {Term{m, c}});
}

Polynomial Polynomial::from_terms(const RingPtr& r, std::vector<Term> terms) {
    const MonomialOrder& ord = r->order();
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.mon, b.mon) > 0; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mon == t.mon) {
            out.back().coef = out.back().coef + t.coef;
            if (out.back().coef.is_zero()) out.pop_back();
        } else if (!t.coef.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    return Polynomial(r, std::move(out));
}

const Term& Polynomial::lead() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    return terms_[0];
}

Polynomial Polynomial::tail() const {
    if (terms_.empty()) return *this;
    return Polynomial(ring_, std::vector<Term>(terms_.begin() + 1, terms_.end()));
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mon.degree());
    return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_compatible(ring_, o.ring_);
    const MonomialOrder& ord = ring_->order();
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ord.compare(terms_[i].mon, o.terms_[j].mon);
        if (c > 0) {
            out.push_back(terms_[i++]);
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            FieldElement s = terms_[i].coef + o.terms_[j].coef;
            if (!s.is_zero()) out.push_back(Term{terms_[i].mon, s});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
    std::vector<Term> out = terms_;
    for (auto& t : out) t.coef = -t.coef;
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::mul_term(const FieldElement& c, const Monomial& m) const {
    if (c.is_zero()) return zero(ring_);
    std::vector<Term> out = terms_;
    for (auto& t : out) {
        t.mon = t.mon * m;
        t.coef = t.coef * c;
    }
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::mul_coef(const FieldElement& c) const {
    return mul_term(c, Monomial::one(ring_->nvars()));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return mul_coef(lead_coef().invert());
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(ring_, o.ring_);
    if (is_zero() || o.is_zero()) return zero(ring_);
    Polynomial acc = zero(ring_);
    // fewer merge passes when iterating over the shorter operand
    const Polynomial& a = terms_.size() <= o.terms_.size() ? *this : o;
    const Polynomial& b = terms_.size() <= o.terms_.size() ? o : *this;
    for (const auto& t : a.terms_) acc = acc + b.mul_term(t.coef, t.mon);
    return acc;
}

Polynomial Polynomial::sub_mul(const FieldElement& c, const Monomial& m, const Polynomial& g) const {
    return *this - g.mul_term(c, m);
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mon != o.terms_[i].mon || terms_[i].coef != o.terms_[i].coef) return false;
    return true;
}

bool Polynomial::involves_var(int idx) const {
    for (const auto& t : terms_)
        if (t.mon.e[idx]) return true;
    return false;
}

int Polynomial::degree_in(int idx) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max<int>(d, t.mon.e[idx]);
    return d;
}

std::string Polynomial::str() const {
    return print_polynomial(*this);
}

DivModResult poly_divmod(const Polynomial& f, const std::vector<Polynomial>& divisors) {
    for (const auto& d : divisors) {
        check_compatible(f.ring(), d.ring());
        if (d.is_zero()) throw DomainError("division by zero polynomial");
    }
    DivModResult res;
    res.quotients.assign(divisors.size(), Polynomial::zero(f.ring()));
    res.remainder = Polynomial::zero(f.ring());
    Polynomial h = f;
    while (!h.is_zero()) {
        bool reduced = false;
        for (size_t k = 0; k < divisors.size(); ++k) {
            const Polynomial& d = divisors[k];
            if (d.lead_mon().divides(h.lead_mon())) {
                FieldElement c = h.lead_coef() / d.lead_coef();
                Monomial m = h.lead_mon() / d.lead_mon();
                res.quotients[k] = res.quotients[k] + Polynomial::term(f.ring(), c, m);
                h = h.sub_mul(c, m, d);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            res.remainder = res.remainder + Polynomial::term(f.ring(), h.lead_coef(), h.lead_mon());
            h = h.tail();
        }
    }
    return res;
}

Polynomial poly_reduce(const Polynomial& f, const std::vector<Polynomial>& divisors) {
    for (const auto& d : divisors) {
        check_compatible(f.ring(), d.ring());
        if (d.is_zero()) throw DomainError("division by zero polynomial");
    }
    std::vector<Term> rem;
    Polynomial h = f;
    while (!h.is_zero()) {
        bool reduced = false;
        for (const auto& d : divisors) {
            if (d.lead_mon().divides(h.lead_mon())) {
                h = h.sub_mul(h.lead_coef() / d.lead_coef(), h.lead_mon() / d.lead_mon(), d);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.push_back(h.lead());
            h = h.tail();
        }
    }
    return Polynomial::from_terms(f.ring(), std::move(rem));
}

}  // namespace traceideal
