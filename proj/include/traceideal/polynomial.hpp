#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "traceideal/ring.hpp"

namespace traceideal {

struct Term {
    Monomial mon;
    FieldElement coef;  // never zero in a normalized polynomial
};

// Multivariate polynomial with exact coefficients.  Terms are kept strictly
// descending under the ring's monomial order; the zero polynomial has no
// terms.  Immutable value semantics.
class Polynomial {
  public:
    Polynomial() = default;

    static Polynomial zero(const RingPtr& r) { return Polynomial(r, {}); }
    static Polynomial constant(const RingPtr& r, const FieldElement& c);
    static Polynomial from_int(const RingPtr& r, long v);
    static Polynomial variable(const RingPtr& r, int idx, int exp = 1);
    static Polynomial term(const RingPtr& r, const FieldElement& c, const Monomial& m);
    // From arbitrary (possibly unsorted, duplicated) terms.
    static Polynomial from_terms(const RingPtr& r, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].mon.is_one(); }

    const Term& lead() const;
    const Monomial& lead_mon() const { return lead().mon; }
    const FieldElement& lead_coef() const { return lead().coef; }
    Polynomial tail() const;  // all terms except the lead
    int degree() const;       // total degree, -1 for zero

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // this - c * m * g, the reduction workhorse.
    Polynomial sub_mul(const FieldElement& c, const Monomial& m, const Polynomial& g) const;
    Polynomial mul_term(const FieldElement& c, const Monomial& m) const;
    Polynomial mul_coef(const FieldElement& c) const;
    Polynomial monic() const;  // divide by leading coefficient

    bool involves_var(int idx) const;
    int degree_in(int idx) const;

    std::string str() const;

  private:
    Polynomial(RingPtr r, std::vector<Term> t) : ring_(std::move(r)), terms_(std::move(t)) {}
    RingPtr ring_;
    std::vector<Term> terms_;
};

// f = sum q_i d_i + r with no monomial of r divisible by any lead(d_i) and
// lead(q_i d_i) <= lead(f).  Standard multivariate division in f's ring order.
struct DivModResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};
DivModResult poly_divmod(const Polynomial& f, const std::vector<Polynomial>& divisors);

// Remainder only (same contract, cheaper).
Polynomial poly_reduce(const Polynomial& f, const std::vector<Polynomial>& divisors);

}  // namespace traceideal
