#pragma once

#include <string>
#include <vector>

#include "traceideal/groebner.hpp"
#include "traceideal/polynomial.hpp"

namespace traceideal {

// An ideal of a (possibly quotient) ring, held as a generator list plus the
// cached reduced Groebner basis of its ambient preimage (generators together
// with the defining ideal Q).  Two ideals over the same context are equal iff
// those canonical bases coincide.  Immutable.
class Ideal {
  public:
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }
    static Ideal unit(const RingPtr& ring);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    // Reduced GB of (gens + Q) in the ambient ring.
    const std::vector<Polynomial>& groebner() const { return gb_; }

    bool is_zero() const;
    bool is_unit() const;

    bool contains(const Polynomial& f) const;
    bool contains(const Ideal& other) const;
    bool operator==(const Ideal& o) const;
    bool operator!=(const Ideal& o) const { return !(*this == o); }

    // Rabinowitsch: f in sqrt(I) iff 1 in I' + (1 - s f) with a fresh s.
    bool radical_contains(const Polynomial& f) const;

    std::string str() const;

  private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;  // reduced mod Q, zeros dropped
    std::vector<Polynomial> gb_;    // canonical ambient basis
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
// Elimination of a fresh variable t from t*I' + (1-t)*J'.
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
// (a : b) = {r : r b in a}, generator-wise via intersections with principal
// ideals and exact division.
Ideal ideal_quotient(const Ideal& a, const Ideal& b);

}  // namespace traceideal
