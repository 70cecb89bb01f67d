#pragma once

#include <vector>

#include "traceideal/polynomial.hpp"

namespace traceideal {

// S(f,g) = lcm/LT(f) * f - lcm/LT(g) * g; the leading terms cancel.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Reduced Groebner basis of the ideal generated by gens, under the gens'
// ring order: auto-reduced, monic, sorted descending by leading monomial.
// Buchberger with sugar-degree selection, the coprime-lead and chain
// criteria.  Honors the TRACEIDEAL_MAX_DEGREE guard.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens);

// Unique remainder of f modulo a Groebner basis; zero iff f is in the ideal.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gb);

// ---------------------------------------------------------------------------
// Free modules

// Element of R^rank; entries share one ring context.
using FreeModuleVector = std::vector<Polynomial>;

// Order on (monomial, position) pairs.  PositionOverTerm prefers the lower
// position index first (ascending index dominates), which makes the original
// block of a tagged construction an eliminated block.
struct ModuleOrder {
    enum class Tie : uint8_t { PositionOverTerm, TermOverPosition };
    MonomialOrder base = MonomialOrder::grevlex();
    Tie tie = Tie::PositionOverTerm;

    // compare (m1,p1) vs (m2,p2): <0, 0, >0
    int compare(const Monomial& m1, int p1, const Monomial& m2, int p2) const {
        if (tie == Tie::PositionOverTerm) {
            if (p1 != p2) return p1 < p2 ? 1 : -1;
            return base.compare(m1, m2);
        }
        int c = base.compare(m1, m2);
        if (c) return c;
        if (p1 != p2) return p1 < p2 ? 1 : -1;
        return 0;
    }
};

struct ModuleLead {
    int pos = -1;  // -1 for the zero vector
    Monomial mon;
    FieldElement coef;
};

ModuleLead module_lead(const FreeModuleVector& v, const ModuleOrder& mo);
bool module_is_zero(const FreeModuleVector& v);

// Groebner basis of the submodule generated by gens (equal ranks), monic
// leads, auto-reduced, sorted descending.
std::vector<FreeModuleVector> module_buchberger(const std::vector<FreeModuleVector>& gens,
                                                const ModuleOrder& mo);

// Unique remainder of v modulo a module Groebner basis.
FreeModuleVector module_normal_form(const FreeModuleVector& v,
                                    const std::vector<FreeModuleVector>& gb,
                                    const ModuleOrder& mo);

// Generators of {(c_1..c_m) : sum c_j gens_j = 0} over the ambient polynomial
// ring, via tagging: each generator is extended with a fresh unit position in
// rank+m, a PositionOverTerm basis eliminates the original block, and the
// elements supported only on tags are the syzygies.  Every returned vector is
// re-expanded against gens and checked to vanish.
std::vector<FreeModuleVector> syzygy_basis(const std::vector<FreeModuleVector>& gens,
                                           const ModuleOrder& mo = ModuleOrder{});

}  // namespace traceideal
