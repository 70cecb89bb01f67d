#include "traceideal/groebner.hpp"

#include <algorithm>
#include <cstdlib>

namespace traceideal {

namespace {

// TRACEIDEAL_MAX_DEGREE: optional abort guard for basis computations.
int degree_guard() {
    static const int limit = [] {
        const char* v = std::getenv("TRACEIDEAL_MAX_DEGREE");
        return v ? std::atoi(v) : 0;
    }();
    return limit;
}

void check_guard(int deg) {
    int limit = degree_guard();
    if (limit > 0 && deg > limit)
        throw DegreeGuardError("basis element of degree " + std::to_string(deg) +
                               " exceeds TRACEIDEAL_MAX_DEGREE=" + std::to_string(limit));
}

struct Pair {
    size_t i, j;
    Monomial lcm;
    int sugar;
};

int sugar_of(const Polynomial& p) {
    return p.degree();
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) throw DomainError("s_polynomial of zero polynomial");
    check_compatible(f.ring(), g.ring());
    Monomial l = lcm(f.lead_mon(), g.lead_mon());
    Polynomial a = f.mul_term(f.lead_coef().invert(), l / f.lead_mon());
    Polynomial b = g.mul_term(g.lead_coef().invert(), l / g.lead_mon());
    return a - b;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gb) {
    return poly_reduce(f, gb);
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> basis;
    RingPtr ring;
    for (const auto& g : gens) {
        if (!ring)
            ring = g.ring();
        else
            check_compatible(ring, g.ring());
        if (!g.is_zero()) basis.push_back(g.monic());
    }
    if (basis.empty()) return {};

    std::vector<int> sugar;
    for (const auto& b : basis) sugar.push_back(sugar_of(b));

    std::vector<Pair> pairs;
    auto push_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            Pair p{i, j, lcm(basis[i].lead_mon(), basis[j].lead_mon()), 0};
            int si = sugar[i] + (p.lcm / basis[i].lead_mon()).degree();
            int sj = sugar[j] + (p.lcm / basis[j].lead_mon()).degree();
            p.sugar = std::max(si, sj);
            pairs.push_back(p);
        }
    };
    for (size_t j = 1; j < basis.size(); ++j) push_pairs(j);

    auto pop_best = [&]() {
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k) {
            const Pair &a = pairs[k], &b = pairs[best];
            if (a.sugar != b.sugar ? a.sugar < b.sugar
                                   : basis[0].ring()->order().compare(a.lcm, b.lcm) < 0)
                best = k;
        }
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + best);
        return p;
    };

    // pairs already handled, for the chain criterion
    std::vector<std::pair<size_t, size_t>> done;
    auto is_done = [&](size_t a, size_t b) {
        if (a > b) std::swap(a, b);
        for (auto& d : done)
            if (d.first == a && d.second == b) return true;
        return false;
    };
    auto pending = [&](size_t a, size_t b) {
        for (auto& p : pairs)
            if ((p.i == a && p.j == b) || (p.i == b && p.j == a)) return true;
        return false;
    };

    while (!pairs.empty()) {
        Pair p = pop_best();
        done.emplace_back(std::min(p.i, p.j), std::max(p.i, p.j));
        // product criterion
        if (coprime(basis[p.i].lead_mon(), basis[p.j].lead_mon())) continue;
        // chain criterion: some k with LM_k | lcm and both (i,k),(j,k) settled
        bool chained = false;
        for (size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == p.i || k == p.j) continue;
            if (basis[k].lead_mon().divides(p.lcm) && !pending(p.i, k) && !pending(p.j, k) &&
                is_done(p.i, k) && is_done(p.j, k))
                chained = true;
        }
        if (chained) continue;

        Polynomial s = s_polynomial(basis[p.i], basis[p.j]);
        Polynomial r = poly_reduce(s, basis);
        if (r.is_zero()) continue;
        check_guard(r.degree());
        basis.push_back(r.monic());
        sugar.push_back(std::max(p.sugar, sugar_of(r)));
        push_pairs(basis.size() - 1);
    }

    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (basis[j].lead_mon().divides(basis[i].lead_mon()) &&
                (basis[j].lead_mon() != basis[i].lead_mon() || j < i))
                redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // full interreduction
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = poly_reduce(minimal[i], others);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }
    const MonomialOrder& ord = ring->order();
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.compare(a.lead_mon(), b.lead_mon()) > 0;
    });
    return reduced;
}

// ---------------------------------------------------------------------------

ModuleLead module_lead(const FreeModuleVector& v, const ModuleOrder& mo) {
    ModuleLead best;
    for (size_t p = 0; p < v.size(); ++p) {
        if (v[p].is_zero()) continue;
        if (mo.tie == ModuleOrder::Tie::PositionOverTerm) {
            best = ModuleLead{static_cast<int>(p), v[p].lead_mon(), v[p].lead_coef()};
            return best;  // first nonzero position dominates
        }
        if (best.pos < 0 ||
            mo.compare(v[p].lead_mon(), static_cast<int>(p), best.mon, best.pos) > 0)
            best = ModuleLead{static_cast<int>(p), v[p].lead_mon(), v[p].lead_coef()};
    }
    return best;
}

bool module_is_zero(const FreeModuleVector& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

namespace {

FreeModuleVector mod_sub_mul(const FreeModuleVector& f, const FieldElement& c, const Monomial& m,
                             const FreeModuleVector& g) {
    FreeModuleVector r = f;
    for (size_t p = 0; p < r.size(); ++p)
        if (!g[p].is_zero()) r[p] = r[p].sub_mul(c, m, g[p]);
    return r;
}

FreeModuleVector mod_scale(const FreeModuleVector& f, const FieldElement& c) {
    FreeModuleVector r = f;
    for (auto& p : r) p = p.mul_coef(c);
    return r;
}

// Full reduction: every (pos, monomial) of the remainder is irreducible.
FreeModuleVector module_reduce(const FreeModuleVector& v,
                               const std::vector<FreeModuleVector>& basis,
                               const std::vector<ModuleLead>& leads, const ModuleOrder& mo) {
    if (v.empty()) return v;
    const RingPtr& ring = v[0].ring();
    FreeModuleVector rem(v.size(), Polynomial::zero(ring));
    FreeModuleVector h = v;
    for (;;) {
        ModuleLead hl = module_lead(h, mo);
        if (hl.pos < 0) break;
        bool reduced = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (leads[k].pos == hl.pos && leads[k].mon.divides(hl.mon)) {
                h = mod_sub_mul(h, hl.coef / leads[k].coef, hl.mon / leads[k].mon, basis[k]);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem[hl.pos] = rem[hl.pos] + Polynomial::term(ring, hl.coef, hl.mon);
            h[hl.pos] = h[hl.pos].sub_mul(hl.coef, hl.mon, Polynomial::from_int(ring, 1));
        }
    }
    return rem;
}

}  // namespace

FreeModuleVector module_normal_form(const FreeModuleVector& v,
                                    const std::vector<FreeModuleVector>& gb,
                                    const ModuleOrder& mo) {
    std::vector<ModuleLead> leads;
    leads.reserve(gb.size());
    for (const auto& g : gb) leads.push_back(module_lead(g, mo));
    return module_reduce(v, gb, leads, mo);
}

std::vector<FreeModuleVector> module_buchberger(const std::vector<FreeModuleVector>& gens,
                                                const ModuleOrder& mo) {
    std::vector<FreeModuleVector> basis;
    size_t rank = 0;
    RingPtr ring;
    for (const auto& g : gens) {
        if (g.empty()) throw DomainError("rank-0 module vector");
        if (basis.empty() && !ring) {
            rank = g.size();
            ring = g[0].ring();
        }
        if (g.size() != rank) throw DomainError("module generators of unequal rank");
        for (const auto& p : g) check_compatible(ring, p.ring());
        if (!module_is_zero(g)) {
            ModuleLead l = module_lead(g, mo);
            basis.push_back(mod_scale(g, l.coef.invert()));
        }
    }
    if (basis.empty()) return {};

    std::vector<ModuleLead> leads;
    for (const auto& b : basis) leads.push_back(module_lead(b, mo));

    struct MPair {
        size_t i, j;
        Monomial lcm;
        int deg;
    };
    std::vector<MPair> pairs;
    auto push_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            if (leads[i].pos != leads[j].pos) continue;  // S-vectors need equal lead positions
            MPair p{i, j, lcm(leads[i].mon, leads[j].mon), 0};
            p.deg = p.lcm.degree();
            pairs.push_back(p);
        }
    };
    for (size_t j = 1; j < basis.size(); ++j) push_pairs(j);

    while (!pairs.empty()) {
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k)
            if (pairs[k].deg < pairs[best].deg) best = k;
        MPair p = pairs[best];
        pairs.erase(pairs.begin() + best);

        FreeModuleVector a = [&] {
            FreeModuleVector r = basis[p.i];
            Monomial m = p.lcm / leads[p.i].mon;
            for (auto& q : r) q = q.mul_term(leads[p.i].coef.invert(), m);
            return r;
        }();
        FreeModuleVector b = [&] {
            FreeModuleVector r = basis[p.j];
            Monomial m = p.lcm / leads[p.j].mon;
            for (auto& q : r) q = q.mul_term(leads[p.j].coef.invert(), m);
            return r;
        }();
        FreeModuleVector s(rank, Polynomial::zero(ring));
        for (size_t q = 0; q < rank; ++q) s[q] = a[q] - b[q];

        FreeModuleVector r = module_reduce(s, basis, leads, mo);
        if (module_is_zero(r)) continue;
        ModuleLead rl = module_lead(r, mo);
        check_guard(rl.mon.degree());
        basis.push_back(mod_scale(r, rl.coef.invert()));
        leads.push_back(module_lead(basis.back(), mo));
        push_pairs(basis.size() - 1);
    }

    // minimalize + interreduce
    std::vector<FreeModuleVector> minimal;
    std::vector<ModuleLead> minimal_leads;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j || leads[j].pos != leads[i].pos) continue;
            if (leads[j].mon.divides(leads[i].mon) && (leads[j].mon != leads[i].mon || j < i))
                redundant = true;
        }
        if (!redundant) {
            minimal.push_back(basis[i]);
            minimal_leads.push_back(leads[i]);
        }
    }
    std::vector<FreeModuleVector> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<FreeModuleVector> others;
        std::vector<ModuleLead> other_leads;
        for (size_t j = 0; j < minimal.size(); ++j) {
            if (j == i) continue;
            others.push_back(minimal[j]);
            other_leads.push_back(minimal_leads[j]);
        }
        FreeModuleVector r = module_reduce(minimal[i], others, other_leads, mo);
        if (!module_is_zero(r)) {
            ModuleLead rl = module_lead(r, mo);
            reduced.push_back(mod_scale(r, rl.coef.invert()));
        }
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const FreeModuleVector& a, const FreeModuleVector& b) {
                  ModuleLead la = module_lead(a, mo), lb = module_lead(b, mo);
                  return mo.compare(la.mon, la.pos, lb.mon, lb.pos) > 0;
              });
    return reduced;
}

std::vector<FreeModuleVector> syzygy_basis(const std::vector<FreeModuleVector>& gens,
                                           const ModuleOrder& mo) {
    if (gens.empty()) return {};
    size_t rank = gens[0].size();
    size_t m = gens.size();
    RingPtr ring;
    for (const auto& g : gens) {
        if (g.size() != rank) throw DomainError("module generators of unequal rank");
        for (const auto& p : g)
            if (!ring) ring = p.ring();
    }
    if (!ring) throw DomainError("syzygy_basis needs at least one nonzero entry to fix the ring");
    if (ring->is_quotient()) throw DomainError("syzygy_basis works over the ambient polynomial ring");

    ModuleOrder elim{mo.base, ModuleOrder::Tie::PositionOverTerm};
    std::vector<FreeModuleVector> tagged;
    for (size_t j = 0; j < m; ++j) {
        FreeModuleVector h(rank + m, Polynomial::zero(ring));
        for (size_t p = 0; p < rank; ++p) h[p] = gens[j][p];
        h[rank + j] = Polynomial::from_int(ring, 1);
        tagged.push_back(std::move(h));
    }
    std::vector<FreeModuleVector> gb = module_buchberger(tagged, elim);

    std::vector<FreeModuleVector> syz;
    for (const auto& v : gb) {
        bool pure_tag = true;
        for (size_t p = 0; p < rank && pure_tag; ++p)
            if (!v[p].is_zero()) pure_tag = false;
        if (!pure_tag) continue;
        FreeModuleVector s(v.begin() + rank, v.end());
        // contract: each syzygy re-expands to zero exactly
        FreeModuleVector acc(rank, Polynomial::zero(ring));
        for (size_t j = 0; j < m; ++j)
            for (size_t p = 0; p < rank; ++p) acc[p] = acc[p] + s[j] * gens[j][p];
        if (!module_is_zero(acc)) throw Error("internal: syzygy re-expansion failed");
        syz.push_back(std::move(s));
    }
    return syz;
}

}  // namespace traceideal
