#include "traceideal/ideal.hpp"

#include <algorithm>

#include "traceideal/printer.hpp"

namespace traceideal {

namespace {

// generators + Q, anchored in the ambient ring
std::vector<Polynomial> ambient_preimage(const RingPtr& ring, const std::vector<Polynomial>& gens) {
    RingPtr amb = ring->ambient();
    std::vector<Polynomial> out;
    for (const auto& g : gens) out.push_back(amb->convert(g));
    for (const auto& q : ring->quotient_gb()) out.push_back(amb->convert(q));
    return out;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) {
        // generators may arrive anchored in the quotient or its ambient ring
        Polynomial r = ring_->reduce(ring_->convert(g));
        if (!r.is_zero()) gens_.push_back(std::move(r));
    }
    gb_ = buchberger(ambient_preimage(ring_, gens_));
}

Ideal Ideal::unit(const RingPtr& ring) {
    return Ideal(ring, {Polynomial::from_int(ring, 1)});
}

bool Ideal::is_zero() const {
    const auto& qgb = ring_->quotient_gb();
    if (gb_.size() != qgb.size()) return false;
    RingPtr amb = ring_->ambient();
    for (size_t i = 0; i < gb_.size(); ++i)
        if (gb_[i] != amb->convert(qgb[i])) return false;
    return true;
}

bool Ideal::is_unit() const {
    return gb_.size() == 1 && gb_[0].is_constant() && !gb_[0].is_zero();
}

bool Ideal::contains(const Polynomial& f) const {
    check_compatible(ring_, f.ring());
    Polynomial g = ring_->ambient()->convert(f);
    return normal_form(g, gb_).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
    check_compatible(ring_, other.ring_);
    for (const auto& g : other.gb_)
        if (!normal_form(g, gb_).is_zero()) return false;
    return true;
}

bool Ideal::operator==(const Ideal& o) const {
    check_compatible(ring_, o.ring_);
    if (gb_.size() != o.gb_.size()) return false;
    for (size_t i = 0; i < gb_.size(); ++i)
        if (gb_[i] != o.gb_[i]) return false;
    return true;
}

bool Ideal::radical_contains(const Polynomial& f) const {
    check_compatible(ring_, f.ring());
    if (contains(f)) return true;
    RingPtr amb = ring_->ambient();
    std::string sname = amb->fresh_var_name("s");
    RingPtr ext = amb->prepend_vars({sname}, amb->order());
    std::vector<Polynomial> gens;
    for (const auto& g : gb_) gens.push_back(ext->convert(g));
    // 1 - s*f
    Polynomial s = Polynomial::variable(ext, 0);
    gens.push_back(Polynomial::from_int(ext, 1) - s * ext->convert(amb->convert(f)));
    std::vector<Polynomial> gb = buchberger(gens);
    return normal_form(Polynomial::from_int(ext, 1), gb).is_zero();
}

std::string Ideal::str() const {
    if (is_zero()) return "(0)";
    if (is_unit()) return "(1)";
    // display generators: the canonical basis with members of Q reduced away
    // (they are zero in the quotient and add no information)
    std::vector<Polynomial> shown;
    for (const auto& g : gb_) {
        Polynomial r = ring_->reduce(ring_->convert(g));
        if (!r.is_zero()) shown.push_back(ring_->ambient()->convert(g));
    }
    if (shown.empty()) return "(0)";
    return print_generators(shown);
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    check_compatible(a.ring(), b.ring());
    std::vector<Polynomial> gens = a.gens();
    for (const auto& g : b.gens()) gens.push_back(g);
    return Ideal(a.ring(), std::move(gens));
}

namespace {

// Intersection of two ambient ideals via elimination of a fresh variable t
// from t*A + (1-t)*B; t gets its own dominant block so the basis elements
// free of t cut out the elimination ideal.
std::vector<Polynomial> intersect_ambient(const RingPtr& amb, const std::vector<Polynomial>& A,
                                          const std::vector<Polynomial>& B) {
    std::string tname = amb->fresh_var_name("t");
    RingPtr ext = amb->prepend_vars({tname}, MonomialOrder::block_elim(1));
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one_minus_t = Polynomial::from_int(ext, 1) - t;

    std::vector<Polynomial> gens;
    for (const auto& g : A) gens.push_back(t * ext->convert(g));
    for (const auto& g : B) gens.push_back(one_minus_t * ext->convert(g));
    std::vector<Polynomial> gb = buchberger(gens);

    std::vector<Polynomial> result;
    for (const auto& g : gb)
        if (!g.involves_var(0)) result.push_back(amb->convert(g));
    return result;
}

}  // namespace

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
    check_compatible(a.ring(), b.ring());
    RingPtr amb = a.ring()->ambient();
    std::vector<Polynomial> result = intersect_ambient(amb, a.groebner(), b.groebner());
    std::vector<Polynomial> anchored;
    for (const auto& g : result) anchored.push_back(a.ring()->convert(g));
    return Ideal(a.ring(), std::move(anchored));
}

Ideal ideal_quotient(const Ideal& a, const Ideal& b) {
    check_compatible(a.ring(), b.ring());
    const RingPtr& ring = a.ring();
    // (a : 0) is the unit ideal
    std::vector<Polynomial> nonzero;
    for (const auto& f : b.gens())
        if (!f.is_zero()) nonzero.push_back(f);
    if (nonzero.empty()) return Ideal::unit(ring);

    bool first = true;
    Ideal acc = Ideal::unit(ring);
    RingPtr amb = ring->ambient();
    for (const auto& f : nonzero) {
        // (a' : f) = (1/f) * (a' intersect f*S) in the ambient ring; the
        // principal ideal must not absorb Q or the division stops being exact
        Polynomial af = amb->convert(f);
        std::vector<Polynomial> meet = intersect_ambient(amb, a.groebner(), {af});
        std::vector<Polynomial> divided;
        for (const auto& g : meet) {
            DivModResult d = poly_divmod(g, {af});
            if (!d.remainder.is_zero())
                throw Error("internal: colon ideal division was not exact");
            divided.push_back(ring->convert(d.quotients[0]));
        }
        Ideal colon(ring, std::move(divided));
        acc = first ? colon : ideal_intersection(acc, colon);
        first = false;
    }
    return acc;
}

}  // namespace traceideal
