#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "traceideal/field.hpp"
#include "traceideal/monomial.hpp"

namespace traceideal {

class Polynomial;
class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// A polynomial ring k[vars] or a quotient k[vars]/Q.  Immutable after
// construction; the reduced Groebner basis of Q is computed on first use.
class Ring : public std::enable_shared_from_this<Ring> {
  public:
    // Free polynomial ring.
    static RingPtr make(std::vector<std::string> vars, FieldSpec field,
                        MonomialOrder order = MonomialOrder::grevlex());
    // Quotient of `ambient` (which must be free) by the ideal generated by qgens.
    static RingPtr quotient(const RingPtr& ambient, std::vector<Polynomial> qgens);

    const std::vector<std::string>& vars() const { return vars_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const FieldSpec& field() const { return field_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Polynomial>& quotient_gens() const { return qgens_; }
    bool is_quotient() const { return !qgens_.empty(); }

    // Reduced Groebner basis of Q in the ambient ring (empty for a free ring).
    const std::vector<Polynomial>& quotient_gb() const;

    // Normal form modulo quotient_gb(); identity on free rings.
    Polynomial reduce(const Polynomial& p) const;

    // The free ring on the same variables, field and order.
    RingPtr ambient() const;

    // Same variables/field/Q under a different monomial order; polynomials
    // must be converted explicitly (see convert()).
    RingPtr with_order(MonomialOrder order) const;

    // Free ring with extra variables prepended (for elimination tricks).
    RingPtr prepend_vars(const std::vector<std::string>& fresh, MonomialOrder order) const;

    // Re-sort a polynomial from a structurally compatible ring into this one.
    Polynomial convert(const Polynomial& p) const;

    int var_index(const std::string& name) const;  // -1 if absent
    // A variable name not used by this ring ("t", "t1", "t2", ...).
    std::string fresh_var_name(const std::string& base) const;

    // Same variables, field and defining generators (order may differ).
    bool same_context(const Ring& o) const;
    // same_context and same order: required for mixing polynomials.
    bool compatible(const Ring& o) const;

    std::string str() const;

  private:
    Ring() = default;
    std::vector<std::string> vars_;
    FieldSpec field_;
    MonomialOrder order_;
    std::vector<Polynomial> qgens_;

    mutable std::once_flag qgb_once_;
    mutable std::vector<Polynomial> qgb_;
    mutable std::shared_ptr<const Ring> ambient_cache_;
    mutable std::once_flag ambient_once_;
};

inline void check_compatible(const RingPtr& a, const RingPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->compatible(*b))
        throw ContextError("ring context mismatch: " + (a ? a->str() : "null") + " vs " +
                           (b ? b->str() : "null"));
}

}  // namespace traceideal
