#include "traceideal/ring.hpp"

#include <algorithm>
#include <sstream>

#include "traceideal/groebner.hpp"
#include "traceideal/polynomial.hpp"

namespace traceideal {

RingPtr Ring::make(std::vector<std::string> vars, FieldSpec field, MonomialOrder order) {
    if (static_cast<int>(vars.size()) > kMaxVars)
        throw DomainError("at most " + std::to_string(kMaxVars) + " variables supported");
    for (const auto& v : vars) {
        if (v.empty()) throw DomainError("empty variable name");
        if (v == "i") throw DomainError("'i' is reserved for the imaginary unit");
        if (std::count(vars.begin(), vars.end(), v) != 1)
            throw DomainError("duplicate variable name '" + v + "'");
    }
    auto r = std::shared_ptr<Ring>(new Ring());
    r->vars_ = std::move(vars);
    r->field_ = field;
    r->order_ = order;
    return r;
}

RingPtr Ring::quotient(const RingPtr& ambient, std::vector<Polynomial> qgens) {
    if (ambient->is_quotient()) throw DomainError("quotient of a quotient ring is not supported");
    std::vector<Polynomial> kept;
    for (auto& g : qgens) {
        check_compatible(ambient, g.ring());
        if (!g.is_zero()) kept.push_back(std::move(g));
    }
    if (kept.empty()) return ambient;
    auto r = std::shared_ptr<Ring>(new Ring());
    r->vars_ = ambient->vars_;
    r->field_ = ambient->field_;
    r->order_ = ambient->order_;
    r->ambient_cache_ = ambient;
    // re-anchor the generators' ring pointer to the shared ambient
    for (auto& g : kept) r->qgens_.push_back(ambient->convert(g));
    return r;
}

const std::vector<Polynomial>& Ring::quotient_gb() const {
    std::call_once(qgb_once_, [this] {
        if (!qgens_.empty()) qgb_ = buchberger(qgens_);
    });
    return qgb_;
}

Polynomial Ring::reduce(const Polynomial& p) const {
    check_compatible(shared_from_this(), p.ring());
    const auto& gb = quotient_gb();
    if (gb.empty()) return p;
    // reduction runs in the ambient ring, result re-anchored here
    Polynomial q = ambient()->convert(p);
    q = poly_reduce(q, gb);
    return convert(q);
}

RingPtr Ring::ambient() const {
    if (!is_quotient()) return shared_from_this();
    std::call_once(ambient_once_, [this] {
        if (!ambient_cache_) ambient_cache_ = make(vars_, field_, order_);
    });
    return ambient_cache_;
}

RingPtr Ring::with_order(MonomialOrder order) const {
    if (order == order_) return shared_from_this();
    auto amb = make(vars_, field_, order);
    if (!is_quotient()) return amb;
    std::vector<Polynomial> q;
    for (const auto& g : qgens_) q.push_back(amb->convert(g));
    return quotient(amb, std::move(q));
}

RingPtr Ring::prepend_vars(const std::vector<std::string>& fresh, MonomialOrder order) const {
    std::vector<std::string> vars = fresh;
    vars.insert(vars.end(), vars_.begin(), vars_.end());
    return make(std::move(vars), field_, order);
}

Polynomial Ring::convert(const Polynomial& p) const {
    const Ring& src = *p.ring();
    if (src.field_ != field_)
        throw ContextError("cannot convert between fields " + src.field_.str() + " and " +
                           field_.str());
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    const int n = nvars();
    if (src.nvars() == n && src.vars_ == vars_) {
        terms = p.terms();
        for (auto& t : terms) t.mon.nvars = static_cast<uint8_t>(n);
    } else {
        // map variables by name; unknown variables are an error
        std::vector<int> map(src.nvars(), -1);
        for (int i = 0; i < src.nvars(); ++i) {
            map[i] = var_index(src.vars_[i]);
        }
        for (const auto& t : p.terms()) {
            Monomial m = Monomial::one(n);
            for (int i = 0; i < src.nvars(); ++i) {
                if (t.mon.e[i] == 0) continue;
                if (map[i] < 0)
                    throw ContextError("variable '" + src.vars_[i] + "' missing in target ring");
                m.e[map[i]] = t.mon.e[i];
            }
            terms.push_back(Term{m, t.coef});
        }
    }
    return Polynomial::from_terms(shared_from_this(), std::move(terms));
}

int Ring::var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (vars_[i] == name) return i;
    return -1;
}

std::string Ring::fresh_var_name(const std::string& base) const {
    if (var_index(base) < 0) return base;
    for (int k = 1;; ++k) {
        std::string cand = base + std::to_string(k);
        if (var_index(cand) < 0) return cand;
    }
}

bool Ring::same_context(const Ring& o) const {
    if (this == &o) return true;
    if (vars_ != o.vars_ || field_ != o.field_) return false;
    if (qgens_.size() != o.qgens_.size()) return false;
    for (size_t i = 0; i < qgens_.size(); ++i) {
        // compare termwise; generators are anchored to possibly distinct
        // ambient objects, so compare raw terms
        const auto& a = qgens_[i].terms();
        const auto& b = o.qgens_[i].terms();
        if (a.size() != b.size()) return false;
        for (size_t j = 0; j < a.size(); ++j)
            if (a[j].mon != b[j].mon || a[j].coef != b[j].coef) return false;
    }
    return true;
}

bool Ring::compatible(const Ring& o) const {
    return order_ == o.order_ && same_context(o);
}

std::string Ring::str() const {
    std::ostringstream os;
    os << field_.str() << "[";
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (i) os << ",";
        os << vars_[i];
    }
    os << "]";
    if (is_quotient()) {
        os << "/(";
        for (size_t i = 0; i < qgens_.size(); ++i) {
            if (i) os << ", ";
            os << qgens_[i].str();
        }
        os << ")";
    }
    return os.str();
}

}  // namespace traceideal
