#include "traceideal/trace.hpp"

namespace traceideal {

ModulePresentation::ModulePresentation(RingPtr r, PolyMatrix a) : ring(std::move(r)), A(std::move(a)) {
    if (A.empty() || A[0].empty()) throw DomainError("presentation matrix must be nonempty");
    size_t w = A[0].size();
    for (auto& row : A) {
        if (row.size() != w) throw DomainError("ragged presentation matrix");
        for (auto& e : row) e = ring->reduce(ring->convert(e));
    }
}

std::vector<FreeModuleVector> kernel_over_quotient(const PolyMatrix& A, const RingPtr& R) {
    RingPtr amb = R->ambient();
    size_t n = A.size();
    size_t m = A[0].size();

    // matrix entries re-anchored in R (inputs may come in ambient form)
    PolyMatrix aR(n, std::vector<Polynomial>(m, Polynomial::zero(R)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) aR[i][j] = R->reduce(R->convert(A[i][j]));

    // columns of A over the ambient ring, then q*e_i for each defining q
    std::vector<FreeModuleVector> gens;
    for (const auto& col : mat_columns(aR)) {
        FreeModuleVector v;
        for (const auto& e : col) v.push_back(amb->convert(e));
        gens.push_back(std::move(v));
    }
    for (const auto& q : R->quotient_gens()) {
        Polynomial aq = amb->convert(q);
        for (size_t i = 0; i < n; ++i) {
            FreeModuleVector v(n, Polynomial::zero(amb));
            v[i] = aq;
            gens.push_back(std::move(v));
        }
    }

    std::vector<FreeModuleVector> syz = syzygy_basis(gens, ModuleOrder{amb->order()});

    std::vector<FreeModuleVector> kernel;
    for (const auto& s : syz) {
        FreeModuleVector v;
        for (size_t j = 0; j < m; ++j) v.push_back(R->reduce(R->convert(s[j])));
        if (module_is_zero(v)) continue;
        // contract: A*v == 0 in R
        for (size_t i = 0; i < n; ++i) {
            Polynomial acc = Polynomial::zero(R);
            for (size_t j = 0; j < m; ++j) acc = acc + aR[i][j] * v[j];
            if (!R->reduce(acc).is_zero()) throw Error("internal: kernel re-expansion failed");
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

bool submodules_equal_over_quotient(const std::vector<FreeModuleVector>& N1,
                                    const std::vector<FreeModuleVector>& N2, const RingPtr& R,
                                    int rank) {
    RingPtr amb = R->ambient();
    ModuleOrder mo{amb->order()};

    auto lift = [&](const std::vector<FreeModuleVector>& gens) {
        std::vector<FreeModuleVector> out;
        for (const auto& v : gens) {
            FreeModuleVector w;
            for (const auto& e : v) w.push_back(amb->convert(e));
            out.push_back(std::move(w));
        }
        for (const auto& q : R->quotient_gens()) {
            Polynomial aq = amb->convert(q);
            for (int i = 0; i < rank; ++i) {
                FreeModuleVector v(rank, Polynomial::zero(amb));
                v[i] = aq;
                out.push_back(std::move(v));
            }
        }
        return out;
    };

    std::vector<FreeModuleVector> gb1 = module_buchberger(lift(N1), mo);
    std::vector<FreeModuleVector> gb2 = module_buchberger(lift(N2), mo);
    for (const auto& v : lift(N1))
        if (!module_is_zero(module_normal_form(v, gb2, mo))) return false;
    for (const auto& v : lift(N2))
        if (!module_is_zero(module_normal_form(v, gb1, mo))) return false;
    return true;
}

Ideal trace_ideal_oracle(const ModulePresentation& P) {
    // Hom(coker A, R) = {v in R^n : v^T A = 0} = ker(A^T)
    std::vector<FreeModuleVector> kernel = kernel_over_quotient(mat_transpose(P.A), P.ring);
    std::vector<Polynomial> gens;
    for (const auto& v : kernel)
        for (const auto& e : v) gens.push_back(e);
    return Ideal(P.ring, std::move(gens));
}

McmModule McmModule::from_zform(ZFormFactorization zf) {
    McmModule m;
    m.zform = std::move(zf);
    return m;
}

McmModule McmModule::from_presentation(ModulePresentation p) {
    McmModule m;
    m.presentation = std::move(p);
    return m;
}

ModulePresentation McmModule::as_presentation(const RingPtr& R) const {
    if (presentation) return *presentation;
    PolyMatrix A = zform->z_minus();
    for (auto& row : A)
        for (auto& e : row) e = R->convert(e);
    return ModulePresentation(R, std::move(A));
}

Ideal mcm_test_ideal(const std::vector<McmModule>& modules, const RingPtr& R, bool* warned) {
    if (warned) *warned = false;
    if (modules.empty()) {
        if (warned) *warned = true;
        return Ideal::unit(R);
    }
    bool first = true;
    Ideal acc = Ideal::unit(R);
    for (const auto& m : modules) {
        Ideal tau = m.zform ? trace_ideal_cor(*m.zform, R) : trace_ideal_oracle(*m.presentation);
        acc = first ? tau : ideal_intersection(acc, tau);
        first = false;
    }
    return acc;
}

Ideal direct_sum_trace(const ModulePresentation& P1, const ModulePresentation& P2) {
    check_compatible(P1.ring, P2.ring);
    const RingPtr& R = P1.ring;
    int n = P1.rows() + P2.rows();
    int m = P1.cols() + P2.cols();
    PolyMatrix A(n, std::vector<Polynomial>(m, Polynomial::zero(R)));
    for (int i = 0; i < P1.rows(); ++i)
        for (int j = 0; j < P1.cols(); ++j) A[i][j] = P1.A[i][j];
    for (int i = 0; i < P2.rows(); ++i)
        for (int j = 0; j < P2.cols(); ++j) A[P1.rows() + i][P1.cols() + j] = P2.A[i][j];
    return trace_ideal_oracle(ModulePresentation(R, std::move(A)));
}

}  // namespace traceideal
