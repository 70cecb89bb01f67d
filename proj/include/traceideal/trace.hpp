#pragma once

#include <optional>
#include <vector>

#include "traceideal/ideal.hpp"
#include "traceideal/matfac.hpp"

namespace traceideal {

// M = coker(A : R^m -> R^n), entries reduced mod Q.
struct ModulePresentation {
    RingPtr ring;
    PolyMatrix A;

    ModulePresentation(RingPtr r, PolyMatrix a);
    int rows() const { return static_cast<int>(A.size()); }
    int cols() const { return A.empty() ? 0 : static_cast<int>(A[0].size()); }
};

// Generators of ker(A : R^m -> R^n) as an R-submodule of R^m, by the
// lift-project construction: append q*e_i columns for every defining
// generator q of Q, take syzygies over the ambient ring, and project onto
// the A-column coordinates.  Each returned vector satisfies A*v == 0 mod Q
// (re-checked by expansion).
std::vector<FreeModuleVector> kernel_over_quotient(const PolyMatrix& A, const RingPtr& R);

// Submodule equality of N1 and N2 inside R^rank, by mutual membership of
// generators (Q*e_i relations adjoined on both sides).
bool submodules_equal_over_quotient(const std::vector<FreeModuleVector>& N1,
                                    const std::vector<FreeModuleVector>& N2, const RingPtr& R,
                                    int rank);

// Hom(M, R) realized as ker(A^T); the trace ideal is generated by all entries
// of all kernel generators.
Ideal trace_ideal_oracle(const ModulePresentation& P);

// One catalog-style module: either a z-form factorization (trace ideal via
// the corollary) or a plain presentation (trace ideal via the oracle).
struct McmModule {
    std::optional<ZFormFactorization> zform;
    std::optional<ModulePresentation> presentation;

    static McmModule from_zform(ZFormFactorization zf);
    static McmModule from_presentation(ModulePresentation p);
    ModulePresentation as_presentation(const RingPtr& R) const;  // z*id - phi for z-forms
};

// Intersection of the per-module trace ideals; empty list yields (1) (the
// regular-ring convention) and sets *warned when provided.
Ideal mcm_test_ideal(const std::vector<McmModule>& modules, const RingPtr& R,
                     bool* warned = nullptr);

// Trace ideal of the block-diagonal presentation of M1 (+) M2.
Ideal direct_sum_trace(const ModulePresentation& P1, const ModulePresentation& P2);

}  // namespace traceideal
