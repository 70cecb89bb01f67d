#pragma once

#include <optional>
#include <string>
#include <vector>

#include "traceideal/ideal.hpp"
#include "traceideal/polynomial.hpp"

namespace traceideal {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

PolyMatrix identity_matrix(const RingPtr& ring, int n, const Polynomial& diag);
PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix mat_sub(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix mat_transpose(const PolyMatrix& a);
std::vector<FreeModuleVector> mat_columns(const PolyMatrix& a);
std::vector<Polynomial> mat_entries(const PolyMatrix& a);

// Outcome of checking A*B == f*id and B*A == f*id; on failure carries the
// first offending entry and its residual.
struct FactorizationCheck {
    bool ok = false;
    int row = -1, col = -1;
    Polynomial residual;
    std::string which;  // "A*B" or "B*A"
};

FactorizationCheck verify_factorization(const PolyMatrix& A, const PolyMatrix& B,
                                        const Polynomial& f);

// A pair (A, B) of square matrices with A*B == B*A == f*id, exactly.
class MatrixFactorization {
  public:
    MatrixFactorization(PolyMatrix A, PolyMatrix B, Polynomial f);
    const PolyMatrix& A() const { return A_; }
    const PolyMatrix& B() const { return B_; }
    const Polynomial& f() const { return f_; }
    int rank() const { return static_cast<int>(A_.size()); }

  private:
    PolyMatrix A_, B_;
    Polynomial f_;
};

// The pair (z*id - phi, z*id + phi) for z-free phi with phi^2 == -g*id,
// a matrix factorization of z^2 + g.
class ZFormFactorization {
  public:
    // Validates that z does not occur in phi and that phi^2 == -g*id; on
    // failure reports the residual entry.
    ZFormFactorization(PolyMatrix phi, Polynomial g, int z_index);

    const PolyMatrix& phi() const { return phi_; }
    const Polynomial& g() const { return g_; }
    int z_index() const { return z_index_; }
    int rank() const { return static_cast<int>(phi_.size()); }
    const RingPtr& ring() const { return ring_; }  // ambient

    Polynomial hypersurface() const;  // z^2 + g
    PolyMatrix z_minus() const;       // z*id - phi
    PolyMatrix z_plus() const;        // z*id + phi
    ZFormFactorization transpose() const;
    bool zero_diagonal() const;

  private:
    PolyMatrix phi_;
    Polynomial g_;
    int z_index_;
    RingPtr ring_;
};

// Cor of the main theorem: for R = S[z]/(z^2+g) and M = coker(z*id - phi),
// the trace ideal of M is generated by the entries of z*id + phi.
Ideal trace_ideal_cor(const ZFormFactorization& zf, const RingPtr& R);

// ker(z*id - phi) == im(z*id + phi) as submodules of R^n, checked by mutual
// membership of generators.
bool ker_image_check(const ZFormFactorization& zf, const RingPtr& R);

// Requires R's defining ideal to be (z^2 + g) for zf's g.
void check_zform_ring(const ZFormFactorization& zf, const RingPtr& R);

}  // namespace traceideal
