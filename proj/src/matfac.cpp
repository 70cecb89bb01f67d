#include "traceideal/matfac.hpp"

#include "traceideal/printer.hpp"
#include "traceideal/trace.hpp"

namespace traceideal {

PolyMatrix identity_matrix(const RingPtr& ring, int n, const Polynomial& diag) {
    PolyMatrix m(n, std::vector<Polynomial>(n, Polynomial::zero(ring)));
    for (int i = 0; i < n; ++i) m[i][i] = diag;
    return m;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    size_t n = a.size(), k = b.size(), m = b[0].size();
    const RingPtr& ring = a[0][0].ring();
    PolyMatrix r(n, std::vector<Polynomial>(m, Polynomial::zero(ring)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t l = 0; l < k; ++l) r[i][j] = r[i][j] + a[i][l] * b[l][j];
    return r;
}

PolyMatrix mat_sub(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix r = a;
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r[i].size(); ++j) r[i][j] = r[i][j] - b[i][j];
    return r;
}

PolyMatrix mat_transpose(const PolyMatrix& a) {
    size_t n = a.size(), m = a[0].size();
    PolyMatrix r(m, std::vector<Polynomial>(n, Polynomial::zero(a[0][0].ring())));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) r[j][i] = a[i][j];
    return r;
}

std::vector<FreeModuleVector> mat_columns(const PolyMatrix& a) {
    size_t n = a.size(), m = a[0].size();
    std::vector<FreeModuleVector> cols(m, FreeModuleVector(n, Polynomial::zero(a[0][0].ring())));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) cols[j][i] = a[i][j];
    return cols;
}

std::vector<Polynomial> mat_entries(const PolyMatrix& a) {
    std::vector<Polynomial> out;
    for (const auto& row : a)
        for (const auto& e : row) out.push_back(e);
    return out;
}

FactorizationCheck verify_factorization(const PolyMatrix& A, const PolyMatrix& B,
                                        const Polynomial& f) {
    size_t n = A.size();
    if (n == 0 || A[0].size() != n || B.size() != n || B[0].size() != n)
        throw DomainError("matrix factorization requires square matrices of equal size");
    const RingPtr& ring = f.ring();
    PolyMatrix fid = identity_matrix(ring, static_cast<int>(n), f);
    for (auto [prod, name] : {std::pair{mat_mul(A, B), "A*B"}, std::pair{mat_mul(B, A), "B*A"}}) {
        PolyMatrix res = mat_sub(prod, fid);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (!res[i][j].is_zero())
                    return FactorizationCheck{false, static_cast<int>(i), static_cast<int>(j),
                                              res[i][j], name};
    }
    FactorizationCheck ok;
    ok.ok = true;
    ok.residual = Polynomial::zero(ring);
    return ok;
}

MatrixFactorization::MatrixFactorization(PolyMatrix A, PolyMatrix B, Polynomial f)
    : A_(std::move(A)), B_(std::move(B)), f_(std::move(f)) {
    FactorizationCheck c = verify_factorization(A_, B_, f_);
    if (!c.ok)
        throw ValidationError("not a matrix factorization of " + f_.str() + ": " + c.which +
                              " residual " + c.residual.str() + " at (" + std::to_string(c.row + 1) +
                              "," + std::to_string(c.col + 1) + ")");
}

ZFormFactorization::ZFormFactorization(PolyMatrix phi, Polynomial g, int z_index)
    : phi_(std::move(phi)), g_(std::move(g)), z_index_(z_index) {
    size_t n = phi_.size();
    if (n == 0 || phi_[0].size() != n) throw DomainError("phi must be square");
    ring_ = phi_[0][0].ring();
    if (ring_->is_quotient()) throw DomainError("phi must live over the ambient polynomial ring");
    check_compatible(ring_, g_.ring());
    if (z_index_ < 0 || z_index_ >= ring_->nvars()) throw DomainError("bad z variable index");
    const std::string& zname = ring_->vars()[z_index_];
    if (g_.involves_var(z_index_))
        throw ValidationError("g involves the distinguished variable " + zname);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (phi_[i][j].involves_var(z_index_))
                throw ValidationError("phi entry (" + std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + ") involves the distinguished variable " +
                                      zname);
    // phi^2 == -g * id
    PolyMatrix sq = mat_mul(phi_, phi_);
    PolyMatrix want = identity_matrix(ring_, static_cast<int>(n), -g_);
    PolyMatrix res = mat_sub(sq, want);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (!res[i][j].is_zero())
                throw ValidationError("phi^2 != -g*id: residual " + res[i][j].str() + " at (" +
                                      std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
}

Polynomial ZFormFactorization::hypersurface() const {
    return Polynomial::variable(ring_, z_index_, 2) + g_;
}

PolyMatrix ZFormFactorization::z_minus() const {
    Polynomial z = Polynomial::variable(ring_, z_index_);
    return mat_sub(identity_matrix(ring_, rank(), z), phi_);
}

PolyMatrix ZFormFactorization::z_plus() const {
    Polynomial z = Polynomial::variable(ring_, z_index_);
    PolyMatrix m = identity_matrix(ring_, rank(), z);
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) m[i][j] = m[i][j] + phi_[i][j];
    return m;
}

ZFormFactorization ZFormFactorization::transpose() const {
    return ZFormFactorization(mat_transpose(phi_), g_, z_index_);
}

bool ZFormFactorization::zero_diagonal() const {
    for (int i = 0; i < rank(); ++i)
        if (!phi_[i][i].is_zero()) return false;
    return true;
}

void check_zform_ring(const ZFormFactorization& zf, const RingPtr& R) {
    if (!R->is_quotient()) throw ContextError("expected a quotient ring R = S/(z^2+g)");
    RingPtr amb = R->ambient();
    if (!amb->compatible(*zf.ring()))
        throw ContextError("factorization and ring contexts differ: " + zf.ring()->str() + " vs " +
                           R->str());
    // defining ideal must equal (z^2 + g)
    std::vector<Polynomial> want = buchberger({amb->convert(zf.hypersurface())});
    const auto& have = R->quotient_gb();
    bool same = want.size() == have.size();
    for (size_t i = 0; same && i < want.size(); ++i)
        if (want[i] != amb->convert(have[i])) same = false;
    if (!same)
        throw ContextError("ring is not S/(z^2+g) for this factorization: defining ideal " +
                           print_generators(have) + ", hypersurface " + zf.hypersurface().str());
}

Ideal trace_ideal_cor(const ZFormFactorization& zf, const RingPtr& R) {
    check_zform_ring(zf, R);
    std::vector<Polynomial> gens;
    for (const auto& e : mat_entries(zf.z_plus())) gens.push_back(R->convert(e));
    return Ideal(R, std::move(gens));
}

bool ker_image_check(const ZFormFactorization& zf, const RingPtr& R) {
    check_zform_ring(zf, R);
    std::vector<FreeModuleVector> kernel = kernel_over_quotient(zf.z_minus(), R);
    std::vector<FreeModuleVector> image = mat_columns(zf.z_plus());
    return submodules_equal_over_quotient(kernel, image, R, zf.rank());
}

}  // namespace traceideal
