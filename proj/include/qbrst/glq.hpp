#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qbrst/linalg.hpp"
#include "qbrst/ncring.hpp"

namespace qbrst {

struct InvariantFailure : std::logic_error {
    using std::logic_error::logic_error;
};

// Family ids inside the T, omega, L, L^-1, J alphabet.
enum GlqFam { fT = 0, fW = 1, fL = 2, fLi = 3, fJ = 4 };

struct GlqInstance {
    int N = 0;
    Scalar q, lambda;
    SMat rhat, rhat_inv, dinv;  // N^2 x N^2, N x N
    std::shared_ptr<RelationSet> rels;

    int n() const { return N * N; }
    NCMatrix gen(GlqFam f) const { return NCMatrix::generator(rels->alphabet(), f); }
    NCMatrix R() const { return NCMatrix::scalar(rhat); }
    NCMatrix Ri() const { return NCMatrix::scalar(rhat_inv); }
};

struct InvariantResiduals {
    SMat hecke;     // R^2 - lambda R - 1
    SMat dtrace;    // Tr_1(D_1^-1 R^-1) - 1
    SMat qtr_r;     // Tr_q1(R) - q^{2N}
    SMat qtr_rinv;  // Tr_q1(R^-1 + lambda) - q^{2N}
    bool ok() const;
};

SMat kron(const SMat& a, const SMat& b);
InvariantResiduals glq_invariants(int N, const Scalar& q);
// Tr_{q1}(X) for an N^2 x N^2 scalar matrix: contraction of the first space with D^-1.
SMat qtrace1(const SMat& x, const SMat& dinv, int N);

// q empty: generic q. T, omega, L, J relations plus L L^-1 = L^-1 L = 1.
GlqInstance build_instance(int N, std::optional<Scalar> q = std::nullopt);

NCPoly qtrace(const NCMatrix& m, const GlqInstance& g);
NCMatrix mmul(const NCMatrix& a, const NCMatrix& b, const GlqInstance& g);
NCMatrix mmul(const std::vector<NCMatrix>& chain, const GlqInstance& g);
// commutator P X - X P (sign -1) or anticommutator (sign +1), entrywise
NCMatrix bracket(const NCPoly& p, const NCMatrix& x, int sign, const GlqInstance& g);
NCPoly bracket(const NCPoly& a, const NCPoly& b, int sign, RelationSet& rs);

struct IdentityResult {
    std::string name;
    size_t residual_terms = 0;
    size_t expr_terms = 0;
    double seconds = 0;
    bool ok() const { return residual_terms == 0; }
};

struct IdentityReport {
    std::vector<IdentityResult> items;
    bool ok() const;
    std::string first_failure() const;  // empty when ok
    const IdentityResult* find(const std::string& name) const;
};

// trace summands of Q: omega (L-1)/lambda + sum_k (-1)^k lambda^{k-1} omega L (omega J)^k
// weights[k] (k >= 1) multiplies the k-th summand; empty = as printed
NCMatrix q_summands(const GlqInstance& g, const std::vector<Scalar>& weights = {});
NCPoly build_Q(const GlqInstance& g);
NCPoly build_Q_weighted(const GlqInstance& g, const std::vector<Scalar>& weights);
// N = 2 weights for which Q^2 = 0, [Q,omega]+ = -omega^2 and the Cartan identity hold
std::vector<Scalar> adjusted_weights_n2();
IdentityReport verify_brst_identities(const GlqInstance& g, const NCPoly& Q);

NCPoly build_Qstar(const GlqInstance& g);
IdentityReport verify_qstar_identities(const GlqInstance& g, const NCPoly& Qs);

// U = W L^-1 Wbar with W = 1 + lambda omega J, Wbar = 1 + lambda J omega
NCMatrix build_current_U(const GlqInstance& g);
IdentityReport verify_current(const GlqInstance& g, const NCMatrix& U);

NCPoly build_laplacian(const GlqInstance& g, const NCPoly& Q, const NCPoly& Qs);
NCPoly laplacian_closed_form(const GlqInstance& g);
IdentityReport verify_laplacian(const GlqInstance& g, const NCPoly& Q, const NCPoly& Qs);

// Tr_q(omega^n), n = 1, 3, ..., 2N-1
std::vector<NCPoly> cohomology_generators(const GlqInstance& g);
IdentityReport verify_cohomology(const GlqInstance& g);

// q = 1 algebra of omega~, chi~, gamma~ and its checks
struct ClassicalModel {
    int N = 0;
    std::shared_ptr<RelationSet> rels;
    NCMatrix omega, chi, gamma;
};
ClassicalModel build_classical(int N);
IdentityReport classical_limit_check(int N);

// graded dimensions of normal words with exactly k letters, k = 0..max_letters
std::vector<long> graded_dims(RelationSet& rs, int max_letters);
struct FlatnessReport {
    std::vector<long> generic, classical;
    bool ok() const { return generic == classical; }
};
FlatnessReport flatness_check(int N, int max_letters);

}
