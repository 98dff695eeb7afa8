#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qbrst/tensor.hpp"

namespace qbrst {

// chi_i chi_j - sigma^{mk}_{ij} chi_m chi_k = C^k_{ij} chi_k
// sigma: in (i,j), out (m,k).  C: in (i,j), out k.
struct QuantumLieAlgebra {
    int n_gen = 0;
    Tensor sigma;
    Tensor C;
};

struct AxiomReport {
    Tensor ybe;     // s12 s23 s12 - s23 s12 s23
    Tensor jacobi;  // C1 C - s23 C1 C - C2 C
    Tensor int3;    // C1 s - s23 s12 C2
    Tensor int3a;   // (s23 C1 + C2) s - s12 (s23 C1 + C2)
    Tensor p1c;     // P(1) C
    bool has_eigenvalue_one = false;
    // three graded parts of the consistency identity for chi chi chi
    Tensor co1_cubic, co1_quadratic, co1_linear;
    Tensor co1_linear_plus;  // same linear part with +C2, as printed in the combined identity

    bool ok() const {
        return ybe.is_zero() && jacobi.is_zero() && int3.is_zero() && int3a.is_zero() && p1c.is_zero() &&
               has_eigenvalue_one;
    }
    bool co1_ok() const { return co1_cubic.is_zero() && co1_quadratic.is_zero() && co1_linear.is_zero(); }
    // first failing check, empty when ok
    std::string first_failure() const;
};

struct AxiomFailure : std::runtime_error {
    AxiomReport report;
    AxiomFailure(const std::string& m, AxiomReport r) : std::runtime_error(m), report(std::move(r)) {}
};

void check_shape(const QuantumLieAlgebra& a);
AxiomReport check_axioms(const QuantumLieAlgebra& a);
Tensor ybe_residual(const Tensor& s);

// Spectral projector onto the eigenvalue-1 part of sigma (flow operator on two legs).
Tensor projector_one(const Tensor& sigma);

// (N+1)^2 x (N+1)^2 braid on the index set {0} u {1..N}; generator i sits at i+1.
Tensor build_extended_S(const QuantumLieAlgebra& a);

QuantumLieAlgebra derive_from_glq(int N);

// sigma = P, resp. the super-permutation for the given parities.
Tensor super_permutation(const std::vector<int>& parity);
QuantumLieAlgebra classical_lie(const Tensor& C);
QuantumLieAlgebra super_lie(const Tensor& C, const std::vector<int>& parity);

// structure constants of sl(2) in the basis (e, f, h) and of gl(1|1) in (E11, E12, E21, E22)
Tensor sl2_constants();
Tensor gl11_constants();
inline const std::vector<int> gl11_parity{0, 1, 1, 0};

// Builds and axiom-checks; throws AxiomFailure with the report attached.
QuantumLieAlgebra model_library(const std::string& name, const Tensor& C = {}, const std::vector<int>& parity = {},
                                int N = 2);

}
