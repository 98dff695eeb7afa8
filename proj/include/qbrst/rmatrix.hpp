#pragma once

#include "qbrst/linalg.hpp"
#include "qbrst/tensor.hpp"

namespace qbrst {

// GL_q(N) R-matrix with the transposition folded in, R-hat = P R.
// Row/column index i1*N+i2 (standard matrix convention, not flow).
SMat rhat(int N);
SMat rhat_inverse(int N);  // R-hat - lambda, by Hecke
SMat dinv(int N);          // diag(q^{2(N-i)+1}), i = 1..N
// same with q replaced by a value (q = 1 gives R-hat = P)
SMat rhat(int N, const Scalar& q);
SMat rhat_inverse(int N, const Scalar& q);
SMat dinv(int N, const Scalar& q);

// Braid and linear part read off  X2 R X2 R - R X2 R X2 = R X2 - X2 R  for an N^2 x N^2 matrix R,
// with generator X^a_b at index a*N+b. sigma and C are returned as flow tensors.
struct BraidPair {
    Tensor sigma;
    Tensor C;
};
BraidPair reflection_braid(const SMat& r, int N);

// Braid whose left kernel of (1 - sigma) spans the omega-omega relations
// omega2 R^-1 omega2 R + R^-1 omega2 R^-1 omega2 = 0: the reflection braid of R-hat^-1.
Tensor omega_braid(int N);

}
