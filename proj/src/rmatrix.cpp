#include "qbrst/rmatrix.hpp"

namespace qbrst {

SMat rhat(int N) { return rhat(N, Scalar::q()); }

SMat rhat(int N, const Scalar& q) {
    const int n = N * N;
    Scalar l = q - q.inverse();
    SMat r = SMat::Zero(n, n);
    for (int i1 = 0; i1 < N; ++i1)
        for (int i2 = 0; i2 < N; ++i2)
            for (int j1 = 0; j1 < N; ++j1)
                for (int j2 = 0; j2 < N; ++j2) {
                    int a = i2, b = i1;
                    Scalar v;
                    if (a == j1 && b == j2) v += a == b ? q : Scalar(1);
                    if (a == j2 && b == j1 && a > b) v += l;
                    r(i1 * N + i2, j1 * N + j2) = v;
                }
    return r;
}

SMat rhat_inverse(int N) { return rhat_inverse(N, Scalar::q()); }

SMat rhat_inverse(int N, const Scalar& q) {
    SMat r = rhat(N, q);
    Scalar l = q - q.inverse();
    for (int i = 0; i < N * N; ++i) r(i, i) -= l;
    return r;
}

SMat dinv(int N) { return dinv(N, Scalar::q()); }

SMat dinv(int N, const Scalar& q) {
    SMat d = SMat::Zero(N, N);
    for (int i = 0; i < N; ++i) d(i, i) = q.pow(2 * (N - i) - 1);
    return d;
}

namespace {

// X2 = 1 (x) X : entry (i1*N+a, i1*N+b) is the generator a*N+b
template <class F>
void for_x2_row(int N, int row, F f) {
    int i1 = row / N, a = row % N;
    for (int b = 0; b < N; ++b) f(i1 * N + b, a * N + b);
}

// coefficients of the words g h in  P X2 Q X2 S ; rows = matrix entry (i,k), cols = (g,h)
SMat quadratic(const SMat& P, const SMat& Q, const SMat& S, int N) {
    const int n = N * N;
    SMat m = SMat::Zero(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a) {
            if (P(i, a).is_zero()) continue;
            for_x2_row(N, a, [&](int b, int g) {
                for (int c = 0; c < n; ++c) {
                    if (Q(b, c).is_zero()) continue;
                    Scalar pq = P(i, a) * Q(b, c);
                    for_x2_row(N, c, [&](int d, int h) {
                        for (int k = 0; k < n; ++k)
                            if (!S(d, k).is_zero()) m(i * n + k, g * n + h) += pq * S(d, k);
                    });
                }
            });
        }
    return m;
}

SMat linear(const SMat& P, const SMat& S, int N) {
    const int n = N * N;
    SMat m = SMat::Zero(n * n, n);
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a) {
            if (P(i, a).is_zero()) continue;
            for_x2_row(N, a, [&](int b, int g) {
                for (int k = 0; k < n; ++k)
                    if (!S(b, k).is_zero()) m(i * n + k, g) += P(i, a) * S(b, k);
            });
        }
    return m;
}

}

BraidPair reflection_braid(const SMat& r, int N) {
    const int n = N * N;
    SMat id = SMat::Identity(n, n);
    SMat m1 = quadratic(id, r, r, N);
    SMat m2 = quadratic(r, r, id, N);
    SMat b = linear(r, id, N) - linear(id, r, N);
    SMat rhs(n * n, n * n + n);
    rhs << m2, b;
    auto s = solve(m1, rhs);
    if (!s || s->kernel.cols() != 0) throw std::runtime_error("reflection_braid: quadratic part is not invertible");
    SMat sig = s->particular.leftCols(n * n), c = s->particular.rightCols(n);
    return {Tensor::from_matrix(sig, {n, n}, {n, n}), Tensor::from_matrix(c, {n, n}, {n})};
}

Tensor omega_braid(int N) { return reflection_braid(rhat_inverse(N), N).sigma; }

}
