#include "qbrst/qla.hpp"

#include "qbrst/rmatrix.hpp"

namespace qbrst {

namespace {

int dim_of(const Tensor& t) { return t.legs().at(0).dim; }

Tensor identity_like(const Tensor& sigma) { return Tensor::identity(dim_of(sigma), 2); }

// structure constants of [x_i, x_j} in the span of the given matrices
Tensor constants_from_matrices(const std::vector<QMat>& basis, const std::vector<int>& parity) {
    const int n = int(basis.size());
    const int d = int(basis[0].rows());
    QMat B(d * d, n);
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) B(a * d + b, k) = basis[k](a, b);
    Tensor c = Tensor::op({n, n}, {n});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int s = (parity[i] * parity[j]) % 2 ? -1 : 1;
            QMat br = basis[i] * basis[j] - Rational(s) * (basis[j] * basis[i]);
            QMat v(d * d, 1);
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) v(a * d + b, 0) = br(a, b);
            auto sol = solve(B, v);
            if (!sol) throw std::logic_error("bracket leaves the span");
            for (int k = 0; k < n; ++k) c.set({i, j, k}, Scalar::rational(sol->particular(k, 0)));
        }
    return c;
}

QMat mat2(int a, int b, int c, int d) {
    QMat m(2, 2);
    m << a, b, c, d;
    return m;
}

}

std::string AxiomReport::first_failure() const {
    if (!has_eigenvalue_one) return "eigenvalue-one";
    if (!ybe.is_zero()) return "yang-baxter";
    if (!jacobi.is_zero()) return "jacobi";
    if (!int3.is_zero()) return "int3";
    if (!int3a.is_zero()) return "int3a";
    if (!p1c.is_zero()) return "p1c";
    return {};
}

void check_shape(const QuantumLieAlgebra& a) {
    const int n = a.n_gen;
    if (a.sigma.legs() != Tensor::op(n, 2, 2).legs()) throw ShapeError("sigma must have two in- and two out-legs of dim N");
    if (a.C.legs() != Tensor::op({n, n}, {n}).legs()) throw ShapeError("C must have two in-legs and one out-leg of dim N");
}

Tensor ybe_residual(const Tensor& s) {
    int d = dim_of(s);
    Tensor s12 = embed(s, 3, 1, d), s23 = embed(s, 3, 2, d);
    return compose({s12, s23, s12}) - compose({s23, s12, s23});
}

Tensor projector_one(const Tensor& sigma) {
    const int n2 = int(sigma.rows());
    SMat a = sigma.to_matrix() - SMat::Identity(n2, n2);
    // Fitting decomposition: ker a^m (+) im a^m once the rank stops dropping
    SMat am = a;
    int r = rank(am);
    for (;;) {
        SMat next = am * a;
        int rn = rank(next);
        if (rn == r) break;
        am = next;
        r = rn;
    }
    SMat ker = kernel(am);
    auto e = rref(to_rows(am));  // pivot columns span the image
    SMat basis(n2, n2);
    int k = int(ker.cols());
    basis.leftCols(k) = ker;
    for (size_t i = 0; i < e.pivots.size(); ++i) basis.col(k + int(i)) = am.col(e.pivots[i]);
    if (k + int(e.pivots.size()) != n2) throw std::logic_error("projector_one: decomposition is not direct");
    SMat diag = SMat::Zero(n2, n2);
    for (int i = 0; i < k; ++i) diag(i, i) = 1;
    auto inv = inverse(basis);
    if (!inv) throw std::logic_error("projector_one: singular basis");
    SMat p = basis * diag * *inv;
    return Tensor::from_matrix(p, {dim_of(sigma), dim_of(sigma)}, {dim_of(sigma), dim_of(sigma)});
}

AxiomReport check_axioms(const QuantumLieAlgebra& a) {
    check_shape(a);
    const int n = a.n_gen;
    const Tensor& s = a.sigma;
    const Tensor& C = a.C;
    Tensor I1 = Tensor::identity(n);
    Tensor s12 = embed(s, 3, 1, n), s23 = embed(s, 3, 2, n);
    Tensor C1 = kron(C, I1), C2 = kron(I1, C);

    AxiomReport r;
    r.ybe = ybe_residual(s);
    Tensor c1c = compose(C1, C), c2c = compose(C2, C), s23c1c = compose({s23, C1, C});
    r.jacobi = c1c - s23c1c - c2c;
    r.int3 = compose(C1, s) - compose({s23, s12, C2});
    Tensor mix = compose(s23, C1) + C2;
    r.int3a = compose(mix, s) - compose(s12, mix);

    Tensor one_minus = identity_like(s) - s;
    r.has_eigenvalue_one = rank(one_minus.to_matrix()) < int(one_minus.rows());
    r.p1c = compose(projector_one(s), C);

    r.co1_cubic = r.ybe;
    r.co1_quadratic = r.int3a - r.int3;
    r.co1_linear = c1c - s23c1c - c2c;
    r.co1_linear_plus = c1c - s23c1c + c2c;
    return r;
}

Tensor build_extended_S(const QuantumLieAlgebra& a) {
    check_shape(a);
    const int n = a.n_gen, m = n + 1;
    Tensor S = Tensor::op(m, 2, 2);
    for (auto& [k, v] : a.sigma.entries()) {
        Index ix = a.sigma.unpack(k);
        S.set({ix[0] + 1, ix[1] + 1, ix[2] + 1, ix[3] + 1}, v);
    }
    for (auto& [k, v] : a.C.entries()) {
        Index ix = a.C.unpack(k);
        S.set({ix[0] + 1, ix[1] + 1, 0, ix[2] + 1}, v);
    }
    // the unit index braids by plain transposition
    for (int b = 0; b < m; ++b) {
        S.set({0, b, b, 0}, 1);
        S.set({b, 0, 0, b}, 1);
    }
    return S;
}

QuantumLieAlgebra derive_from_glq(int N) {
    if (N < 1) throw std::invalid_argument("derive_from_glq: N >= 1");
    auto bp = reflection_braid(rhat(N), N);
    return {N * N, bp.sigma, bp.C};
}

Tensor super_permutation(const std::vector<int>& parity) {
    const int n = int(parity.size());
    Tensor s = Tensor::op(n, 2, 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s.set({i, j, j, i}, (parity[i] * parity[j]) % 2 ? -1 : 1);
    return s;
}

QuantumLieAlgebra classical_lie(const Tensor& C) {
    int n = C.legs().at(0).dim;
    return {n, Tensor::permutation(n), C};
}

QuantumLieAlgebra super_lie(const Tensor& C, const std::vector<int>& parity) {
    return {int(parity.size()), super_permutation(parity), C};
}

Tensor sl2_constants() {
    return constants_from_matrices({mat2(0, 1, 0, 0), mat2(0, 0, 1, 0), mat2(1, 0, 0, -1)}, {0, 0, 0});
}

Tensor gl11_constants() {
    return constants_from_matrices({mat2(1, 0, 0, 0), mat2(0, 1, 0, 0), mat2(0, 0, 1, 0), mat2(0, 0, 0, 1)},
                                   gl11_parity);
}

QuantumLieAlgebra model_library(const std::string& name, const Tensor& C, const std::vector<int>& parity, int N) {
    QuantumLieAlgebra a;
    if (name == "classical_lie" || name == "sl2") a = classical_lie(C.rank() ? C : sl2_constants());
    else if (name == "super_lie" || name == "gl11")
        a = C.rank() ? super_lie(C, parity) : super_lie(gl11_constants(), gl11_parity);
    else if (name == "glq") a = derive_from_glq(N);
    else throw std::invalid_argument("unknown model: " + name);
    auto rep = check_axioms(a);
    if (!rep.ok()) throw AxiomFailure(name + ": axiom " + rep.first_failure() + " fails", rep);
    return a;
}

}
