#include "qbrst/wedge.hpp"

namespace qbrst {

namespace {

int dim_of(const Tensor& s) { return s.legs().at(0).dim; }

Tensor pad_right(const Tensor& t, int d, int extra) {
    return extra ? kron(t, Tensor::identity(d, extra)) : t;
}

}

Tensor antisym_step_right(const Tensor& sigma, const Tensor& prev, int n) {
    const int d = dim_of(sigma);
    Tensor tot = Tensor::identity(d, n);
    for (int k = 2; k <= n; ++k) {
        // sigma_{k<-1} = s_{k-1,k} ... s_{12}, on the first k legs
        Tensor ch = k == 2 ? sigma : embed_chain(sigma, k, Chain::descending, 1);
        ch = pad_right(ch, d, n - k);
        tot = k % 2 ? tot + ch : tot - ch;
    }
    return compose(tot, kron(Tensor::identity(d), prev));
}

Tensor antisym_step(const Tensor& sigma, const Tensor& prev, int n) {
    const int d = dim_of(sigma);
    Tensor tot = Tensor::identity(d, n);
    for (int k = 1; k < n; ++k) {
        Tensor ch = embed_chain(sigma, n, Chain::ascending, k);
        tot = (n - k - 1) % 2 ? tot + ch : tot - ch;
    }
    Tensor a = compose(tot, kron(prev, Tensor::identity(d)));
    if (a != antisym_step_right(sigma, prev, n)) throw RecursionMismatch(n);
    return a;
}

Tensor build_antisymmetrizer(const Tensor& sigma, int n) {
    if (n < 1) throw std::invalid_argument("build_antisymmetrizer: n >= 1");
    Tensor a = Tensor::identity(dim_of(sigma));
    for (int m = 2; m <= n; ++m) a = antisym_step(sigma, a, m);
    return a;
}

AntisymTower build_tower(const Tensor& sigma, int cap) {
    if (cap < 1) throw std::invalid_argument("build_tower: cap >= 1");
    AntisymTower t;
    t.sigma = sigma;
    t.cap = cap;
    t.levels.push_back(Tensor::identity(dim_of(sigma)));
    for (int n = 2; n <= cap + 1; ++n) {
        t.levels.push_back(antisym_step(sigma, t.levels.back(), n));
        if (t.levels.back().is_zero()) {
            t.height = n - 1;
            break;
        }
    }
    return t;
}

std::optional<int> compute_height(const Tensor& sigma, int cap) { return build_tower(sigma, cap).height; }

bool factors_through(const AntisymTower& t, int n, int k) {
    const int d = dim_of(t.sigma);
    Tensor m = pad_right(t.A(k), d, n - k);
    // Z m = A  <=>  m^T Z^T = A^T
    return solve_linear(transpose(m), transpose(t.A(n)), false).has_value();
}

}
