#include "doctest.h"

#include <random>

#include "qbrst/tensor.hpp"

using namespace qbrst;

namespace {

Tensor random_op(std::mt19937& g, int d, int nin, int nout, double fill = 0.5) {
    Tensor t = Tensor::op(d, nin, nout);
    std::uniform_real_distribution<double> u(0, 1);
    std::uniform_int_distribution<int> c(-3, 3);
    for (uint64_t r = 0; r < t.rows(); ++r)
        for (uint64_t k = 0; k < t.cols(); ++k)
            if (u(g) < fill) t.add_at(r, k, Scalar(c(g)) * Scalar::q(c(g)));
    return t;
}

// dense oracle: plain triple loop over the operator view
SMat naive_product(const Tensor& a, const Tensor& b) {
    SMat m = SMat::Zero(Eigen::Index(a.rows()), Eigen::Index(b.cols()));
    for (uint64_t i = 0; i < a.rows(); ++i)
        for (uint64_t j = 0; j < b.cols(); ++j)
            for (uint64_t x = 0; x < a.cols(); ++x) m(Eigen::Index(i), Eigen::Index(j)) += a.at(i, x) * b.at(x, j);
    return m;
}

}

TEST_CASE("pack and unpack are inverse") {
    Tensor t = Tensor::op({2, 3}, {4});
    for (uint64_t k = 0; k < 24; ++k) CHECK(t.pack(t.unpack(k)) == k);
    CHECK(t.pack({1, 2, 3}) == 23);
}

TEST_CASE("compose matches naive product") {
    std::mt19937 g(7);
    for (int it = 0; it < 5; ++it) {
        Tensor a = random_op(g, 2, 2, 2), b = random_op(g, 2, 2, 1);
        CHECK(compose(a, b).to_matrix() == naive_product(a, b));
    }
}

TEST_CASE("compose is associative") {
    std::mt19937 g(11);
    Tensor a = random_op(g, 3, 2, 2), b = random_op(g, 3, 2, 2), c = random_op(g, 3, 2, 1);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose({a, b, c}) == compose(a, compose(b, c)));
}

TEST_CASE("identity and permutation") {
    std::mt19937 g(3);
    Tensor a = random_op(g, 3, 2, 2);
    CHECK(compose(Tensor::identity(3, 2), a) == a);
    CHECK(compose(a, Tensor::identity(3, 2)) == a);
    Tensor P = Tensor::permutation(3);
    CHECK(compose(P, P) == Tensor::identity(3, 2));
    CHECK(P.get({0, 1, 1, 0}) == Scalar(1));
    CHECK(P.get({0, 1, 0, 1}) == Scalar(0));
}

TEST_CASE("kron entries") {
    std::mt19937 g(5);
    Tensor a = random_op(g, 2, 1, 1, 1.0), b = random_op(g, 2, 1, 1, 1.0);
    Tensor k = kron(a, b);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int m = 0; m < 2; ++m)
                for (int n = 0; n < 2; ++n) CHECK(k.get({i, j, m, n}) == a.get({i, m}) * b.get({j, n}));
    // mixed product rule
    Tensor c = random_op(g, 2, 1, 1), d = random_op(g, 2, 1, 1);
    CHECK(compose(kron(a, b), kron(c, d)) == kron(compose(a, c), compose(b, d)));
}

TEST_CASE("transpose twice") {
    std::mt19937 g(9);
    Tensor a = random_op(g, 2, 2, 1);
    CHECK(transpose(transpose(a)) == a);
    CHECK(transpose(a).n_in() == 1);
}

TEST_CASE("embed and chains") {
    Tensor P = Tensor::permutation(2);
    Tensor s1 = embed(P, 3, 1, 2), s2 = embed(P, 3, 2, 2);
    CHECK(s1 == kron(P, Tensor::identity(2)));
    CHECK(s2 == kron(Tensor::identity(2), P));
    CHECK(embed_chain(P, 3, Chain::ascending, 1) == compose(s1, s2));
    CHECK(embed_chain(P, 3, Chain::descending, 1) == compose(s2, s1));
    CHECK(compose({s1, s2, s1}) == compose({s2, s1, s2}));
}

TEST_CASE("trace of the identity") {
    Tensor t = trace(Tensor::identity(3), 1, 0);
    CHECK(t.rank() == 0);
    CHECK(t.get({}) == Scalar(3));
}

TEST_CASE("shape errors") {
    CHECK_THROWS_AS(compose(Tensor::op(2, 1, 1), Tensor::op(3, 1, 1)), ShapeError);
    CHECK_THROWS_AS(compose(Tensor::op(2, 1, 2), Tensor::op(2, 1, 1)), ShapeError);
}

TEST_CASE("solve_linear and sandwich_solve") {
    std::mt19937 g(13);
    Tensor m = random_op(g, 2, 2, 2);
    Tensor x = random_op(g, 2, 2, 1);
    Tensor rhs = compose(m, x);
    auto s = solve_linear(m, rhs);
    REQUIRE(s);
    CHECK(compose(m, s->solution) == rhs);
    for (auto& k : s->kernel) CHECK(compose(m, k).is_zero());
    Tensor a = random_op(g, 2, 2, 2), b = random_op(g, 2, 1, 1, 1.0);
    Tensor y = compose({a, x, b});
    auto z = sandwich_solve(a, b, y);
    REQUIRE(z);
    CHECK(compose({a, *z, b}) == y);
    // inconsistent: zero operator with nonzero rhs
    CHECK_FALSE(solve_linear(Tensor::op(2, 1, 1), Tensor::identity(2)).has_value());
}

TEST_CASE("eval_at") {
    Tensor t = Tensor::op(1, 1, 1);
    t.set({0, 0}, Scalar::q(2) + 1);
    CHECK(t.eval_at(Rational(1, 2))(0, 0) == Rational(5, 4));
}
