#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "qbrst/qla.hpp"
#include "qbrst/rmatrix.hpp"
#include "qbrst/wedge.hpp"

using namespace qbrst;

namespace {

// sum over permutations of sign(pi) times the leg permutation, built entrywise
Tensor signed_permutation_sum(int d, int n) {
    Tensor t = Tensor::op(d, n, n);
    std::vector<int> pi(static_cast<size_t>(n));
    std::iota(pi.begin(), pi.end(), 0);
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) inv += pi[size_t(i)] > pi[size_t(j)];
        Index idx(size_t(2 * n));
        long total = 1;
        for (int i = 0; i < n; ++i) total *= d;
        for (long k = 0; k < total; ++k) {
            long r = k;
            for (int i = n - 1; i >= 0; --i) {
                idx[size_t(i)] = int(r % d);
                r /= d;
            }
            for (int i = 0; i < n; ++i) idx[size_t(n + i)] = idx[size_t(pi[size_t(i)])];
            t.add(idx, inv % 2 ? -1 : 1);
        }
    } while (std::next_permutation(pi.begin(), pi.end()));
    return t;
}

}

TEST_CASE("antisymmetrizer of the flip is the signed permutation sum") {
    Tensor P = Tensor::permutation(3);
    for (int n = 1; n <= 3; ++n) {
        INFO(n);
        Tensor a = build_antisymmetrizer(P, n);
        Tensor o = signed_permutation_sum(3, n);
        CHECK(a == o);
    }
}

TEST_CASE("flip heights") {
    for (int N = 1; N <= 4; ++N) {
        INFO(N);
        auto h = compute_height(Tensor::permutation(N), 6);
        REQUIRE(h);
        CHECK(*h == N);
    }
}

TEST_CASE("both recursions agree") {
    for (const Tensor& s : {Tensor::permutation(3), omega_braid(2)}) {
        Tensor prev = Tensor::identity(s.legs()[0].dim);
        for (int n = 2; n <= 4; ++n) {
            Tensor a = antisym_step(s, prev, n);
            CHECK(a == antisym_step_right(s, prev, n));
            prev = a;
        }
    }
}

TEST_CASE("omega braid height") {
    AntisymTower t = build_tower(omega_braid(2), 6);
    REQUIRE(t.height);
    CHECK(*t.height == 4);
    CHECK_FALSE(t.A(4).is_zero());
    CHECK(t.size() == 5);
    CHECK(t.A(5).is_zero());
    // dimensions of the quantum exterior algebra on four generators
    std::vector<long> expect = {4, 6, 4, 1};
    for (int n = 1; n <= 4; ++n) CHECK(rank(t.A(n).to_matrix()) == expect[size_t(n - 1)]);
}

TEST_CASE("super flip exceeds the cap") {
    AntisymTower t = build_tower(super_permutation({0, 1, 1, 0}), 4);
    CHECK_FALSE(t.height);
    CHECK(t.size() == 5);
}

TEST_CASE("levels factor through lower levels") {
    AntisymTower t = build_tower(omega_braid(2), 4);
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k < n; ++k) CHECK(factors_through(t, n, k));
    AntisymTower p = build_tower(Tensor::permutation(3), 3);
    CHECK(factors_through(p, 3, 2));
}
