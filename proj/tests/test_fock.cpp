#include "doctest.h"

#include "qbrst/fock.hpp"

using namespace qbrst;

namespace {

const Rational q0(3, 2);

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

struct Fixture {
    GlqInstance g = build_instance(2);
    NCPoly Q = build_Q(g), Qs = build_Qstar(g);
    Letter T(int a, int b) const { return g.rels->alphabet().letter(fT, a, b); }
    Letter W(int a, int b) const { return g.rels->alphabet().letter(fW, a, b); }
};

Fixture& fx() {
    static Fixture f;
    return f;
}

}

TEST_CASE("component dimensions") {
    for (int t = 0; t <= 2; ++t)
        for (int w = 0; w <= 4; ++w) CHECK(make_space(fx().g, t, w).dim() == binom(t + 3, 3) * binom(4, w));
    CHECK(make_space(fx().g, 0, -1).dim() == 0);
}

TEST_CASE("vacuum") {
    auto& f = fx();
    const auto& al = f.g.rels->alphabet();
    NCPoly L11 = NCPoly::letter(al.letter(fL, 0, 0)), L12 = NCPoly::letter(al.letter(fL, 0, 1));
    NCPoly J11 = NCPoly::letter(al.letter(fJ, 0, 0));
    CHECK(vacuum_reduce(f.g, L11) == NCPoly(1));
    CHECK(vacuum_reduce(f.g, L12).is_zero());
    CHECK(vacuum_reduce(f.g, J11).is_zero());
    CHECK(act(f.g, f.Q, NCPoly(1)).is_zero());
    CHECK(act(f.g, f.Qs, NCPoly(1)).is_zero());
    // Q T_11 |0> = T_1k omega_k1 |0>
    NCPoly expect = NCPoly::word({f.T(0, 0), f.W(0, 0)}) + NCPoly::word({f.T(0, 1), f.W(1, 0)});
    CHECK(act(f.g, f.Q, NCPoly::letter(f.T(0, 0))) == expect);
}

TEST_CASE("operator matrices agree with direct action") {
    auto& f = fx();
    StateSpace src = make_space(f.g, 1, 0), dst = make_space(f.g, 1, 1);
    SMat m = operator_matrix(f.g, f.Q, src, dst);
    CHECK(m.rows() == 16);
    CHECK(m.cols() == 4);
    for (int j = 0; j < src.dim(); ++j) {
        NCPoly img = act(f.g, f.Q, NCPoly::word(src.basis[size_t(j)]));
        CHECK(dst.state(SMat(m.col(j))) == img);
        CHECK(coordinates(img, dst) == m.col(j));
    }
    CHECK_THROWS_AS(operator_matrix(f.g, f.Q, src, make_space(f.g, 1, 2)), OutOfSpace);
}

TEST_CASE("Hodge data with the printed charge") {
    auto& f = fx();
    struct Row {
        int t, w, dim, ker, rq, rqs;
        bool q2, direct;
    };
    const Row rows[] = {{0, 0, 1, 1, 0, 0, true, true},  {0, 1, 4, 1, 0, 3, true, true},
                        {0, 2, 6, 0, 3, 3, false, true}, {1, 0, 4, 0, 0, 4, true, true},
                        {1, 1, 16, 0, 4, 12, false, true}, {1, 2, 24, 0, 16, 12, false, false}};
    for (auto& r : rows) {
        INFO(r.t << "," << r.w);
        HodgeData d = hodge_data(f.g, f.Q, f.Qs, r.t, r.w);
        HodgeComponent c = hodge_component(d, q0);
        CHECK(c.dim == r.dim);
        CHECK(c.ker_delta == r.ker);
        CHECK(c.rank_q == r.rq);
        CHECK(c.rank_qs == r.rqs);
        CHECK(c.delta_is_anticommutator);
        CHECK(c.q_squared_zero == r.q2);
        CHECK(c.direct_sum == r.direct);
        CHECK(c.dims_add_up() == (r.t != 1 || r.w != 2));
    }
}

TEST_CASE("decomposition round trip") {
    auto& f = fx();
    for (auto [t, w] : {std::pair{0, 1}, {1, 1}, {1, 2}}) {
        HodgeData d = hodge_data(f.g, f.Q, f.Qs, t, w);
        NCPoly s;
        int k = 0;
        for (auto& b : d.space.basis) s.add(b, Scalar(++k % 5 - 2));
        HodgeDecomposition h = hodge_decompose(d, s, q0);
        CHECK(h.round_trip);
        NCPoly sum = h.harmonic + h.q_exact + h.qstar_exact;
        NCPoly at_q0;
        for (auto& [wd, c] : s.terms()) at_q0.add(wd, Scalar::rational(c.eval_at(q0)));
        CHECK(sum == at_q0);
    }
}

TEST_CASE("adjusted charge gives a Hodge decomposition") {
    auto& f = fx();
    NCPoly Qa = build_Q_weighted(f.g, adjusted_weights_n2());
    for (int t = 0; t <= 1; ++t)
        for (int w = 0; w <= 2; ++w) {
            INFO(t << "," << w);
            HodgeComponent c = hodge_component(hodge_data(f.g, Qa, f.Qs, t, w), q0);
            CHECK(c.delta_is_anticommutator);
            CHECK(c.q_squared_zero);
            CHECK(c.direct_sum);
            CHECK(c.dims_add_up());
        }
}

TEST_CASE("degenerate specialization is rejected") {
    auto& f = fx();
    HodgeData d = hodge_data(f.g, f.Q, f.Qs, 1, 2);
    CHECK_THROWS_AS(hodge_component(d, Rational(1)), NonGenericPoint);
    CHECK_THROWS_AS(hodge_component(d, Rational(-1)), NonGenericPoint);
    CHECK_THROWS_AS(hodge_component(d, Rational(0)), PoleError);
}
