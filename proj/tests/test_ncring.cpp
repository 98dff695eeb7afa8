#include "doctest.h"

#include <random>

#include "qbrst/glq.hpp"

using namespace qbrst;

namespace {

Scalar q = Scalar::q();

// quantum plane: x y = q y x, y sits in the earlier sector
std::unique_ptr<RelationSet> quantum_plane() {
    GeneratorAlphabet al({{"y", 0, 0, 1, 1, false}, {"x", 0, 1, 1, 1, false}});
    auto rs = std::make_unique<RelationSet>(al);
    Letter x = make_letter(1, 0), y = make_letter(0, 0);
    rs->add_cross_relations(1, 0, {NCPoly::word({x, y}) - NCPoly::word({y, x}, q)});
    return rs;
}

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Word random_word(std::mt19937& g, const GeneratorAlphabet& al, int len) {
    std::vector<Letter> letters;
    for (int f = 0; f < int(al.families().size()); ++f)
        for (int i = 0; i < al.family(f).size(); ++i) letters.push_back(make_letter(f, i));
    std::uniform_int_distribution<size_t> u(0, letters.size() - 1);
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(letters[u(g)]);
    return w;
}

}

TEST_CASE("quantum plane normal form") {
    auto rs = quantum_plane();
    Letter x = make_letter(1, 0), y = make_letter(0, 0);
    // oracle: x^a y^b = q^{ab} y^b x^a
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            Word w(size_t(a), x), n(size_t(b), y);
            w += Word(size_t(b), y);
            n += Word(size_t(a), x);
            CHECK(rs->normal_form(NCPoly::word(w)) == NCPoly::word(n, q.pow(a * b)));
        }
    CHECK(rs->is_normal_word({y, y, x}));
    CHECK_FALSE(rs->is_normal_word({x, y}));
}

TEST_CASE("exterior sector") {
    GeneratorAlphabet al({{"e", 1, 0, 2, 1, false}});
    RelationSet rs(al);
    Letter a = make_letter(0, 0), b = make_letter(0, 1);
    rs.add_sector_relations(0, {NCPoly::word({a, a}), NCPoly::word({b, b}),
                                NCPoly::word({a, b}) + NCPoly::word({b, a})});
    std::vector<size_t> dims;
    for (int d = 0; d <= 3; ++d) dims.push_back(rs.standard_words(0, d).size());
    CHECK(dims == std::vector<size_t>{1, 2, 1, 0});
    CHECK(rs.normal_form(NCPoly::word({b, a})) == -rs.normal_form(NCPoly::word({a, b})));
    CHECK(rs.sector_stats(0).stable);
}

TEST_CASE("singular exchange system") {
    GeneratorAlphabet al({{"y", 0, 0, 1, 1, false}, {"x", 0, 1, 1, 1, false}});
    RelationSet rs(al);
    CHECK_THROWS_AS(rs.add_cross_relations(1, 0, {}), SingularSandwich);
}

TEST_CASE("ncpoly basics") {
    GeneratorAlphabet al({{"y", 0, 0, 1, 1, false}, {"x", 1, 1, 1, 1, false}});
    Letter x = make_letter(1, 0), y = make_letter(0, 0);
    NCPoly p = NCPoly::letter(x) + NCPoly::letter(y);
    CHECK(p.grading(al) == std::nullopt);
    CHECK(NCPoly::word({x, y, x}).grading(al) == std::optional<int>(2));
    CHECK((p - p).is_zero());
    CHECK(p.concat(p).size() == 4);
    CHECK(NCPoly::word({x, x}, 3).max_length() == 2);
}

TEST_CASE("glq sector dimensions match the classical polynomial counts") {
    GlqInstance g = build_instance(2);
    auto& rs = *g.rels;
    for (int d = 0; d <= 4; ++d) {
        INFO(d);
        CHECK(long(rs.standard_words(fT, d).size()) == binom(d + 3, 3));
        CHECK(long(rs.standard_words(1, d).size()) == binom(4, d));
        CHECK(long(rs.standard_words(3, d).size()) == binom(4, d));
    }
}

TEST_CASE("glq defining relations vanish") {
    for (int N : {1, 2}) {
        GlqInstance g = build_instance(N);
        auto& rs = *g.rels;
        for (int s = 0; s < rs.alphabet().n_sectors(); ++s)
            for (auto& r : rs.sector_relations(s)) CHECK(rs.is_zero(r));
        // exchange rules reproduce themselves: hi lo normalizes to its rule
        const auto& al = rs.alphabet();
        for (int hi = 0; hi < int(al.families().size()); ++hi)
            for (int lo = 0; lo < int(al.families().size()); ++lo) {
                if (!rs.has_cross(hi, lo)) continue;
                for (int i = 0; i < al.family(hi).size(); ++i)
                    for (int j = 0; j < al.family(lo).size(); ++j) {
                        Letter a = make_letter(hi, i), b = make_letter(lo, j);
                        const ExchangeRule* e = rs.cross_rule(a, b);
                        REQUIRE(e);
                        NCPoly rhs = e->tail;
                        for (auto& [pr, c] : e->swaps) rhs += NCPoly::word({pr.first, pr.second}, c);
                        CHECK(rs.normal_form(NCPoly::word({a, b})) == rs.normal_form(rhs));
                    }
            }
    }
}

TEST_CASE("property: associativity and canonicity on random words") {
    GlqInstance g = build_instance(2);
    auto& rs = *g.rels;
    std::mt19937 gen(2024);
    for (int it = 0; it < 40; ++it) {
        NCPoly a = NCPoly::word(random_word(gen, rs.alphabet(), 2));
        NCPoly b = NCPoly::word(random_word(gen, rs.alphabet(), 2));
        NCPoly c = NCPoly::word(random_word(gen, rs.alphabet(), 1));
        NCPoly left = rs.mul(rs.mul(a, b), c), right = rs.mul(a, rs.mul(b, c));
        CHECK(left == right);
        // the normal form is idempotent and agrees with the free product
        NCPoly n = rs.normal_form(a.concat(b).concat(c));
        CHECK(n == left);
        CHECK(rs.normal_form(n) == n);
        for (auto& [w, coeff] : n.terms()) CHECK(rs.is_normal_word(w));
    }
}

TEST_CASE("L and its inverse") {
    GlqInstance g = build_instance(2);
    NCMatrix L = g.gen(fL), Li = g.gen(fLi);
    CHECK((L.mul(Li, *g.rels) - NCMatrix::identity(2)).normal_form(*g.rels).is_zero());
    CHECK((Li.mul(L, *g.rels) - NCMatrix::identity(2)).normal_form(*g.rels).is_zero());
    CHECK(g.rels->sector_stats(2).stable);
}

TEST_CASE("matrix helpers") {
    GlqInstance g = build_instance(2);
    NCMatrix w = g.gen(fW);
    CHECK(w.rows() == 2);
    CHECK(w.term_count() == 4);
    NCMatrix w2 = w.in2(2);
    CHECK(w2.rows() == 4);
    CHECK(w2(1, 0) == NCPoly::letter(g.rels->alphabet().letter(fW, 1, 0)));
    CHECK(w2(2, 0).is_zero());
    NCMatrix w1 = w.in1(2);
    CHECK(w1(2, 0) == NCPoly::letter(g.rels->alphabet().letter(fW, 1, 0)));
    CHECK((w - w).is_zero());
}
