#include "qbrst/glq.hpp"

#include <chrono>

#include "qbrst/rmatrix.hpp"

namespace qbrst {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::vector<NCPoly> entries_of(const NCMatrix& m) {
    std::vector<NCPoly> r;
    for (auto& e : m.entries())
        if (!e.is_zero()) r.push_back(e);
    return r;
}

SMat permutation(int N) {
    SMat p = SMat::Zero(N * N, N * N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) p(a * N + b, b * N + a) = Scalar(1);
    return p;
}

size_t terms(const NCPoly& p) { return p.size(); }
size_t terms(const NCMatrix& m) { return m.term_count(); }

// times a residual computation and records it
template <class F>
void run(IdentityReport& rep, const std::string& name, F f) {
    auto t = Clock::now();
    auto [res, expr] = f();
    IdentityResult r;
    r.name = name;
    r.residual_terms = terms(res);
    r.expr_terms = expr;
    r.seconds = since(t);
    rep.items.push_back(r);
}

NCMatrix ident(int n, const Scalar& s = 1) { return NCMatrix::identity(n, s); }

}

bool InvariantResiduals::ok() const { return is_zero(hecke) && is_zero(dtrace) && is_zero(qtr_r) && is_zero(qtr_rinv); }

SMat kron(const SMat& a, const SMat& b) {
    SMat r = SMat::Zero(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

SMat qtrace1(const SMat& x, const SMat& dinv, int N) {
    SMat r = SMat::Zero(N, N);
    for (int i2 = 0; i2 < N; ++i2)
        for (int k2 = 0; k2 < N; ++k2)
            for (int a = 0; a < N; ++a)
                for (int i = 0; i < N; ++i)
                    if (!dinv(a, i).is_zero()) r(i2, k2) += dinv(a, i) * x(i * N + i2, a * N + k2);
    return r;
}

InvariantResiduals glq_invariants(int N, const Scalar& q) {
    const int n = N * N;
    Scalar l = q - q.inverse();
    SMat r = rhat(N, q), ri = rhat_inverse(N, q), d = dinv(N, q);
    SMat id = SMat::Identity(n, n), idN = SMat::Identity(N, N);
    InvariantResiduals out;
    out.hecke = r * r - r * l - id;
    out.dtrace = qtrace1(ri, d, N) - idN;
    Scalar q2n = q.pow(2 * N);
    out.qtr_r = qtrace1(r, d, N) - idN * q2n;
    out.qtr_rinv = qtrace1(ri + id * l, d, N) - idN * q2n;
    return out;
}

GlqInstance build_instance(int N, std::optional<Scalar> qv) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    GlqInstance g;
    g.N = N;
    g.q = qv ? *qv : Scalar::q();
    g.lambda = g.q - g.q.inverse();
    auto inv = glq_invariants(N, g.q);
    if (!is_zero(inv.hecke)) throw InvariantFailure("Hecke condition fails");
    if (!is_zero(inv.dtrace)) throw InvariantFailure("Tr_1(D_1^-1 R^-1) != 1");
    if (!is_zero(inv.qtr_r) || !is_zero(inv.qtr_rinv)) throw InvariantFailure("Tr_q1(R) != q^2N");
    g.rhat = rhat(N, g.q);
    g.rhat_inv = rhat_inverse(N, g.q);
    g.dinv = dinv(N, g.q);

    std::vector<Family> fams = {{"T", 0, 0, N, N, true},
                                {"omega", 1, 1, N, N, true},
                                {"L", 0, 2, N, N, true},
                                {"Linv", 0, 2, N, N, true},
                                {"J", -1, 3, N, N, true}};
    GeneratorAlphabet al(fams);
    g.rels = std::make_shared<RelationSet>(al);
    RelationSet& rs = *g.rels;

    NCMatrix R = g.R(), Ri = g.Ri();
    auto G1 = [&](GlqFam f) { return g.gen(f).in1(N); };
    auto G2 = [&](GlqFam f) { return g.gen(f).in2(N); };
    auto cat = [](std::initializer_list<NCMatrix> ms) {
        auto it = ms.begin();
        NCMatrix r = *it++;
        for (; it != ms.end(); ++it) r = r.concat(*it);
        return r;
    };
    NCMatrix T2 = G2(fT), w2 = G2(fW), L2 = G2(fL), Li2 = G2(fLi), J2 = G2(fJ);

    rs.add_cross_relations(fW, fT, entries_of(cat({G1(fW), T2}) - cat({T2, Ri, w2, Ri})));
    rs.add_cross_relations(fL, fT, entries_of(cat({G1(fL), T2}) - cat({T2, R, L2, R})));
    rs.add_cross_relations(fLi, fT, entries_of(cat({G1(fLi), T2}) - cat({T2, Ri, Li2, Ri})));
    rs.add_cross_relations(fJ, fT, entries_of(cat({G1(fJ), T2}) - cat({T2, R, J2, R})));
    rs.add_cross_relations(fL, fW, entries_of(cat({w2, R, L2, R}) - cat({R, L2, R, w2})));
    rs.add_cross_relations(fLi, fW, entries_of(cat({w2, Ri, Li2, Ri}) - cat({Ri, Li2, Ri, w2})));
    rs.add_cross_relations(fJ, fW, entries_of(cat({w2, R, J2, R}) + cat({R, J2, R, w2}) + R));
    rs.add_cross_relations(fJ, fL, entries_of(cat({J2, R, L2, R}) - cat({R, L2, R, J2})));
    rs.add_cross_relations(fJ, fLi, entries_of(cat({J2, Ri, Li2, Ri}) - cat({Ri, Li2, Ri, J2})));

    rs.add_sector_relations(0, entries_of(cat({R, G1(fT), T2}) - cat({G1(fT), T2, R})));
    rs.add_sector_relations(1, entries_of(cat({w2, Ri, w2, R}) + cat({Ri, w2, Ri, w2})));
    std::vector<NCPoly> s2 = entries_of(cat({L2, R, L2, R}) - cat({R, L2, R, L2}));
    for (auto& e : entries_of(cat({Ri, Li2, Ri, Li2}) - cat({Li2, Ri, Li2, Ri}))) s2.push_back(e);
    for (auto& e : entries_of(cat({Ri, Li2, Ri, L2}) - cat({L2, Ri, Li2, Ri}))) s2.push_back(e);
    NCMatrix L = g.gen(fL), Li = g.gen(fLi);
    for (auto& e : entries_of(L.concat(Li) - ident(N))) s2.push_back(e);
    for (auto& e : entries_of(Li.concat(L) - ident(N))) s2.push_back(e);
    rs.add_sector_relations(2, s2);
    rs.add_sector_relations(3, entries_of(cat({J2, R, J2, R}) + cat({Ri, J2, R, J2})));
    return g;
}

NCPoly qtrace(const NCMatrix& m, const GlqInstance& g) {
    if (m.rows() != g.N || m.cols() != g.N) throw std::invalid_argument("qtrace: expected an N x N matrix");
    NCPoly r;
    for (int i = 0; i < g.N; ++i)
        for (int a = 0; a < g.N; ++a)
            if (!g.dinv(i, a).is_zero()) r += m(a, i) * g.dinv(i, a);
    return r;
}

NCMatrix mmul(const NCMatrix& a, const NCMatrix& b, const GlqInstance& g) { return a.mul(b, *g.rels); }

NCMatrix mmul(const std::vector<NCMatrix>& chain, const GlqInstance& g) {
    NCMatrix r = chain.at(0);
    for (size_t i = 1; i < chain.size(); ++i) r = mmul(r, chain[i], g);
    return r;
}

NCPoly bracket(const NCPoly& a, const NCPoly& b, int sign, RelationSet& rs) {
    NCPoly r = rs.mul(a, b);
    NCPoly s = rs.mul(b, a);
    return sign > 0 ? r + s : r - s;
}

NCMatrix bracket(const NCPoly& p, const NCMatrix& x, int sign, const GlqInstance& g) {
    NCMatrix r(x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j)
            if (!x(i, j).is_zero()) r(i, j) = bracket(p, x(i, j), sign, *g.rels);
    return r;
}

bool IdentityReport::ok() const {
    for (auto& i : items)
        if (!i.ok()) return false;
    return true;
}

std::string IdentityReport::first_failure() const {
    for (auto& i : items)
        if (!i.ok()) return i.name;
    return {};
}

const IdentityResult* IdentityReport::find(const std::string& name) const {
    for (auto& i : items)
        if (i.name == name) return &i;
    return nullptr;
}

namespace {

// sum_{k=0}^{N^2} (-lambda omega J)^k, finite by omega nilpotency
NCMatrix w_inverse(const GlqInstance& g) {
    const int n = g.n();
    NCMatrix wJ = mmul(g.gen(fW), g.gen(fJ), g) * (-g.lambda);
    NCMatrix sum = ident(g.N), p = ident(g.N);
    for (int k = 1; k <= n; ++k) {
        p = mmul(p, wJ, g);
        sum = sum + p;
    }
    return sum;
}

NCMatrix theta(const GlqInstance& g) { return mmul({g.gen(fW), g.gen(fL), w_inverse(g)}, g); }

NCMatrix W(const GlqInstance& g) { return ident(g.N) + mmul(g.gen(fW), g.gen(fJ), g) * g.lambda; }
NCMatrix Wbar(const GlqInstance& g) { return ident(g.N) + mmul(g.gen(fJ), g.gen(fW), g) * g.lambda; }

NCMatrix theta_star(const GlqInstance& g) { return mmul({g.gen(fJ), g.gen(fLi), Wbar(g)}, g); }

}

NCMatrix q_summands(const GlqInstance& g, const std::vector<Scalar>& weights) {
    NCMatrix w = g.gen(fW);
    NCMatrix s = mmul(w, g.gen(fL) - ident(g.N), g) * g.lambda.inverse();
    NCMatrix wJ = mmul(w, g.gen(fJ), g);
    NCMatrix cur = mmul(w, g.gen(fL), g);
    Scalar sign(-1), lp(1);
    for (int k = 1; k < g.n(); ++k) {
        cur = mmul(cur, wJ, g);
        Scalar c = sign * lp;
        if (size_t(k) < weights.size()) c *= weights[size_t(k)];
        s = s + cur * c;
        sign = -sign;
        lp *= g.lambda;
    }
    return s;
}

std::vector<Scalar> adjusted_weights_n2() {
    Scalar q = Scalar::q();
    return {Scalar(1), q.pow(2) + q.pow(4) - q.pow(8) - q.pow(10) + q.pow(12),
            q.pow(6) + q.pow(8) + q.pow(10) - q.pow(12) * Scalar(2), q.pow(12)};
}

NCPoly build_Q(const GlqInstance& g) { return qtrace(q_summands(g), g); }

NCPoly build_Q_weighted(const GlqInstance& g, const std::vector<Scalar>& weights) {
    return qtrace(q_summands(g, weights), g);
}

IdentityReport verify_brst_identities(const GlqInstance& g, const NCPoly& Q) {
    RelationSet& rs = *g.rels;
    const int N = g.N;
    NCMatrix w = g.gen(fW), L = g.gen(fL), T = g.gen(fT), J = g.gen(fJ);
    NCMatrix R = g.R(), Ri = g.Ri();
    IdentityReport rep;
    run(rep, "Q^2", [&] {
        NCPoly r = rs.mul(Q, Q);
        return std::make_pair(r, Q.size());
    });
    run(rep, "[Q,L]", [&] { return std::make_pair(bracket(Q, L, -1, g), Q.size()); });
    run(rep, "[Q,T]-T omega", [&] { return std::make_pair(bracket(Q, T, -1, g) - mmul(T, w, g), Q.size()); });
    run(rep, "[Q,omega]+ + omega^2", [&] { return std::make_pair(bracket(Q, w, 1, g) + mmul(w, w, g), Q.size()); });
    run(rep, "lambda[Q,J]+ - (1-L)", [&] {
        return std::make_pair(bracket(Q, J, 1, g) * g.lambda - (ident(N) - L).normal_form(rs), Q.size());
    });
    NCMatrix th = theta(g);
    NCMatrix th2 = th.in2(N), w2 = w.in2(N), L2 = L.in2(N), J2 = J.in2(N);
    run(rep, "th", [&] {
        return std::make_pair(mmul({R, th2, Ri, w2}, g) + mmul({w2, Ri, th2, R}, g), th.term_count());
    });
    run(rep, "th1", [&] {
        return std::make_pair(mmul({R, th2, Ri, th2}, g) + mmul({th2, Ri, th2, Ri}, g), th.term_count());
    });
    run(rep, "TL", [&] {
        return std::make_pair(mmul({Ri, th2, R, L2}, g) - mmul({L2, R, th2, Ri}, g), th.term_count());
    });
    run(rep, "ThT", [&] {
        NCMatrix T2 = T.in2(N);
        return std::make_pair(mmul(th.in1(N), T2, g) - mmul({T2, Ri, th2, R}, g), th.term_count());
    });
    run(rep, "JT", [&] {
        NCMatrix lw = mmul(L, w_inverse(g), g).in2(N);
        NCMatrix r = mmul({J2, R, th2, Ri}, g) + mmul({Ri, th2, R, J2}, g) + mmul({lw, Ri, W(g).in2(N)}, g);
        return std::make_pair(r, th.term_count());
    });
    return rep;
}

NCPoly build_Qstar(const GlqInstance& g) {
    NCMatrix J = g.gen(fJ), Li = g.gen(fLi);
    NCMatrix a = mmul(J, Li - ident(g.N), g) * g.lambda.inverse();
    NCMatrix b = mmul({J, Li, J, g.gen(fW)}, g);
    return qtrace(a + b, g);
}

IdentityReport verify_qstar_identities(const GlqInstance& g, const NCPoly& Qs) {
    RelationSet& rs = *g.rels;
    const int N = g.N;
    Scalar q2n = g.q.pow(2 * N);
    NCMatrix w = g.gen(fW), L = g.gen(fL), Li = g.gen(fLi), T = g.gen(fT), J = g.gen(fJ);
    NCMatrix R = g.R(), Ri = g.Ri();
    IdentityReport rep;
    run(rep, "Q*^2", [&] { return std::make_pair(rs.mul(Qs, Qs), Qs.size()); });
    run(rep, "[Q*,L]", [&] { return std::make_pair(bracket(Qs, L, -1, g), Qs.size()); });
    run(rep, "[Q*,T]-q^2N T J", [&] { return std::make_pair(bracket(Qs, T, -1, g) - mmul(T, J, g) * q2n, Qs.size()); });
    run(rep, "[Q*,J]+ + q^2N J^2", [&] { return std::make_pair(bracket(Qs, J, 1, g) + mmul(J, J, g) * q2n, Qs.size()); });
    run(rep, "Q*om", [&] {
        NCMatrix a = mmul({W(g), ident(N) - Li, Wbar(g)}, g) * g.lambda.inverse();
        NCMatrix b = mmul({w, J, J, w}, g) * g.lambda;
        return std::make_pair(bracket(Qs, w, 1, g) - (a - b) * q2n, Qs.size());
    });
    NCMatrix ts = theta_star(g);
    NCMatrix ts2 = ts.in2(N), T2 = T.in2(N), J2 = J.in2(N), L2 = L.in2(N), w2 = w.in2(N);
    run(rep, "T*1", [&] {
        NCMatrix r = mmul(ts.in1(N), T2, g) - mmul({T2, R, ts2, Ri}, g);
        return std::make_pair(r, ts.term_count());
    });
    run(rep, "T*2", [&] {
        return std::make_pair(mmul({Ri, ts2, R, J2}, g) + mmul({J2, R, ts2, Ri}, g), ts.term_count());
    });
    run(rep, "T*3", [&] {
        return std::make_pair(mmul({R, ts2, R, ts2}, g) + mmul({ts2, R, ts2, Ri}, g), ts.term_count());
    });
    run(rep, "T*4", [&] {
        return std::make_pair(mmul({Ri, ts2, R, L2}, g) - mmul({L2, R, ts2, Ri}, g), ts.term_count());
    });
    run(rep, "T*5", [&] {
        NCMatrix U2 = build_current_U(g).in2(N);
        NCMatrix r = mmul({R, ts2, Ri, w2}, g) + mmul({w2, Ri, ts2, R}, g) + mmul(U2, R, g);
        return std::make_pair(r, ts.term_count());
    });
    return rep;
}

NCMatrix build_current_U(const GlqInstance& g) { return mmul({W(g), g.gen(fLi), Wbar(g)}, g); }

IdentityReport verify_current(const GlqInstance& g, const NCMatrix& U) {
    const int N = g.N;
    NCMatrix R = g.R(), Ri = g.Ri();
    NCMatrix U2 = U.in2(N), w2 = g.gen(fW).in2(N), J2 = g.gen(fJ).in2(N);
    IdentityReport rep;
    run(rep, "reflection equation", [&] {
        return std::make_pair(mmul({Ri, U2, Ri, U2}, g) - mmul({U2, Ri, U2, Ri}, g), U.term_count());
    });
    run(rep, "uo1", [&] {
        return std::make_pair(mmul({R, U2, Ri, w2}, g) - mmul({w2, Ri, U2, R}, g), U.term_count());
    });
    run(rep, "uo2", [&] {
        return std::make_pair(mmul({Ri, U2, R, J2}, g) - mmul({J2, R, U2, Ri}, g), U.term_count());
    });
    run(rep, "U = -q^-2N [Tr_q Theta*, omega]+", [&] {
        NCPoly t = qtrace(theta_star(g), g);
        NCMatrix r = U + bracket(t, g.gen(fW), 1, g) * g.q.pow(-2 * N);
        return std::make_pair(r.normal_form(*g.rels), U.term_count());
    });
    return rep;
}

NCPoly build_laplacian(const GlqInstance& g, const NCPoly& Q, const NCPoly& Qs) {
    return g.rels->mul(Q, Qs) + g.rels->mul(Qs, Q);
}

NCPoly laplacian_closed_form(const GlqInstance& g) {
    NCMatrix m = g.gen(fL) + build_current_U(g) * g.q.pow(2 * g.N) - ident(g.N, Scalar(2));
    return g.rels->normal_form(qtrace(m, g) * (g.lambda * g.lambda).inverse());
}

IdentityReport verify_laplacian(const GlqInstance& g, const NCPoly& Q, const NCPoly& Qs) {
    RelationSet& rs = *g.rels;
    IdentityReport rep;
    NCPoly D;
    run(rep, "Delta closed form", [&] {
        D = build_laplacian(g, Q, Qs);
        return std::make_pair(D - laplacian_closed_form(g), D.size());
    });
    run(rep, "[Q,Delta]", [&] { return std::make_pair(bracket(Q, D, -1, rs), D.size()); });
    run(rep, "[Q*,Delta]", [&] { return std::make_pair(bracket(Qs, D, -1, rs), D.size()); });
    return rep;
}

std::vector<NCPoly> cohomology_generators(const GlqInstance& g) {
    std::vector<NCPoly> out;
    NCMatrix w = g.gen(fW), p = w;
    for (int n = 1; n <= 2 * g.N - 1; n += 2) {
        out.push_back(g.rels->normal_form(qtrace(p, g)));
        p = mmul({p, w, w}, g);
    }
    return out;
}

IdentityReport verify_cohomology(const GlqInstance& g) {
    RelationSet& rs = *g.rels;
    IdentityReport rep;
    NCMatrix w = g.gen(fW), p = w;
    for (int n = 1; n <= 2 * g.N - 1; n += 2) {
        NCMatrix next = mmul(p, w, g);
        run(rep, "Tr_q(omega^" + std::to_string(n + 1) + ")", [&] {
            return std::make_pair(rs.normal_form(qtrace(next, g)), next.term_count());
        });
        p = mmul(next, w, g);
    }
    auto gens = cohomology_generators(g);
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i; j < gens.size(); ++j) {
            std::string name =
                "[Omega(" + std::to_string(2 * i + 1) + "),Omega(" + std::to_string(2 * j + 1) + ")]+";
            run(rep, name, [&] { return std::make_pair(bracket(gens[i], gens[j], 1, rs), gens[i].size()); });
        }
    return rep;
}

ClassicalModel build_classical(int N) {
    ClassicalModel m;
    m.N = N;
    std::vector<Family> fams = {{"omega_cl", 1, 0, N, N, true}, {"chi_cl", 0, 1, N, N, true}, {"gamma_cl", -1, 2, N, N, true}};
    GeneratorAlphabet al(fams);
    m.rels = std::make_shared<RelationSet>(al);
    RelationSet& rs = *m.rels;
    m.omega = NCMatrix::generator(al, 0);
    m.chi = NCMatrix::generator(al, 1);
    m.gamma = NCMatrix::generator(al, 2);
    NCMatrix P = NCMatrix::scalar(permutation(N));
    NCMatrix w1 = m.omega.in1(N), w2 = m.omega.in2(N), c1 = m.chi.in1(N), c2 = m.chi.in2(N);
    NCMatrix g1 = m.gamma.in1(N), g2 = m.gamma.in2(N);
    rs.add_cross_relations(1, 0, entries_of(w2.concat(P) + w2.concat(c1) - P.concat(w2) - c1.concat(w2)));
    rs.add_cross_relations(2, 0, entries_of(w2.concat(g1) + g1.concat(w2) - P));
    rs.add_cross_relations(2, 1, entries_of(g2.concat(P) + g2.concat(c1) - P.concat(g2) - c1.concat(g2)));
    rs.add_sector_relations(0, entries_of(w2.concat(w1) + w1.concat(w2)));
    rs.add_sector_relations(1, entries_of(c2.concat(c1) - c1.concat(c2) - P.concat(c2) + c2.concat(P)));
    rs.add_sector_relations(2, entries_of(g2.concat(g1) + g1.concat(g2)));
    return m;
}

IdentityReport classical_limit_check(int N) {
    ClassicalModel m = build_classical(N);
    RelationSet& rs = *m.rels;
    auto mm = [&](const NCMatrix& a, const NCMatrix& b) { return a.mul(b, rs); };
    auto tr = [&](const NCMatrix& x) {
        NCPoly r;
        for (int i = 0; i < N; ++i) r += x(i, i);
        return r;
    };
    IdentityReport rep;
    NCPoly Qcl = rs.normal_form(tr(mm(m.omega, m.chi) + mm(mm(m.omega, m.omega), m.gamma)));
    run(rep, "Q_cl^2", [&] { return std::make_pair(rs.mul(Qcl, Qcl), Qcl.size()); });
    NCMatrix X = (m.chi + mm(m.omega, m.gamma) + mm(m.gamma, m.omega)).normal_form(rs);
    NCMatrix X1 = X.in1(N), X2 = X.in2(N), P = NCMatrix::scalar(permutation(N));
    run(rep, "xx", [&] {
        NCMatrix r = mm(X2, X1) - mm(X1, X2) - mm(P, X2 - X1);
        return std::make_pair(r, X.term_count());
    });
    run(rep, "xxx omega", [&] {
        NCMatrix w1 = m.omega.in1(N);
        return std::make_pair(mm(X2, w1) - mm(w1, X2), X.term_count());
    });
    run(rep, "xxx gamma", [&] {
        NCMatrix g1 = m.gamma.in1(N);
        return std::make_pair(mm(X2, g1) - mm(g1, X2), X.term_count());
    });
    return rep;
}

std::vector<long> graded_dims(RelationSet& rs, int max_letters) {
    std::vector<long> total(size_t(max_letters) + 1, 0);
    total[0] = 1;
    for (int s = 0; s < rs.alphabet().n_sectors(); ++s) {
        std::vector<long> d(size_t(max_letters) + 1, 0);
        for (int k = 0; k <= max_letters; ++k) d[size_t(k)] = long(rs.standard_words(s, k).size());
        std::vector<long> next(size_t(max_letters) + 1, 0);
        for (int a = 0; a <= max_letters; ++a)
            for (int b = 0; a + b <= max_letters; ++b) next[size_t(a + b)] += total[size_t(a)] * d[size_t(b)];
        total = std::move(next);
    }
    return total;
}

FlatnessReport flatness_check(int N, int max_letters) {
    FlatnessReport r;
    GlqInstance gen = build_instance(N);
    r.generic = graded_dims(*gen.rels, max_letters);
    GlqInstance cl = build_instance(N, Scalar(1));
    r.classical = graded_dims(*cl.rels, max_letters);
    return r;
}

}
