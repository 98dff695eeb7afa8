#include "qbrst/fock.hpp"

namespace qbrst {

NCPoly StateSpace::state(const QMat& v) const {
    NCPoly p;
    for (int i = 0; i < dim(); ++i) p.add(basis[size_t(i)], Scalar::rational(v(i, 0)));
    return p;
}

NCPoly StateSpace::state(const SMat& v) const {
    NCPoly p;
    for (int i = 0; i < dim(); ++i) p.add(basis[size_t(i)], v(i, 0));
    return p;
}

StateSpace make_space(const GlqInstance& g, int t, int w) {
    StateSpace s;
    s.t_degree = t;
    s.w_degree = w;
    if (t < 0 || w < 0) return s;
    auto ts = g.rels->standard_words(fT, t);
    auto ws = g.rels->standard_words(1, w);
    for (auto& a : ts)
        for (auto& b : ws) {
            s.index.emplace(a + b, s.dim());
            s.basis.push_back(a + b);
        }
    return s;
}

NCPoly vacuum_reduce(const GlqInstance& g, const NCPoly& p) {
    const auto& al = g.rels->alphabet();
    NCPoly r;
    for (auto& [w, c] : p.terms()) {
        size_t cut = 0;
        while (cut < w.size() && al.sector(w[cut]) < 2) ++cut;
        bool keep = true;
        for (size_t i = cut; i < w.size() && keep; ++i) {
            int f = fam_of(w[i]);
            if (f == fJ) keep = false;
            else if (idx_of(w[i]) / g.N != idx_of(w[i]) % g.N) keep = false;  // L, L^-1 -> delta
        }
        if (keep) r.add(w.substr(0, cut), c);
    }
    return r;
}

NCPoly act(const GlqInstance& g, const NCPoly& op, const NCPoly& state) {
    return vacuum_reduce(g, g.rels->mul(op, state));
}

SMat coordinates(const NCPoly& p, const StateSpace& s) {
    SMat v = SMat::Zero(s.dim(), 1);
    for (auto& [w, c] : p.terms()) {
        auto it = s.index.find(w);
        if (it == s.index.end()) throw OutOfSpace("state leaves the graded component");
        v(it->second, 0) = c;
    }
    return v;
}

SMat operator_matrix(const GlqInstance& g, const NCPoly& op, const StateSpace& src, const StateSpace& dst) {
    SMat m = SMat::Zero(dst.dim(), src.dim());
    for (int j = 0; j < src.dim(); ++j) {
        NCPoly img = act(g, op, NCPoly::word(src.basis[size_t(j)]));
        for (auto& [w, c] : img.terms()) {
            auto it = dst.index.find(w);
            if (it == dst.index.end())
                throw OutOfSpace("operator leaves the graded family at " + NCPoly::word(w).str(g.rels->alphabet()));
            m(it->second, j) = c;
        }
    }
    return m;
}

HodgeData hodge_data(const GlqInstance& g, const NCPoly& Q, const NCPoly& Qs, int t, int w) {
    HodgeData d;
    d.below = make_space(g, t, w - 1);
    d.space = make_space(g, t, w);
    d.above = make_space(g, t, w + 1);
    NCPoly delta = build_laplacian(g, Q, Qs);
    d.delta = operator_matrix(g, delta, d.space, d.space);
    d.q_in = operator_matrix(g, Q, d.below, d.space);
    d.qs_in = operator_matrix(g, Qs, d.above, d.space);
    d.q_out = operator_matrix(g, Q, d.space, d.above);
    d.qs_out = operator_matrix(g, Qs, d.space, d.below);
    return d;
}

namespace {

QMat hcat(const std::vector<QMat>& ms, int rows) {
    int cols = 0;
    for (auto& m : ms) cols += int(m.cols());
    QMat r(rows, cols);
    int c = 0;
    for (auto& m : ms) {
        if (m.cols()) r.middleCols(c, m.cols()) = m;
        c += int(m.cols());
    }
    return r;
}

int checked_rank(const SMat& m, const Rational& q0, const char* what) {
    int sym = rank(m);
    int num = rank(eval_at(m, q0));
    if (num != sym)
        throw NonGenericPoint(std::string("q0 = ") + q0.get_str() + " is not generic for " + what +
                              "; try another q0");
    return num;
}

}

HodgeComponent hodge_component(const HodgeData& d, const Rational& q0) {
    HodgeComponent c;
    c.t_degree = d.space.t_degree;
    c.w_degree = d.space.w_degree;
    c.dim = d.space.dim();
    c.ker_delta = c.dim - checked_rank(d.delta, q0, "Delta");
    c.rank_q = checked_rank(d.q_in, q0, "Q");
    c.rank_qs = checked_rank(d.qs_in, q0, "Q*");
    SMat anti = d.q_in * d.qs_out + d.qs_in * d.q_out;
    c.delta_is_anticommutator = is_zero(SMat(anti - d.delta));
    c.q_squared_zero = is_zero(SMat(d.q_out * d.q_in));
    QMat k = kernel(eval_at(d.delta, q0));
    QMat all = hcat({k, eval_at(d.q_in, q0), eval_at(d.qs_in, q0)}, c.dim);
    c.direct_sum = rank(all) == c.ker_delta + c.rank_q + c.rank_qs;
    return c;
}

HodgeDecomposition hodge_decompose(const HodgeData& d, const NCPoly& state, const Rational& q0) {
    const int n = d.space.dim();
    QMat v = eval_at(coordinates(state, d.space), q0);
    QMat D = eval_at(d.delta, q0);
    QMat k = kernel(D), qa = eval_at(d.q_in, q0), qb = eval_at(d.qs_in, q0);
    QMat all = hcat({k, qa, qb}, n);
    HodgeDecomposition out;
    auto s = solve(all, v);
    if (!s) return out;
    const QMat& x = s->particular;
    QMat h = k * x.topRows(k.cols());
    QMat e = qa * x.middleRows(k.cols(), qa.cols());
    QMat f = qb * x.bottomRows(qb.cols());
    out.harmonic = d.space.state(h);
    out.q_exact = d.space.state(e);
    out.qstar_exact = d.space.state(f);
    out.round_trip = QMat(h + e + f) == v && is_zero(QMat(D * h));
    return out;
}

}
