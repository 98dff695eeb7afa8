#include "qbrst/brst.hpp"

namespace qbrst {

namespace {

int dim_of(const QuantumLieAlgebra& a) { return a.n_gen; }

// 1^{left} (x) op (x) 1^{right}
Tensor pad(int d, int left, const Tensor& op, int right) {
    Tensor r = op;
    if (left) r = kron(Tensor::identity(d, left), r);
    if (right) r = kron(r, Tensor::identity(d, right));
    return r;
}

Tensor s_on(const Tensor& sigma, int d, int n, int k) { return pad(d, k - 1, sigma, n - k - 1); }
Tensor c_on(const Tensor& C, int d, int n, int k) { return pad(d, k - 1, C, n - k - 1); }

Tensor b1(const QuantumLieAlgebra& a) {
    const int d = dim_of(a);
    return c_on(a.C, d, 3, 2) + compose({s_on(a.sigma, d, 3, 1), s_on(a.sigma, d, 3, 2), c_on(a.C, d, 3, 1)});
}

Tensor b2(const QuantumLieAlgebra& a) {
    const int d = dim_of(a);
    const Tensor& s = a.sigma;
    Tensor first = c_on(a.C, d, 4, 3) + compose({s_on(s, d, 4, 2), s_on(s, d, 4, 3), c_on(a.C, d, 4, 2)});
    Tensor second = compose({s_on(s, d, 4, 1), s_on(s, d, 4, 2), s_on(s, d, 4, 3), pad(d, 0, b1(a), 1)});
    return first - second;
}

}

std::string to_string(Provenance p) { return p == Provenance::paper_formula ? "paper_formula" : "solved"; }

Tensor x_initial(const QuantumLieAlgebra& a) {
    check_shape(a);
    Tensor a2 = build_antisymmetrizer(a.sigma, 2);
    auto s = solve_linear(a2, -a.C, false);
    if (!s) throw InconsistentLevel(1, "C not in image of (1 - sigma)");
    return s->solution;
}

Tensor x_candidate(const QuantumLieAlgebra& a, int r) {
    if (r == 1) return b1(a);
    if (r == 2) return b2(a);
    throw std::invalid_argument("x_candidate: unsupported r = " + std::to_string(r) + " (only 1 and 2)");
}

Tensor recurrence_rhs(const AntisymTower& t, const Tensor& x_prev, int r) {
    if (r < 2) throw std::invalid_argument("recurrence_rhs: r >= 2");
    const int d = t.sigma.legs().at(0).dim;
    Tensor m = embed_chain(t.sigma, r + 1, Chain::descending, 1);
    if (r % 2) m = -m;
    m = m - Tensor::identity(d, r + 1);
    return compose({t.A(r + 1), m, pad(d, 1, x_prev, 0), pad(d, 1, t.A(r - 1), 0)});
}

Tensor recurrence_residual(const QuantumLieAlgebra& a, const AntisymTower& t, const Tensor& x, const Tensor& x_prev,
                           int r) {
    if (r == 1) return compose(t.A(2), x) + a.C;
    return compose({t.A(r + 1), x, t.A(r)}) - recurrence_rhs(t, x_prev, r);
}

long tensor_rank(const Tensor& t) {
    std::vector<Row<Scalar>> rows(t.rows());
    const uint64_t c = t.cols();
    for (auto& [k, v] : t.entries()) rows[k / c].emplace(int(k % c), v);
    return long(rref(std::move(rows)).pivots.size());
}

CandidateCheck check_candidate(const XTower& xt, int r) {
    CandidateCheck c;
    c.r = r;
    c.level = r + 1;
    if (xt.top() < r) throw std::invalid_argument("check_candidate: tower too short");
    if (xt.tower.size() < r + 2) throw std::invalid_argument("check_candidate: antisymmetrizers too short");
    Tensor b = x_candidate(xt.qla, r);
    Tensor rhs = recurrence_rhs(xt.tower, xt.X(r), r + 1);
    Tensor id = rhs - compose(b, xt.tower.A(r + 1));
    Tensor lit = compose({xt.tower.A(r + 2), b, xt.tower.A(r + 1)}) - rhs;
    c.identity_nnz = id.nnz();
    c.literal_nnz = lit.nnz();
    c.identity = id.is_zero();
    c.literal = lit.is_zero();
    return c;
}

bool ResidualReport::ok() const { return first_failure() == 0; }

int ResidualReport::first_failure() const {
    for (size_t i = 0; i < nnz.size(); ++i)
        if (nnz[i]) return int(i) + 1;
    return 0;
}

ResidualReport verify_recurrence(const XTower& xt) {
    ResidualReport rep;
    for (int r = 1; r <= xt.top(); ++r) {
        Tensor prev = r > 1 ? xt.X(r - 1) : Tensor();
        rep.nnz.push_back(recurrence_residual(xt.qla, xt.tower, xt.X(r), prev, r).nnz());
    }
    return rep;
}

XTower solve_x_generic(const QuantumLieAlgebra& a, const AntisymTower& t, int r_max) {
    XTower xt{a, t, {}};
    if (t.height && r_max > *t.height - 1) throw std::invalid_argument("solve_x_generic: r_max > h - 1");
    if (t.size() < r_max + 1) throw std::invalid_argument("solve_x_generic: antisymmetrizers too short");
    const long d = a.n_gen;
    auto powd = [&](int k) {
        long p = 1;
        while (k--) p *= d;
        return p;
    };
    if (r_max >= 1) {
        XLevel l;
        l.X = x_initial(a);
        l.kernel_dim = powd(3) - tensor_rank(t.A(2)) * d;
        xt.levels.push_back(std::move(l));
    }
    for (int r = 2; r <= r_max; ++r) {
        Tensor rhs = recurrence_rhs(t, xt.X(r - 1), r);
        auto x = sandwich_solve(t.A(r + 1), t.A(r), rhs);
        if (!x) throw InconsistentLevel(r, "recurrence inconsistent at level " + std::to_string(r));
        XLevel l;
        l.X = *x;
        l.kernel_dim = powd(2 * r + 1) - tensor_rank(t.A(r + 1)) * tensor_rank(t.A(r));
        if (r == 2 || r == 3) {
            Tensor b = x_candidate(a, r - 1);
            if (compose({t.A(r + 1), b, t.A(r)}) == rhs) {
                l.X = b;
                l.provenance = Provenance::paper_formula;
            }
        }
        xt.levels.push_back(std::move(l));
    }
    return xt;
}

GeneratorAlphabet abstract_alphabet(int n) {
    return GeneratorAlphabet({{"Omega", 1, 0, n, 1, false}, {"chi", 0, 1, n, 1, false}, {"gamma", -1, 2, n, 1, false}});
}

std::vector<NCPoly> q_summands_abstract(const XTower& xt) {
    const int n = xt.qla.n_gen;
    std::vector<NCPoly> out;
    NCPoly first;
    for (int i = 0; i < n; ++i) first.add(Word{make_letter(0, i), make_letter(1, i)}, 1);
    out.push_back(first);
    for (int r = 1; r <= xt.top(); ++r) {
        Tensor k = compose({xt.tower.A(r + 1), xt.X(r), xt.tower.A(r)});
        NCPoly p;
        for (auto& [key, v] : k.entries()) {
            Index idx = k.unpack(key);
            Word w;
            for (int i = r; i >= 0; --i) w.push_back(make_letter(0, idx[size_t(i)]));
            for (int j = 0; j < r; ++j) w.push_back(make_letter(2, idx[size_t(r + 1 + j)]));
            p.add(w, v);
        }
        out.push_back(std::move(p));
    }
    return out;
}

NCPoly assemble_q_abstract(const XTower& xt) {
    NCPoly q;
    for (auto& p : q_summands_abstract(xt)) q += p;
    return q;
}

}
