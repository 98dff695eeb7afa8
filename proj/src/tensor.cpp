#include "qbrst/tensor.hpp"

#include <numeric>
#include <unordered_map>

namespace qbrst {

QMat eval_at(const SMat& m, const Rational& q0) {
    QMat r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).eval_at(q0);
    return r;
}

Tensor::Tensor(std::vector<Leg> legs) : legs_(std::move(legs)) {
    unsigned __int128 total = 1;
    for (auto& l : legs_) {
        if (l.dim <= 0) throw ShapeError("leg dimension must be positive");
        total *= unsigned(l.dim);
        if (total > (unsigned __int128)UINT64_MAX) throw ShapeError("tensor too large");
    }
}

Tensor Tensor::op(const std::vector<int>& in_dims, const std::vector<int>& out_dims) {
    std::vector<Leg> legs;
    for (int d : in_dims) legs.push_back({d, LegKind::in});
    for (int d : out_dims) legs.push_back({d, LegKind::out});
    return Tensor(std::move(legs));
}

Tensor Tensor::identity(int d, int n) {
    Tensor t = op(d, n, n);
    uint64_t m = 1;
    for (int i = 0; i < n; ++i) m *= uint64_t(d);
    for (uint64_t i = 0; i < m; ++i) t.e_.emplace(i * m + i, Scalar(1));
    return t;
}

Tensor Tensor::permutation(int d) {
    Tensor t = op(d, 2, 2);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) t.set({i, j, j, i}, 1);
    return t;
}

Tensor Tensor::from_matrix(const SMat& m, const std::vector<int>& in_dims, const std::vector<int>& out_dims) {
    Tensor t = op(in_dims, out_dims);
    if (uint64_t(m.rows()) != t.rows() || uint64_t(m.cols()) != t.cols()) throw ShapeError("from_matrix: shape mismatch");
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) t.e_.emplace(uint64_t(i) * t.cols() + uint64_t(j), m(i, j));
    return t;
}

int Tensor::n_in() const {
    int n = 0;
    for (auto& l : legs_) n += l.kind == LegKind::in;
    return n;
}

int Tensor::n_out() const { return rank() - n_in(); }

bool Tensor::is_operator() const {
    bool seen_out = false;
    for (auto& l : legs_) {
        if (l.kind == LegKind::out) seen_out = true;
        else if (seen_out) return false;
    }
    return true;
}

uint64_t Tensor::rows() const {
    uint64_t r = 1;
    for (auto& l : legs_)
        if (l.kind == LegKind::in) r *= uint64_t(l.dim);
    return r;
}

uint64_t Tensor::cols() const {
    uint64_t r = 1;
    for (auto& l : legs_)
        if (l.kind == LegKind::out) r *= uint64_t(l.dim);
    return r;
}

uint64_t Tensor::pack(const Index& idx) const {
    if (idx.size() != legs_.size()) throw ShapeError("index length mismatch");
    uint64_t k = 0;
    for (size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 0 || idx[i] >= legs_[i].dim) throw ShapeError("index out of range");
        k = k * uint64_t(legs_[i].dim) + uint64_t(idx[i]);
    }
    return k;
}

Index Tensor::unpack(uint64_t k) const {
    Index idx(legs_.size());
    for (size_t i = legs_.size(); i-- > 0;) {
        idx[i] = int(k % uint64_t(legs_[i].dim));
        k /= uint64_t(legs_[i].dim);
    }
    return idx;
}

Scalar Tensor::get(const Index& idx) const {
    auto it = e_.find(pack(idx));
    return it == e_.end() ? Scalar() : it->second;
}

void Tensor::set(const Index& idx, const Scalar& v) {
    uint64_t k = pack(idx);
    if (v.is_zero()) e_.erase(k);
    else e_[k] = v;
}

void Tensor::add(const Index& idx, const Scalar& v) { add_packed(pack(idx), v); }

void Tensor::add_packed(uint64_t k, const Scalar& v) {
    if (v.is_zero()) return;
    auto it = e_.find(k);
    if (it == e_.end()) {
        e_.emplace(k, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) e_.erase(it);
}

Scalar Tensor::at(uint64_t row, uint64_t col) const {
    auto it = e_.find(row * cols() + col);
    return it == e_.end() ? Scalar() : it->second;
}

Tensor Tensor::operator-() const {
    Tensor r = *this;
    for (auto& [k, v] : r.e_) v = -v;
    return r;
}

Tensor Tensor::operator+(const Tensor& o) const {
    if (legs_ != o.legs_) throw ShapeError("add: leg mismatch");
    Tensor r = *this;
    for (auto& [k, v] : o.e_) r.add_packed(k, v);
    return r;
}

Tensor Tensor::operator-(const Tensor& o) const { return *this + (-o); }

Tensor Tensor::operator*(const Scalar& s) const {
    Tensor r(legs_);
    if (s.is_zero()) return r;
    for (auto& [k, v] : e_) r.e_.emplace(k, v * s);
    return r;
}

Tensor Tensor::permute_legs(const std::vector<int>& perm) const {
    if (perm.size() != legs_.size()) throw ShapeError("permute: length mismatch");
    std::vector<Leg> nl;
    for (int p : perm) nl.push_back(legs_.at(p));
    Tensor r(nl);
    for (auto& [k, v] : e_) {
        Index old = unpack(k), idx(perm.size());
        for (size_t i = 0; i < perm.size(); ++i) idx[i] = old[perm[i]];
        r.e_.emplace(r.pack(idx), v);
    }
    return r;
}

Tensor Tensor::map(const std::function<Scalar(const Scalar&)>& f) const {
    Tensor r(legs_);
    for (auto& [k, v] : e_) r.add_packed(k, f(v));
    return r;
}

SMat Tensor::to_matrix() const {
    if (!is_operator()) throw ShapeError("to_matrix: not an operator tensor");
    SMat m = SMat::Zero(Eigen::Index(rows()), Eigen::Index(cols()));
    uint64_t c = cols();
    for (auto& [k, v] : e_) m(Eigen::Index(k / c), Eigen::Index(k % c)) = v;
    return m;
}

QMat Tensor::eval_at(const Rational& q0) const { return qbrst::eval_at(to_matrix(), q0); }

Tensor contract(const Tensor& a, const Tensor& b, const std::vector<std::pair<int, int>>& pairing) {
    std::vector<bool> ua(a.rank(), false), ub(b.rank(), false);
    for (auto [ia, ib] : pairing) {
        if (ia < 0 || ia >= a.rank() || ib < 0 || ib >= b.rank()) throw ShapeError("contract: leg out of range");
        if (ua[ia] || ub[ib]) throw ShapeError("contract: leg paired twice");
        const Leg &la = a.legs()[ia], &lb = b.legs()[ib];
        if (la.dim != lb.dim) throw ShapeError("contract: dimension mismatch");
        if (la.kind != LegKind::out || lb.kind != LegKind::in) throw ShapeError("contract: kind mismatch");
        ua[ia] = ub[ib] = true;
    }
    std::vector<Leg> legs;
    std::vector<int> fa, fb;
    for (int i = 0; i < a.rank(); ++i)
        if (!ua[i]) legs.push_back(a.legs()[i]), fa.push_back(i);
    for (int i = 0; i < b.rank(); ++i)
        if (!ub[i]) legs.push_back(b.legs()[i]), fb.push_back(i);
    Tensor r(legs);

    auto key_of = [&](const Index& idx, bool from_a) {
        uint64_t k = 0;
        for (auto [ia, ib] : pairing) k = k * uint64_t(a.legs()[ia].dim) + uint64_t(idx[from_a ? ia : ib]);
        return k;
    };
    std::unordered_map<uint64_t, std::vector<std::pair<Index, const Scalar*>>> bykey;
    for (auto& [k, v] : b.entries()) {
        Index idx = b.unpack(k);
        bykey[key_of(idx, false)].emplace_back(idx, &v);
    }
    std::map<uint64_t, Scalar> acc;
    for (auto& [k, v] : a.entries()) {
        Index ia = a.unpack(k);
        auto it = bykey.find(key_of(ia, true));
        if (it == bykey.end()) continue;
        for (auto& [ib, pv] : it->second) {
            Index out;
            for (int i : fa) out.push_back(ia[i]);
            for (int i : fb) out.push_back(ib[i]);
            uint64_t ko = r.pack(out);
            auto [jt, fresh] = acc.emplace(ko, v * *pv);
            if (!fresh) jt->second += v * *pv;
        }
    }
    for (auto& [k, v] : acc) r.add_packed(k, v);
    return r;
}

Tensor trace(const Tensor& a, int out_leg, int in_leg) {
    const auto& L = a.legs();
    if (L.at(out_leg).kind != LegKind::out || L.at(in_leg).kind != LegKind::in || L[out_leg].dim != L[in_leg].dim)
        throw ShapeError("trace: incompatible legs");
    std::vector<Leg> legs;
    std::vector<int> keep;
    for (int i = 0; i < a.rank(); ++i)
        if (i != out_leg && i != in_leg) legs.push_back(L[i]), keep.push_back(i);
    Tensor r(legs);
    for (auto& [k, v] : a.entries()) {
        Index idx = a.unpack(k);
        if (idx[out_leg] != idx[in_leg]) continue;
        Index o;
        for (int i : keep) o.push_back(idx[i]);
        r.add(o, v);
    }
    return r;
}

Tensor compose(const Tensor& a, const Tensor& b) {
    if (!a.is_operator() || !b.is_operator()) throw ShapeError("compose: operator tensors required");
    std::vector<int> ao, bi;
    for (auto& l : a.legs())
        if (l.kind == LegKind::out) ao.push_back(l.dim);
    for (auto& l : b.legs())
        if (l.kind == LegKind::in) bi.push_back(l.dim);
    if (ao != bi) throw ShapeError("compose: out-legs of a do not match in-legs of b");
    std::vector<int> in, out;
    for (auto& l : a.legs())
        if (l.kind == LegKind::in) in.push_back(l.dim);
    for (auto& l : b.legs())
        if (l.kind == LegKind::out) out.push_back(l.dim);
    Tensor r = Tensor::op(in, out);
    const uint64_t ac = a.cols(), bc = b.cols();
    // b grouped by row
    std::unordered_map<uint64_t, std::vector<std::pair<uint64_t, const Scalar*>>> brow;
    for (auto& [k, v] : b.entries()) brow[k / bc].emplace_back(k % bc, &v);
    std::map<uint64_t, Scalar> acc;
    for (auto& [k, v] : a.entries()) {
        auto it = brow.find(k % ac);
        if (it == brow.end()) continue;
        uint64_t row = k / ac;
        for (auto& [c, pv] : it->second) {
            uint64_t key = row * bc + c;
            auto [jt, fresh] = acc.emplace(key, v * *pv);
            if (!fresh) jt->second += v * *pv;
        }
    }
    for (auto& [k, v] : acc) r.add_packed(k, v);
    return r;
}

Tensor compose(const std::vector<Tensor>& chain) {
    if (chain.empty()) throw ShapeError("compose: empty chain");
    Tensor r = chain[0];
    for (size_t i = 1; i < chain.size(); ++i) r = compose(r, chain[i]);
    return r;
}

Tensor kron(const Tensor& a, const Tensor& b) {
    if (!a.is_operator() || !b.is_operator()) throw ShapeError("kron: operator tensors required");
    std::vector<int> in, out;
    for (auto& l : a.legs()) (l.kind == LegKind::in ? in : out).push_back(l.dim);
    size_t ain = in.size(), aout = out.size();
    for (auto& l : b.legs()) (l.kind == LegKind::in ? in : out).push_back(l.dim);
    Tensor r = Tensor::op(in, out);
    const uint64_t ac = a.cols(), br = b.rows(), bc = b.cols();
    (void)ain;
    (void)aout;
    for (auto& [ka, va] : a.entries()) {
        uint64_t ra = ka / ac, ca = ka % ac;
        for (auto& [kb, vb] : b.entries()) {
            uint64_t rb = kb / bc, cb = kb % bc;
            r.add_at(ra * br + rb, ca * bc + cb, va * vb);
        }
    }
    return r;
}

Tensor embed(const Tensor& op, int n, int k, int d) {
    int m = op.n_in();
    if (k < 1 || k + m - 1 > n) throw ShapeError("embed: position out of range");
    Tensor r = op;
    if (k > 1) r = kron(Tensor::identity(d, k - 1), r);
    if (k + m - 1 < n) r = kron(r, Tensor::identity(d, n - (k + m - 1)));
    return r;
}

Tensor embed_chain(const Tensor& sigma, int n, Chain kind, int k) {
    if (k < 1 || k >= n) throw ShapeError("embed_chain: need 1 <= k < n");
    if (sigma.n_in() != 2 || sigma.n_out() != 2) throw ShapeError("embed_chain: sigma must be a two-leg operator");
    int d = sigma.legs()[0].dim;
    std::vector<Tensor> f;
    if (kind == Chain::ascending)
        for (int j = k; j < n; ++j) f.push_back(embed(sigma, n, j, d));
    else
        for (int j = n - 1; j >= k; --j) f.push_back(embed(sigma, n, j, d));
    return compose(f);
}

namespace {

std::vector<Row<Scalar>> rows_of(const Tensor& t) {
    std::vector<Row<Scalar>> rows(t.rows());
    uint64_t c = t.cols();
    for (auto& [k, v] : t.entries()) rows[k / c].emplace(int(k % c), v);
    return rows;
}

std::vector<int> out_dims(const Tensor& t) {
    std::vector<int> d;
    for (auto& l : t.legs())
        if (l.kind == LegKind::out) d.push_back(l.dim);
    return d;
}

std::vector<int> in_dims(const Tensor& t) {
    std::vector<int> d;
    for (auto& l : t.legs())
        if (l.kind == LegKind::in) d.push_back(l.dim);
    return d;
}

}

std::optional<LinearSolution> solve_linear(const Tensor& m, const Tensor& rhs, bool want_kernel) {
    if (!m.is_operator() || !rhs.is_operator()) throw ShapeError("solve_linear: operator tensors required");
    if (m.rows() != rhs.rows() || in_dims(m) != in_dims(rhs)) throw ShapeError("solve_linear: rhs rows do not match");
    const int n = int(m.cols());
    auto rows = rows_of(m);
    uint64_t rc = rhs.cols();
    for (auto& [k, v] : rhs.entries()) rows[k / rc].emplace(n + int(k % rc), v);
    auto e = rref(std::move(rows), n);
    LinearSolution s{Tensor::op(out_dims(m), out_dims(rhs)), {}};
    for (size_t i = 0; i < e.rows.size(); ++i)
        for (auto& [c, v] : e.rows[i])
            if (c >= n) s.solution.add_at(uint64_t(e.pivots[i]), uint64_t(c - n), v);
    if (compose(m, s.solution) != rhs) return std::nullopt;
    if (want_kernel) {
        std::vector<bool> piv(n, false);
        for (int c : e.pivots) piv[c] = true;
        for (int f = 0; f < n; ++f) {
            if (piv[f]) continue;
            Tensor v = Tensor::op(out_dims(m), {});
            v.add_at(uint64_t(f), 0, 1);
            for (size_t i = 0; i < e.rows.size(); ++i) {
                auto it = e.rows[i].find(f);
                if (it != e.rows[i].end()) v.add_at(uint64_t(e.pivots[i]), 0, -it->second);
            }
            s.kernel.push_back(std::move(v));
        }
    }
    return s;
}

Tensor transpose(const Tensor& t) {
    if (!t.is_operator()) throw ShapeError("transpose: operator tensor required");
    Tensor r = Tensor::op(out_dims(t), in_dims(t));
    uint64_t c = t.cols();
    for (auto& [k, v] : t.entries()) r.add_at(k % c, k / c, v);
    return r;
}

std::optional<Tensor> sandwich_solve(const Tensor& a, const Tensor& b, const Tensor& y) {
    auto z = solve_linear(a, y, false);
    if (!z) return std::nullopt;
    auto xt = solve_linear(transpose(b), transpose(z->solution), false);
    if (!xt) return std::nullopt;
    Tensor x = transpose(xt->solution);
    if (compose({a, x, b}) != y) return std::nullopt;
    return x;
}

}
