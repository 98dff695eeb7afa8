#pragma once

#include <map>
#include <optional>
#include <vector>
#include <Eigen/Core>

#include "qbrst/qfield.hpp"

namespace Eigen {

template <>
struct NumTraits<qbrst::Scalar> : GenericNumTraits<qbrst::Scalar> {
    typedef qbrst::Scalar Real;
    typedef qbrst::Scalar NonInteger;
    typedef qbrst::Scalar Nested;
    typedef qbrst::Scalar Literal;
    enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 1, AddCost = 8, MulCost = 16 };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    typedef mpq_class Literal;
    enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 1, AddCost = 4, MulCost = 8 };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}

namespace qbrst {

template <class K>
using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
using SMat = Mat<Scalar>;
using QMat = Mat<Rational>;

inline bool is_zero(const Scalar& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

// Sparse row storage used by all exact eliminations.
template <class K>
using Row = std::map<int, K>;

template <class K>
struct Echelon {
    std::vector<Row<K>> rows;   // fully reduced, pivot coefficient 1
    std::vector<int> pivots;    // pivot column of each row, increasing
};

template <class K>
void axpy(Row<K>& y, const K& a, const Row<K>& x) {
    for (auto& [c, v] : x) {
        auto it = y.find(c);
        if (it == y.end()) {
            y.emplace(c, a * v);
        } else {
            it->second += a * v;
            if (is_zero(it->second)) y.erase(it);
        }
    }
}

// Reduced row echelon form; pivots chosen at the first nonzero column in fixed order.
template <class K>
Echelon<K> rref(std::vector<Row<K>> rows, int col_limit = -1) {
    std::map<int, Row<K>> piv;  // pivot column -> row
    for (auto& r : rows) {
        for (auto it = r.begin(); it != r.end();) {
            if (is_zero(it->second)) it = r.erase(it);
            else ++it;
        }
        while (!r.empty()) {
            int c = r.begin()->first;
            if (col_limit >= 0 && c >= col_limit) break;
            auto p = piv.find(c);
            if (p == piv.end()) break;
            K f = r.begin()->second;
            axpy(r, K(-f), p->second);
        }
        if (r.empty()) continue;
        int c = r.begin()->first;
        if (col_limit >= 0 && c >= col_limit) continue;
        K inv = K(1) / r.begin()->second;
        for (auto& [cc, v] : r) v *= inv;
        piv.emplace(c, std::move(r));
    }
    Echelon<K> e;
    // back substitution, from the last pivot upwards
    for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
        Row<K>& r = it->second;
        for (auto jt = piv.rbegin(); jt != it; ++jt) {
            auto f = r.find(jt->first);
            if (f != r.end()) {
                K a = -f->second;
                axpy(r, a, jt->second);
            }
        }
    }
    for (auto& [c, r] : piv) {
        e.pivots.push_back(c);
        e.rows.push_back(std::move(r));
    }
    return e;
}

template <class K>
std::vector<Row<K>> to_rows(const Mat<K>& m) {
    std::vector<Row<K>> rows(m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!is_zero(m(i, j))) rows[i].emplace(int(j), m(i, j));
    return rows;
}

template <class K>
int rank(const Mat<K>& m) {
    return int(rref(to_rows(m)).pivots.size());
}

// Kernel basis of M (right null space), one column per free variable.
template <class K>
Mat<K> kernel(const Mat<K>& m) {
    auto e = rref(to_rows(m));
    std::vector<bool> is_piv(m.cols(), false);
    for (int c : e.pivots) is_piv[c] = true;
    std::vector<int> free;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_piv[c]) free.push_back(c);
    Mat<K> k = Mat<K>::Zero(m.cols(), Eigen::Index(free.size()));
    for (size_t f = 0; f < free.size(); ++f) {
        k(free[f], Eigen::Index(f)) = K(1);
        for (size_t i = 0; i < e.rows.size(); ++i) {
            auto it = e.rows[i].find(free[f]);
            if (it != e.rows[i].end()) k(e.pivots[i], Eigen::Index(f)) = -it->second;
        }
    }
    return k;
}

template <class K>
struct Solution {
    Mat<K> particular;  // cols = rhs cols
    Mat<K> kernel;
};

// Solve M X = B; nullopt when inconsistent.
template <class K>
std::optional<Solution<K>> solve(const Mat<K>& m, const Mat<K>& b) {
    const int n = int(m.cols());
    std::vector<Row<K>> rows(m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!is_zero(m(i, j))) rows[i].emplace(int(j), m(i, j));
        for (Eigen::Index j = 0; j < b.cols(); ++j)
            if (!is_zero(b(i, j))) rows[i].emplace(n + int(j), b(i, j));
    }
    auto e = rref(std::move(rows), n);
    // rows whose pivot falls in the rhs block were dropped by col_limit; re-check consistency
    Mat<K> x = Mat<K>::Zero(n, b.cols());
    for (size_t i = 0; i < e.rows.size(); ++i)
        for (auto& [c, v] : e.rows[i])
            if (c >= n) x(e.pivots[i], c - n) = v;
    Mat<K> r = m * x - b;
    for (Eigen::Index i = 0; i < r.rows(); ++i)
        for (Eigen::Index j = 0; j < r.cols(); ++j)
            if (!is_zero(r(i, j))) return std::nullopt;
    return Solution<K>{x, kernel(m)};
}

template <class K>
std::optional<Mat<K>> inverse(const Mat<K>& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    Mat<K> id = Mat<K>::Identity(m.rows(), m.cols());
    auto s = solve(m, id);
    if (!s || s->kernel.cols() != 0) return std::nullopt;
    return s->particular;
}

template <class K>
bool is_zero(const Mat<K>& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!is_zero(m(i, j))) return false;
    return true;
}

QMat eval_at(const SMat& m, const Rational& q0);

}
