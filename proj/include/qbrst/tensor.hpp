#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qbrst/linalg.hpp"
#include "qbrst/qfield.hpp"

namespace qbrst {

enum class LegKind { in, out };

struct Leg {
    int dim;
    LegKind kind;
    bool operator==(const Leg&) const = default;
};

struct ShapeError : std::invalid_argument {
    explicit ShapeError(const std::string& m) : std::invalid_argument(m) {}
};

using Index = std::vector<int>;

// Sparse exact tensor. Entries are keyed by the packed multi-index (leg 0 most significant).
// Operator tensors list their in-legs first; as a matrix the rows are the in-index and
// products compose left to right: (AB)[in,out] = sum_x A[in,x] B[x,out].
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<Leg> legs);
    static Tensor op(const std::vector<int>& in_dims, const std::vector<int>& out_dims);
    static Tensor op(int d, int n_in, int n_out) {
        return op(std::vector<int>(n_in, d), std::vector<int>(n_out, d));
    }
    static Tensor identity(int d, int n = 1);   // n in-legs, n out-legs
    static Tensor permutation(int d);           // P: (i,j) -> (j,i)
    static Tensor from_matrix(const SMat& m, const std::vector<int>& in_dims, const std::vector<int>& out_dims);

    const std::vector<Leg>& legs() const { return legs_; }
    int rank() const { return int(legs_.size()); }
    int n_in() const;
    int n_out() const;
    bool is_operator() const;  // all in-legs precede all out-legs
    uint64_t rows() const;     // product of in-leg dims (operator view)
    uint64_t cols() const;

    const std::map<uint64_t, Scalar>& entries() const { return e_; }
    size_t nnz() const { return e_.size(); }
    bool is_zero() const { return e_.empty(); }

    uint64_t pack(const Index& idx) const;
    Index unpack(uint64_t k) const;
    Scalar get(const Index& idx) const;
    void set(const Index& idx, const Scalar& v);
    void add(const Index& idx, const Scalar& v);
    void add_packed(uint64_t k, const Scalar& v);
    Scalar at(uint64_t row, uint64_t col) const;  // operator view
    void add_at(uint64_t row, uint64_t col, const Scalar& v) { add_packed(row * cols() + col, v); }

    Tensor operator-() const;
    Tensor operator+(const Tensor& o) const;
    Tensor operator-(const Tensor& o) const;
    Tensor operator*(const Scalar& s) const;
    bool operator==(const Tensor& o) const { return legs_ == o.legs_ && e_ == o.e_; }
    bool operator!=(const Tensor& o) const { return !(*this == o); }

    Tensor permute_legs(const std::vector<int>& perm) const;  // new leg i = old leg perm[i]
    Tensor map(const std::function<Scalar(const Scalar&)>& f) const;
    SMat to_matrix() const;  // operator view, dense
    QMat eval_at(const Rational& q0) const;

private:
    std::vector<Leg> legs_;
    std::map<uint64_t, Scalar> e_;
};

// Pairs (out-leg of a, in-leg of b). Result legs: unpaired legs of a, then unpaired legs of b.
Tensor contract(const Tensor& a, const Tensor& b, const std::vector<std::pair<int, int>>& pairing);
// Contraction of an out-leg with an in-leg of the same tensor.
Tensor trace(const Tensor& a, int out_leg, int in_leg);

// Flow product of operators: a's out-legs feed b's in-legs.
Tensor compose(const Tensor& a, const Tensor& b);
Tensor compose(const std::vector<Tensor>& chain);
// Swaps the roles of in- and out-legs (matrix transpose in the operator view).
Tensor transpose(const Tensor& t);
// Operator tensor product: in = a.in ++ b.in, out = a.out ++ b.out.
Tensor kron(const Tensor& a, const Tensor& b);
// op on consecutive legs starting at leg k (1-based) inside n in-legs of dimension d.
Tensor embed(const Tensor& op, int n, int k, int d);

enum class Chain { ascending, descending };
// ascending: sigma_{k->n} = s_{k,k+1} s_{k+1,k+2} ... s_{n-1,n}
// descending: sigma_{n<-k} = s_{n-1,n} ... s_{k,k+1}   (both in flow order)
Tensor embed_chain(const Tensor& sigma, int n, Chain kind, int k);

struct LinearSolution {
    Tensor solution;             // in-legs: M's out-legs; out-legs: rhs out-legs
    std::vector<Tensor> kernel;  // vectors v with M v = 0, legs: M's out-legs (as in)
};

// Solves M X = rhs in the operator view (rows of M = in-index). rhs shares M's in-legs.
std::optional<LinearSolution> solve_linear(const Tensor& m, const Tensor& rhs, bool want_kernel = true);

// Two-sided solve of A X B = Y; nullopt if inconsistent.
std::optional<Tensor> sandwich_solve(const Tensor& a, const Tensor& b, const Tensor& y);

}
