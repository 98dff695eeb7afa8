#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "qbrst/glq.hpp"

namespace qbrst {

// Normal-form monomials T...T omega...omega with fixed letter counts.
struct StateSpace {
    int t_degree = 0, w_degree = 0;
    std::vector<Word> basis;
    std::map<Word, int> index;
    int dim() const { return int(basis.size()); }
    NCPoly state(const QMat& v) const;  // column vector -> polynomial
    NCPoly state(const SMat& v) const;
};

StateSpace make_space(const GlqInstance& g, int t_degree, int w_degree);

// (L - 1)|0> = (L^-1 - 1)|0> = 0, J|0> = 0 applied to a normal-form polynomial
NCPoly vacuum_reduce(const GlqInstance& g, const NCPoly& p);
NCPoly act(const GlqInstance& g, const NCPoly& op, const NCPoly& state);

struct OutOfSpace : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// column j = image of basis vector j of src, expanded in dst
SMat operator_matrix(const GlqInstance& g, const NCPoly& op, const StateSpace& src, const StateSpace& dst);
SMat coordinates(const NCPoly& p, const StateSpace& s);

struct NonGenericPoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// operators on the component (t, w) and its neighbours w-1, w+1
struct HodgeData {
    StateSpace below, space, above;
    SMat delta;        // on space
    SMat q_in, qs_in;  // Q: below -> space, Q*: above -> space
    SMat q_out, qs_out;  // Q: space -> above, Q*: space -> below
};
HodgeData hodge_data(const GlqInstance& g, const NCPoly& Q, const NCPoly& Qs, int t_degree, int w_degree);

struct HodgeComponent {
    int t_degree = 0, w_degree = 0, dim = 0;
    int ker_delta = 0, rank_q = 0, rank_qs = 0;
    bool delta_is_anticommutator = false;  // symbolic
    bool q_squared_zero = false;           // Q below -> space -> above
    bool direct_sum = false;               // at q0
    bool dims_add_up() const { return ker_delta + rank_q + rank_qs == dim; }
};
// throws NonGenericPoint if a rank at q0 falls below the symbolic rank
HodgeComponent hodge_component(const HodgeData& d, const Rational& q0);

struct HodgeDecomposition {
    NCPoly harmonic, q_exact, qstar_exact;  // coefficients are rationals (q specialized to q0)
    bool round_trip = false;                // parts sum to the state and Delta harmonic = 0
};
HodgeDecomposition hodge_decompose(const HodgeData& d, const NCPoly& state, const Rational& q0);

}
