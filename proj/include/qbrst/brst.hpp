#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qbrst/ncring.hpp"
#include "qbrst/qla.hpp"
#include "qbrst/wedge.hpp"

namespace qbrst {

enum class Provenance { paper_formula, solved };
std::string to_string(Provenance p);

struct InconsistentLevel : std::runtime_error {
    InconsistentLevel(int r, const std::string& m) : std::runtime_error(m), level(r) {}
    int level;
};

struct XLevel {
    Tensor X;  // r+1 in-legs, r out-legs
    Provenance provenance = Provenance::solved;
    long kernel_dim = 0;  // of the two-sided map X -> A_{r+1} X A_r (level 1: of X -> A_12 X)
};

struct XTower {
    QuantumLieAlgebra qla;
    AntisymTower tower;
    std::vector<XLevel> levels;  // levels[r-1] holds X with r out-legs

    const Tensor& X(int r) const { return levels.at(r - 1).X; }
    int top() const { return int(levels.size()); }
};

// particular solution of A_12 X = -C
Tensor x_initial(const QuantumLieAlgebra& a);

// bracketed expressions of the two closed formulas: r = 1 gives C_2 + s_1 s_2 C_1 d_3,
// r = 2 gives (C_3 + s_2 s_3 C_2 d_4) - s_1 s_2 s_3 (C_2 + s_1 s_2 C_1 d_3) d_4
Tensor x_candidate(const QuantumLieAlgebra& a, int r);

// A_{1->r+1} ((-1)^r s_{r+1<-1} - 1) (1 (x) X_{r-1}) (1 (x) A_{1->r-1}),  r >= 2
Tensor recurrence_rhs(const AntisymTower& t, const Tensor& x_prev, int r);
// A_{1->r+1} X A_{1->r} - rhs   (level 1: A_12 X + C)
Tensor recurrence_residual(const QuantumLieAlgebra& a, const AntisymTower& t, const Tensor& x, const Tensor& x_prev,
                           int r);

struct CandidateCheck {
    int r = 0;           // 1 or 2
    int level = 0;       // recurrence level the formula describes (r + 1)
    bool identity = false;  // recurrence rhs == bracket * A_{1->level}
    bool literal = false;   // X = bracket solves the sandwich
    size_t identity_nnz = 0, literal_nnz = 0;
};
CandidateCheck check_candidate(const XTower& xt, int r);

struct ResidualReport {
    std::vector<size_t> nnz;  // per level, starting at level 1
    bool ok() const;
    int first_failure() const;  // level, 0 when ok
};
ResidualReport verify_recurrence(const XTower& xt);

long tensor_rank(const Tensor& t);

// Levels 1..r_max (r_max <= h-1, or within the tower when the height exceeds its cap). A candidate that solves its level literally is stored
// with provenance paper_formula; otherwise the particular solution of the solver is kept.
XTower solve_x_generic(const QuantumLieAlgebra& a, const AntisymTower& t, int r_max);

// Omega (+1), chi (0), gamma (-1), each with n_gen free indices
GeneratorAlphabet abstract_alphabet(int n_gen);
// Omega^i chi_i + sum_r Omega_{i_{r+1}} ... Omega_{i_1} (A X_r A)^{j_1..j_r}_{i_1..i_{r+1}} gamma_{j_1} ... gamma_{j_r}
// (both wedge products written out, so the coefficient does not depend on the particular X_r)
NCPoly assemble_q_abstract(const XTower& xt);
std::vector<NCPoly> q_summands_abstract(const XTower& xt);  // index 0: Omega chi, then r = 1..top

}
