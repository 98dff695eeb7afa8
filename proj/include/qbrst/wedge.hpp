#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qbrst/tensor.hpp"

namespace qbrst {

struct RecursionMismatch : std::logic_error {
    explicit RecursionMismatch(int n) : std::logic_error("antisymmetrizer recursions disagree at n = " + std::to_string(n)), level(n) {}
    int level;
};

struct AntisymTower {
    Tensor sigma;
    std::vector<Tensor> levels;  // levels[n-1] = A_{1->n}
    std::optional<int> height;   // empty: exceeds cap
    int cap = 0;

    const Tensor& A(int n) const { return levels.at(n - 1); }
    int size() const { return int(levels.size()); }
};

// Both recursions, given A_{1->n-1}; throws RecursionMismatch if they differ.
Tensor antisym_step(const Tensor& sigma, const Tensor& prev, int n);
// Second recursion only (bracket then A_{2->n}), for cross-checks.
Tensor antisym_step_right(const Tensor& sigma, const Tensor& prev, int n);

Tensor build_antisymmetrizer(const Tensor& sigma, int n);
// Levels are built up to cap+1 or until the first zero level.
AntisymTower build_tower(const Tensor& sigma, int cap);
std::optional<int> compute_height(const Tensor& sigma, int cap);

// Whether A_{1->n} = Z (A_{1->k} (x) 1) has a solution Z.
bool factors_through(const AntisymTower& t, int n, int k);

}
