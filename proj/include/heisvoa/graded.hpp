#ifndef HEISVOA_GRADED_HPP
#define HEISVOA_GRADED_HPP

#include "heisvoa/fock.hpp"
#include "heisvoa/linalg.hpp"

#include <functional>

namespace heisvoa {

// Matrix of a graded-piece restriction of an operator, in canonical basis
// order. Columns are indexed by basis(source_weight), rows by
// basis(target_weight).
struct GradedMatrix {
    int source_weight = 0;
    int target_weight = 0;
    RatMatrix entries;
};

using LinearOp = std::function<State(const State&)>;

// Coordinates of a weight-n homogeneous state in canonical basis order.
// Throws if the state has support outside weight n.
RatVector coordinates(const BosonAlgebra& algebra, const State& s, int weight);

State from_coordinates(const BosonAlgebra& algebra, const RatVector& coords, int weight);

// Throws std::invalid_argument if op output escapes the target weight.
GradedMatrix operator_matrix(const BosonAlgebra& algebra, const LinearOp& op,
                             int source_weight, int target_weight);

std::vector<RatVector> kernel_basis(const GradedMatrix& m);
std::optional<RatVector> solve(const GradedMatrix& m, const RatVector& target);

// Lemma-3.3 splitting V_n = ker L(1) (+) im L(-1) for homogeneous v of
// weight n != 1: returns (q, u) with v = q + L(-1)u and L(1)q = 0.
// Weight-1 input is rejected; weight 0 returns (v, 0).
std::pair<State, State> lemma33_decompose(const BosonAlgebra& algebra, const State& v);

// v = sum_n L(-1)^n u^n with every u^n semi-primary (quasi-primary or pure
// weight 1). The zero state decomposes to the empty list.
std::vector<State> semi_primary_decompose(const BosonAlgebra& algebra, const State& v);

// L(0) via the grading: scales each homogeneous component by its weight.
State weight_operator(const State& v);

State l_minus1_power(const BosonAlgebra& algebra, const State& v, int k);

} // namespace heisvoa

#endif
