#ifndef HEISVOA_RADICAL_HPP
#define HEISVOA_RADICAL_HPP

#include "heisvoa/graded.hpp"

#include <optional>
#include <string>

namespace heisvoa {

// Default truncation for witness searches and oracle matrices.
inline constexpr int kDefaultWitnessBound = 6;

struct ZeroModeWitness {
    int weight = 0;     // weight of the probed basis state
    Monomial probe;     // basis state u with o(v)u != 0
    State image;        // the nonzero o(v)u
};

struct RadicalCertificate {
    bool member = false;
    State j1; // present iff member: v = j1 + (L(0)+L(-1))w
    State w;
    std::optional<ZeroModeWitness> witness; // present iff not member and found
    std::string note;
};

struct DegreeResult {
    int degree = -1;
    bool ignored_vacuum_part = false; // v had a V_0 part next to higher weights
    // v (minus any V_0 part) = L(-1)^{d-1} j + L(-1)^d u for d >= 1
    std::optional<std::pair<State, State>> structural_witness;
    // least n >= 0 with v_n u != 0 for some basis u within the bound
    std::optional<ZeroModeWitness> mode_witness;
};

struct OinfinityCertificate {
    bool member = false;
    State w; // present iff member: v = (L(0)+L(-1))w
    bool in_radical = false;
    // Module witness when v is a radical non-element of (L(0)+L(-1))V:
    // o(j1)_M acts as `scalar` on the momentum-lambda module vacuum.
    State j1;
    RatVector momentum;
    Rational scalar = 0;
    std::string note;
};

struct DimCheckReport {
    bool pass = true;
    std::string detail;
};

// Basis of J_1 = ker o(.) restricted to V_1, asserted to be all of V_1.
std::vector<State> j1_basis(const BosonAlgebra& algebra, int bound = 4);

// Exact membership in J(V) = J_1 + (L(0)+L(-1))V by a bounded linear solve;
// on non-membership, searches basis states of weight <= witness_bound for a
// nonzero zero-mode witness.
RadicalCertificate radical_member(const BosonAlgebra& algebra, const State& v,
                                  int witness_bound = kDefaultWitnessBound);

// Constructive decomposition v = j1 + (L(0)+L(-1))w following the inductive
// semi-primary peeling. Throws std::invalid_argument if v is not a member.
std::pair<State, State> radical_decompose(const BosonAlgebra& algebra, const State& v);

DegreeResult degree(const BosonAlgebra& algebra, const State& v,
                    int witness_bound = kDefaultWitnessBound);

// Independent mode-scan oracle: least n >= 0 with v_n nonzero on some basis
// state of weight <= witness_bound. v must be homogeneous of weight >= 1.
int degree_witness(const BosonAlgebra& algebra, const State& v, int witness_bound);

// True iff v lies in L(-1)^{d-1} J_1 + L(-1)^d V (d >= 1).
bool filtration_member(const BosonAlgebra& algebra, const State& v, int d);

OinfinityCertificate oinfinity_member(const BosonAlgebra& algebra, const State& v);

// Matrix of o(v) on the weight-k piece of the momentum-lambda Fock module.
GradedMatrix module_zero_mode_matrix(const BosonAlgebra& algebra, const State& v,
                                     const RatVector& lambda, int module_weight);

// Basis of {v in V_n : h'_m v = 0 for all h' in h_prime, 1 <= m <= n}.
// h_prime holds coordinate vectors in the h-basis; the Gram form restricted
// to them must be nondegenerate.
std::vector<State> commutant_basis(const BosonAlgebra& algebra,
                                   const std::vector<RatVector>& h_prime, int n);

// dim V_n = sum_k dim M(1)'_k * dim W_{n-k} for all n <= max_weight.
DimCheckReport tensor_factor_dim_check(const BosonAlgebra& algebra,
                                       const std::vector<RatVector>& h_prime,
                                       int max_weight);

// Solves sum_j x_j cols[j] = target exactly over the monomials involved.
std::optional<RatVector> solve_state_combination(const std::vector<State>& cols,
                                                 const State& target);

} // namespace heisvoa

#endif
