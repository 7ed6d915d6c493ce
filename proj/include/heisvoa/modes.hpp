#ifndef HEISVOA_MODES_HPP
#define HEISVOA_MODES_HPP

#include "heisvoa/fock.hpp"

#include <string>

namespace heisvoa {

// Memo for vertex-operator mode actions on single monomials. Keys include
// the momentum tag, so caching is semantically invisible.
struct ModeCache {
    std::map<std::string, TermMap> entries;
};

// Conformal vector omega = 1/2 sum_{a,b} g^{ab} h_a(-1) h_b(-1) |0> and its
// central charge (= rank for the free boson).
struct ConformalVector {
    State omega;
    Rational central_charge;
};

ConformalVector conformal_vector(const BosonAlgebra& algebra);

// Action of h_i (x) t^m. m < 0 creates, m > 0 annihilates via the bracket
// [u(m), v(n)] = <u,v> m delta_{m+n,0} with c = 1; m = 0 is zero on M(1)
// and acts as <h_i, lambda> on momentum modules.
State boson_mode(const BosonAlgebra& algebra, int boson, int m, const State& w);
ModuleState boson_mode(const BosonAlgebra& algebra, int boson, int m, const ModuleState& w);

// Mode of a boson-space vector sum_i coeffs[i] h_i.
State boson_mode(const BosonAlgebra& algebra, const RatVector& coeffs, int m, const State& w);

// General vertex-operator mode v_n w, exact and linear in both arguments.
// v must be a (canonical) state; the recursion peels one creation factor of
// v per step via the iterate formula.
State vertex_mode(const BosonAlgebra& algebra, const State& v, int n, const State& w);
ModuleState vertex_mode(const BosonAlgebra& algebra, const State& v, int n, const ModuleState& w);

// L(n) = omega_{n+1}.
State virasoro(const BosonAlgebra& algebra, int n, const State& w);
ModuleState virasoro(const BosonAlgebra& algebra, int n, const ModuleState& w);

// o(v) = sum over homogeneous components v^i of (v^i)_{i-1}.
State zero_mode(const BosonAlgebra& algebra, const State& v, const State& w);
ModuleState zero_mode(const BosonAlgebra& algebra, const State& v, const ModuleState& w);

// p(v) = sum over homogeneous components v^i of (v^i)_{i-2}.
State p_mode(const BosonAlgebra& algebra, const State& v, const State& w);

struct CommutatorReport {
    bool pass = true;
    std::string counterexample; // description of the first failing basis state
};

// Checks [a_m, b_n] = sum_{t>=0} C(m,t) (a_t b)_{m+n-t} on every basis state
// of weight <= test_weight_bound. a and b must be homogeneous.
CommutatorReport check_commutator(const BosonAlgebra& algebra, const State& a,
                                  const State& b, int m, int n, int test_weight_bound);

} // namespace heisvoa

#endif
