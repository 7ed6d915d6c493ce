#ifndef HEISVOA_VERIFY_HPP
#define HEISVOA_VERIFY_HPP

#include "heisvoa/radical.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace heisvoa {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail; // first counterexample on failure
};

// Deterministic generator contract: every randomized check draws from a
// std::mt19937_64 seeded with base_seed XOR FNV-1a(check name), so suites
// are reproducible and independent of execution order.
std::uint64_t split_seed(std::uint64_t base_seed, const std::string& name);

Rational random_rational(std::mt19937_64& rng);
State random_homogeneous_state(const BosonAlgebra& algebra, int weight, std::mt19937_64& rng);
State random_state(const BosonAlgebra& algebra, int top_weight, std::mt19937_64& rng);

struct VerifyConfig {
    int max_weight = 6;
    int trials = 200;
    std::uint64_t seed = 1;
};

// Operator-identity checks (mode engine).
CheckResult check_heisenberg_bracket(const BosonAlgebra& algebra, int max_weight);
CheckResult check_creation_property(const BosonAlgebra& algebra, int max_weight);
CheckResult check_translation_covariance(const BosonAlgebra& algebra, int max_weight);
CheckResult check_commutator_identity(const BosonAlgebra& algebra, const VerifyConfig& cfg);
CheckResult check_quasi_primary_commutator(const BosonAlgebra& algebra, int max_weight);
CheckResult check_weight_one_commutator(const BosonAlgebra& algebra, int max_weight);
CheckResult check_translation_detects_weight(const BosonAlgebra& algebra, int max_weight);
CheckResult check_graded_shift(const BosonAlgebra& algebra, const VerifyConfig& cfg);
CheckResult check_central_charge(const BosonAlgebra& algebra);

// Structure checks (radical, degree, filtration, commutant).
CheckResult check_lemma33_direct_sum(const BosonAlgebra& algebra, int max_weight);
CheckResult check_semi_primary_roundtrip(const BosonAlgebra& algebra, const VerifyConfig& cfg);
CheckResult check_theorem1_roundtrip(const BosonAlgebra& algebra, const VerifyConfig& cfg);
CheckResult check_nonmember_witness(const BosonAlgebra& algebra, const VerifyConfig& cfg);
CheckResult check_degree_consistency(const BosonAlgebra& algebra, const VerifyConfig& cfg);
CheckResult check_filtration_nesting(const BosonAlgebra& algebra, const VerifyConfig& cfg);
CheckResult check_mode_vanishing_statements(const BosonAlgebra& algebra, int max_weight);
CheckResult check_radical_not_graded(const BosonAlgebra& algebra);
CheckResult check_canonical_form_on_v1(const BosonAlgebra& algebra);
CheckResult check_oinfinity_subset_radical(const BosonAlgebra& algebra, const VerifyConfig& cfg);
CheckResult check_oinfinity_separation(const BosonAlgebra& algebra, const VerifyConfig& cfg);
CheckResult check_commutant_factorization(const BosonAlgebra& algebra,
                                          const std::vector<RatVector>& h_prime,
                                          int max_weight);
CheckResult check_parse_roundtrip(const BosonAlgebra& algebra, const VerifyConfig& cfg);

std::vector<CheckResult> run_modes_suite(const BosonAlgebra& algebra, const VerifyConfig& cfg);
std::vector<CheckResult> run_radical_suite(const BosonAlgebra& algebra, const VerifyConfig& cfg);
std::vector<CheckResult> run_suite(const std::string& name, const BosonAlgebra& algebra,
                                   const VerifyConfig& cfg);

} // namespace heisvoa

#endif
