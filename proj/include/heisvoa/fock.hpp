#ifndef HEISVOA_FOCK_HPP
#define HEISVOA_FOCK_HPP

#include "heisvoa/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace heisvoa {

// A single creation operator h_{boson}(-level), boson in 1..rank, level >= 1.
struct Factor {
    int boson;
    int level;

    friend bool operator==(const Factor& a, const Factor& b) {
        return a.boson == b.boson && a.level == b.level;
    }
    // Canonical factor order: level descending, boson ascending.
    friend bool operator<(const Factor& a, const Factor& b) {
        if (a.level != b.level)
            return a.level > b.level;
        return a.boson < b.boson;
    }
};

// Product of creation operators applied to the vacuum, indexed by a colored
// partition. The factor list is always kept sorted in canonical order; the
// empty list is the vacuum.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Factor> factors);

    static Monomial vacuum() { return Monomial{}; }

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_vacuum() const { return factors_.empty(); }
    int weight() const;
    int top_level() const { return factors_.empty() ? 0 : factors_.front().level; }

    Monomial with_factor(int boson, int level) const;
    // Removes one copy of the factor at position idx.
    Monomial without_factor(std::size_t idx) const;

    std::string key() const; // compact serialization, used as a cache key

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return std::lexicographical_compare(a.factors_.begin(), a.factors_.end(),
                                            b.factors_.begin(), b.factors_.end());
    }

private:
    std::vector<Factor> factors_;
};

using TermMap = std::map<Monomial, Rational>;

// Finite sparse linear combination of monomials. Zero coefficients are never
// stored, so equality of term maps is equality of states.
class State {
public:
    State() = default;
    explicit State(const Monomial& m, const Rational& c = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Highest monomial weight present, or -1 for the zero state.
    int top_weight() const;
    // True when every monomial has the given weight (vacuously true for 0).
    bool is_homogeneous(int* weight = nullptr) const;

    void add_term(const Monomial& m, const Rational& c);

    State& operator+=(const State& o);
    State& operator-=(const State& o);
    State& operator*=(const Rational& c);

    friend State operator+(State a, const State& b) { return a += b; }
    friend State operator-(State a, const State& b) { return a -= b; }
    friend State operator*(const Rational& c, State s) { return s *= c; }
    friend State operator-(State a) { return a *= -1; }
    friend bool operator==(const State& a, const State& b) { return a.terms_ == b.terms_; }

private:
    TermMap terms_;
};

// Decomposition of a state by monomial weight.
std::map<int, State> graded_components(const State& s);

// Element of the momentum-lambda Fock module: same monomial basis, tagged
// with the momentum vector (coordinates in the chosen basis of H).
struct ModuleState {
    RatVector momentum;
    TermMap terms;

    ModuleState() = default;
    ModuleState(RatVector lambda, TermMap t = {})
        : momentum(std::move(lambda)), terms(std::move(t)) {}

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const ModuleState& a, const ModuleState& b) {
        return a.momentum == b.momentum && a.terms == b.terms;
    }
};

struct ModeCache; // defined in modes.cpp

// Rank plus the symmetric nondegenerate Gram matrix defining the Heisenberg
// commutation relations. Construct through make_algebra.
class BosonAlgebra {
public:
    int rank() const { return rank_; }
    const RatMatrix& gram() const { return gram_; }
    const RatMatrix& gram_inverse() const { return gram_inverse_; }

    // 1-based boson indices.
    const Rational& pairing(int i, int j) const { return gram_[i - 1][j - 1]; }
    // <h_i, lambda> with lambda in h-coordinates.
    Rational momentum_pairing(int i, const RatVector& lambda) const;

    ModeCache& cache() const { return *cache_; }

    friend BosonAlgebra make_algebra(int rank, const RatMatrix& gram);

private:
    BosonAlgebra() = default;
    int rank_ = 0;
    RatMatrix gram_;
    RatMatrix gram_inverse_;
    std::shared_ptr<ModeCache> cache_;
};

// Verifies symmetry and nondegeneracy; throws std::invalid_argument with
// "degenerate form" on a singular Gram matrix.
BosonAlgebra make_algebra(int rank, const RatMatrix& gram);
BosonAlgebra make_identity_algebra(int rank);

// All monomials of weight n, each exactly once, in canonical order.
// The count is the number of rank-colored partitions of n.
std::vector<Monomial> basis(const BosonAlgebra& algebra, int n);

// Number of r-colored partitions of n (memoized dynamic programming).
Integer colored_partition_count(int colors, int n);

std::size_t dim(const BosonAlgebra& algebra, int n);

} // namespace heisvoa

#endif
