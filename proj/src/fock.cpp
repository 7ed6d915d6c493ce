#include "heisvoa/fock.hpp"

#include "heisvoa/linalg.hpp"
#include "heisvoa/modes.hpp"

#include <algorithm>
#include <stdexcept>

namespace heisvoa {

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
    for (const auto& f : factors_) {
        if (f.boson < 1 || f.level < 1)
            throw std::invalid_argument("monomial factor needs boson >= 1 and level >= 1");
    }
    std::sort(factors_.begin(), factors_.end());
}

int Monomial::weight() const {
    int w = 0;
    for (const auto& f : factors_)
        w += f.level;
    return w;
}

Monomial Monomial::with_factor(int boson, int level) const {
    Monomial out = *this;
    Factor f{boson, level};
    auto it = std::lower_bound(out.factors_.begin(), out.factors_.end(), f);
    out.factors_.insert(it, f);
    return out;
}

Monomial Monomial::without_factor(std::size_t idx) const {
    Monomial out = *this;
    out.factors_.erase(out.factors_.begin() + static_cast<std::ptrdiff_t>(idx));
    return out;
}

std::string Monomial::key() const {
    std::string k;
    for (const auto& f : factors_) {
        k += std::to_string(f.boson);
        k += ':';
        k += std::to_string(f.level);
        k += ',';
    }
    return k;
}

State::State(const Monomial& m, const Rational& c) {
    add_term(m, c);
}

int State::top_weight() const {
    int w = -1;
    for (const auto& [m, c] : terms_)
        w = std::max(w, m.weight());
    return w;
}

bool State::is_homogeneous(int* weight) const {
    int w = -1;
    for (const auto& [m, c] : terms_) {
        if (w == -1)
            w = m.weight();
        else if (m.weight() != w)
            return false;
    }
    if (weight)
        *weight = w < 0 ? 0 : w;
    return true;
}

void State::add_term(const Monomial& m, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

State& State::operator+=(const State& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

State& State::operator-=(const State& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

State& State::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_)
        coeff *= c;
    return *this;
}

std::map<int, State> graded_components(const State& s) {
    std::map<int, State> out;
    for (const auto& [m, c] : s.terms())
        out[m.weight()].add_term(m, c);
    return out;
}

Rational BosonAlgebra::momentum_pairing(int i, const RatVector& lambda) const {
    Rational out = 0;
    for (int j = 1; j <= rank_; ++j)
        out += pairing(i, j) * lambda[static_cast<std::size_t>(j - 1)];
    return out;
}

BosonAlgebra make_algebra(int rank, const RatMatrix& gram) {
    if (rank < 1)
        throw std::invalid_argument("rank must be positive");
    if (gram.size() != static_cast<std::size_t>(rank))
        throw std::invalid_argument("gram matrix must be rank x rank");
    for (const auto& row : gram)
        if (row.size() != static_cast<std::size_t>(rank))
            throw std::invalid_argument("gram matrix must be rank x rank");
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
            if (gram[i][j] != gram[j][i])
                throw std::invalid_argument("gram matrix must be symmetric");
    BosonAlgebra a;
    a.rank_ = rank;
    a.gram_ = gram;
    try {
        a.gram_inverse_ = invert(gram);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("degenerate form");
    }
    a.cache_ = std::make_shared<ModeCache>();
    return a;
}

BosonAlgebra make_identity_algebra(int rank) {
    return make_algebra(rank, identity_matrix(static_cast<std::size_t>(rank)));
}

namespace {

// Enumerates colored partitions with factors chosen in nonincreasing
// canonical order, so each monomial appears exactly once.
void enumerate(const BosonAlgebra& algebra, int remaining, Factor max_factor,
               std::vector<Factor>& acc, std::vector<Monomial>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int level = std::min(remaining, max_factor.level); level >= 1; --level) {
        int boson_start = (level == max_factor.level) ? max_factor.boson : 1;
        for (int boson = boson_start; boson <= algebra.rank(); ++boson) {
            acc.push_back({boson, level});
            enumerate(algebra, remaining - level, {boson, level}, acc, out);
            acc.pop_back();
        }
    }
}

} // namespace

std::vector<Monomial> basis(const BosonAlgebra& algebra, int n) {
    if (n < 0)
        throw std::invalid_argument("basis weight must be nonnegative");
    std::vector<Monomial> out;
    std::vector<Factor> acc;
    enumerate(algebra, n, {1, n == 0 ? 1 : n}, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

Integer colored_partition_count(int colors, int n) {
    static std::map<std::pair<int, int>, Integer> memo;
    auto it = memo.find({colors, n});
    if (it != memo.end())
        return it->second;
    // Unbounded-knapsack count over item types (level, color).
    std::vector<Integer> dp(static_cast<std::size_t>(n) + 1, 0);
    dp[0] = 1;
    for (int level = 1; level <= n; ++level)
        for (int color = 0; color < colors; ++color)
            for (int w = level; w <= n; ++w)
                dp[static_cast<std::size_t>(w)] += dp[static_cast<std::size_t>(w - level)];
    for (int w = 0; w <= n; ++w)
        memo[{colors, w}] = dp[static_cast<std::size_t>(w)];
    return dp[static_cast<std::size_t>(n)];
}

std::size_t dim(const BosonAlgebra& algebra, int n) {
    return colored_partition_count(algebra.rank(), n).get_ui();
}

} // namespace heisvoa
