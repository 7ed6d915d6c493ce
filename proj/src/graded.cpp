#include "heisvoa/graded.hpp"

#include "heisvoa/expr.hpp"
#include "heisvoa/modes.hpp"

#include <stdexcept>

namespace heisvoa {

RatVector coordinates(const BosonAlgebra& algebra, const State& s, int weight) {
    auto b = basis(algebra, weight);
    RatVector out(b.size(), 0);
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < b.size(); ++i)
        index.emplace(b[i], i);
    for (const auto& [m, c] : s.terms()) {
        auto it = index.find(m);
        if (it == index.end())
            throw std::invalid_argument("state has support outside weight " +
                                        std::to_string(weight) + ": " + format_monomial(m));
        out[it->second] = c;
    }
    return out;
}

State from_coordinates(const BosonAlgebra& algebra, const RatVector& coords, int weight) {
    auto b = basis(algebra, weight);
    if (coords.size() != b.size())
        throw std::invalid_argument("coordinate vector has wrong length");
    State out;
    for (std::size_t i = 0; i < b.size(); ++i)
        out.add_term(b[i], coords[i]);
    return out;
}

GradedMatrix operator_matrix(const BosonAlgebra& algebra, const LinearOp& op,
                             int source_weight, int target_weight) {
    auto src = basis(algebra, source_weight);
    auto tgt = basis(algebra, target_weight);
    GradedMatrix m;
    m.source_weight = source_weight;
    m.target_weight = target_weight;
    m.entries.assign(tgt.size(), RatVector(src.size(), 0));
    for (std::size_t col = 0; col < src.size(); ++col) {
        State image = op(State(src[col]));
        RatVector coords = coordinates(algebra, image, target_weight); // throws on escape
        for (std::size_t row = 0; row < tgt.size(); ++row)
            m.entries[row][col] = coords[row];
    }
    return m;
}

std::vector<RatVector> kernel_basis(const GradedMatrix& m) {
    std::size_t cols = m.entries.empty() ? 0 : m.entries[0].size();
    return kernel_basis(m.entries, cols);
}

std::optional<RatVector> solve(const GradedMatrix& m, const RatVector& target) {
    return solve(m.entries, target);
}

State weight_operator(const State& v) {
    State out;
    for (const auto& [m, c] : v.terms())
        out.add_term(m, c * m.weight());
    return out;
}

State l_minus1_power(const BosonAlgebra& algebra, const State& v, int k) {
    State out = v;
    for (int i = 0; i < k; ++i)
        out = virasoro(algebra, -1, out);
    return out;
}

std::pair<State, State> lemma33_decompose(const BosonAlgebra& algebra, const State& v) {
    int n = 0;
    if (!v.is_homogeneous(&n))
        throw std::invalid_argument("lemma33_decompose needs a homogeneous state");
    if (v.is_zero())
        return {State{}, State{}};
    if (n == 1)
        throw std::invalid_argument("Lemma 3.3 excludes n = 1");
    if (n == 0)
        return {v, State{}};
    // Solve L(1)L(-1)u = L(1)v in V_{n-1}; then q = v - L(-1)u.
    auto l1l = operator_matrix(
        algebra,
        [&](const State& s) { return virasoro(algebra, 1, virasoro(algebra, -1, s)); },
        n - 1, n - 1);
    RatVector rhs = coordinates(algebra, virasoro(algebra, 1, v), n - 1);
    auto sol = solve(l1l, rhs);
    if (!sol)
        throw std::logic_error("Lemma 3.3 splitting system unsolvable"); // cannot happen
    State u = from_coordinates(algebra, *sol, n - 1);
    State q = v - virasoro(algebra, -1, u);
    return {q, u};
}

std::vector<State> semi_primary_decompose(const BosonAlgebra& algebra, const State& v) {
    std::vector<State> out;
    auto put = [&](std::size_t idx, const State& s) {
        if (out.size() <= idx)
            out.resize(idx + 1);
        out[idx] += s;
    };
    for (const auto& [weight, comp] : graded_components(v)) {
        // A weight-k component needs at most k splitting steps.
        State rest = comp;
        std::size_t idx = 0;
        int guard = weight + 1;
        while (!rest.is_zero()) {
            int w = 0;
            rest.is_homogeneous(&w);
            if (w <= 1) { // V_0 is quasi-primary, V_1 is semi-primary
                put(idx, rest);
                break;
            }
            if (guard-- <= 0)
                throw std::logic_error("semi_primary_decompose exceeded its step bound");
            auto [q, u] = lemma33_decompose(algebra, rest);
            put(idx, q);
            rest = u;
            ++idx;
        }
    }
    while (!out.empty() && out.back().is_zero())
        out.pop_back();
    return out;
}

} // namespace heisvoa
