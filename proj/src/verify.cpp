#include "heisvoa/verify.hpp"

#include "heisvoa/expr.hpp"
#include "heisvoa/modes.hpp"

#include <algorithm>
#include <stdexcept>

namespace heisvoa {

std::uint64_t split_seed(std::uint64_t base_seed, const std::string& name) {
    std::uint64_t h = 14695981039346656037ull; // FNV-1a
    for (unsigned char c : name) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return base_seed ^ h;
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    int n = num(rng);
    if (n == 0)
        n = 1;
    return rat(n, den(rng));
}

State random_homogeneous_state(const BosonAlgebra& algebra, int weight, std::mt19937_64& rng) {
    auto b = basis(algebra, weight);
    std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
    std::uniform_int_distribution<int> count(1, 3);
    State out;
    int terms = count(rng);
    for (int i = 0; i < terms; ++i)
        out.add_term(b[pick(rng)], random_rational(rng));
    if (out.is_zero())
        out.add_term(b[pick(rng)], 1);
    return out;
}

State random_state(const BosonAlgebra& algebra, int top_weight, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> wdist(0, top_weight);
    std::uniform_int_distribution<int> count(1, 3);
    State out;
    int comps = count(rng);
    for (int i = 0; i < comps; ++i)
        out += random_homogeneous_state(algebra, wdist(rng), rng);
    return out;
}

namespace {

State vacuum_state() {
    return State(Monomial::vacuum());
}

// Quasi-primary basis of V_n: kernel of L(1) restricted to weight n.
std::vector<State> quasi_primary_basis(const BosonAlgebra& algebra, int n) {
    if (n == 0)
        return {vacuum_state()};
    auto m = operator_matrix(
        algebra, [&](const State& s) { return virasoro(algebra, 1, s); }, n, n - 1);
    std::vector<State> out;
    for (const auto& vec : kernel_basis(m))
        out.push_back(from_coordinates(algebra, vec, n));
    return out;
}

bool zero_on_pieces(const BosonAlgebra& algebra,
                    const std::function<State(const State&)>& op, int max_weight,
                    std::string* where) {
    for (int m = 0; m <= max_weight; ++m) {
        for (const auto& u : basis(algebra, m)) {
            if (!op(State(u)).is_zero()) {
                if (where)
                    *where = format_monomial(u);
                return false;
            }
        }
    }
    return true;
}

CheckResult fail(const std::string& name, const std::string& detail) {
    return {name, false, detail};
}

CheckResult pass(const std::string& name) {
    return {name, true, ""};
}

} // namespace

CheckResult check_heisenberg_bracket(const BosonAlgebra& algebra, int max_weight) {
    const std::string name = "heisenberg-bracket";
    int wmax = max_weight;
    for (int i = 1; i <= algebra.rank(); ++i) {
        for (int j = 1; j <= algebra.rank(); ++j) {
            for (int m = -3; m <= 3; ++m) {
                for (int n = -3; n <= 3; ++n) {
                    for (int wt = 0; wt <= wmax; ++wt) {
                        for (const auto& mono : basis(algebra, wt)) {
                            State w(mono);
                            State lhs = boson_mode(algebra, i, m, boson_mode(algebra, j, n, w)) -
                                        boson_mode(algebra, j, n, boson_mode(algebra, i, m, w));
                            State rhs;
                            if (m + n == 0)
                                rhs = (algebra.pairing(i, j) * m) * w;
                            if (!(lhs == rhs))
                                return fail(name, "[h" + std::to_string(i) + "(" +
                                                      std::to_string(m) + "),h" +
                                                      std::to_string(j) + "(" + std::to_string(n) +
                                                      ")] on " + format_monomial(mono));
                        }
                    }
                }
            }
        }
    }
    return pass(name);
}

CheckResult check_creation_property(const BosonAlgebra& algebra, int max_weight) {
    const std::string name = "creation-property";
    for (int wt = 0; wt <= max_weight; ++wt) {
        for (const auto& mono : basis(algebra, wt)) {
            State v(mono);
            for (int k = 0; k <= 4; ++k) {
                State lhs = Rational(factorial(static_cast<unsigned long>(k))) *
                            vertex_mode(algebra, v, -k - 1, vacuum_state());
                State rhs = l_minus1_power(algebra, v, k);
                if (!(lhs == rhs))
                    return fail(name, format_monomial(mono) + " at k=" + std::to_string(k));
            }
        }
    }
    return pass(name);
}

CheckResult check_translation_covariance(const BosonAlgebra& algebra, int max_weight) {
    const std::string name = "translation-covariance";
    int vmax = max_weight;
    int wmax = std::min(max_weight, 3);
    for (int vw = 0; vw <= vmax; ++vw) {
        for (const auto& vm : basis(algebra, vw)) {
            State v(vm);
            State lv = virasoro(algebra, -1, v);
            for (int n = -3; n <= 4; ++n) {
                for (int ww = 0; ww <= wmax; ++ww) {
                    for (const auto& wm : basis(algebra, ww)) {
                        State w(wm);
                        State lhs = vertex_mode(algebra, lv, n, w);
                        State rhs = Rational(-n) * vertex_mode(algebra, v, n - 1, w);
                        if (!(lhs == rhs))
                            return fail(name, format_monomial(vm) + " n=" + std::to_string(n) +
                                                  " on " + format_monomial(wm));
                    }
                }
            }
        }
    }
    return pass(name);
}

CheckResult check_commutator_identity(const BosonAlgebra& algebra, const VerifyConfig& cfg) {
    const std::string name = "commutator-identity";
    std::mt19937_64 rng(split_seed(cfg.seed, name));
    std::uniform_int_distribution<int> wdist(0, 3);
    int trials = std::max(1, cfg.trials / 10);
    for (int trial = 0; trial < trials; ++trial) {
        State a = random_homogeneous_state(algebra, wdist(rng), rng);
        State b = random_homogeneous_state(algebra, wdist(rng), rng);
        for (int m = -3; m <= 4; ++m) {
            for (int n = -3; n <= 4; ++n) {
                auto rep = check_commutator(algebra, a, b, m, n, std::min(cfg.max_weight, 4));
                if (!rep.pass)
                    return fail(name, "trial " + std::to_string(trial) + ": " +
                                          rep.counterexample);
            }
        }
    }
    return pass(name);
}

CheckResult check_quasi_primary_commutator(const BosonAlgebra& algebra, int max_weight) {
    const std::string name = "quasi-primary-commutator";
    for (int n = 2; n <= std::min(max_weight, 4); ++n) {
        for (const auto& u : quasi_primary_basis(algebra, n)) {
            for (int t = -3; t <= 4; ++t) {
                for (int ww = 0; ww <= max_weight; ++ww) {
                    for (const auto& wm : basis(algebra, ww)) {
                        State w(wm);
                        State lhs = virasoro(algebra, 1, vertex_mode(algebra, u, t, w)) -
                                    vertex_mode(algebra, u, t, virasoro(algebra, 1, w));
                        State rhs = Rational(2 * n - t - 2) * vertex_mode(algebra, u, t + 1, w);
                        if (!(lhs == rhs))
                            return fail(name, "weight " + std::to_string(n) + " t=" +
                                                  std::to_string(t) + " on " +
                                                  format_monomial(wm));
                    }
                }
            }
        }
    }
    return pass(name);
}

CheckResult check_weight_one_commutator(const BosonAlgebra& algebra, int max_weight) {
    const std::string name = "weight-one-commutator";
    for (const auto& um : basis(algebra, 1)) {
        State u(um);
        std::string where;
        auto op = [&](const State& w) {
            return virasoro(algebra, 1, vertex_mode(algebra, u, 0, w)) -
                   vertex_mode(algebra, u, 0, virasoro(algebra, 1, w));
        };
        if (!zero_on_pieces(algebra, op, max_weight, &where))
            return fail(name, format_monomial(um) + " on " + where);
    }
    return pass(name);
}

CheckResult check_translation_detects_weight(const BosonAlgebra& algebra, int max_weight) {
    const std::string name = "translation-commutant-is-v0";
    int wmax = std::min(max_weight, 3);
    // The vacuum commutes with L(-1) in every mode.
    for (int n = -4; n <= 4; ++n) {
        for (int ww = 0; ww <= wmax; ++ww) {
            for (const auto& wm : basis(algebra, ww)) {
                State w(wm);
                State one = vacuum_state();
                State c = virasoro(algebra, -1, vertex_mode(algebra, one, n, w)) -
                          vertex_mode(algebra, one, n, virasoro(algebra, -1, w));
                if (!c.is_zero())
                    return fail(name, "vacuum mode n=" + std::to_string(n));
            }
        }
    }
    // Every nonvacuum basis state has some mode not commuting with L(-1).
    for (int vw = 1; vw <= wmax; ++vw) {
        for (const auto& vm : basis(algebra, vw)) {
            State v(vm);
            bool found = false;
            for (int n = -4; n <= 4 && !found; ++n) {
                for (int ww = 0; ww <= wmax && !found; ++ww) {
                    for (const auto& wm : basis(algebra, ww)) {
                        State w(wm);
                        State c = virasoro(algebra, -1, vertex_mode(algebra, v, n, w)) -
                                  vertex_mode(algebra, v, n, virasoro(algebra, -1, w));
                        if (!c.is_zero()) {
                            found = true;
                            break;
                        }
                    }
                }
            }
            if (!found)
                return fail(name, format_monomial(vm) + " commutes with L(-1) in all modes");
        }
    }
    return pass(name);
}

CheckResult check_graded_shift(const BosonAlgebra& algebra, const VerifyConfig& cfg) {
    const std::string name = "graded-shift";
    std::mt19937_64 rng(split_seed(cfg.seed, name));
    std::uniform_int_distribution<int> wdist(0, 4);
    std::uniform_int_distribution<int> ndist(-4, 4);
    int trials = std::max(1, cfg.trials / 4);
    for (int trial = 0; trial < trials; ++trial) {
        int vw = wdist(rng);
        State v = random_homogeneous_state(algebra, vw, rng);
        int n = ndist(rng);
        for (int m = 0; m <= std::min(cfg.max_weight, 4); ++m) {
            for (const auto& wm : basis(algebra, m)) {
                State image = vertex_mode(algebra, v, n, State(wm));
                int w = 0;
                if (!image.is_homogeneous(&w))
                    return fail(name, "inhomogeneous image in trial " + std::to_string(trial));
                if (!image.is_zero() && w != m + vw - n - 1)
                    return fail(name, "wrong target weight in trial " + std::to_string(trial));
            }
        }
    }
    return pass(name);
}

CheckResult check_central_charge(const BosonAlgebra& algebra) {
    const std::string name = "virasoro-central-charge";
    State one = vacuum_state();
    State lhs = virasoro(algebra, 2, virasoro(algebra, -2, one)) -
                virasoro(algebra, -2, virasoro(algebra, 2, one));
    State rhs = (Rational(algebra.rank()) / 2) * one;
    if (!(lhs == rhs))
        return fail(name, "[L(2),L(-2)]|0> != (rank/2)|0>");
    return pass(name);
}

CheckResult check_lemma33_direct_sum(const BosonAlgebra& algebra, int max_weight) {
    const std::string name = "lemma33-direct-sum";
    for (int n = 0; n <= max_weight; ++n) {
        if (n == 1)
            continue;
        if (n == 0) {
            if (dim(algebra, 0) != 1)
                return fail(name, "dim V_0 != 1");
            continue;
        }
        auto l1 = operator_matrix(
            algebra, [&](const State& s) { return virasoro(algebra, 1, s); }, n, n - 1);
        auto ker = kernel_basis(l1);
        auto lm1 = operator_matrix(
            algebra, [&](const State& s) { return virasoro(algebra, -1, s); }, n - 1, n);
        std::size_t image_rank = matrix_rank(lm1.entries);
        if (ker.size() + image_rank != dim(algebra, n))
            return fail(name, "dimension sum fails at n=" + std::to_string(n));
        // Zero intersection: the joined column family stays independent.
        RatMatrix joined(dim(algebra, n), RatVector(ker.size() + dim(algebra, n - 1), 0));
        for (std::size_t j = 0; j < ker.size(); ++j)
            for (std::size_t i = 0; i < ker[j].size(); ++i)
                joined[i][j] = ker[j][i];
        for (std::size_t j = 0; j < dim(algebra, n - 1); ++j)
            for (std::size_t i = 0; i < dim(algebra, n); ++i)
                joined[i][ker.size() + j] = lm1.entries[i][j];
        if (matrix_rank(joined) != dim(algebra, n))
            return fail(name, "nonzero intersection at n=" + std::to_string(n));
    }
    return pass(name);
}

CheckResult check_semi_primary_roundtrip(const BosonAlgebra& algebra, const VerifyConfig& cfg) {
    const std::string name = "semi-primary-roundtrip";
    std::mt19937_64 rng(split_seed(cfg.seed, name));
    for (int trial = 0; trial < cfg.trials; ++trial) {
        State v = random_state(algebra, cfg.max_weight, rng);
        auto parts = semi_primary_decompose(algebra, v);
        State recomposed;
        for (std::size_t k = 0; k < parts.size(); ++k) {
            recomposed += l_minus1_power(algebra, parts[k], static_cast<int>(k));
            // Semi-primary: quasi-primary after dropping weight-1 components.
            State non_weight_one;
            for (const auto& [kk, comp] : graded_components(parts[k]))
                if (kk != 1)
                    non_weight_one += comp;
            if (!virasoro(algebra, 1, non_weight_one).is_zero())
                return fail(name, "u^" + std::to_string(k) + " not semi-primary, trial " +
                                      std::to_string(trial));
        }
        if (!(recomposed == v))
            return fail(name, "recomposition mismatch in trial " + std::to_string(trial));
        if (!parts.empty() && parts.back().is_zero())
            return fail(name, "trailing zero component in trial " + std::to_string(trial));
        // Uniqueness of the weight-n splitting: splitting q + L(-1)u again
        // returns (q, u) bit-exactly.
        int w = 0;
        State h = random_homogeneous_state(algebra, 2 + trial % 3, rng);
        h.is_homogeneous(&w);
        auto [q, u] = lemma33_decompose(algebra, h);
        auto [q2, u2] = lemma33_decompose(algebra, q + virasoro(algebra, -1, u));
        if (!(q2 == q) || !(u2 == u))
            return fail(name, "splitting not idempotent in trial " + std::to_string(trial));
    }
    return pass(name);
}

CheckResult check_theorem1_roundtrip(const BosonAlgebra& algebra, const VerifyConfig& cfg) {
    const std::string name = "radical-roundtrip";
    std::mt19937_64 rng(split_seed(cfg.seed, name));
    std::uniform_int_distribution<int> wdist(1, std::max(1, cfg.max_weight - 2));
    for (int trial = 0; trial < cfg.trials; ++trial) {
        State j1 = random_homogeneous_state(algebra, 1, rng);
        State w = random_state(algebra, wdist(rng), rng);
        State lw = weight_operator(w) + virasoro(algebra, -1, w);
        State v = j1 + lw;
        auto cert = radical_member(algebra, v);
        if (!cert.member)
            return fail(name, "constructed member rejected in trial " + std::to_string(trial));
        State recomposed = cert.j1 + weight_operator(cert.w) + virasoro(algebra, -1, cert.w);
        if (!(recomposed == v))
            return fail(name, "certificate does not recompose in trial " + std::to_string(trial));
        auto [dj, dw] = radical_decompose(algebra, v);
        State recomposed2 = dj + weight_operator(dw) + virasoro(algebra, -1, dw);
        if (!(recomposed2 == v))
            return fail(name, "decomposition does not recompose in trial " +
                                  std::to_string(trial));
        std::string where;
        if (!zero_on_pieces(
                algebra, [&](const State& u) { return zero_mode(algebra, v, u); },
                cfg.max_weight, &where))
            return fail(name, "o(v) nonzero on " + where + " in trial " + std::to_string(trial));
    }
    return pass(name);
}

CheckResult check_nonmember_witness(const BosonAlgebra& algebra, const VerifyConfig& cfg) {
    const std::string name = "nonmember-witness";
    std::mt19937_64 rng(split_seed(cfg.seed, name));
    for (int trial = 0; trial < cfg.trials; ++trial) {
        State v;
        RadicalCertificate cert;
        int attempts = 0;
        do {
            v = random_state(algebra, cfg.max_weight - 1, rng);
            cert = radical_member(algebra, v, cfg.max_weight);
            if (++attempts > 64)
                return fail(name, "could not sample a non-member");
        } while (cert.member);
        if (!cert.witness)
            return fail(name, "no witness up to weight " + std::to_string(cfg.max_weight) +
                                  " for " + format_state(v));
        if (zero_mode(algebra, v, State(cert.witness->probe)).is_zero())
            return fail(name, "witness does not certify in trial " + std::to_string(trial));
    }
    return pass(name);
}

CheckResult check_degree_consistency(const BosonAlgebra& algebra, const VerifyConfig& cfg) {
    const std::string name = "degree-consistency";
    std::mt19937_64 rng(split_seed(cfg.seed, name));
    std::uniform_int_distribution<int> wdist(1, 5);
    std::uniform_int_distribution<int> kdist(0, 3);
    for (int trial = 0; trial < cfg.trials; ++trial) {
        int wt = wdist(rng);
        State v = random_homogeneous_state(algebra, wt, rng);
        auto res = degree(algebra, v, cfg.max_weight);
        int d = res.degree;
        if (d < 0 || d > wt)
            return fail(name, "degree out of range in trial " + std::to_string(trial));
        if (degree_witness(algebra, v, cfg.max_weight) != d)
            return fail(name, "mode oracle disagrees in trial " + std::to_string(trial));
        if (d >= 1) {
            if (!res.structural_witness)
                return fail(name, "missing structural witness in trial " + std::to_string(trial));
            const auto& [j, u] = *res.structural_witness;
            State recomposed = l_minus1_power(algebra, j, d - 1) + l_minus1_power(algebra, u, d);
            if (!(recomposed == v))
                return fail(name, "structural witness does not recompose in trial " +
                                      std::to_string(trial));
        }
        // Up-set property: v_n vanishes on pieces <= N exactly below the degree.
        for (int n = 0; n <= wt; ++n) {
            bool nonzero = false;
            for (int m = 0; m <= cfg.max_weight && !nonzero; ++m)
                for (const auto& u : basis(algebra, m))
                    if (!vertex_mode(algebra, v, n, State(u)).is_zero()) {
                        nonzero = true;
                        break;
                    }
            if (nonzero != (n >= d))
                return fail(name, "mode set not an up-set at n=" + std::to_string(n) +
                                      " in trial " + std::to_string(trial));
        }
        int k = kdist(rng);
        auto shifted = degree(algebra, l_minus1_power(algebra, v, k), cfg.max_weight);
        if (shifted.degree != d + k)
            return fail(name, "L(-1)^k shift fails in trial " + std::to_string(trial));
    }
    return pass(name);
}

CheckResult check_filtration_nesting(const BosonAlgebra& algebra, const VerifyConfig& cfg) {
    const std::string name = "filtration-nesting";
    std::mt19937_64 rng(split_seed(cfg.seed, name));
    std::uniform_int_distribution<int> wdist(1, 4);
    for (int trial = 0; trial < std::max(1, cfg.trials / 4); ++trial) {
        State v = random_homogeneous_state(algebra, wdist(rng), rng);
        int top = v.top_weight();
        for (int d = 2; d <= top; ++d) {
            if (filtration_member(algebra, v, d) && !filtration_member(algebra, v, d - 1))
                return fail(name, "nesting fails at d=" + std::to_string(d) + " in trial " +
                                      std::to_string(trial));
        }
        auto res = degree(algebra, v, cfg.max_weight);
        for (int d = 1; d <= top; ++d) {
            if (filtration_member(algebra, v, d) != (res.degree >= d))
                return fail(name, "filtration/degree mismatch at d=" + std::to_string(d));
        }
        // V^d sits inside the weights >= d.
        for (int d = 1; d <= top; ++d)
            if (filtration_member(algebra, v, d))
                for (const auto& [k, comp] : graded_components(v))
                    if (k < d)
                        return fail(name, "V^d escapes low weights at d=" + std::to_string(d));
    }
    return pass(name);
}

namespace {

// Kernel of v -> (matrices of mode(v) on all pieces <= bound), restricted to
// the span of `span_states`. Returns the kernel dimension.
std::size_t stacked_mode_kernel_dim(const BosonAlgebra& algebra,
                                    const std::vector<State>& span_states,
                                    const std::function<State(const State&, const State&)>& mode,
                                    int bound) {
    if (span_states.empty())
        return 0;
    RatMatrix stacked;
    for (int m = 0; m <= bound; ++m) {
        for (const auto& u : basis(algebra, m)) {
            std::vector<State> images;
            images.reserve(span_states.size());
            int target = -1;
            for (const auto& s : span_states) {
                State img = mode(s, State(u));
                if (!img.is_zero())
                    target = std::max(target, img.top_weight());
                images.push_back(std::move(img));
            }
            if (target < 0)
                continue;
            auto tgt = basis(algebra, target);
            for (std::size_t r = 0; r < tgt.size(); ++r) {
                RatVector row(span_states.size(), 0);
                bool nonzero = false;
                for (std::size_t j = 0; j < images.size(); ++j) {
                    auto it = images[j].terms().find(tgt[r]);
                    if (it != images[j].terms().end()) {
                        row[j] = it->second;
                        nonzero = true;
                    }
                }
                if (nonzero)
                    stacked.push_back(std::move(row));
            }
        }
    }
    return kernel_basis(stacked, span_states.size()).size();
}

} // namespace

CheckResult check_mode_vanishing_statements(const BosonAlgebra& algebra, int max_weight) {
    const std::string name = "mode-vanishing-statements";
    for (int n = 1; n <= 4; ++n) {
        std::vector<State> span;
        for (const auto& b : basis(algebra, n))
            span.emplace_back(b);
        // v_{wt v} = 0 on all pieces forces v = 0.
        auto top_mode = [&](const State& v, const State& u) {
            return vertex_mode(algebra, v, n, u);
        };
        if (stacked_mode_kernel_dim(algebra, span, top_mode, max_weight) != 0)
            return fail(name, "nonzero v in V_" + std::to_string(n) + " with v_{wt v} = 0");
    }
    for (int n = 2; n <= 4; ++n) {
        auto qp = quasi_primary_basis(algebra, n);
        // Quasi-primary of weight >= 2 with v_0 = 0 is zero.
        auto zeroth = [&](const State& v, const State& u) {
            return vertex_mode(algebra, v, 0, u);
        };
        if (stacked_mode_kernel_dim(algebra, qp, zeroth, max_weight) != 0)
            return fail(name, "nonzero quasi-primary in V_" + std::to_string(n) +
                                  " with v_0 = 0");
        // Semi-primary radical members live in V_1: o(.) has trivial kernel
        // on quasi-primaries of weight >= 2.
        auto omode = [&](const State& v, const State& u) { return zero_mode(algebra, v, u); };
        if (stacked_mode_kernel_dim(algebra, qp, omode, max_weight) != 0)
            return fail(name, "semi-primary radical member outside V_1 at weight " +
                                  std::to_string(n));
    }
    return pass(name);
}

CheckResult check_radical_not_graded(const BosonAlgebra& algebra) {
    const std::string name = "radical-not-graded";
    State w(Monomial({{1, 1}, {1, 1}}));
    State v = weight_operator(w) + virasoro(algebra, -1, w);
    auto cert = radical_member(algebra, v);
    if (!cert.member)
        return fail(name, "(L(0)+L(-1))h1(-1)^2|0> not recognized as member");
    bool some_component_outside = false;
    for (const auto& [k, comp] : graded_components(v)) {
        if (!radical_member(algebra, comp).member)
            some_component_outside = true;
    }
    if (!some_component_outside)
        return fail(name, "all homogeneous components were members");
    return pass(name);
}

CheckResult check_canonical_form_on_v1(const BosonAlgebra& algebra) {
    const std::string name = "canonical-form-on-v1";
    auto b1 = basis(algebra, 1);
    for (std::size_t i = 0; i < b1.size(); ++i) {
        for (std::size_t j = 0; j < b1.size(); ++j) {
            State pairing = vertex_mode(algebra, State(b1[i]), 1, State(b1[j]));
            State expect = algebra.gram()[i][j] * vacuum_state();
            if (!(pairing == expect))
                return fail(name, "u_1 v differs from the Gram matrix at (" +
                                      std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    }
    return pass(name);
}

CheckResult check_oinfinity_subset_radical(const BosonAlgebra& algebra, const VerifyConfig& cfg) {
    const std::string name = "oinfinity-subset-radical";
    std::mt19937_64 rng(split_seed(cfg.seed, name));
    for (int trial = 0; trial < std::max(1, cfg.trials / 4); ++trial) {
        State v = random_state(algebra, cfg.max_weight - 1, rng);
        auto oc = oinfinity_member(algebra, v);
        if (oc.member && !radical_member(algebra, v).member)
            return fail(name, "O_inf member outside J(V) in trial " + std::to_string(trial));
        State w = random_state(algebra, cfg.max_weight - 2, rng);
        State image = weight_operator(w) + virasoro(algebra, -1, w);
        if (!oinfinity_member(algebra, image).member)
            return fail(name, "(L(0)+L(-1))w rejected in trial " + std::to_string(trial));
    }
    return pass(name);
}

CheckResult check_oinfinity_separation(const BosonAlgebra& algebra, const VerifyConfig& cfg) {
    const std::string name = "oinfinity-separation";
    std::mt19937_64 rng(split_seed(cfg.seed, name));
    for (const auto& h : j1_basis(algebra)) {
        auto cert = oinfinity_member(algebra, h);
        if (cert.member || !cert.in_radical)
            return fail(name, "j1 element misclassified: " + format_state(h));
        if (cert.scalar == 0)
            return fail(name, "no separating momentum for " + format_state(h));
        auto m = module_zero_mode_matrix(algebra, h, cert.momentum, 0);
        if (m.entries[0][0] != cert.scalar)
            return fail(name, "module vacuum scalar mismatch for " + format_state(h));
    }
    std::vector<RatVector> momenta;
    momenta.emplace_back(static_cast<std::size_t>(algebra.rank()), Rational(0));
    RatVector e1(static_cast<std::size_t>(algebra.rank()), Rational(0));
    e1[0] = 1;
    momenta.push_back(e1);
    RatVector mixed(static_cast<std::size_t>(algebra.rank()), rat(1, 2));
    momenta.push_back(mixed);
    int trials = std::min(cfg.trials, 50);
    for (int trial = 0; trial < trials; ++trial) {
        State w = random_state(algebra, std::max(0, cfg.max_weight - 2), rng);
        State v = weight_operator(w) + virasoro(algebra, -1, w);
        for (const auto& lambda : momenta) {
            for (int k = 0; k <= cfg.max_weight; ++k) {
                auto m = module_zero_mode_matrix(algebra, v, lambda, k);
                if (!is_zero_matrix(m.entries))
                    return fail(name, "o((L(0)+L(-1))w) nonzero on a module piece, trial " +
                                          std::to_string(trial));
            }
        }
    }
    return pass(name);
}

CheckResult check_commutant_factorization(const BosonAlgebra& algebra,
                                          const std::vector<RatVector>& h_prime,
                                          int max_weight) {
    const std::string name = "commutant-factorization";
    auto report = tensor_factor_dim_check(algebra, h_prime, max_weight);
    if (!report.pass)
        return fail(name, report.detail);
    // With an identity Gram form and coordinate H', the commutant is the
    // Fock space on the complementary bosons.
    bool orthonormal_coords = algebra.gram() == identity_matrix(
                                                     static_cast<std::size_t>(algebra.rank()));
    if (orthonormal_coords) {
        for (const auto& h : h_prime) {
            int ones = 0;
            for (const auto& c : h)
                if (c == 1)
                    ++ones;
                else if (c != 0)
                    orthonormal_coords = false;
            if (ones != 1)
                orthonormal_coords = false;
        }
    }
    if (orthonormal_coords) {
        int complement = algebra.rank() - static_cast<int>(h_prime.size());
        for (int n = 0; n <= max_weight; ++n) {
            auto wbasis = commutant_basis(algebra, h_prime, n);
            if (Integer(static_cast<unsigned long>(wbasis.size())) !=
                colored_partition_count(complement, n))
                return fail(name, "commutant dimension mismatch at weight " + std::to_string(n));
        }
    }
    return pass(name);
}

CheckResult check_parse_roundtrip(const BosonAlgebra& algebra, const VerifyConfig& cfg) {
    const std::string name = "parse-roundtrip";
    std::mt19937_64 rng(split_seed(cfg.seed, name));
    for (int trial = 0; trial < cfg.trials; ++trial) {
        State s = random_state(algebra, cfg.max_weight, rng);
        State back = parse_state(format_state(s), algebra);
        if (!(back == s))
            return fail(name, "round-trip mismatch: " + format_state(s));
    }
    return pass(name);
}

std::vector<CheckResult> run_modes_suite(const BosonAlgebra& algebra, const VerifyConfig& cfg) {
    return {
        check_heisenberg_bracket(algebra, cfg.max_weight),
        check_creation_property(algebra, cfg.max_weight),
        check_translation_covariance(algebra, cfg.max_weight),
        check_commutator_identity(algebra, cfg),
        check_quasi_primary_commutator(algebra, cfg.max_weight),
        check_weight_one_commutator(algebra, cfg.max_weight),
        check_translation_detects_weight(algebra, cfg.max_weight),
        check_graded_shift(algebra, cfg),
        check_central_charge(algebra),
    };
}

std::vector<CheckResult> run_radical_suite(const BosonAlgebra& algebra, const VerifyConfig& cfg) {
    std::vector<RatVector> h_prime;
    if (algebra.rank() >= 2) {
        RatVector e1(static_cast<std::size_t>(algebra.rank()), Rational(0));
        e1[0] = 1;
        h_prime.push_back(e1);
    } else {
        RatVector e1{Rational(1)};
        h_prime.push_back(e1);
    }
    return {
        check_lemma33_direct_sum(algebra, cfg.max_weight),
        check_semi_primary_roundtrip(algebra, cfg),
        check_theorem1_roundtrip(algebra, cfg),
        check_nonmember_witness(algebra, cfg),
        check_degree_consistency(algebra, cfg),
        check_filtration_nesting(algebra, cfg),
        check_mode_vanishing_statements(algebra, cfg.max_weight),
        check_radical_not_graded(algebra),
        check_canonical_form_on_v1(algebra),
        check_oinfinity_subset_radical(algebra, cfg),
        check_oinfinity_separation(algebra, cfg),
        check_commutant_factorization(algebra, h_prime, cfg.max_weight),
        check_parse_roundtrip(algebra, cfg),
    };
}

std::vector<CheckResult> run_suite(const std::string& name, const BosonAlgebra& algebra,
                                   const VerifyConfig& cfg) {
    if (name == "modes")
        return run_modes_suite(algebra, cfg);
    if (name == "radical")
        return run_radical_suite(algebra, cfg);
    if (name == "all") {
        auto out = run_modes_suite(algebra, cfg);
        auto more = run_radical_suite(algebra, cfg);
        out.insert(out.end(), more.begin(), more.end());
        return out;
    }
    throw std::invalid_argument("unknown suite '" + name + "' (expected all|modes|radical)");
}

} // namespace heisvoa
