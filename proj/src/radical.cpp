#include "heisvoa/radical.hpp"

#include "heisvoa/expr.hpp"
#include "heisvoa/modes.hpp"

#include <set>
#include <stdexcept>

namespace heisvoa {

std::optional<RatVector> solve_state_combination(const std::vector<State>& cols,
                                                 const State& target) {
    std::set<Monomial> monos;
    for (const auto& s : cols)
        for (const auto& [m, c] : s.terms())
            monos.insert(m);
    for (const auto& [m, c] : target.terms())
        monos.insert(m);
    std::map<Monomial, std::size_t> row_of;
    std::size_t rows = 0;
    for (const auto& m : monos)
        row_of.emplace(m, rows++);
    RatMatrix mat(rows, RatVector(cols.size(), 0));
    RatVector rhs(rows, 0);
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [m, c] : cols[j].terms())
            mat[row_of[m]][j] = c;
    for (const auto& [m, c] : target.terms())
        rhs[row_of[m]] = c;
    return solve(mat, rhs);
}

namespace {

std::vector<State> v1_states(const BosonAlgebra& algebra) {
    std::vector<State> out;
    for (int i = 1; i <= algebra.rank(); ++i)
        out.emplace_back(Monomial::vacuum().with_factor(i, 1));
    return out;
}

State combine(const std::vector<State>& cols, const RatVector& x,
              std::size_t begin, std::size_t end) {
    State out;
    for (std::size_t j = begin; j < end; ++j)
        out += x[j] * cols[j];
    return out;
}

std::optional<ZeroModeWitness> find_zero_mode_witness(const BosonAlgebra& algebra,
                                                      const State& v, int bound) {
    for (int m = 0; m <= bound; ++m) {
        for (const auto& u : basis(algebra, m)) {
            State image = zero_mode(algebra, v, State(u));
            if (!image.is_zero())
                return ZeroModeWitness{m, u, image};
        }
    }
    return std::nullopt;
}

} // namespace

std::vector<State> j1_basis(const BosonAlgebra& algebra, int bound) {
    auto v1 = v1_states(algebra);
    // Stack the o(.) matrices on every piece up to the bound; J_1 is the
    // kernel of V_1 under this map.
    RatMatrix stacked;
    for (int m = 0; m <= bound; ++m) {
        auto piece = basis(algebra, m);
        for (const auto& u : piece) {
            RatVector row_block; // one row per target monomial handled below
            std::vector<State> images;
            images.reserve(v1.size());
            for (const auto& col : v1)
                images.push_back(zero_mode(algebra, col, State(u)));
            // o preserves weight, so coordinates live in weight m.
            for (std::size_t r = 0; r < piece.size(); ++r) {
                RatVector row(v1.size(), 0);
                bool nonzero = false;
                for (std::size_t j = 0; j < v1.size(); ++j) {
                    RatVector coords = coordinates(algebra, images[j], m);
                    row[j] = coords[r];
                    if (row[j] != 0)
                        nonzero = true;
                }
                if (nonzero)
                    stacked.push_back(std::move(row));
            }
        }
    }
    auto kernel = kernel_basis(stacked, v1.size());
    if (kernel.size() != v1.size())
        throw std::logic_error("J_1(M(1)) should be all of V_1");
    return v1;
}

RadicalCertificate radical_member(const BosonAlgebra& algebra, const State& v,
                                  int witness_bound) {
    RadicalCertificate cert;
    if (v.is_zero()) {
        cert.member = true;
        return cert;
    }
    const int top = v.top_weight();
    std::vector<State> cols = v1_states(algebra);
    const std::size_t j1_count = cols.size();
    for (int n = 1; n <= top - 1; ++n) {
        for (const auto& b : basis(algebra, n)) {
            State s(b);
            cols.push_back(Rational(n) * s + virasoro(algebra, -1, s));
        }
    }
    if (auto x = solve_state_combination(cols, v)) {
        cert.member = true;
        cert.j1 = combine(cols, *x, 0, j1_count);
        // Recover w from the basis coefficients, not the image states.
        State w;
        std::size_t j = j1_count;
        for (int n = 1; n <= top - 1; ++n)
            for (const auto& b : basis(algebra, n))
                w.add_term(b, (*x)[j++]);
        cert.w = w;
        return cert;
    }
    cert.member = false;
    cert.witness = find_zero_mode_witness(algebra, v, witness_bound);
    if (!cert.witness)
        cert.note = "non-member by linear algebra; no truncated witness found up to " +
                    std::to_string(witness_bound);
    return cert;
}

std::pair<State, State> radical_decompose(const BosonAlgebra& algebra, const State& v) {
    State j1_total, w_total;
    State cur = v;
    int guard = v.top_weight() + 2;
    while (!cur.is_zero()) {
        auto parts = semi_primary_decompose(algebra, cur);
        const std::size_t m = parts.size() - 1;
        if (m == 0) {
            // Base case: cur is semi-primary; o(cur) = 0 forces cur in V_1.
            for (const auto& [mono, c] : cur.terms())
                if (mono.weight() != 1)
                    throw std::invalid_argument("input not in radical");
            j1_total += cur;
            break;
        }
        if (guard-- <= 0)
            throw std::invalid_argument("input not in radical");
        State x = l_minus1_power(algebra, parts[m], static_cast<int>(m) - 1);
        w_total += x;
        cur -= weight_operator(x) + virasoro(algebra, -1, x);
    }
    return {j1_total, w_total};
}

namespace {

// Theorem-3 system: v = L(-1)^{d-1} j + L(-1)^d u, solved per homogeneous
// component. Requires v without V_0 part.
std::optional<std::pair<State, State>> filtration_solve(const BosonAlgebra& algebra,
                                                        const State& v, int d) {
    State j_total, u_total;
    for (const auto& [k, comp] : graded_components(v)) {
        if (k < d)
            return std::nullopt;
        std::vector<State> cols;
        std::vector<State> preimages;
        if (k == d) {
            for (const auto& h : v1_states(algebra)) {
                cols.push_back(l_minus1_power(algebra, h, d - 1));
                preimages.push_back(h);
            }
        }
        const std::size_t j_count = cols.size();
        if (k - d >= 1) {
            for (const auto& b : basis(algebra, k - d)) {
                State s(b);
                cols.push_back(l_minus1_power(algebra, s, d));
                preimages.push_back(s);
            }
        }
        auto x = solve_state_combination(cols, comp);
        if (!x)
            return std::nullopt;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (j < j_count)
                j_total += (*x)[j] * preimages[j];
            else
                u_total += (*x)[j] * preimages[j];
        }
    }
    return std::make_pair(j_total, u_total);
}

} // namespace

DegreeResult degree(const BosonAlgebra& algebra, const State& v, int witness_bound) {
    DegreeResult out;
    auto comps = graded_components(v);
    State positive; // v with any V_0 part removed
    bool has_v0 = false;
    int top = 0;
    for (const auto& [k, comp] : comps) {
        if (k == 0) {
            has_v0 = true;
        } else {
            positive += comp;
            top = std::max(top, k);
        }
    }
    if (positive.is_zero()) {
        out.degree = -1;
        return out;
    }
    out.ignored_vacuum_part = has_v0;
    out.degree = 0;
    for (int d = top; d >= 1; --d) {
        if (auto jw = filtration_solve(algebra, positive, d)) {
            out.degree = d;
            out.structural_witness = *jw;
            break;
        }
    }
    int w = 0;
    if (positive.is_homogeneous(&w)) {
        for (int n = 0; n <= w; ++n) {
            bool found = false;
            for (int m = 0; m <= witness_bound && !found; ++m) {
                for (const auto& u : basis(algebra, m)) {
                    State image = vertex_mode(algebra, positive, n, State(u));
                    if (!image.is_zero()) {
                        out.mode_witness = ZeroModeWitness{m, u, image};
                        found = true;
                        break;
                    }
                }
            }
            if (found)
                break;
        }
    }
    return out;
}

int degree_witness(const BosonAlgebra& algebra, const State& v, int witness_bound) {
    int w = 0;
    if (!v.is_homogeneous(&w) || w < 1)
        throw std::invalid_argument("degree_witness needs a homogeneous state of weight >= 1");
    for (int n = 0; n <= w; ++n) {
        for (int m = 0; m <= witness_bound; ++m)
            for (const auto& u : basis(algebra, m))
                if (!vertex_mode(algebra, v, n, State(u)).is_zero())
                    return n;
    }
    throw std::runtime_error("witness bound too small");
}

bool filtration_member(const BosonAlgebra& algebra, const State& v, int d) {
    if (d < 1)
        throw std::invalid_argument("filtration_member needs d >= 1");
    if (v.is_zero())
        return true;
    for (const auto& [k, comp] : graded_components(v))
        if (k == 0)
            return false;
    return filtration_solve(algebra, v, d).has_value();
}

OinfinityCertificate oinfinity_member(const BosonAlgebra& algebra, const State& v) {
    OinfinityCertificate cert;
    if (v.is_zero()) {
        cert.member = true;
        cert.in_radical = true;
        return cert;
    }
    const int top = v.top_weight();
    std::vector<State> cols;
    std::vector<State> preimages;
    for (int n = 1; n <= top - 1; ++n) {
        for (const auto& b : basis(algebra, n)) {
            State s(b);
            cols.push_back(Rational(n) * s + virasoro(algebra, -1, s));
            preimages.push_back(s);
        }
    }
    if (auto x = solve_state_combination(cols, v)) {
        cert.member = true;
        cert.in_radical = true;
        for (std::size_t j = 0; j < cols.size(); ++j)
            cert.w += (*x)[j] * preimages[j];
        return cert;
    }
    cert.member = false;
    auto rm = radical_member(algebra, v);
    cert.in_radical = rm.member;
    if (!rm.member) {
        cert.note = "not in J(V); zero mode already nonzero on M(1)";
        return cert;
    }
    // v = j1 + (L(0)+L(-1))w with j1 != 0. Pick lambda with <j1,lambda> = 1;
    // then o(j1) acts as 1 on the momentum-lambda module vacuum.
    cert.j1 = rm.j1;
    RatVector c = coordinates(algebra, rm.j1, 1);
    Rational norm = 0;
    for (const auto& ci : c)
        norm += ci * ci;
    RatVector lambda = mat_vec(algebra.gram_inverse(), c);
    for (auto& li : lambda)
        li /= norm;
    cert.momentum = lambda;
    Rational scalar = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        scalar += c[i] * algebra.momentum_pairing(static_cast<int>(i) + 1, lambda);
    cert.scalar = scalar;
    return cert;
}

GradedMatrix module_zero_mode_matrix(const BosonAlgebra& algebra, const State& v,
                                     const RatVector& lambda, int module_weight) {
    auto b = basis(algebra, module_weight);
    GradedMatrix m;
    m.source_weight = module_weight;
    m.target_weight = module_weight;
    m.entries.assign(b.size(), RatVector(b.size(), 0));
    std::map<Monomial, std::size_t> row_of;
    for (std::size_t i = 0; i < b.size(); ++i)
        row_of.emplace(b[i], i);
    for (std::size_t col = 0; col < b.size(); ++col) {
        ModuleState w(lambda, TermMap{{b[col], Rational(1)}});
        ModuleState image = zero_mode(algebra, v, w);
        for (const auto& [mono, c] : image.terms) {
            auto it = row_of.find(mono);
            if (it == row_of.end())
                throw std::logic_error("module zero mode escaped its graded piece");
            m.entries[it->second][col] = c;
        }
    }
    return m;
}

namespace {

RatMatrix restricted_gram(const BosonAlgebra& algebra, const std::vector<RatVector>& h_prime) {
    RatMatrix g(h_prime.size(), RatVector(h_prime.size(), 0));
    for (std::size_t a = 0; a < h_prime.size(); ++a)
        for (std::size_t b = 0; b < h_prime.size(); ++b)
            for (int i = 1; i <= algebra.rank(); ++i)
                g[a][b] += h_prime[a][static_cast<std::size_t>(i - 1)] *
                           algebra.momentum_pairing(i, h_prime[b]);
    return g;
}

} // namespace

std::vector<State> commutant_basis(const BosonAlgebra& algebra,
                                   const std::vector<RatVector>& h_prime, int n) {
    try {
        invert(restricted_gram(algebra, h_prime));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("degenerate restriction of the form to H'");
    }
    auto b = basis(algebra, n);
    RatMatrix stacked;
    for (const auto& h : h_prime) {
        for (int m = 1; m <= n; ++m) {
            auto mat = operator_matrix(
                algebra, [&](const State& s) { return boson_mode(algebra, h, m, s); }, n,
                n - m);
            for (auto& row : mat.entries)
                stacked.push_back(std::move(row));
        }
    }
    auto kernel = kernel_basis(stacked, b.size());
    std::vector<State> out;
    out.reserve(kernel.size());
    for (const auto& vec : kernel)
        out.push_back(from_coordinates(algebra, vec, n));
    return out;
}

DimCheckReport tensor_factor_dim_check(const BosonAlgebra& algebra,
                                       const std::vector<RatVector>& h_prime,
                                       int max_weight) {
    std::vector<std::size_t> w_dims;
    for (int k = 0; k <= max_weight; ++k)
        w_dims.push_back(commutant_basis(algebra, h_prime, k).size());
    const int colors = static_cast<int>(h_prime.size());
    for (int n = 0; n <= max_weight; ++n) {
        Integer expect = 0;
        for (int k = 0; k <= n; ++k)
            expect += colored_partition_count(colors, k) *
                      Integer(static_cast<unsigned long>(w_dims[static_cast<std::size_t>(n - k)]));
        if (expect != colored_partition_count(algebra.rank(), n)) {
            return {false, "dimension convolution fails at weight " + std::to_string(n)};
        }
    }
    return {true, ""};
}

} // namespace heisvoa
