#include "heisvoa/modes.hpp"

#include "heisvoa/expr.hpp"

#include <stdexcept>

namespace heisvoa {

namespace {

struct Ctx {
    const BosonAlgebra& alg;
    const RatVector* momentum; // nullptr on M(1) itself
    std::string momentum_tag;
};

Ctx voa_ctx(const BosonAlgebra& alg) {
    return {alg, nullptr, ""};
}

Ctx module_ctx(const BosonAlgebra& alg, const RatVector& lambda) {
    std::string tag;
    for (const auto& c : lambda) {
        tag += c.get_str();
        tag += ';';
    }
    return {alg, &lambda, std::move(tag)};
}

void add_into(TermMap& dst, const Monomial& m, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = dst.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            dst.erase(it);
    }
}

void add_into(TermMap& dst, const TermMap& src, const Rational& scale) {
    if (scale == 0)
        return;
    for (const auto& [m, c] : src)
        add_into(dst, m, c * scale);
}

TermMap boson_mode_terms(const Ctx& ctx, int boson, int m, const TermMap& w) {
    TermMap out;
    if (m < 0) {
        for (const auto& [mono, c] : w)
            add_into(out, mono.with_factor(boson, -m), c);
        return out;
    }
    if (m == 0) {
        if (!ctx.momentum)
            return out;
        Rational p = ctx.alg.momentum_pairing(boson, *ctx.momentum);
        add_into(out, w, p);
        return out;
    }
    // Annihilation: commute h(m) past every creation factor at level m.
    for (const auto& [mono, c] : w) {
        const auto& fs = mono.factors();
        for (std::size_t idx = 0; idx < fs.size(); ++idx) {
            if (fs[idx].level != m)
                continue;
            Rational coeff = c * m * ctx.alg.pairing(boson, fs[idx].boson);
            add_into(out, mono.without_factor(idx), coeff);
        }
    }
    return out;
}

TermMap vertex_mode_mono_mono(const Ctx& ctx, const Monomial& v, int n, const Monomial& w);

TermMap vertex_mode_mono_terms(const Ctx& ctx, const Monomial& v, int n, const TermMap& w) {
    TermMap out;
    for (const auto& [mono, c] : w)
        add_into(out, vertex_mode_mono_mono(ctx, v, n, mono), c);
    return out;
}

// (h_a(-k) u)_n w computed by the iterate formula
//   sum_{i>=0} C(-k,i)(-1)^i a_{-k-i} (u_{n+i} w)
// - sum_{i>=0} C(-k,i)(-1)^{k+i} u_{n-k-i} (a_i w)
// with a a single boson. Both sums are finite: the first because u_{n+i} w
// lands in negative weight for large i, the second because a_i w = 0 once i
// exceeds the top level of w.
TermMap vertex_mode_mono_mono(const Ctx& ctx, const Monomial& v, int n, const Monomial& w) {
    if (v.is_vacuum()) {
        TermMap out;
        if (n == -1)
            add_into(out, w, 1);
        return out;
    }
    std::string key = v.key();
    key += '|';
    key += std::to_string(n);
    key += '|';
    key += w.key();
    key += '|';
    key += ctx.momentum_tag;
    auto& cache = ctx.alg.cache().entries;
    auto hit = cache.find(key);
    if (hit != cache.end())
        return hit->second;

    const Factor head = v.factors().front();
    const int a = head.boson;
    const int k = head.level;
    const Monomial u = v.without_factor(0);
    const int wu = u.weight();
    const int ww = w.weight();
    TermMap w_terms{{w, Rational(1)}};

    TermMap out;
    for (int i = 0; n + i <= wu + ww - 1; ++i) {
        Rational c1(binomial(-k, static_cast<unsigned long>(i)));
        if (i % 2 == 1)
            c1 = -c1;
        TermMap inner = vertex_mode_mono_mono(ctx, u, n + i, w);
        if (inner.empty())
            continue;
        add_into(out, boson_mode_terms(ctx, a, -k - i, inner), c1);
    }
    const int max_i = w.top_level();
    for (int i = 0; i <= max_i; ++i) {
        TermMap aw = boson_mode_terms(ctx, a, i, w_terms);
        if (aw.empty())
            continue;
        Rational c2(binomial(-k, static_cast<unsigned long>(i)));
        if ((k + i) % 2 == 1)
            c2 = -c2;
        add_into(out, vertex_mode_mono_terms(ctx, u, n - k - i, aw), -c2);
    }
    cache.emplace(std::move(key), out);
    return out;
}

TermMap vertex_mode_terms(const Ctx& ctx, const TermMap& v, int n, const TermMap& w) {
    TermMap out;
    for (const auto& [vm, vc] : v)
        add_into(out, vertex_mode_mono_terms(ctx, vm, n, w), vc);
    return out;
}

TermMap graded_mode_terms(const Ctx& ctx, const State& v, int shift, const TermMap& w) {
    TermMap out;
    for (const auto& [weight, comp] : graded_components(v))
        add_into(out, vertex_mode_terms(ctx, comp.terms(), weight + shift, w), 1);
    return out;
}

State to_state(TermMap t) {
    State s;
    for (const auto& [m, c] : t)
        s.add_term(m, c);
    return s;
}

} // namespace

ConformalVector conformal_vector(const BosonAlgebra& algebra) {
    State omega;
    const auto& ginv = algebra.gram_inverse();
    for (int a = 1; a <= algebra.rank(); ++a) {
        for (int b = 1; b <= algebra.rank(); ++b) {
            Rational c = ginv[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] / 2;
            if (c == 0)
                continue;
            omega.add_term(Monomial::vacuum().with_factor(a, 1).with_factor(b, 1), c);
        }
    }
    return {omega, Rational(algebra.rank())};
}

State boson_mode(const BosonAlgebra& algebra, int boson, int m, const State& w) {
    return to_state(boson_mode_terms(voa_ctx(algebra), boson, m, w.terms()));
}

ModuleState boson_mode(const BosonAlgebra& algebra, int boson, int m, const ModuleState& w) {
    auto ctx = module_ctx(algebra, w.momentum);
    return {w.momentum, boson_mode_terms(ctx, boson, m, w.terms)};
}

State boson_mode(const BosonAlgebra& algebra, const RatVector& coeffs, int m, const State& w) {
    State out;
    for (int i = 1; i <= algebra.rank(); ++i) {
        const Rational& c = coeffs[static_cast<std::size_t>(i - 1)];
        if (c != 0)
            out += c * boson_mode(algebra, i, m, w);
    }
    return out;
}

State vertex_mode(const BosonAlgebra& algebra, const State& v, int n, const State& w) {
    return to_state(vertex_mode_terms(voa_ctx(algebra), v.terms(), n, w.terms()));
}

ModuleState vertex_mode(const BosonAlgebra& algebra, const State& v, int n, const ModuleState& w) {
    auto ctx = module_ctx(algebra, w.momentum);
    return {w.momentum, vertex_mode_terms(ctx, v.terms(), n, w.terms)};
}

State virasoro(const BosonAlgebra& algebra, int n, const State& w) {
    return vertex_mode(algebra, conformal_vector(algebra).omega, n + 1, w);
}

ModuleState virasoro(const BosonAlgebra& algebra, int n, const ModuleState& w) {
    return vertex_mode(algebra, conformal_vector(algebra).omega, n + 1, w);
}

State zero_mode(const BosonAlgebra& algebra, const State& v, const State& w) {
    return to_state(graded_mode_terms(voa_ctx(algebra), v, -1, w.terms()));
}

ModuleState zero_mode(const BosonAlgebra& algebra, const State& v, const ModuleState& w) {
    auto ctx = module_ctx(algebra, w.momentum);
    return {w.momentum, graded_mode_terms(ctx, v, -1, w.terms)};
}

State p_mode(const BosonAlgebra& algebra, const State& v, const State& w) {
    return to_state(graded_mode_terms(voa_ctx(algebra), v, -2, w.terms()));
}

CommutatorReport check_commutator(const BosonAlgebra& algebra, const State& a,
                                  const State& b, int m, int n, int test_weight_bound) {
    int wa = 0, wb = 0;
    if (!a.is_homogeneous(&wa) || !b.is_homogeneous(&wb))
        throw std::invalid_argument("check_commutator needs homogeneous inputs");
    for (int weight = 0; weight <= test_weight_bound; ++weight) {
        for (const auto& mono : basis(algebra, weight)) {
            State w(mono);
            State lhs = vertex_mode(algebra, a, m, vertex_mode(algebra, b, n, w)) -
                        vertex_mode(algebra, b, n, vertex_mode(algebra, a, m, w));
            State rhs;
            for (int t = 0; t <= wa + wb - 1; ++t) {
                State atb = vertex_mode(algebra, a, t, b);
                if (atb.is_zero())
                    continue;
                rhs += Rational(binomial(m, static_cast<unsigned long>(t))) *
                       vertex_mode(algebra, atb, m + n - t, w);
            }
            if (!(lhs == rhs)) {
                return {false, "[a_" + std::to_string(m) + ",b_" + std::to_string(n) +
                                   "] mismatch on " + format_state(State(mono))};
            }
        }
    }
    return {true, ""};
}

} // namespace heisvoa
