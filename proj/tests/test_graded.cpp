#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heisvoa/graded.hpp"
#include "heisvoa/modes.hpp"

using namespace heisvoa;

namespace {

State mono(std::vector<Factor> f) {
    return State(Monomial(std::move(f)));
}

} // namespace

TEST_CASE("operator matrices") {
    auto algebra = make_identity_algebra(1);
    auto l0 = operator_matrix(
        algebra, [&](const State& s) { return virasoro(algebra, 0, s); }, 3, 3);
    RatMatrix three = identity_matrix(3);
    for (auto& row : three)
        for (auto& e : row)
            e *= 3;
    CHECK(l0.entries == three);

    auto lm1 = operator_matrix(
        algebra, [&](const State& s) { return virasoro(algebra, -1, s); }, 0, 1);
    CHECK(lm1.entries == RatMatrix{{0}});

    State h1 = mono({{1, 1}});
    for (int n = 0; n <= 4; ++n) {
        auto o = operator_matrix(
            algebra, [&](const State& s) { return zero_mode(algebra, h1, s); }, n, n);
        CHECK(is_zero_matrix(o.entries));
    }

    // escaping the target weight is rejected
    CHECK_THROWS_AS(operator_matrix(
                        algebra, [&](const State& s) { return virasoro(algebra, -1, s); },
                        2, 2),
                    std::invalid_argument);
}

TEST_CASE("kernels and solving in graded pieces") {
    auto algebra = make_identity_algebra(1);
    auto lm1_0 = operator_matrix(
        algebra, [&](const State& s) { return virasoro(algebra, -1, s); }, 0, 1);
    CHECK(kernel_basis(lm1_0).size() == 1);
    for (int n = 1; n <= 5; ++n) {
        auto lm1 = operator_matrix(
            algebra, [&](const State& s) { return virasoro(algebra, -1, s); }, n, n + 1);
        CHECK(kernel_basis(lm1).empty()); // L(-1) injective off V_0
    }
    auto lm1 = operator_matrix(
        algebra, [&](const State& s) { return virasoro(algebra, -1, s); }, 1, 2);
    auto sol = solve(lm1, coordinates(algebra, mono({{1, 2}}), 2));
    REQUIRE(sol.has_value());
    CHECK(from_coordinates(algebra, *sol, 1) == mono({{1, 1}}));
}

TEST_CASE("coordinates round-trip") {
    auto algebra = make_identity_algebra(2);
    for (int n = 0; n <= 4; ++n) {
        auto b = basis(algebra, n);
        State s;
        for (std::size_t i = 0; i < b.size(); ++i)
            s.add_term(b[i], rat(static_cast<long>(i) + 1, 3));
        CHECK(from_coordinates(algebra, coordinates(algebra, s, n), n) == s);
    }
    CHECK_THROWS_AS(coordinates(algebra, mono({{1, 2}}), 1), std::invalid_argument);
}

TEST_CASE("Lemma 3.3 splitting") {
    auto algebra = make_identity_algebra(1);
    auto [q1, u1] = lemma33_decompose(algebra, mono({{1, 2}}));
    CHECK(q1 == State{});
    CHECK(u1 == mono({{1, 1}}));

    State sq = mono({{1, 1}, {1, 1}});
    auto [q2, u2] = lemma33_decompose(algebra, sq);
    CHECK(q2 == sq);
    CHECK(u2 == State{});

    State vac = State(Monomial::vacuum());
    auto [q3, u3] = lemma33_decompose(algebra, vac);
    CHECK(q3 == vac);
    CHECK(u3 == State{});

    CHECK_THROWS_AS(lemma33_decompose(algebra, mono({{1, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(lemma33_decompose(algebra, vac + sq), std::invalid_argument);

    // direct-sum dimension count for 0 <= n <= 6, n != 1
    for (int n = 2; n <= 6; ++n) {
        auto l1 = operator_matrix(
            algebra, [&](const State& s) { return virasoro(algebra, 1, s); }, n, n - 1);
        auto lm1 = operator_matrix(
            algebra, [&](const State& s) { return virasoro(algebra, -1, s); }, n - 1, n);
        CHECK(kernel_basis(l1).size() + matrix_rank(lm1.entries) == dim(algebra, n));
    }
}

TEST_CASE("semi-primary decomposition") {
    auto algebra = make_identity_algebra(1);
    auto parts = semi_primary_decompose(algebra, mono({{1, 2}}));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == State{});
    CHECK(parts[1] == mono({{1, 1}}));

    auto cv = conformal_vector(algebra);
    auto omega_parts = semi_primary_decompose(algebra, cv.omega);
    REQUIRE(omega_parts.size() == 1);
    CHECK(omega_parts[0] == cv.omega);

    State vac = State(Monomial::vacuum());
    auto vac_parts = semi_primary_decompose(algebra, vac);
    REQUIRE(vac_parts.size() == 1);
    CHECK(vac_parts[0] == vac);

    CHECK(semi_primary_decompose(algebra, State{}).empty());

    // recomposition on a mixed-weight input
    State v = Rational(3) * mono({{1, 3}}) + mono({{1, 1}, {1, 1}}) - mono({{1, 1}});
    auto mixed = semi_primary_decompose(algebra, v);
    State recomposed;
    for (std::size_t k = 0; k < mixed.size(); ++k) {
        recomposed += l_minus1_power(algebra, mixed[k], static_cast<int>(k));
        State non_w1;
        for (const auto& [w, comp] : graded_components(mixed[k]))
            if (w != 1)
                non_w1 += comp;
        CHECK(virasoro(algebra, 1, non_w1) == State{});
    }
    CHECK(recomposed == v);
}
