#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heisvoa/modes.hpp"

using namespace heisvoa;

namespace {

State mono(std::vector<Factor> f) {
    return State(Monomial(std::move(f)));
}

const State kVac = State(Monomial::vacuum());

} // namespace

TEST_CASE("boson modes") {
    auto algebra = make_identity_algebra(2);
    State h1 = mono({{1, 1}});
    // annihilation pairs with the form: h_1(1) h_1(-1)|0> = <h1,h1>|0>
    CHECK(boson_mode(algebra, 1, 1, h1) == kVac);
    CHECK(boson_mode(algebra, 2, 1, h1) == State{});
    for (int m = 0; m <= 3; ++m)
        CHECK(boson_mode(algebra, 1, m, kVac) == State{});
    // creation is multiplication
    CHECK(boson_mode(algebra, 1, -2, mono({{2, 1}})) == mono({{1, 2}, {2, 1}}));
    // multiplicity matters: h_1(1) h_1(-1)^2|0> = 2 h_1(-1)|0>
    CHECK(boson_mode(algebra, 1, 1, mono({{1, 1}, {1, 1}})) == Rational(2) * h1);
    // level factor: h_1(2) h_1(-2)|0> = 2|0>
    CHECK(boson_mode(algebra, 1, 2, mono({{1, 2}})) == Rational(2) * kVac);
    // boson-space linear combinations
    CHECK(boson_mode(algebra, RatVector{2, 3}, 1, mono({{2, 1}})) == Rational(3) * kVac);
}

TEST_CASE("vertex modes reduce to boson modes for weight-one vectors") {
    auto algebra = make_identity_algebra(2);
    State h1 = mono({{1, 1}});
    for (int n = -3; n <= 3; ++n)
        for (int w = 0; w <= 3; ++w)
            for (const auto& wm : basis(algebra, w))
                CHECK(vertex_mode(algebra, h1, n, State(wm)) ==
                      boson_mode(algebra, 1, n, State(wm)));
}

TEST_CASE("v_{-1} creates v from the vacuum") {
    auto algebra = make_identity_algebra(2);
    for (int w = 0; w <= 4; ++w)
        for (const auto& vm : basis(algebra, w))
            CHECK(vertex_mode(algebra, State(vm), -1, kVac) == State(vm));
}

TEST_CASE("(h(-2)|0>)_n = -n h_{n-1}") {
    auto algebra = make_identity_algebra(1);
    State v = mono({{1, 2}});
    for (int n = -3; n <= 3; ++n)
        for (int w = 0; w <= 3; ++w)
            for (const auto& wm : basis(algebra, w))
                CHECK(vertex_mode(algebra, v, n, State(wm)) ==
                      Rational(-n) * boson_mode(algebra, 1, n - 1, State(wm)));
}

TEST_CASE("conformal vector and Virasoro modes") {
    auto algebra = make_identity_algebra(1);
    auto cv = conformal_vector(algebra);
    CHECK(cv.central_charge == 1);
    CHECK(cv.omega == rat(1, 2) * mono({{1, 1}, {1, 1}}));
    CHECK(virasoro(algebra, 1, cv.omega) == State{});
    CHECK(virasoro(algebra, 0, cv.omega) == Rational(2) * cv.omega);

    State h1 = mono({{1, 1}});
    CHECK(virasoro(algebra, 0, h1) == h1);
    CHECK(virasoro(algebra, -1, h1) == mono({{1, 2}}));
    CHECK(virasoro(algebra, 1, mono({{1, 2}})) == Rational(2) * h1);
    CHECK(virasoro(algebra, -1, kVac) == State{});
    // L(0) is the weight operator on every basis state
    for (int w = 0; w <= 4; ++w)
        for (const auto& wm : basis(algebra, w))
            CHECK(virasoro(algebra, 0, State(wm)) == Rational(w) * State(wm));
}

TEST_CASE("Virasoro bracket on the vacuum gives the central charge") {
    for (int r : {1, 2}) {
        auto algebra = make_identity_algebra(r);
        State lhs = virasoro(algebra, 2, virasoro(algebra, -2, kVac)) -
                    virasoro(algebra, -2, virasoro(algebra, 2, kVac));
        CHECK(lhs == rat(r, 2) * kVac);
    }
}

TEST_CASE("zero mode") {
    auto algebra = make_identity_algebra(1);
    auto cv = conformal_vector(algebra);
    State h1 = mono({{1, 1}});
    for (int w = 0; w <= 3; ++w)
        for (const auto& wm : basis(algebra, w)) {
            CHECK(zero_mode(algebra, h1, State(wm)) == State{});
            CHECK(zero_mode(algebra, mono({{1, 2}}), State(wm)) == State{});
            // o(omega) = L(0)
            CHECK(zero_mode(algebra, cv.omega, State(wm)) == Rational(w) * State(wm));
        }
    CHECK(zero_mode(algebra, cv.omega, mono({{1, 1}, {1, 1}})) ==
          Rational(2) * mono({{1, 1}, {1, 1}}));
    // o extends linearly over inhomogeneous vectors
    State v = h1 + cv.omega;
    CHECK(zero_mode(algebra, v, h1) == h1);
}

TEST_CASE("p mode") {
    auto algebra = make_identity_algebra(1);
    auto cv = conformal_vector(algebra);
    State h1 = mono({{1, 1}});
    CHECK(p_mode(algebra, h1, kVac) == h1);
    CHECK(p_mode(algebra, cv.omega, kVac) == State{});
    CHECK(p_mode(algebra, mono({{1, 2}}), kVac) == State{});
}

TEST_CASE("commutator checker") {
    auto algebra = make_identity_algebra(2);
    auto cv = conformal_vector(algebra);
    CHECK(check_commutator(algebra, cv.omega, cv.omega, 0, 2, 4).pass);
    State h1 = mono({{1, 1}});
    State h2 = mono({{2, 1}});
    for (int m = -2; m <= 2; ++m)
        for (int n = -2; n <= 2; ++n) {
            CHECK(check_commutator(algebra, h1, h2, m, n, 3).pass);
            CHECK(check_commutator(algebra, h1, kVac, m, n, 3).pass);
        }
    CHECK_THROWS_AS(check_commutator(algebra, h1 + cv.omega, h1, 0, 0, 2),
                    std::invalid_argument);
}

TEST_CASE("modes on momentum modules") {
    auto algebra = make_identity_algebra(2);
    RatVector lambda{rat(1, 2), 3};
    ModuleState vac(lambda, {{Monomial::vacuum(), 1}});
    // h_0 acts by the momentum pairing
    auto h10 = boson_mode(algebra, 1, 0, vac);
    CHECK(h10 == ModuleState(lambda, {{Monomial::vacuum(), rat(1, 2)}}));
    auto h20 = boson_mode(algebra, 2, 0, vac);
    CHECK(h20 == ModuleState(lambda, {{Monomial::vacuum(), 3}}));
    // creation/annihilation work as in the adjoint module
    auto up = boson_mode(algebra, 1, -1, vac);
    CHECK(boson_mode(algebra, 1, 1, up) ==
          ModuleState(lambda, {{Monomial::vacuum(), 1}}));
    // L(0) on the module vacuum picks up <lambda,lambda>/2
    auto l0 = virasoro(algebra, 0, vac);
    Rational norm = rat(1, 2) * (rat(1, 2) * rat(1, 2) + Rational(9));
    CHECK(l0 == ModuleState(lambda, {{Monomial::vacuum(), norm}}));
}
