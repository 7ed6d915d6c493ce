#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heisvoa/fock.hpp"
#include "heisvoa/linalg.hpp"

#include <random>

using namespace heisvoa;

namespace {

// Independent oracle: partition numbers via Euler's pentagonal recurrence,
// then r colors by convolving the series r times.
std::vector<long> partition_oracle(int up_to) {
    std::vector<long> p(up_to + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= up_to; ++n) {
        long s = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > n && g2 > n)
                break;
            int sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= n)
                s += sign * p[n - g1];
            if (g2 <= n)
                s += sign * p[n - g2];
        }
        p[n] = s;
    }
    return p;
}

std::vector<long> colored_oracle(int colors, int up_to) {
    auto p = partition_oracle(up_to);
    std::vector<long> out(up_to + 1, 0);
    out[0] = 1;
    for (int c = 1; c < colors; ++c) {
        std::vector<long> next(up_to + 1, 0);
        auto& prev = (c == 1) ? p : out;
        for (int n = 0; n <= up_to; ++n)
            for (int k = 0; k <= n; ++k)
                next[n] += prev[k] * p[n - k];
        out = next;
    }
    if (colors == 1)
        out = p;
    return out;
}

} // namespace

TEST_CASE("rational helpers") {
    CHECK(format_rational(parse_rational("3/6")) == "1/2");
    CHECK(format_rational(parse_rational("-4/2")) == "-2");
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(-2, 3) == -4); // (-1)^3 C(4,3)
    CHECK(binomial(-1, 0) == 1);
    CHECK(binomial(2, 5) == 0);
    CHECK(factorial(5) == 120);
}

TEST_CASE("exact linear algebra") {
    RatMatrix swap{{0, 1}, {1, 0}};
    CHECK(invert(swap) == swap);
    CHECK(invert(identity_matrix(3)) == identity_matrix(3));
    RatMatrix singular{{1, 2}, {2, 4}};
    CHECK_THROWS_AS(invert(singular), std::invalid_argument);
    CHECK(matrix_rank(singular) == 1);

    auto ker = kernel_basis(singular, 2);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] * 1 + ker[0][1] * 2 == 0);

    RatMatrix m{{1, 1}, {0, 1}};
    auto sol = solve(m, RatVector{3, 1});
    REQUIRE(sol.has_value());
    CHECK(mat_vec(m, *sol) == RatVector{3, 1});
    CHECK_FALSE(solve(RatMatrix{{1, 2}, {2, 4}}, RatVector{1, 1}).has_value());
}

TEST_CASE("canonical monomial order") {
    Monomial a({{1, 2}});
    Monomial b({{1, 1}, {1, 1}});
    CHECK(a < b); // level-descending first factor wins
    CHECK(a.weight() == 2);
    CHECK(b.weight() == 2);
    CHECK(a.top_level() == 2);
    Monomial c({{2, 1}, {1, 2}, {1, 1}});
    // canonical factor order: level descending, boson ascending
    CHECK(c.factors()[0].level == 2);
    CHECK(c.factors()[1].boson == 1);
    CHECK(c.factors()[2].boson == 2);
}

TEST_CASE("basis dimensions match the independent counting oracle") {
    auto r1 = make_identity_algebra(1);
    auto want1 = colored_oracle(1, 6);
    std::vector<long> expect1{1, 1, 2, 3, 5, 7, 11};
    CHECK(std::vector<long>(want1.begin(), want1.end()) == expect1);
    for (int n = 0; n <= 6; ++n) {
        CHECK(static_cast<long>(dim(r1, n)) == want1[n]);
        CHECK(colored_partition_count(1, n) == want1[n]);
    }
    auto r2 = make_identity_algebra(2);
    auto want2 = colored_oracle(2, 6);
    std::vector<long> expect2{1, 2, 5, 10, 20, 36, 65};
    CHECK(std::vector<long>(want2.begin(), want2.end()) == expect2);
    for (int n = 0; n <= 6; ++n)
        CHECK(static_cast<long>(dim(r2, n)) == want2[n]);
    auto r3 = make_identity_algebra(3);
    for (int n = 0; n <= 5; ++n)
        CHECK(colored_partition_count(3, n) == colored_oracle(3, 5)[n]);
}

TEST_CASE("basis states are distinct, canonical and of the right weight") {
    auto algebra = make_identity_algebra(2);
    for (int n = 0; n <= 5; ++n) {
        auto b = basis(algebra, n);
        for (std::size_t i = 0; i < b.size(); ++i) {
            CHECK(b[i].weight() == n);
            if (i + 1 < b.size())
                CHECK(b[i] < b[i + 1]);
        }
    }
}

TEST_CASE("state arithmetic and graded components") {
    auto algebra = make_identity_algebra(2);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> widx(0, 4);
    for (int trial = 0; trial < 50; ++trial) {
        State a, b, c;
        auto randomize = [&](State& s) {
            for (int i = 0; i < 3; ++i) {
                auto bs = basis(algebra, widx(rng));
                std::uniform_int_distribution<std::size_t> pick(0, bs.size() - 1);
                s.add_term(bs[pick(rng)], Rational(widx(rng) - 2));
            }
        };
        randomize(a);
        randomize(b);
        randomize(c);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a - a == State{});
        State resum;
        for (const auto& [w, comp] : graded_components(a)) {
            int cw = 0;
            CHECK(comp.is_homogeneous(&cw));
            if (!comp.is_zero())
                CHECK(cw == w);
            resum += comp;
        }
        CHECK(resum == a);
    }
}

TEST_CASE("algebra construction validates the form") {
    CHECK_THROWS_AS(make_algebra(2, RatMatrix{{1, 0}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_algebra(2, RatMatrix{{1, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_algebra(2, RatMatrix{{1, 0}}), std::invalid_argument);
    auto hyper = make_algebra(2, RatMatrix{{0, 1}, {1, 0}});
    CHECK(hyper.gram_inverse() == RatMatrix{{0, 1}, {1, 0}});
    CHECK(hyper.pairing(1, 2) == 1);
    CHECK(hyper.momentum_pairing(1, RatVector{2, 3}) == 3);
}
