#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heisvoa/expr.hpp"
#include "heisvoa/linalg.hpp"

#include <fstream>

using namespace heisvoa;

namespace {

State mono(std::vector<Factor> f, const Rational& c = 1) {
    return State(Monomial(std::move(f)), c);
}

} // namespace

TEST_CASE("parsing state expressions") {
    auto r2 = make_identity_algebra(2);
    CHECK(parse_state("h1(-1)|0>", r2) == mono({{1, 1}}));
    CHECK(parse_state("1/2*h1(-1)h1(-1)|0> + h1(-2)|0>", r2) ==
          mono({{1, 1}, {1, 1}}, rat(1, 2)) + mono({{1, 2}}));
    CHECK(parse_state("h1(-1)*h2(-3)|0>", r2) == mono({{2, 3}, {1, 1}}));
    CHECK(parse_state("|0>", r2) == State(Monomial::vacuum()));
    CHECK(parse_state("0", r2) == State{});
    CHECK(parse_state("-h1(-1)|0>", r2) == -mono({{1, 1}}));
    CHECK(parse_state(" h1(-1)|0> - 2/3 * h2(-1)|0> ", r2) ==
          mono({{1, 1}}) - mono({{2, 1}}, rat(2, 3)));
    // like terms combine and cancellation produces the zero state
    CHECK(parse_state("h1(-1)|0> - h1(-1)|0>", r2) == State{});

    CHECK_THROWS_WITH_AS(parse_state("h3(-1)|0>", r2),
                         doctest::Contains("boson index 3 exceeds rank 2"), ParseError);
    CHECK_THROWS_AS(parse_state("h1(1)|0>", r2), ParseError);
    CHECK_THROWS_AS(parse_state("h1(-0)|0>", r2), ParseError);
    CHECK_THROWS_AS(parse_state("1/0*|0>", r2), ParseError);
    CHECK_THROWS_AS(parse_state("h1(-1)", r2), ParseError);
    CHECK_THROWS_AS(parse_state("", r2), ParseError);
}

TEST_CASE("formatting") {
    auto r2 = make_identity_algebra(2);
    CHECK(format_state(State{}) == "0");
    CHECK(format_state(State(Monomial::vacuum())) == "|0>");
    CHECK(format_state(-mono({{1, 1}})) == "-1*h1(-1)|0>");
    CHECK(format_state(mono({{1, 1}})) == "h1(-1)|0>");
    State s = mono({{1, 1}, {1, 1}}, rat(1, 2)) + mono({{1, 2}});
    CHECK(format_state(s) == "h1(-2)|0> + 1/2*h1(-1)h1(-1)|0>");
    CHECK(format_state(mono({{1, 2}}) - mono({{2, 1}, {2, 1}}, rat(2, 3))) ==
          "h1(-2)|0> - 2/3*h2(-1)h2(-1)|0>");
    // round-trip on assorted states
    for (const auto& text : {"h2(-2)|0>", "-1*|0> + h1(-1)|0>",
                             "5/7*h1(-3)h2(-2)h2(-1)|0> - h2(-1)|0>"}) {
        State v = parse_state(text, r2);
        CHECK(parse_state(format_state(v), r2) == v);
    }
}

TEST_CASE("algebra files") {
    auto a = parse_algebra_text("rank = 2\ngram = [[1, 0], [0, 1]]\n");
    CHECK(a.rank() == 2);
    CHECK(a.gram() == identity_matrix(2));

    auto b = parse_algebra_text("# comment\nrank = 2\n"
                                "gram = [[0, 1/2],\n        [1/2, 0]]\n");
    CHECK(b.pairing(1, 2) == rat(1, 2));

    auto c = parse_algebra_text("rank = 3\n");
    CHECK(c.gram() == identity_matrix(3));

    CHECK_THROWS_AS(parse_algebra_text("rank = 2\ngram = [[1, 1], [1, 1]]\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_algebra_text("gram = [[1]]\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_algebra_text("rank = 0\n"), std::invalid_argument);

    const char* path = "test_algebra_tmp.txt";
    {
        std::ofstream out(path);
        out << "rank = 1\ngram = [[4/9]]\n";
    }
    auto d = parse_algebra_file(path);
    CHECK(d.pairing(1, 1) == rat(4, 9));
    std::remove(path);
}
