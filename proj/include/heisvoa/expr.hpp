#ifndef HEISVOA_EXPR_HPP
#define HEISVOA_EXPR_HPP

#include "heisvoa/fock.hpp"

#include <string>

namespace heisvoa {

// Raised on malformed input; message carries the character position.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Grammar (whitespace-insensitive):
//   state    := ["-"] term (("+"|"-") term)*
//   term     := [rational "*"] atom* "|0>"
//   atom     := "h" index "(-" level ")"         (optionally "*"-separated)
//   rational := int ["/" posint]
State parse_state(const std::string& text, const BosonAlgebra& algebra);

// Canonical rendering; parse_state(format_state(s)) == s. The zero state is
// "0", the vacuum "|0>".
std::string format_state(const State& s);

std::string format_monomial(const Monomial& m);

// Algebra-definition file: lines "rank = r" and
// "gram = [[p/q, ...], ...]". '#' starts a comment.
BosonAlgebra parse_algebra_file(const std::string& path);
BosonAlgebra parse_algebra_text(const std::string& text);

} // namespace heisvoa

#endif
