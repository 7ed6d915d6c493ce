#ifndef HEISVOA_RATIONAL_HPP
#define HEISVOA_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

namespace heisvoa {

// Exact rational scalar. mpq_class keeps values in lowest terms with a
// positive denominator after canonicalization; every constructor path in
// this project goes through canonical values.
using Rational = mpq_class;
using Integer = mpz_class;

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p" or "p/q" with q > 0. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

// Renders "p" or "p/q" in lowest terms.
std::string format_rational(const Rational& r);

// Binomial coefficient with integer (possibly negative) upper index:
// C(m,i) for m < 0 is (-1)^i C(-m+i-1, i).
Integer binomial(long m, unsigned long i);

Integer factorial(unsigned long n);

} // namespace heisvoa

#endif
