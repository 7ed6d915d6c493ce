#include "heisvoa/rational.hpp"

#include <stdexcept>

namespace heisvoa {

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Integer num(text);
            return Rational(num);
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den <= 0)
            throw std::invalid_argument("denominator must be positive in '" + text + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("malformed rational '" + text + "': " + e.what());
    }
}

std::string format_rational(const Rational& r) {
    return r.get_str();
}

Integer binomial(long m, unsigned long i) {
    if (i == 0)
        return 1;
    if (m >= 0) {
        if (static_cast<unsigned long>(m) < i)
            return 0;
        Integer out;
        mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m), i);
        return out;
    }
    // C(m,i) = (-1)^i C(-m+i-1, i)
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(-m) + i - 1, i);
    if (i % 2 == 1)
        out = -out;
    return out;
}

Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

} // namespace heisvoa
