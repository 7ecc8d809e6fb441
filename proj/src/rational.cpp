#include "equilab/rational.hpp"

#include <ostream>
#include <sstream>

namespace equilab {

Rational Rational::parse(const std::string& text) {
    std::istringstream is(text);
    Int n = 0, d = 1;
    char slash = 0;
    if (!(is >> n)) throw std::invalid_argument("Rational::parse: bad input '" + text + "'");
    if (is >> slash) {
        if (slash != '/' || !(is >> d))
            throw std::invalid_argument("Rational::parse: bad input '" + text + "'");
    }
    std::string rest;
    if (is >> rest)
        throw std::invalid_argument("Rational::parse: trailing input in '" + text + "'");
    return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num();
    if (r.den() != 1) os << "/" << r.den();
    return os;
}

}  // namespace equilab
