#include "boxagg/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace boxagg {

std::string decimal_string(const Rational& value, int places) {
    if (value < 0) throw std::invalid_argument("decimal_string expects a non-negative value");
    BigInt scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;

    const BigInt num = numerator(value) * scale;
    const BigInt den = denominator(value);
    BigInt q = num / den;
    const BigInt r = num % den;

    // round half to even
    const BigInt twice = r * 2;
    if (twice > den || (twice == den && q % 2 != 0)) ++q;

    const BigInt whole = q / scale;
    const BigInt frac = q % scale;

    std::ostringstream out;
    out << whole;
    if (places > 0) {
        std::string f = frac.str();
        out << '.' << std::string(places - f.size(), '0') << f;
    }
    return out.str();
}

std::string fraction_string(const Rational& value) {
    std::ostringstream out;
    out << numerator(value) << '/' << denominator(value);
    return out.str();
}

std::string dims_string(const Box& dims) {
    std::ostringstream out;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) out << ',';
        out << dims[i];
    }
    return out.str();
}

}  // namespace boxagg
