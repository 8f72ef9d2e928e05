#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace boxagg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Box side lengths, one entry per axis, all >= 1.
using Box = std::vector<std::int64_t>;

/// Non-increasing tuple of positive integers (a rotation class of boxes).
using Partition = std::vector<std::int64_t>;

/// Renders a non-negative rational as a fixed-point decimal with the given
/// number of places, rounding half to even. Used for report formatting only;
/// exact values always travel as Rational.
std::string decimal_string(const Rational& value, int places = 4);

/// "numerator/denominator" in lowest terms.
std::string fraction_string(const Rational& value);

/// Comma-separated dims, e.g. "2,5".
std::string dims_string(const Box& dims);

/// Canonical key order for serialized distributions: descending lexicographic.
struct DescLex {
    bool operator()(const Box& a, const Box& b) const {
        return a > b;
    }
};

}  // namespace boxagg
