#pragma once

#include <set>
#include <vector>

#include "boxagg/rational.hpp"

namespace boxagg::symfunc {

/// Dense polynomial in u with exact rational coefficients; coeffs[k] is the
/// coefficient of u^k. Trailing zeros are trimmed.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(const Rational& c);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t k) const;

    Rational eval(const Rational& u) const;

    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;

    bool operator==(const Polynomial& other) const = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// E_k(values) by the Pascal-type recurrence, O(n*k). E_0 = 1.
/// Throws std::out_of_range unless 0 <= k <= values.size().
Rational elementary_symmetric(const std::vector<Rational>& values, std::size_t k);

/// prod_{j not in dirs} a_j * prod_{j in dirs} b_j. Indices are zero-based.
Rational r_product(const std::vector<Rational>& a, const std::vector<Rational>& b,
                   const std::set<std::size_t>& dirs);

/// R_k(a,b) = sum over k-subsets of r_product, computed as the coefficient
/// of u^k in prod(a_i + u b_i).
Rational big_r(const std::vector<Rational>& a, const std::vector<Rational>& b,
               std::size_t k);

/// The moment generating polynomial
///   M(u) = prod(1 + y_i u/(x_i-y_i+1)) - prod(1 + (y_i-1) u/(x_i-y_i+1)).
/// Requires x_i >= y_i for all i; otherwise throws with a hint to apply the
/// per-coordinate swap normalization first.
Polynomial moment_polynomial(const Box& x, const Box& y);

/// The operator u d/du: coefficient of u^k is scaled by k.
Polynomial u_ddu(const Polynomial& p);

}  // namespace boxagg::symfunc
