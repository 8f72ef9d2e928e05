#include "boxagg/symfunc.hpp"

#include "boxagg/geometry.hpp"

#include <stdexcept>

namespace boxagg::symfunc {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial(std::vector<Rational>{c});
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Polynomial::eval(const Rational& u) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * u + *it;
    }
    return acc;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (coeffs_.empty() || other.coeffs_.empty()) return Polynomial();
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = coeff(i) - other.coeff(i);
    }
    return Polynomial(std::move(out));
}

Rational elementary_symmetric(const std::vector<Rational>& values, std::size_t k) {
    if (k > values.size()) throw std::out_of_range("elementary_symmetric: k exceeds variable count");
    // e[j] after processing the first n values holds E_j(a_1..a_n)
    std::vector<Rational> e(k + 1, Rational(0));
    e[0] = 1;
    for (const auto& a : values) {
        for (std::size_t j = std::min(k, e.size() - 1); j >= 1; --j) {
            e[j] += a * e[j - 1];
        }
    }
    return e[k];
}

Rational r_product(const std::vector<Rational>& a, const std::vector<Rational>& b,
                   const std::set<std::size_t>& dirs) {
    if (a.size() != b.size()) throw std::invalid_argument("r_product: length mismatch");
    for (auto i : dirs) {
        if (i >= a.size()) throw std::out_of_range("r_product: direction index out of range");
    }
    Rational prod = 1;
    for (std::size_t j = 0; j < a.size(); ++j) {
        prod *= dirs.contains(j) ? b[j] : a[j];
    }
    return prod;
}

Rational big_r(const std::vector<Rational>& a, const std::vector<Rational>& b,
               std::size_t k) {
    if (a.size() != b.size()) throw std::invalid_argument("big_r: length mismatch");
    if (k > a.size()) throw std::out_of_range("big_r: k exceeds dimension");
    Polynomial prod = Polynomial::constant(1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        prod = prod * Polynomial({a[i], b[i]});
    }
    return prod.coeff(k);
}

Polynomial moment_polynomial(const Box& x, const Box& y) {
    geometry::check_same_length(x, y);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < y[i]) {
            throw std::invalid_argument(
                "moment_polynomial requires x_i >= y_i in every coordinate; "
                "apply the per-coordinate swap normalization first");
        }
    }
    Polynomial grown = Polynomial::constant(1);
    Polynomial stale = Polynomial::constant(1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Rational gap(1, x[i] - y[i] + 1);
        grown = grown * Polynomial({Rational(1), y[i] * gap});
        stale = stale * Polynomial({Rational(1), (y[i] - 1) * gap});
    }
    return grown - stale;
}

Polynomial u_ddu(const Polynomial& p) {
    std::vector<Rational> out(p.coeffs());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] *= static_cast<int>(k);
    }
    return Polynomial(std::move(out));
}

}  // namespace boxagg::symfunc
