#include "szf/int_poly.hpp"

#include <stdexcept>
#include <utility>

namespace szf {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::one() { return monomial(1, 0); }

IntPoly IntPoly::monomial(BigInt c, std::size_t k) {
    if (c == 0) return {};
    std::vector<BigInt> v(k + 1);
    v[k] = std::move(c);
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t IntPoly::degree() const {
    if (is_zero()) throw std::logic_error("degree of the zero polynomial is undefined");
    return coeffs_.size() - 1;
}

const BigInt& IntPoly::coeff(std::size_t k) const {
    static const BigInt zero = 0;
    return k < coeffs_.size() ? coeffs_[k] : zero;
}

std::size_t IntPoly::trailing_degree() const {
    if (is_zero()) throw std::logic_error("trailing degree of the zero polynomial is undefined");
    std::size_t k = 0;
    while (coeffs_[k] == 0) ++k;
    return k;
}

const BigInt& IntPoly::trailing_coeff() const { return coeffs_[trailing_degree()]; }

const BigInt& IntPoly::leading_coeff() const {
    if (is_zero()) throw std::logic_error("leading coefficient of the zero polynomial is undefined");
    return coeffs_.back();
}

BigInt IntPoly::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::truncated(std::size_t n) const {
    if (coeffs_.size() <= n + 1) return *this;
    std::vector<BigInt> v(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n + 1));
    return IntPoly(std::move(v));
}

IntPoly IntPoly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<BigInt> v(coeffs_.size() + k);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + k] = coeffs_[i];
    return IntPoly(std::move(v));
}

std::optional<IntPoly> IntPoly::divided_by_linear(long e) const {
    // Synthetic division by (1 + e t): q_0 = p_0, q_k = p_k - e q_{k-1},
    // exact iff the final remainder p_m - e q_{m-1} vanishes.
    if (is_zero() || e == 0) return *this;
    const std::size_t m = degree();
    if (m == 0) return std::nullopt;
    std::vector<BigInt> q(m);
    q[0] = coeffs_[0];
    for (std::size_t k = 1; k < m; ++k) q[k] = coeffs_[k] - e * q[k - 1];
    if (coeffs_[m] != e * q[m - 1]) return std::nullopt;
    return IntPoly(std::move(q));
}

IntPoly IntPoly::operator-() const {
    std::vector<BigInt> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

IntPoly operator+(IntPoly a, const IntPoly& b) {
    a += b;
    return a;
}

IntPoly operator-(IntPoly a, const IntPoly& b) {
    a -= b;
    return a;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<BigInt> prod(ac.size() + bc.size() - 1);
    for (std::size_t i = 0; i < ac.size(); ++i)
        for (std::size_t j = 0; j < bc.size(); ++j) prod[i + j] += ac[i] * bc[j];
    return IntPoly(std::move(prod));
}

IntPoly operator*(const BigInt& c, IntPoly p) {
    p *= c;
    return p;
}

IntPoly linear_power(long d, std::size_t e) {
    IntPoly acc = IntPoly::one();
    const IntPoly base({BigInt(1), BigInt(d)});
    for (std::size_t i = 0; i < e; ++i) acc *= base;
    return acc;
}

}  // namespace szf
