#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace szf {

/// Arbitrary-precision signed integer. Every coefficient in the system.
using BigInt = mpz_class;

/// Dense univariate polynomial over Z in the variable t.
///
/// Canonical form: an empty coefficient vector denotes the zero polynomial;
/// otherwise the last coefficient is nonzero. The degree of the zero
/// polynomial is undefined and operations that need it branch explicitly.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly one();
    static IntPoly monomial(BigInt c, std::size_t k);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of a nonzero polynomial; throws std::logic_error on zero.
    std::size_t degree() const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    /// Coefficient of t^k; zero beyond the degree.
    const BigInt& coeff(std::size_t k) const;

    std::size_t trailing_degree() const;
    const BigInt& trailing_coeff() const;
    const BigInt& leading_coeff() const;

    BigInt evaluate(const BigInt& x) const;

    /// Drops all terms of degree > n. Idempotent.
    IntPoly truncated(std::size_t n) const;
    /// Multiplication by t^k.
    IntPoly shifted(std::size_t k) const;
    /// Exact quotient by (1 + e t), or nullopt when the remainder is nonzero.
    std::optional<IntPoly> divided_by_linear(long e) const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly& operator*=(const BigInt& c);

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

IntPoly operator+(IntPoly a, const IntPoly& b);
IntPoly operator-(IntPoly a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const BigInt& c, IntPoly p);

inline IntPoly truncate(const IntPoly& p, std::size_t n) { return p.truncated(n); }

/// (1 + d t)^e, expanded.
IntPoly linear_power(long d, std::size_t e);

}  // namespace szf
