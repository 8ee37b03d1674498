#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "szf/int_poly.hpp"

namespace szf {

/// Multiset of positive integers {d_j}, denoting the product prod_j (1 + d_j t).
/// The expansion has constant term 1 and nonnegative coefficients, so it is
/// invertible as a formal power series over Z.
class LinearFactorProduct {
public:
    LinearFactorProduct() = default;  // empty product = 1
    explicit LinearFactorProduct(std::vector<long> factors);

    const std::vector<long>& factors() const { return factors_; }
    std::size_t size() const { return factors_.size(); }
    bool empty() const { return factors_.empty(); }

    IntPoly expand() const;
    /// prod_j d_j (empty product = 1).
    BigInt product() const;

    friend bool operator==(const LinearFactorProduct& a, const LinearFactorProduct& b) = default;

private:
    std::vector<long> factors_;  // sorted ascending
};

/// Multiset union (concatenation).
LinearFactorProduct merged(const LinearFactorProduct& a, const LinearFactorProduct& b);
/// Per-value maximum multiplicity; the least common denominator of a and b.
LinearFactorProduct multiset_max(const LinearFactorProduct& a, const LinearFactorProduct& b);
/// a minus b as multisets, or nullopt when b is not contained in a.
std::optional<LinearFactorProduct> multiset_difference(const LinearFactorProduct& a,
                                                       const LinearFactorProduct& b);
bool multiset_contains(const LinearFactorProduct& whole, const LinearFactorProduct& part);

/// The formal power series numerator(t) * prod_j (1 + d_j t)^{-1}.
///
/// Reduced form: no factor (1 + d_j t) divides the numerator exactly.
/// Values produced by reduce() and rat_mul() are reduced.
struct RationalSeries {
    IntPoly numerator;
    LinearFactorProduct denominator;

    friend bool operator==(const RationalSeries&, const RationalSeries&) = default;
};

/// Coefficients a_0..a_order of the power-series expansion, via the linear
/// recurrence a_k = p_k - sum_{j>=1} e_j a_{k-j} with D(t) = sum e_j t^j the
/// expanded denominator.
IntPoly series_expand(const RationalSeries& f, std::size_t order);

/// Same recurrence for a general polynomial denominator; requires den(0) = 1.
IntPoly series_expand(const IntPoly& num, const IntPoly& den, std::size_t order);

/// Removes every factor (1 + d t) dividing the numerator exactly. The result
/// denotes the same power series.
RationalSeries reduce(RationalSeries f);

/// Product: numerators multiply, factor multisets merge; reduced.
RationalSeries rat_mul(const RationalSeries& f, const RationalSeries& g);

/// Sum over the least common denominator. Not reduced.
RationalSeries rat_add(const RationalSeries& f, const RationalSeries& g);

/// Plain polynomial fraction; the image of subst_dual leaves the
/// LinearFactorProduct class (its factors 1 - (d-1)t have negative slope).
struct PolyFraction {
    IntPoly numerator;
    IntPoly denominator;
};

/// sum_k p_k (-1)^k t^k (1+t)^{deg p - k}: the numerator of p(-t/(1+t)) over
/// (1+t)^{deg p}. Never divisible by (1+t) (its value at t = -1 is the leading
/// coefficient of p). Zero maps to zero.
IntPoly dual_substitution_numerator(const IntPoly& p);

/// Exact substitution t -> -t/(1+t). With deg P = p and r denominator factors:
///   numerator   = dual_substitution_numerator(P) * (1+t)^{max(r-p,0)}
///   denominator = prod_j (1 - (d_j - 1) t) * (1+t)^{max(p-r,0)}
PolyFraction subst_dual(const RationalSeries& f);

/// The same substitution on a plain fraction (for iterating it).
PolyFraction subst_dual(const PolyFraction& f);

/// Exact value of f at an integer point t0 with no vanishing factor.
mpq_class evaluate_at(const RationalSeries& f, const BigInt& t0);

}  // namespace szf
