#include "szf/rational_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace szf {

LinearFactorProduct::LinearFactorProduct(std::vector<long> factors) : factors_(std::move(factors)) {
    for (long d : factors_)
        if (d < 1) throw std::invalid_argument("invalid degree: denominator factors must be >= 1");
    std::sort(factors_.begin(), factors_.end());
}

IntPoly LinearFactorProduct::expand() const {
    IntPoly acc = IntPoly::one();
    for (long d : factors_) acc *= IntPoly({BigInt(1), BigInt(d)});
    return acc;
}

BigInt LinearFactorProduct::product() const {
    BigInt p = 1;
    for (long d : factors_) p *= d;
    return p;
}

LinearFactorProduct merged(const LinearFactorProduct& a, const LinearFactorProduct& b) {
    std::vector<long> v = a.factors();
    v.insert(v.end(), b.factors().begin(), b.factors().end());
    return LinearFactorProduct(std::move(v));
}

LinearFactorProduct multiset_max(const LinearFactorProduct& a, const LinearFactorProduct& b) {
    std::vector<long> v;
    auto ia = a.factors().begin(), ea = a.factors().end();
    auto ib = b.factors().begin(), eb = b.factors().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && *ia < *ib)) {
            v.push_back(*ia++);
        } else if (ia == ea || *ib < *ia) {
            v.push_back(*ib++);
        } else {
            v.push_back(*ia++);
            ++ib;
        }
    }
    return LinearFactorProduct(std::move(v));
}

std::optional<LinearFactorProduct> multiset_difference(const LinearFactorProduct& a,
                                                       const LinearFactorProduct& b) {
    std::vector<long> v;
    auto ia = a.factors().begin(), ea = a.factors().end();
    for (long d : b.factors()) {
        while (ia != ea && *ia < d) v.push_back(*ia++);
        if (ia == ea || *ia != d) return std::nullopt;
        ++ia;
    }
    v.insert(v.end(), ia, ea);
    return LinearFactorProduct(std::move(v));
}

bool multiset_contains(const LinearFactorProduct& whole, const LinearFactorProduct& part) {
    return multiset_difference(whole, part).has_value();
}

IntPoly series_expand(const IntPoly& num, const IntPoly& den, std::size_t order) {
    if (den.is_zero() || den.coeff(0) != 1)
        throw std::invalid_argument("series expansion requires a denominator with constant term 1");
    std::vector<BigInt> a(order + 1);
    const std::size_t dd = den.degree();
    for (std::size_t k = 0; k <= order; ++k) {
        BigInt acc = num.coeff(k);
        for (std::size_t j = 1; j <= std::min(k, dd); ++j) acc -= den.coeff(j) * a[k - j];
        a[k] = std::move(acc);
    }
    return IntPoly(std::move(a));
}

IntPoly series_expand(const RationalSeries& f, std::size_t order) {
    return series_expand(f.numerator, f.denominator.expand(), order);
}

RationalSeries reduce(RationalSeries f) {
    if (f.numerator.is_zero()) return {IntPoly{}, LinearFactorProduct{}};
    std::vector<long> kept;
    for (long d : f.denominator.factors()) {
        if (auto q = f.numerator.divided_by_linear(d)) {
            f.numerator = std::move(*q);
        } else {
            kept.push_back(d);
        }
    }
    return {std::move(f.numerator), LinearFactorProduct(std::move(kept))};
}

RationalSeries rat_mul(const RationalSeries& f, const RationalSeries& g) {
    return reduce({f.numerator * g.numerator, merged(f.denominator, g.denominator)});
}

RationalSeries rat_add(const RationalSeries& f, const RationalSeries& g) {
    LinearFactorProduct den = multiset_max(f.denominator, g.denominator);
    IntPoly num = f.numerator * multiset_difference(den, f.denominator)->expand() +
                  g.numerator * multiset_difference(den, g.denominator)->expand();
    return {std::move(num), std::move(den)};
}

IntPoly dual_substitution_numerator(const IntPoly& p) {
    if (p.is_zero()) return {};
    const std::size_t m = p.degree();
    IntPoly acc;
    for (std::size_t k = 0; k <= m; ++k) {
        if (p.coeff(k) == 0) continue;
        BigInt c = p.coeff(k);
        if (k % 2 == 1) c = -c;
        acc += (c * linear_power(1, m - k)).shifted(k);
    }
    return acc;
}

PolyFraction subst_dual(const RationalSeries& f) {
    const std::size_t p = f.numerator.is_zero() ? 0 : f.numerator.degree();
    const std::size_t r = f.denominator.size();
    IntPoly num = dual_substitution_numerator(f.numerator);
    IntPoly den = IntPoly::one();
    for (long d : f.denominator.factors()) den *= IntPoly({BigInt(1), BigInt(1 - d)});
    if (r >= p) {
        num *= linear_power(1, r - p);
    } else {
        den *= linear_power(1, p - r);
    }
    return {std::move(num), std::move(den)};
}

PolyFraction subst_dual(const PolyFraction& f) {
    if (f.denominator.is_zero()) throw std::invalid_argument("fraction with zero denominator");
    const std::size_t p = f.numerator.is_zero() ? 0 : f.numerator.degree();
    const std::size_t q = f.denominator.degree();
    IntPoly num = dual_substitution_numerator(f.numerator);
    IntPoly den = dual_substitution_numerator(f.denominator);
    if (q >= p) {
        num *= linear_power(1, q - p);
    } else {
        den *= linear_power(1, p - q);
    }
    return {std::move(num), std::move(den)};
}

mpq_class evaluate_at(const RationalSeries& f, const BigInt& t0) {
    BigInt den = 1;
    for (long d : f.denominator.factors()) {
        BigInt factor = 1 + d * t0;
        if (factor == 0) throw std::invalid_argument("evaluation at a pole");
        den *= factor;
    }
    mpq_class v(f.numerator.evaluate(t0), den);
    v.canonicalize();
    return v;
}

}  // namespace szf
