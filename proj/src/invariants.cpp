#include "szf/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace szf {

PolarDegrees polar_degrees(const SegreZeta& z, long n, std::optional<std::size_t> tail_len) {
    const std::size_t codim = z.codim();
    if (n <= 0 || codim > static_cast<std::size_t>(n))
        throw std::invalid_argument("codimension exceeds ambient dimension");

    PolyFraction pf = subst_dual(z.rat());
    if (codim % 2 == 1) pf.numerator = -pf.numerator;  // (-1)^{n-m}

    const std::size_t extra = tail_len.value_or(static_cast<std::size_t>(n));
    IntPoly series = series_expand(pf.numerator, pf.denominator, static_cast<std::size_t>(n) + extra);

    PolarDegrees pd;
    pd.n = n;
    pd.m = n - static_cast<long>(codim);
    for (std::size_t k = codim; k <= static_cast<std::size_t>(n); ++k)
        pd.deltas.push_back(series.coeff(k));
    for (std::size_t k = static_cast<std::size_t>(n) + 1; k <= static_cast<std::size_t>(n) + extra; ++k)
        pd.tail.push_back(series.coeff(k));
    return pd;
}

DualInfo dual_info(const PolarDegrees& pd) {
    for (long i = 0; i <= pd.m; ++i)
        if (pd.delta(i) != 0) return {pd.n - 1 - i, pd.delta(i)};
    throw std::logic_error("all polar degrees vanish");
}

std::optional<std::vector<long>> as_complete_intersection(const SegreZeta& z) {
    const IntPoly& num = z.rat().numerator;
    const LinearFactorProduct& den = z.rat().denominator;
    const std::size_t r = z.codim();
    if (num.degree() != r || num.trailing_degree() != r) return std::nullopt;  // not a monomial c t^r
    if (den.size() != r || num.leading_coeff() != den.product()) return std::nullopt;
    return den.factors();
}

LciReport lci_consistency_check(const SegreZeta& z, long n, const std::vector<long>& degrees) {
    if (degrees.empty()) throw std::invalid_argument("empty generating set");
    for (long d : degrees)
        if (d <= 0) throw std::invalid_argument("invalid degree");
    const long r = static_cast<long>(z.codim());
    if (n <= 0 || r > n) throw std::invalid_argument("codimension exceeds ambient dimension");
    const long m = static_cast<long>(degrees.size());
    if (m > n - r) throw std::invalid_argument("too many generators for the Z[H]-lifting argument");

    LciReport rep;
    LinearFactorProduct gens(degrees);
    auto missing = multiset_difference(gens, z.rat().denominator);
    if (!missing || r > m) return rep;
    IntPoly gen_form = z.rat().numerator * missing->expand();

    // Unique factorization over Z[t] makes the first verified split the split.
    const std::vector<long>& ds = gens.factors();
    std::vector<std::size_t> pick(static_cast<std::size_t>(r));
    for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
    while (true) {
        BigInt prod = 1;
        for (std::size_t i : pick) prod *= ds[i];
        if (prod == z.degree()) {
            std::vector<long> normal, residual;
            std::size_t next = 0;
            for (std::size_t i = 0; i < ds.size(); ++i) {
                if (next < pick.size() && pick[next] == i) {
                    normal.push_back(ds[i]);
                    ++next;
                } else {
                    residual.push_back(ds[i]);
                }
            }
            IntPoly expected =
                IntPoly::monomial(z.degree(), z.codim()) * LinearFactorProduct(residual).expand();
            if (expected == gen_form) {
                rep.is_ci_type = true;
                rep.normal_degrees = std::move(normal);
                rep.residual_degrees = std::move(residual);
                return rep;
            }
        }
        // next combination of size r from ds
        std::size_t j = pick.size();
        while (j > 0 && pick[j - 1] == ds.size() - pick.size() + (j - 1)) --j;
        if (j == 0) break;
        ++pick[j - 1];
        for (std::size_t k = j; k < pick.size(); ++k) pick[k] = pick[k - 1] + 1;
    }
    return rep;
}

}  // namespace szf
