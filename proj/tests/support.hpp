#pragma once

#include <random>
#include <vector>

#include "szf/staircase.hpp"
#include "szf/zeta.hpp"

namespace szf::testing {

using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline IntPoly random_poly(Rng& rng, long max_deg = 6, long max_abs = 20) {
    std::vector<BigInt> coeffs(static_cast<std::size_t>(rand_int(rng, 0, max_deg)) + 1);
    for (auto& c : coeffs) c = rand_int(rng, -max_abs, max_abs);
    return IntPoly(std::move(coeffs));
}

inline LinearFactorProduct random_factors(Rng& rng, long max_count = 4, long max_d = 9) {
    std::vector<long> f(static_cast<std::size_t>(rand_int(rng, 0, max_count)));
    for (auto& d : f) d = rand_int(rng, 1, max_d);
    return LinearFactorProduct(std::move(f));
}

inline RationalSeries random_series(Rng& rng) {
    IntPoly num = random_poly(rng);
    LinearFactorProduct den = random_factors(rng);
    // sometimes plant a removable factor so reduce() has work to do
    if (rand_int(rng, 0, 1) == 0 && !den.empty()) {
        long d = den.factors()[static_cast<std::size_t>(rand_int(
            rng, 0, static_cast<long>(den.size()) - 1))];
        num *= IntPoly({BigInt(1), BigInt(d)});
        den = merged(den, LinearFactorProduct({d}));
    }
    return {std::move(num), std::move(den)};
}

inline MonomialIdeal2D random_ideal(Rng& rng, long max_coord = 8) {
    std::vector<ExponentVector> gens;
    const long count = rand_int(rng, 1, 5);
    while (static_cast<long>(gens.size()) < count) {
        ExponentVector g{rand_int(rng, 0, max_coord), rand_int(rng, 0, max_coord)};
        if (g.a == 0 && g.b == 0) continue;
        gens.push_back(g);
    }
    return MonomialIdeal2D(std::move(gens));
}

inline std::vector<long> hull_degree_sequence(const MonomialIdeal2D& ideal) {
    std::vector<long> degrees;
    for (auto v : integral_closure_reduce(ideal).boundary.vertices) degrees.push_back(v.a + v.b);
    return degrees;
}

/// A constructor-produced zeta together with its natural generating-set
/// degree list (what the constructors were fed, or the hull degrees).
struct ZetaCase {
    SegreZeta z;
    std::vector<long> degrees;
};

inline ZetaCase random_ci_case(Rng& rng) {
    std::vector<long> degrees(static_cast<std::size_t>(rand_int(rng, 1, 4)));
    for (auto& d : degrees) d = rand_int(rng, 1, 6);
    return {ci_zeta(degrees), degrees};
}

inline ZetaCase random_linsys_case(Rng& rng) {
    const long d = rand_int(rng, 1, 4);
    const long n = rand_int(rng, 1, 4);
    std::vector<BigInt> counts;
    BigInt d_pow = 1;
    for (long i = 0; i <= n; ++i) {
        if (i == 0)
            counts.emplace_back(1);
        else
            counts.push_back(BigInt(rand_int(rng, 0, 1000)) % (d_pow + 1));
        d_pow *= d;
    }
    return {linear_system_zeta(d, n, counts), std::vector<long>(n + 1, d)};
}

inline ZetaCase random_monomial_case(Rng& rng) {
    MonomialIdeal2D ideal = random_ideal(rng);
    return {monomial2d_zeta(ideal), hull_degree_sequence(ideal)};
}

inline ZetaCase random_product_case(Rng& rng) {
    ZetaCase a = random_ci_case(rng), b = random_monomial_case(rng);
    std::vector<long> degrees = a.degrees;
    degrees.insert(degrees.end(), b.degrees.begin(), b.degrees.end());
    return {splayed_product(a.z, b.z), degrees};
}

inline ZetaCase random_bootstrap_case(Rng& rng) {
    ZetaCase base = rand_int(rng, 0, 1) ? random_ci_case(rng) : random_linsys_case(rng);
    const std::size_t r = base.degrees.size() - 1;
    IntPoly s = series_expand(base.z.rat(), r);
    std::vector<BigInt> coeffs;
    for (std::size_t k = 0; k <= r; ++k) coeffs.push_back(s.coeff(k));
    SegreClassData data(static_cast<long>(r), coeffs);
    return {bootstrap_zeta(base.degrees, data), base.degrees};
}

inline ZetaCase random_case(Rng& rng) {
    switch (rand_int(rng, 0, 4)) {
        case 0: return random_ci_case(rng);
        case 1: return random_linsys_case(rng);
        case 2: return random_monomial_case(rng);
        case 3: return random_product_case(rng);
        default: return random_bootstrap_case(rng);
    }
}

/// Round trip through bootstrap_zeta from the truncated expansion.
inline bool bootstrap_round_trips(const ZetaCase& c) {
    const std::size_t r = c.degrees.size() - 1;
    IntPoly s = series_expand(c.z.rat(), r);
    std::vector<BigInt> coeffs;
    for (std::size_t k = 0; k <= r; ++k) coeffs.push_back(s.coeff(k));
    return bootstrap_zeta(c.degrees, SegreClassData(static_cast<long>(r), coeffs)) == c.z;
}

/// Independent oracle for the ranks of a complete intersection: the
/// coefficientwise product of the geometric series d_i sum_j (d_i-1)^j t^{j+1}.
inline IntPoly ci_ranks_closed_form(const std::vector<long>& degrees, std::size_t order) {
    IntPoly acc = IntPoly::one();
    for (long d : degrees) {
        std::vector<BigInt> g(order + 1);
        BigInt pw = d;
        for (std::size_t j = 1; j <= order; ++j) {
            g[j] = pw;
            pw *= d - 1;
        }
        acc = truncate(acc * IntPoly(std::move(g)), order);
    }
    return acc;
}

}  // namespace szf::testing
