#pragma once

#include <optional>
#include <vector>

#include "szf/zeta.hpp"

namespace szf {

/// Polar degrees (ranks) of a dimension-m subvariety of P^n, read off the
/// expansion of (-1)^{n-m} zeta(-t/(1+t)): deltas = [delta_m, ..., delta_0]
/// are the coefficients of t^{n-m}..t^n, and tail holds the coefficients
/// beyond t^n (reported uninterpreted).
struct PolarDegrees {
    long n = 0;
    long m = 0;
    std::vector<BigInt> deltas;
    std::vector<BigInt> tail;

    /// delta_i, for 0 <= i <= m.
    const BigInt& delta(long i) const { return deltas.at(static_cast<std::size_t>(m - i)); }
};

/// The duality transform is meaningful when the ideal cuts out a nonsingular
/// variety; it is computed regardless (nonsingularity is not detectable from
/// the zeta). Expands to order n + tail_len; tail_len defaults to n.
PolarDegrees polar_degrees(const SegreZeta& z, long n,
                           std::optional<std::size_t> tail_len = std::nullopt);

struct DualInfo {
    long dimension = 0;
    BigInt degree;
};

/// Smallest i with delta_i != 0 gives the degree of the dual variety and its
/// dimension n-1-i. Always defined: delta_m is the degree of Z.
DualInfo dual_info(const PolarDegrees& pd);

/// The degree multiset [e_1..e_r] when the reduced form is exactly
/// (prod e_j) t^r / prod (1 + e_j t) with r = codim; nullopt otherwise.
std::optional<std::vector<long>> as_complete_intersection(const SegreZeta& z);

struct LciReport {
    bool is_ci_type = false;
    std::optional<std::vector<long>> normal_degrees;
    std::optional<std::vector<long>> residual_degrees;
};

/// For a local complete intersection of codimension r in P^n cut out by m
/// hypersurfaces of the given degrees (m <= n - r, so the class identity
/// lifts to Z[H]): searches for a size-r sub-multiset S of the degrees with
/// prod(S) = deg Z and generator-form numerator (deg Z) t^r prod_{i not in
/// S}(1 + d_i t). On success the normal bundle has the Chern class of a
/// complete intersection of the degrees in S.
LciReport lci_consistency_check(const SegreZeta& z, long n, const std::vector<long>& degrees);

}  // namespace szf
