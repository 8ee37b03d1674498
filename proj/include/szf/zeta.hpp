#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "szf/int_poly.hpp"
#include "szf/rational_series.hpp"

namespace szf {

/// Pushforward Segre-class data for a subscheme of P^n: entry i is the
/// coefficient of H^i. A proper subscheme has codimension >= 1, so the
/// constant coefficient vanishes.
struct SegreClassData {
    SegreClassData(long ambient_dim, std::vector<BigInt> coeffs);

    long ambient_dim;
    std::vector<BigInt> coeffs;
};

/// A Segre zeta function: a reduced rational series whose numerator has a
/// positive trailing coefficient. The trailing exponent is the codimension and
/// the trailing coefficient the degree; both are stored and revalidated on
/// construction.
class SegreZeta {
public:
    static SegreZeta from_series(RationalSeries rat);

    const RationalSeries& rat() const { return rat_; }
    std::size_t codim() const { return codim_; }
    const BigInt& degree() const { return degree_; }

    friend bool operator==(const SegreZeta& a, const SegreZeta& b) { return a.rat_ == b.rat_; }

private:
    SegreZeta(RationalSeries rat, std::size_t codim, BigInt degree)
        : rat_(std::move(rat)), codim_(codim), degree_(std::move(degree)) {}

    RationalSeries rat_;
    std::size_t codim_;
    BigInt degree_;
};

/// Trailing exponent and coefficient of the numerator: the codimension and
/// degree carried by the series. Throws on a zero numerator.
std::pair<std::size_t, BigInt> codim_and_degree(const RationalSeries& f);

/// Zeta of a complete intersection of hypersurfaces of the given degrees:
/// (prod d_i) t^r / prod (1 + d_i t).
SegreZeta ci_zeta(const std::vector<long>& degrees);

/// Reconstruction from a degree list d_0..d_r and Segre-class data known to
/// order r: with S(t) the data truncated at t^r and Q(t) = prod (1 + d_i t),
/// returns ([S(t) Q(t)]_r + (prod d_i) t^{r+1}) / Q(t). The result is
/// validated structurally and inconsistent input is refused. Coefficients
/// beyond index r are ignored; a note is appended to *warnings if given.
SegreZeta bootstrap_zeta(const std::vector<long>& degrees, const SegreClassData& segre,
                         std::vector<std::string>* warnings = nullptr);

/// Zeta of a scheme cut out by degree-d hypersurfaces spanning a linear
/// system in P^n. counts[i] = N_i, the number of intersection points of i
/// general members with n-i general hyperplanes; the numerator is assembled
/// from a_i = d^i - N_i as sum a_i t^i (1+dt)^{n-i} + d^{n+1} t^{n+1} over
/// (1+dt)^{n+1}. The counts are caller-supplied (computing them needs
/// saturation in a computer-algebra system); N_0 = 1 is forced.
SegreZeta linear_system_zeta(long d, long n, const std::vector<BigInt>& counts);

/// Zeta of the sum of two splayed ideals: the product of the zetas.
SegreZeta splayed_product(const SegreZeta& z1, const SegreZeta& z2);

/// Structural checks against a generating-set degree list d_0..d_r:
///  (a) the reduced denominator is a sub-multiset of the degrees;
///  (b) the numerator in generator form has nonnegative coefficients;
///  (c) its degree is <= r+1, with coefficient prod d_i at degree r+1;
///  (d) the trailing term has positive exponent and coefficient (and matches
///      the stored codimension/degree of a SegreZeta).
struct ValidationReport {
    bool denominator_contained = false;
    bool numerator_nonnegative = false;
    bool degree_bound = false;
    bool trailing_matches = false;

    bool all() const {
        return denominator_contained && numerator_nonnegative && degree_bound && trailing_matches;
    }
    std::string summary() const;
};

ValidationReport validate_zeta(const RationalSeries& f, const std::vector<long>& degrees);
ValidationReport validate_zeta(const SegreZeta& z, const std::vector<long>& degrees);

}  // namespace szf
