#include "szf/zeta.hpp"

#include <stdexcept>

namespace szf {

SegreClassData::SegreClassData(long n, std::vector<BigInt> c) : ambient_dim(n), coeffs(std::move(c)) {
    if (ambient_dim < 0) throw std::invalid_argument("ambient dimension must be nonnegative");
    if (coeffs.size() > static_cast<std::size_t>(ambient_dim) + 1)
        throw std::invalid_argument("Segre class data longer than ambient dimension allows");
    if (!coeffs.empty() && coeffs[0] != 0)
        throw std::invalid_argument("Segre class constant term must vanish (proper subscheme)");
}

std::pair<std::size_t, BigInt> codim_and_degree(const RationalSeries& f) {
    if (f.numerator.is_zero()) throw std::invalid_argument("zero series");
    return {f.numerator.trailing_degree(), f.numerator.trailing_coeff()};
}

SegreZeta SegreZeta::from_series(RationalSeries rat) {
    rat = reduce(std::move(rat));
    auto [codim, degree] = codim_and_degree(rat);
    if (codim == 0) throw std::invalid_argument("not a Segre zeta: nonzero constant term");
    if (degree <= 0) throw std::invalid_argument("not a Segre zeta: trailing coefficient must be positive");
    return SegreZeta(std::move(rat), codim, std::move(degree));
}

namespace {

LinearFactorProduct checked_degrees(const std::vector<long>& degrees) {
    if (degrees.empty()) throw std::invalid_argument("empty generating set");
    for (long d : degrees)
        if (d <= 0) throw std::invalid_argument("invalid degree");
    return LinearFactorProduct(degrees);
}

}  // namespace

SegreZeta ci_zeta(const std::vector<long>& degrees) {
    LinearFactorProduct den = checked_degrees(degrees);
    IntPoly num = IntPoly::monomial(den.product(), den.size());
    SegreZeta z = SegreZeta::from_series({std::move(num), den});
    if (z.codim() != den.size() || z.degree() != den.product())
        throw std::logic_error("complete-intersection zeta failed its self-check");
    return z;
}

SegreZeta bootstrap_zeta(const std::vector<long>& degrees, const SegreClassData& segre,
                         std::vector<std::string>* warnings) {
    LinearFactorProduct den = checked_degrees(degrees);
    const std::size_t r = den.size() - 1;
    if (segre.coeffs.size() < r + 1)
        throw std::invalid_argument("insufficient Segre data: need coefficients to order " +
                                    std::to_string(r));
    if (segre.coeffs.size() > r + 1 && warnings)
        warnings->push_back("ignoring Segre coefficients beyond index " + std::to_string(r));

    IntPoly s_poly = IntPoly(segre.coeffs).truncated(r);
    IntPoly num = truncate(s_poly * den.expand(), r) + IntPoly::monomial(den.product(), r + 1);
    RationalSeries rat{std::move(num), den};
    if (!validate_zeta(rat, degrees).all())
        throw std::invalid_argument("input is not a Segre class for these degrees");
    return SegreZeta::from_series(std::move(rat));
}

SegreZeta linear_system_zeta(long d, long n, const std::vector<BigInt>& counts) {
    if (d <= 0) throw std::invalid_argument("invalid degree");
    if (n <= 0) throw std::invalid_argument("ambient dimension must be positive");
    if (counts.size() != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("need n+1 counts N_0..N_n");
    if (counts[0] != 1)
        throw std::invalid_argument("N_0 must be 1 (intersection of n general hyperplanes)");

    IntPoly num;
    BigInt d_pow = 1;  // d^i
    for (long i = 0; i <= n; ++i) {
        if (counts[i] < 0) throw std::invalid_argument("counts must be nonnegative");
        BigInt a = d_pow - counts[i];
        if (a < 0) throw std::invalid_argument("counts exceed Bezout bound");
        if (a != 0) num += (a * linear_power(d, n - i)).shifted(i);
        d_pow *= d;
    }
    num += IntPoly::monomial(d_pow, static_cast<std::size_t>(n) + 1);
    return SegreZeta::from_series({std::move(num), LinearFactorProduct(std::vector<long>(n + 1, d))});
}

SegreZeta splayed_product(const SegreZeta& z1, const SegreZeta& z2) {
    SegreZeta z = SegreZeta::from_series(rat_mul(z1.rat(), z2.rat()));
    if (z.codim() != z1.codim() + z2.codim() || z.degree() != z1.degree() * z2.degree())
        throw std::logic_error("splayed product failed its codim/degree self-check");
    return z;
}

ValidationReport validate_zeta(const RationalSeries& f, const std::vector<long>& degrees) {
    LinearFactorProduct gens = checked_degrees(degrees);
    RationalSeries red = reduce(f);
    ValidationReport rep;

    auto missing = multiset_difference(gens, red.denominator);
    rep.denominator_contained = missing.has_value();

    if (missing) {
        IntPoly gen_form = red.numerator * missing->expand();
        rep.numerator_nonnegative = true;
        for (const BigInt& c : gen_form.coeffs())
            if (c < 0) rep.numerator_nonnegative = false;
        if (gen_form.is_zero()) {
            rep.degree_bound = true;
        } else {
            const std::size_t s = gens.size();
            rep.degree_bound = gen_form.degree() <= s &&
                               (gen_form.degree() < s || gen_form.leading_coeff() == gens.product());
        }
    }

    rep.trailing_matches = !red.numerator.is_zero() && red.numerator.trailing_degree() >= 1 &&
                           red.numerator.trailing_coeff() > 0;
    return rep;
}

ValidationReport validate_zeta(const SegreZeta& z, const std::vector<long>& degrees) {
    ValidationReport rep = validate_zeta(z.rat(), degrees);
    if (rep.trailing_matches) {
        auto [codim, degree] = codim_and_degree(z.rat());
        rep.trailing_matches = codim == z.codim() && degree == z.degree();
    }
    return rep;
}

std::string ValidationReport::summary() const {
    auto line = [](const char* what, bool ok) {
        return std::string(what) + ": " + (ok ? "pass" : "fail") + "\n";
    };
    return line("(a) reduced denominator contained in degree multiset", denominator_contained) +
           line("(b) generator-form numerator nonnegative", numerator_nonnegative) +
           line("(c) numerator degree bound and leading coefficient", degree_bound) +
           line("(d) trailing term gives codimension and degree", trailing_matches);
}

}  // namespace szf
