// Acceptance suite: exact integer checks, one line per criterion.

#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "support.hpp"
#include "szf/format.hpp"
#include "szf/invariants.hpp"
#include "szf/staircase.hpp"
#include "szf/zeta.hpp"

using namespace szf;
using szf::testing::Rng;

namespace {

int failures = 0;

void criterion(int id, const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << name << note << "\n";
    if (!ok) ++failures;
}

RationalSeries series(IntPoly num, std::vector<long> factors) {
    return {std::move(num), LinearFactorProduct(std::move(factors))};
}

const std::vector<ExponentVector> kPaperGens{{7, 0}, {5, 1}, {4, 2}, {3, 4}, {2, 5}, {1, 7}};

}  // namespace

int main() {
    criterion(1, "staircase zeta and its order-4 expansion", [] {
        SegreZeta z = monomial2d_zeta(MonomialIdeal2D(kPaperGens));
        return z.rat() == series(IntPoly{0, 1, 57, 640, 2016}, {6, 6, 7, 8}) &&
               series_expand(z.rat(), 4) == IntPoly{0, 1, 30, -442, 4578};
    });

    criterion(2, "bootstrap closed form and its order-9 expansion", [] {
        SegreZeta z = bootstrap_zeta({2, 3, 4}, SegreClassData(2, {0, 0, 2}));
        return z.rat() == series(IntPoly{0, 0, 2, 24}, {2, 3, 4}) &&
               series_expand(z.rat(), 9) ==
                   IntPoly{0, 0, 2, 6, -106, 750, -4138, 20286, -92986, 408750};
    });

    criterion(3, "twisted cubic polar degrees and dual", [] {
        SegreZeta z = SegreZeta::from_series(parse_zeta("(3t^2+8t^3)/((1+2t)^3)"));
        PolarDegrees pd = polar_degrees(z, 3);
        DualInfo info = dual_info(pd);
        return pd.delta(1) == 3 && pd.delta(0) == 4 && info.dimension == 2 && info.degree == 4;
    });

    criterion(4, "empty-scheme zetas for n = 2..6", [] {
        for (long n = 2; n <= 6; ++n) {
            if (ci_zeta(std::vector<long>(n + 1, 1)).rat() !=
                series(IntPoly::monomial(1, n + 1), std::vector<long>(n + 1, 1)))
                return false;
            std::vector<long> degs{2};
            degs.insert(degs.end(), n, 1);
            if (ci_zeta(degs).rat() != series(IntPoly::monomial(2, n + 1), degs)) return false;
        }
        return true;
    });

    criterion(5, "monomial / complete-intersection / splayed agreement, 1 <= a,b <= 8", [] {
        for (long a = 1; a <= 8; ++a)
            for (long b = 1; b <= 8; ++b) {
                SegreZeta m = monomial2d_zeta(MonomialIdeal2D({{a, 0}, {0, b}}));
                SegreZeta c = ci_zeta({a, b});
                if (!(m == c && c == splayed_product(ci_zeta({a}), ci_zeta({b})))) return false;
            }
        return true;
    });

    criterion(6, "structure theorem on 200 randomized constructor zetas", [] {
        Rng rng(101);
        for (int i = 0; i < 200; ++i) {
            auto c = testing::random_case(rng);
            if (!validate_zeta(c.z, c.degrees).all()) return false;

            IntPoly a = series_expand(c.z.rat(), 30);
            IntPoly den = c.z.rat().denominator.expand();
            const std::size_t p = c.z.rat().numerator.degree();
            for (std::size_t k = p + 1; k <= 30; ++k) {
                BigInt acc = 0;
                for (std::size_t j = 0; j <= std::min(k, den.is_zero() ? 0 : den.degree()); ++j)
                    acc += den.coeff(j) * a.coeff(k - j);
                if (acc != 0) return false;
            }

            auto [codim, degree] = codim_and_degree(c.z.rat());
            if (codim != c.z.codim() || degree != c.z.degree()) return false;
        }
        return true;
    });

    criterion(7, "integral-closure invariance on 100 random ideals and the staircase example", [] {
        Rng rng(103);
        for (int i = 0; i < 100; ++i) {
            MonomialIdeal2D ideal = testing::random_ideal(rng);
            SegreZeta z = monomial2d_zeta(ideal);
            auto vertices = integral_closure_reduce(ideal).boundary.vertices;
            ExponentVector v = vertices[static_cast<std::size_t>(testing::rand_int(
                rng, 0, static_cast<long>(vertices.size()) - 1))];
            std::vector<ExponentVector> gens = ideal.generators();
            gens.push_back({v.a + testing::rand_int(rng, 1, 3), v.b + testing::rand_int(rng, 1, 3)});
            if (!(monomial2d_zeta(MonomialIdeal2D(gens)) == z)) return false;
        }
        auto red = integral_closure_reduce(MonomialIdeal2D(kPaperGens));
        if (red.discarded != std::vector<ExponentVector>{{3, 4}}) return false;
        return monomial2d_zeta(MonomialIdeal2D(kPaperGens)) ==
               monomial2d_zeta(MonomialIdeal2D({{7, 0}, {5, 1}, {4, 2}, {2, 5}, {1, 7}}));
    });

    criterion(8, "complete-intersection polar degrees positive and equal to the closed form", [] {
        Rng rng(107);
        for (int i = 0; i < 50; ++i) {
            std::vector<long> degrees(static_cast<std::size_t>(testing::rand_int(rng, 1, 4)));
            bool some_big = false;
            for (auto& d : degrees) {
                d = testing::rand_int(rng, 1, 5);
                some_big = some_big || d >= 2;
            }
            if (!some_big) degrees[0] = testing::rand_int(rng, 2, 5);
            const long r = static_cast<long>(degrees.size());
            const long n = testing::rand_int(rng, r, 8);

            SegreZeta z = ci_zeta(degrees);
            PolarDegrees pd = polar_degrees(z, n);
            for (long j = 0; j <= pd.m; ++j)
                if (!(pd.delta(j) > 0)) return false;
            if (dual_info(pd).dimension != n - 1) return false;

            PolyFraction pf = subst_dual(z.rat());
            if (z.codim() % 2 == 1) pf.numerator = -pf.numerator;
            const std::size_t order = static_cast<std::size_t>(2 * n);
            if (series_expand(pf.numerator, pf.denominator, order) !=
                testing::ci_ranks_closed_form(degrees, order))
                return false;
        }
        return true;
    });

    criterion(9, "bootstrap round trip on constructor zetas", [] {
        Rng rng(109);
        for (int i = 0; i < 100; ++i)
            if (!testing::bootstrap_round_trips(testing::random_case(rng))) return false;
        // the staircase example against its hull degree sequence {6,6,7,7,8}
        MonomialIdeal2D ideal(kPaperGens);
        return testing::bootstrap_round_trips(
            {monomial2d_zeta(ideal), testing::hull_degree_sequence(ideal)});
    });

    criterion(10, "duality involution and the simple pole at -1/7", [] {
        Rng rng(113);
        for (int i = 0; i < 100; ++i) {
            RationalSeries f = testing::random_series(rng);
            PolyFraction twice = subst_dual(subst_dual(f));
            if (twice.numerator * f.denominator.expand() != twice.denominator * f.numerator)
                return false;
        }
        // generator form over the degree sequence {6,6,7,7,8} of the hull
        RationalSeries gen_form =
            series(IntPoly{0, 1, 57, 640, 2016} * IntPoly{1, 7}, {6, 6, 7, 7, 8});
        return reduce(gen_form) == series(IntPoly{0, 1, 57, 640, 2016}, {6, 6, 7, 8});
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << "\n";
    return failures == 0 ? 0 : 1;
}
