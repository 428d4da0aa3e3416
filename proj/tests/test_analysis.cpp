#include "figraph/analysis.hpp"
#include "figraph/verify.hpp"

#include <gtest/gtest.h>

using namespace figraph;

namespace {

std::vector<SequencePoint> from_fn(std::int64_t lo, std::int64_t hi,
                                   const std::function<std::int64_t(std::int64_t)>& f) {
    std::vector<SequencePoint> out;
    for (auto n = lo; n <= hi; ++n)
        out.push_back({n, f(n)});
    return out;
}

QuasiPolynomialFit fit_of(const std::vector<SequencePoint>& pts) {
    auto fit = fit_quasi_polynomial(pts);
    EXPECT_TRUE(fit.has_value());
    return fit.value_or(QuasiPolynomialFit{});
}

/// Every fit must reproduce all points from its stable degree on.
void expect_reproduces(const QuasiPolynomialFit& fit, const std::vector<SequencePoint>& pts) {
    for (const auto& p : pts)
        if (p.n >= fit.stable_degree) {
            EXPECT_EQ(fit(p.n), Rational(p.value)) << "n=" << p.n;
        }
}

} // namespace

TEST(Fit, JohnsonFloorHalf) {
    auto pts = from_fn(2, 12, [](auto n) { return n / 2; });
    auto fit = fit_of(pts);
    EXPECT_EQ(fit.period, 2);
    EXPECT_EQ(fit.degree, 1);
    EXPECT_EQ(fit.stable_degree, 2);
    EXPECT_EQ(fit.pieces[0].to_string(), "n/2");
    EXPECT_EQ(fit.pieces[1].to_string(), "n/2 - 1/2");
    expect_reproduces(fit, pts);
}

TEST(Fit, ConstantSequence) {
    auto fit = fit_of(from_fn(2, 10, [](auto) { return 1; }));
    EXPECT_EQ(fit.period, 1);
    EXPECT_EQ(fit.degree, 0);
    EXPECT_EQ(fit.pieces[0].to_string(), "1");
}

TEST(Fit, CopiesOfKneser2SettlesAtSeven) {
    auto pts = from_fn(2, 12, [](auto n) { return (n <= 6 && n % 3 == 0) ? n : n - 1; });
    auto fit = fit_of(pts);
    EXPECT_EQ(fit.period, 1);
    EXPECT_EQ(fit.pieces[0].to_string(), "n - 1");
    EXPECT_EQ(fit.stable_degree, 7);
}

TEST(Fit, Kneser2ScanFromFour) {
    auto fit = fit_of(from_fn(4, 10, [](auto n) { return n - 1; }));
    EXPECT_EQ(fit.period, 1);
    EXPECT_EQ(fit.pieces[0].to_string(), "n - 1");
    EXPECT_EQ(fit.stable_degree, 4);
    EXPECT_NE(to_text(fit).find("period 1, degree 1, stable degree 4"), std::string::npos);
}

TEST(Fit, QuadraticAndTransient) {
    auto pts = from_fn(2, 12, [](auto n) { return n < 5 ? 0 : n * (n - 1) / 2; });
    auto fit = fit_of(pts);
    EXPECT_EQ(fit.period, 1);
    EXPECT_EQ(fit.degree, 2);
    EXPECT_EQ(fit.stable_degree, 5);
    expect_reproduces(fit, pts);
}

TEST(Fit, PeriodTwoWithShortTransient) {
    // max(2, floor(n/2)) on 2..11: period 2 from n = 4 with four points per class.
    auto pts = from_fn(2, 11, [](auto n) { return std::max<std::int64_t>(2, n / 2); });
    auto fit = fit_of(pts);
    EXPECT_EQ(fit.period, 2);
    EXPECT_EQ(fit.degree, 1);
    EXPECT_EQ(fit.stable_degree, 4);
    EXPECT_EQ(fit.points_confirmed_per_class, 2);
    EXPECT_EQ(fit.total_confirmed, 4);
}

TEST(Fit, TwoEqualTailPointsAreNotAConstant) {
    // floor(n/2) ends in 6, 6 on 2..13; a constant tail of two points must not fit.
    auto fit = fit_of(from_fn(2, 13, [](auto n) { return n / 2; }));
    EXPECT_EQ(fit.period, 2);
    EXPECT_EQ(fit.stable_degree, 2);
}

TEST(Fit, PeriodOneConfirmsOnDegreePlusTwoPoints) {
    // Linear only on the last four points: 2 interpolation + 2 confirmations < 3.
    auto pts = from_fn(2, 11, [](auto n) { return n < 8 ? (n * n) % 7 : n; });
    auto fit = fit_quasi_polynomial(pts, 1, 1);
    EXPECT_FALSE(fit.has_value());
}

TEST(Fit, NoFitForWildSequence) {
    std::vector<std::int64_t> v{5, 1, 9, 2, 8, 3, 1, 7, 4, 6, 0, 12};
    auto pts = points_from(1, v);
    EXPECT_FALSE(fit_quasi_polynomial(pts, 2, 1).has_value());
}

TEST(Fit, Errors) {
    std::vector<SequencePoint> gap{{1, 1}, {2, 1}, {4, 1}};
    EXPECT_THROW(fit_quasi_polynomial(gap), InsufficientData);
    std::vector<SequencePoint> tiny{{1, 1}};
    EXPECT_THROW(fit_quasi_polynomial(tiny), InsufficientData);
    AlphaSequence seq;
    seq.rows.push_back({.n = 2, .alpha = 1, .status = RowStatus::budget_exceeded});
    EXPECT_THROW(fit_quasi_polynomial(seq), InsufficientData);
}

TEST(Fit, RandomQuasiPolynomialsAreRecovered) {
    for (std::uint64_t s = 0; s < 60; ++s) {
        PortableRng rng(s);
        const int period = static_cast<int>(rng.uniform(1, 2));
        const int degree = static_cast<int>(rng.uniform(0, 2));
        std::vector<std::vector<std::int64_t>> coeffs(static_cast<std::size_t>(period));
        for (auto& c : coeffs)
            for (int d = 0; d <= degree; ++d)
                c.push_back(rng.uniform(-3, 3));
        auto f = [&](std::int64_t n) {
            const auto& c = coeffs[static_cast<std::size_t>(n % period)];
            std::int64_t acc = 0;
            for (auto it = c.rbegin(); it != c.rend(); ++it)
                acc = acc * n + *it;
            return acc;
        };
        auto pts = from_fn(1, 30, f);
        auto fit = fit_of(pts);
        EXPECT_LE(fit.period, period);
        EXPECT_LE(fit.degree, degree);
        EXPECT_EQ(fit.stable_degree, 1);
        expect_reproduces(fit, pts);
    }
}

TEST(Recurrence, BinomialTwo) {
    auto rec = detect_recurrence(from_fn(2, 12, [](auto n) { return n * (n - 1) / 2; }));
    ASSERT_TRUE(rec);
    EXPECT_EQ(rec->order, 3);
    const Polynomial x_minus_1{Rational(-1), Rational(1)};
    EXPECT_EQ(rec->characteristic(), x_minus_1 * x_minus_1 * x_minus_1);
}

TEST(Recurrence, FloorHalf) {
    auto rec = detect_recurrence(from_fn(2, 12, [](auto n) { return n / 2; }));
    ASSERT_TRUE(rec);
    EXPECT_EQ(rec->order, 3);
    const Polynomial one_minus_t{Rational(1), Rational(-1)};
    const Polynomial one_plus_t{Rational(1), Rational(1)};
    EXPECT_EQ(rec->denominator(), one_minus_t * one_minus_t * one_plus_t);
    // a(n) = a(n-1) + a(n-2) - a(n-3)
    EXPECT_EQ(rec->coefficients, (std::vector<Rational>{1, 1, -1}));
}

TEST(Recurrence, AllZeroIsOrderZero) {
    auto rec = detect_recurrence(from_fn(0, 8, [](auto) { return 0; }));
    ASSERT_TRUE(rec);
    EXPECT_EQ(rec->order, 0);
    EXPECT_EQ(rec->denominator().to_string("t"), "1");
}

TEST(Recurrence, TransientMovesCutoff) {
    auto rec = detect_recurrence(from_fn(1, 14, [](auto n) { return n < 4 ? 7 : 2 * n; }));
    ASSERT_TRUE(rec);
    EXPECT_EQ(rec->order, 2);
    EXPECT_EQ(rec->cutoff, 4);
}

TEST(Recurrence, HoldsOnConfirmedWindow) {
    for (std::uint64_t s = 0; s < 30; ++s) {
        PortableRng rng(100 + s);
        std::vector<std::int64_t> v{rng.uniform(0, 5), rng.uniform(0, 5)};
        const auto c1 = rng.uniform(-2, 2), c2 = rng.uniform(-2, 2);
        while (v.size() < 14)
            v.push_back(c1 * v[v.size() - 1] + c2 * v[v.size() - 2]);
        auto pts = points_from(0, v);
        auto rec = detect_recurrence(pts);
        ASSERT_TRUE(rec);
        EXPECT_LE(rec->order, 2);
        const auto L = static_cast<std::size_t>(rec->order);
        for (std::size_t t = static_cast<std::size_t>(rec->cutoff) + L; t < v.size(); ++t) {
            Rational acc = 0;
            for (std::size_t i = 1; i <= L; ++i)
                acc += rec->coefficients[i - 1] * v[t - i];
            EXPECT_EQ(acc, Rational(v[t]));
        }
    }
}

TEST(Trends, Kneser2) {
    auto fit = fit_of(from_fn(2, 12, [](auto n) { return n - 1; }));
    auto r = check_trends(family(FamilyName::kneser2), fit);
    EXPECT_TRUE(r.bounded.holds);
    EXPECT_TRUE(r.polynomial.holds);
    EXPECT_TRUE(r.polynomial.applicable);
    EXPECT_TRUE(r.quadratic.holds);
}

TEST(Trends, Johnson2) {
    auto fit = fit_of(from_fn(2, 12, [](auto n) { return n / 2; }));
    auto r = check_trends(family(FamilyName::johnson2), fit);
    EXPECT_TRUE(r.bounded.holds);
    EXPECT_EQ(r.period, 2);
    EXPECT_FALSE(r.polynomial.applicable);
}

TEST(Trends, JohnsonUnionShiftedHasPeriodOne) {
    const auto c = family(FamilyName::johnson_union_shifted);
    auto seq = scan_alpha(c, 2, 12);
    for (const auto& row : seq.rows)
        EXPECT_EQ(row.alpha, row.n);
    auto fit = fit_quasi_polynomial(seq);
    ASSERT_TRUE(fit);
    EXPECT_EQ(fit->period, 1);
    EXPECT_TRUE(has_johnson_orbit(c));
    auto r = check_trends(c, *fit);
    EXPECT_TRUE(r.bounded.holds);
    EXPECT_FALSE(r.polynomial.applicable);
}

TEST(Trends, QuadraticViolationIsReported) {
    ClassificationGraph bare{{{"P", OrbitKind::pair}}, {}, {}};
    auto fit = fit_of(from_fn(2, 12, [](auto n) { return n - 1; }));
    auto r = check_trends(bare, fit);
    EXPECT_FALSE(r.quadratic.holds);
    EXPECT_STREQ(verdict_text(r.quadratic), "VIOLATED");
    EXPECT_EQ(to_json(r)["trend3_quadratic"]["verdict"], "VIOLATED");
}

TEST(Formula, Examples) {
    EXPECT_EQ(kneser_union_alpha_formula(2, 3, 7), 15);
    EXPECT_EQ(kneser_union_alpha_formula(4, 1, 2), 2);
    EXPECT_EQ(kneser_union_alpha_formula(2, 2, 6), 6);
    EXPECT_EQ(kneser_union_alpha_formula(2, 2, 9), 8);
    EXPECT_THROW(kneser_union_alpha_formula(2, 3, 5), Unsupported);
    EXPECT_THROW(kneser_union_alpha_formula(2, 2, 1), Unsupported);
    EXPECT_THROW(kneser_union_alpha_formula(0, 2, 4), Unsupported);
}

TEST(Formula, AgreesWithSolverOnSmallInstances) {
    for (int k = 1; k <= 3; ++k)
        for (int r = 1; r <= 3; ++r)
            for (int n = 0; n <= 7; ++n) {
                const int alpha = max_independent_set(build_kneser_union(k, r, n)).alpha;
                try {
                    EXPECT_EQ(kneser_union_alpha_formula(k, r, n), alpha)
                        << "k=" << k << " r=" << r << " n=" << n;
                } catch (const Unsupported&) {
                    EXPECT_TRUE((r == 2 && n < 2) || (r >= 3 && n < 2 * r));
                }
            }
}

TEST(PartitionBound, Examples) {
    EXPECT_EQ(partition_alpha_bound(2, 3), 3);
    EXPECT_EQ(partition_alpha_bound(3, 2), 0);
    EXPECT_EQ(partition_alpha_bound(2, 6), 5);
}

TEST(PartitionBound, MatchesBruteForce) {
    for (int r = 1; r <= 3; ++r)
        for (int m = 0; m <= 8; ++m) {
            auto g = build_kneser_union(1, r, m);
            const int alpha = g.size() <= exhaustive_limit ? alpha_bruteforce(g)
                                                           : max_independent_set(g).alpha;
            EXPECT_EQ(partition_alpha_bound(r, m), alpha) << "r=" << r << " m=" << m;
        }
}

TEST(Lemmas, ExampleValuesAndSweep) {
    EXPECT_EQ(binomial(3, 3) + binomial(5, 2), 11);
    EXPECT_EQ(binomial(7, 2), 21);
    EXPECT_EQ(2 * binomial(5, 2), 20);
    EXPECT_EQ(binomial(9, 2), 36);
    auto rep = verify_binomial_lemmas(10, 60);
    EXPECT_TRUE(rep.ok());
    EXPECT_GT(rep.checks_small_plus_large, 0);
    EXPECT_EQ(rep.checks_doubling, 8);
    EXPECT_GT(rep.checks_large_pair, 0);
}

TEST(Polynomial, InterpolationAndText) {
    std::vector<std::pair<Rational, Rational>> pts{{1, 0}, {2, 1}, {3, 3}};
    auto p = Polynomial::interpolate(pts);
    EXPECT_EQ(p.to_string(), "n^2/2 - n/2");
    EXPECT_EQ(p(10), Rational(45));
    EXPECT_EQ(Polynomial{}.to_string(), "0");
    EXPECT_EQ((Polynomial{Rational(-1), Rational(1)}).to_string(), "n - 1");
    EXPECT_EQ((Polynomial{Rational(0), Rational(-2)}).to_string(), "-2n");
}

TEST(Polynomial, Binomials) {
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(5, 7), 0);
    EXPECT_EQ(binomial(60, 30).str(), "118264581564861424");
}
