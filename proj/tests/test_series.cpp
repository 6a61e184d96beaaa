#include <random>

#include <gtest/gtest.h>

#include <charvar/series.hpp>

#include "test_util.hpp"

using namespace charvar;
using namespace testutil;

namespace
{

// exp of a series with zero constant term: m E_m = sum_{k=1}^m k U_k E_{m-k}.
template <typename Ring>
std::vector<Ring> exp_oracle(const std::vector<Ring> &u, const Ring &one)
{
    std::vector<Ring> e(u.size(), one * Rational(0));
    e[0] = one;
    for (std::size_t m = 1; m < u.size(); ++m) {
        Ring acc = one * Rational(0);
        for (std::size_t k = 1; k <= m; ++k) {
            acc = acc + (u[k] * e[m - k]) * Rational(static_cast<long>(k));
        }
        e[m] = acc * Rational(1, static_cast<long>(m));
    }
    return e;
}

FactoredFraction F(const SparsePoly &p)
{
    return FactoredFraction(p);
}

// exp(sum_n sum_r (1/r) psi_r[V_n] T^{nr}) truncated after T^nmax.
std::vector<FactoredFraction> reassemble(Flavor flavor, const std::vector<FactoredFraction> &v, int nmax)
{
    const VarContext ctx = flavor_context(flavor);
    std::vector<FactoredFraction> u(static_cast<std::size_t>(nmax) + 1, FactoredFraction(ctx));
    for (int n = 1; n <= nmax; ++n) {
        for (int r = 1; n * r <= nmax; ++r) {
            u[static_cast<std::size_t>(n * r)] += adams_substitute(v[static_cast<std::size_t>(n - 1)], r, flavor) * Rational(1, r);
        }
    }
    return exp_oracle(u, FactoredFraction::one(ctx));
}

const char *h2_genus3 = "t^12*q^12 + t^12*q^10 + 6*t^11*q^10 + t^12*q^8 + t^10*q^10 + 6*t^11*q^8 + 16*t^10*q^8"
                     " + 6*t^9*q^8 + t^10*q^6 + t^8*q^8 + 26*t^9*q^6 + 16*t^8*q^6 + 6*t^7*q^6 + t^8*q^4"
                     " + t^6*q^6 + 6*t^7*q^4 + 16*t^6*q^4 + 6*t^5*q^4 + t^4*q^4 + t^4*q^2 + 6*t^3*q^2"
                     " + t^2*q^2 + 1";

} // namespace

TEST(SeriesLog, LogOfOnePlusA)
{
    const Rational a(3, 5);
    const auto u = log_coefficients(std::vector<Rational>{Rational(1), a, Rational(0)});
    EXPECT_EQ(u, (std::vector<Rational>{Rational(0), a, -a * a / 2}));
}

TEST(SeriesLog, LogOfOnePlusSymbol)
{
    const auto ctx = VarContext::q();
    const TruncatedSeries s(Flavor::E, 2, {FactoredFraction::one(ctx), F(Pq("q")), FactoredFraction(ctx)});
    const auto u = series_log(s);
    EXPECT_TRUE(u[0].is_zero());
    EXPECT_TRUE(equivalent(u[1], F(Pq("q"))));
    EXPECT_TRUE(equivalent(u[2], F(Pq("-1/2*q^2"))));
}

TEST(SeriesLog, LogOfTruncatedExp)
{
    const auto u = log_coefficients(std::vector<Rational>{Rational(1), Rational(1), Rational(1, 2), Rational(1, 6)});
    EXPECT_EQ(u, (std::vector<Rational>{Rational(0), Rational(1), Rational(0), Rational(0)}));
}

TEST(SeriesLog, ConstantTermMustBeOne)
{
    EXPECT_THROW(log_coefficients(std::vector<Rational>{Rational(2), Rational(1)}), constant_term_not_one);
    EXPECT_THROW(series_log(TruncatedSeries(Flavor::E, 2, {F(Pq("1 + q")), F(Pq("q"))})), constant_term_not_one);
}

TEST(SeriesLog, ExpRoundTripRationals)
{
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7), ord(1, 6);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Rational> s{Rational(1)};
        const int order = ord(rng);
        for (int m = 1; m <= order; ++m) {
            s.emplace_back(num(rng), den(rng));
            s.back().canonicalize();
        }
        EXPECT_EQ(exp_oracle(log_coefficients(s), Rational(1)), s);
    }
}

TEST(SeriesLog, ExpRoundTripFractions)
{
    std::mt19937 rng(32);
    for (const VarContext &ctx : {VarContext::q(), VarContext::qt()}) {
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<FactoredFraction> s{FactoredFraction::one(ctx)};
            for (int m = 1; m <= 4; ++m) {
                s.push_back(random_fraction(rng, ctx));
            }
            const auto back = exp_oracle(log_coefficients(s), FactoredFraction::one(ctx));
            for (std::size_t m = 0; m < s.size(); ++m) {
                EXPECT_TRUE(equivalent(back[m], s[m])) << m;
            }
        }
    }
}

TEST(RhsSeries, EGenusTwoOrderOne)
{
    const auto s = rhs_series(Flavor::E, 2, 1);
    ASSERT_EQ(s.order(), 1);
    EXPECT_TRUE(equivalent(s[0], FactoredFraction::one(VarContext::q())));
    EXPECT_TRUE(equivalent(s[1], F(Pq("1 - 2*q + q^2"))));
}

TEST(RhsSeries, OrderZeroIsOne)
{
    for (int g = 0; g <= 3; ++g) {
        const auto s = rhs_series(Flavor::QT, g, 0);
        ASSERT_EQ(s.order(), 0);
        EXPECT_TRUE(equivalent(s[0], FactoredFraction::one(VarContext::qt())));
    }
}

TEST(RhsSeries, EGenusTwoWeightTwo)
{
    const SparsePoly h2 = Pq("1 - q^2") * Pq("1 - q");
    const SparsePoly h11 = Pq("q^-1") * Pq("1 - q^2") * Pq("1 - q");
    EXPECT_TRUE(equivalent(rhs_series(Flavor::E, 2, 2)[2], F(h2 * h2 + h11 * h11)));
}

TEST(RhsSeries, CoefficientsAreHookSums)
{
    for (Flavor fl : {Flavor::E, Flavor::QT, Flavor::XY, Flavor::Pure}) {
        const auto s = rhs_series(fl, 2, 3);
        EXPECT_EQ(s.order(), 3);
        for (int m = 0; m <= 3; ++m) {
            FactoredFraction sum(flavor_context(fl));
            for (const auto &l : partitions_of(m)) {
                sum += hook_term(fl, 2, l);
            }
            EXPECT_TRUE(equivalent(s[m], sum));
        }
    }
}

TEST(ExtractV, EFirst)
{
    for (int g = 0; g <= 3; ++g) {
        const auto v = extract_V(Flavor::E, g, 1);
        ASSERT_EQ(v.size(), 1u);
        EXPECT_TRUE(equivalent(v[0], FactoredFraction::power_of(Pq("1 - q"), 2 * g - 2))) << g;
    }
}

TEST(ExtractV, QtFirstGenusOne)
{
    const auto v = extract_V(Flavor::QT, 1, 1);
    const FactoredFraction want(pow(Pqt("1 + q*t"), 2), {Pqt("1 - q*t^2"), Pqt("1 - q")});
    EXPECT_TRUE(equivalent(v[0], want));
}

TEST(ExtractV, ReassemblyReproducesRhs)
{
    struct Case {
        Flavor fl;
        int g, nmax;
    };
    for (const Case c : {Case{Flavor::E, 2, 4}, Case{Flavor::E, 0, 4}, Case{Flavor::QT, 2, 4}, Case{Flavor::QT, 3, 3},
                         Case{Flavor::XY, 2, 3}, Case{Flavor::Pure, 2, 4}, Case{Flavor::Pure, 0, 4}}) {
        const auto v = extract_V(c.fl, c.g, c.nmax);
        const auto rebuilt = reassemble(c.fl, v, c.nmax);
        const auto rhs = rhs_series(c.fl, c.g, c.nmax);
        for (int m = 0; m <= c.nmax; ++m) {
            EXPECT_TRUE(equivalent(rebuilt[static_cast<std::size_t>(m)], rhs[m]))
                << flavor_name(c.fl) << " g=" << c.g << " m=" << m;
        }
    }
}

TEST(ExtractV, StableUnderRaisingTruncation)
{
    for (Flavor fl : {Flavor::E, Flavor::QT}) {
        for (int g = 2; g <= 3; ++g) {
            for (int nmax = 1; nmax <= 3; ++nmax) {
                const auto a = extract_V(fl, g, nmax);
                const auto b = extract_V(fl, g, nmax + 1);
                for (int m = 0; m < nmax; ++m) {
                    EXPECT_TRUE(equivalent(a[static_cast<std::size_t>(m)], b[static_cast<std::size_t>(m)]));
                }
            }
        }
    }
}

TEST(ExtractV, RejectsZeroOrder)
{
    EXPECT_THROW(extract_V(Flavor::E, 2, 0), error);
}

TEST(InvariantFromV, RankOneE)
{
    for (int g = 0; g <= 4; ++g) {
        EXPECT_EQ(invariant_from_V(Flavor::E, 1, g, extract_V(Flavor::E, g, 1)[0]), Pq("1")) << g;
    }
}

TEST(InvariantFromV, RankOneQt)
{
    for (int g = 1; g <= 4; ++g) {
        EXPECT_EQ(invariant_from_V(Flavor::QT, 1, g, extract_V(Flavor::QT, g, 1)[0]), Pqt("1")) << g;
    }
}

TEST(InvariantFromV, RankTwoGenusThreeQt)
{
    const auto v = extract_V(Flavor::QT, 3, 2);
    const SparsePoly h = invariant_from_V(Flavor::QT, 2, 3, v[1]);
    EXPECT_EQ(h, Pqt(h2_genus3));
    EXPECT_EQ(h.size(), 23u);
}

TEST(InvariantFromV, NonPolynomialIsReported)
{
    const FactoredFraction bogus(Pqt("1"), {Pqt("1 - q^5*t")});
    EXPECT_THROW(invariant_from_V(Flavor::QT, 2, 3, bogus), not_polynomial);
}

TEST(InvariantFromV, NonIntegerIsReported)
{
    // V_1 = 1/2 (1 - q)^2 at g = 2 gives E_1 = 1/2.
    const FactoredFraction half(Pq("1/2 - q + 1/2*q^2"));
    EXPECT_THROW(invariant_from_V(Flavor::E, 1, 2, half), non_integer_coefficient);
}
