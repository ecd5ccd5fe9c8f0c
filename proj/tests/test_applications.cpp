#include <gtest/gtest.h>

#include <cmath>

#include "cycind/cycle_index.hpp"

using namespace cycind;

TEST(Probability, GL22)
{
    EXPECT_EQ(finite_n_probability(SeriesFamily::GL, 2, 2, Property::Semisimple), Rational(1, 2));
    EXPECT_EQ(finite_n_probability(SeriesFamily::GL, 2, 2, Property::Regular), Rational(5, 6));
    EXPECT_EQ(finite_n_probability(SeriesFamily::GL, 2, 2, Property::RegularSemisimple), Rational(1, 3));
    EXPECT_EQ(finite_n_probability(SeriesFamily::GL, 0, 2, Property::Regular), 1);
}

TEST(Probability, PropertyNames)
{
    for (auto p : {Property::Semisimple, Property::Regular, Property::RegularSemisimple})
        EXPECT_EQ(parse_property(property_name(p)), p);
    EXPECT_EQ(parse_property("rss"), Property::RegularSemisimple);
    EXPECT_THROW(parse_property("nilpotent"), DomainError);
    for (auto k : all_limit_kinds())
        EXPECT_EQ(parse_limit_kind(limit_kind_name(k)), k);
}

TEST(Limits, ClosedValues)
{
    auto rss = limit_probability(LimitKind::RssGL, 2, Rational(1, 1000000));
    EXPECT_TRUE(rss.exact());
    EXPECT_EQ(rss.lower, Rational(1, 2));
    auto reg = limit_probability(LimitKind::RegGL, 2, Rational(1, 1000000));
    EXPECT_EQ(reg.lower, Rational(31, 36));
    auto ss = limit_probability(LimitKind::SsMat, 2, Rational(1, 1000000000));
    EXPECT_NEAR(to_double(ss.midpoint()), 0.3424144112, 1e-9);
    EXPECT_LT(ss.error_bound(), Rational(1, 1000000000));
    EXPECT_THROW(limit_probability(LimitKind::SsGL, 2, Rational(0)), DomainError);
}

TEST(Limits, EnclosureShrinksAndApproachesOneForLargeQ)
{
    for (auto k : all_limit_kinds()) {
        auto coarse = limit_probability(k, 3, Rational(1, 1000));
        auto fine = limit_probability(k, 3, rpow(Integer(10), -12));
        EXPECT_LE(coarse.lower, fine.lower);
        EXPECT_GE(coarse.upper, fine.upper);
        EXPECT_LE(fine.lower, fine.upper);
        // rss and reg limits tend to 1 as q grows; ss tends to 1 as well
        EXPECT_GT(to_double(limit_probability(k, 10007, Rational(1, 1000000)).midpoint()), 0.999);
    }
}

TEST(Limits, FiniteValuesConverge)
{
    // a loose convergence check; the full per-n comparison is in the acceptance run
    for (auto k : all_limit_kinds()) {
        auto lim = limit_probability(k, 2, rpow(Integer(10), -12));
        Rational p = finite_n_probability(limit_family(k), 20, 2, limit_property(k));
        EXPECT_LT(std::abs(to_double(p - lim.midpoint())), 1e-2) << limit_kind_name(k);
    }
}

TEST(Limits, MatrixBounds)
{
    for (std::uint64_t q : {2u, 3u}) {
        double Q = double(q);
        for (int n = 2; n <= 8; ++n) {
            double not_rss = 1 - to_double(finite_n_probability(SeriesFamily::Mat, n, q, Property::RegularSemisimple));
            double not_reg = 1 - to_double(finite_n_probability(SeriesFamily::Mat, n, q, Property::Regular));
            EXPECT_GE(not_rss, 1 / Q - 1 / (Q * Q) - 1 / (Q * Q * Q)) << "n=" << n << " q=" << q;
            EXPECT_GE(not_reg, 1 / (Q * Q * (Q + 1))) << "n=" << n << " q=" << q;
            EXPECT_LE(not_reg, 1 / ((Q * Q - 1) * (Q - 1))) << "n=" << n << " q=" << q;
        }
    }
}

TEST(Gordon, Examples)
{
    auto a = gordon_check(2, 2, 5);
    EXPECT_EQ(a.lhs[5], 2);
    EXPECT_EQ(a.rhs[5], 2);
    auto b = gordon_check(2, 1, 5);
    EXPECT_EQ(b.lhs[0], 1);
    EXPECT_EQ(b.rhs[0], 1);
    EXPECT_TRUE(gordon_check(3, 3, 20).equal());
    EXPECT_THROW(gordon_check(1, 1, 5), DomainError);
    EXPECT_THROW(gordon_check(3, 4, 5), DomainError);
}

TEST(Gordon, AllSmallCases)
{
    for (int k = 2; k <= 4; ++k)
        for (int i = 1; i <= k; ++i)
            EXPECT_TRUE(gordon_check(k, i, 24).equal()) << "k=" << k << " i=" << i;
}

TEST(Gordon, CentralizerForm)
{
    for (int k = 2; k <= 3; ++k)
        for (std::uint64_t q : {2u, 3u}) {
            auto c = gordon_centralizer_check(k, q, 12);
            EXPECT_TRUE(c.ok()) << "k=" << k << " q=" << q;
        }
}

TEST(Charpoly, Examples)
{
    Field F2(2), F3(3);
    EXPECT_EQ(charpoly_count(SeriesFamily::GL, 2, parse_poly(F2, "1,0,1")), 4);
    EXPECT_EQ(charpoly_count(SeriesFamily::GL, 2, parse_poly(F2, "1,1,1")), 2);
    EXPECT_EQ(charpoly_count(SeriesFamily::Sp, 3, parse_poly(F3, "1,0,1")), 6);
    // z^2 + z isn't admissible in a group
    EXPECT_EQ(charpoly_count(SeriesFamily::GL, 2, parse_poly(F2, "0,1,1")), 0);
    EXPECT_EQ(charpoly_count(SeriesFamily::Sp, 3, parse_poly(F3, "1,1")), 0);
    EXPECT_THROW(charpoly_count(SeriesFamily::GL, 2, parse_poly(F2, "1")), DomainError);
}

TEST(Charpoly, SumsToGroupOrder)
{
    for (std::uint64_t q : {2u, 3u})
        for (int n = 1; n <= 3; ++n) {
            Field F(q);
            Rational s = 0;
            for (auto& f : enumerate_monic(F, n))
                s += charpoly_count(SeriesFamily::GL, q, f);
            EXPECT_EQ(s, Rational(orders::gl(n, Integer(q))));
        }
    for (int n = 2; n <= 4; n += 2) {
        Field F(3);
        Rational s = 0;
        for (auto& f : enumerate_monic(F, n))
            s += charpoly_count(SeriesFamily::Sp, 3, f);
        EXPECT_EQ(s, Rational(orders::sp(n, Integer(3))));
    }
    Field F9(9);
    Rational s = 0;
    for (auto& f : enumerate_monic(F9, 2))
        s += charpoly_count(SeriesFamily::U, 3, f);
    EXPECT_EQ(s, Rational(orders::u(2, Integer(3))));
    for (int n = 1; n <= 4; ++n) {
        Field F(3);
        Rational t = 0;
        for (auto& f : enumerate_monic(F, n))
            t += charpoly_count(SeriesFamily::OSum, 3, f);
        EXPECT_EQ(t, 1) << "O n=" << n;
    }
}

TEST(Charpoly, ClosedFormAgreesWithIndex)
{
    for (auto [fam, q, n] : {std::tuple{SeriesFamily::GL, 3u, 3}, std::tuple{SeriesFamily::U, 2u, 3},
                             std::tuple{SeriesFamily::Sp, 3u, 4}, std::tuple{SeriesFamily::OSum, 3u, 4},
                             std::tuple{SeriesFamily::OSum, 5u, 3}}) {
        Field F(fam == SeriesFamily::U ? q * q : q);
        for (auto& f : enumerate_monic(F, n))
            EXPECT_EQ(charpoly_count(fam, q, f), charpoly_count_from_index(fam, q, f))
                << series_family_name(fam) << " " << to_string(F, f);
    }
}

TEST(Charpoly, UnipotentCountIsSylowSquared)
{
    for (auto g : {GroupId{Family::GL, 4, 2}, GroupId{Family::GL, 3, 3}, GroupId{Family::U, 3, 2},
                   GroupId{Family::U, 4, 2}, GroupId{Family::Sp, 4, 3}, GroupId{Family::Sp, 6, 3}}) {
        Field F = g.field();
        Poly f = poly::pow(F, z_minus_one(F), g.n);
        SeriesFamily fam = g.family == Family::GL ? SeriesFamily::GL
                           : g.family == Family::U ? SeriesFamily::U
                                                   : SeriesFamily::Sp;
        Integer s = sylow_order(g);
        EXPECT_EQ(charpoly_count(fam, g.q, f), Rational(s * s)) << g.name();
    }
    for (int n = 1; n <= 6; ++n) {
        Field F(3);
        Poly f = poly::pow(F, z_minus_one(F), n);
        GroupId p{Family::Oplus, n, 3}, m{Family::Ominus, n, 3};
        Integer sp = sylow_order(p), sm = sylow_order(m);
        Rational avg = (frac(sp * sp, group_order(p)) + frac(sm * sm, group_order(m))) / 2;
        EXPECT_EQ(charpoly_count(SeriesFamily::OSum, 3, f), avg) << "O n=" << n;
    }
}

TEST(Jordan, Examples)
{
    EXPECT_EQ(jordan_block_mean(SeriesFamily::GL, 1, 2), 1);
    EXPECT_EQ(jordan_block_mean(SeriesFamily::GL, 1, 3), 1);
    EXPECT_EQ(jordan_block_mean(SeriesFamily::GL, 2, 2), Rational(5, 3));
    EXPECT_EQ(jordan_block_mean(SeriesFamily::U, 1, 2), 1);
    auto rows = jordan_block_means(SeriesFamily::GL, 2, 3);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[2].mean, Rational(44, 21));
    EXPECT_EQ(rows[1].residual, Rational(5, 3) - Rational(3, 2));
    EXPECT_THROW(jordan_block_means(SeriesFamily::GL, 2, 0), DomainError);
}

TEST(Jordan, GrowsLikeLog)
{
    for (auto [fam, q] : {std::pair{SeriesFamily::GL, 2u}, std::pair{SeriesFamily::U, 2u},
                          std::pair{SeriesFamily::Sp, 3u}}) {
        auto rows = jordan_block_means(fam, q, 12);
        for (std::size_t i = 1; i < rows.size(); ++i)
            EXPECT_GT(rows[i].mean, rows[i - 1].mean) << series_family_name(fam);
    }
}

TEST(Weyl, Examples)
{
    auto d = gl_type_distribution(2, 3);
    EXPECT_EQ(d[Partition({2})], Rational(3, 8));
    EXPECT_EQ(symmetric_type_distribution(2)[Partition({2})], Rational(1, 2));
    EXPECT_EQ(weyl_limit_distance(1, 2), 0);
    EXPECT_EQ(weyl_limit_distance(1, 7), 0);
    EXPECT_LT(weyl_limit_distance(2, 101), weyl_limit_distance(2, 3));
    for (int n = 1; n <= 4; ++n) {
        Rational s = 0;
        for (auto& [t, p] : gl_type_distribution(n, 2))
            s += p;
        EXPECT_EQ(s, 1);
        Rational u = 0;
        for (auto& [t, p] : symmetric_type_distribution(n))
            u += p;
        EXPECT_EQ(u, 1);
    }
}

TEST(AverageOrder, Examples)
{
    EXPECT_EQ(avg_order_lower_bound(SeriesFamily::U, 1, 2), 2);
    EXPECT_EQ(avg_order_lower_bound(SeriesFamily::Sp, 2, 3), 1);
    EXPECT_EQ(avg_order_lower_bound(SeriesFamily::U, 2, 2), 1);
    EXPECT_THROW(avg_order_lower_bound(SeriesFamily::GL, 2, 2), DomainError);
    EXPECT_THROW(avg_order_lower_bound(SeriesFamily::Sp, 3, 3), DomainError);
}

TEST(AverageOrder, GrowsWithN)
{
    // the bounds' logarithms grow roughly linearly in n
    for (int n = 1; n <= 6; ++n) {
        double u = to_double(avg_order_lower_bound(SeriesFamily::U, n, 3));
        EXPECT_GE(std::log(u), n * std::log(3.0) - std::log(double(n)) - 1.0) << n;
    }
    for (int h = 1; h <= 4; ++h) {
        double s = to_double(avg_order_lower_bound(SeriesFamily::Sp, 2 * h, 3));
        EXPECT_GT(s, 0);
    }
}
