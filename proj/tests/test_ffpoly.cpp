#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "cycind/ffpoly.hpp"

using namespace cycind;

namespace
{

Poly P(const Field& F, const std::string& s)
{
    return parse_poly(F, s);
}

// Irreducibility by trial division against every monic polynomial of
// degree 1..deg/2; independent of the Rabin test in the library.
bool irreducible_by_division(const Field& F, const Poly& f)
{
    for (int d = 1; 2 * d <= f.degree(); ++d)
        for (auto& g : enumerate_monic(F, d))
            if (poly::rem(F, f, g).c.empty())
                return false;
    return true;
}

} // namespace

TEST(Field, ArithmeticTablesAreConsistent)
{
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 25u}) {
        Field F(q);
        for (Elem a = 0; a < q; ++a) {
            EXPECT_EQ(F.add(a, F.neg(a)), 0u);
            if (a) {
                EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
                EXPECT_EQ(F.pow(a, q - 1), 1u);
            }
            for (Elem b = 0; b < q; ++b)
                EXPECT_EQ(F.mul(a, b), F.mul(b, a));
        }
        std::set<Elem> powers;
        for (std::uint32_t i = 0; i + 1 < q; ++i)
            powers.insert(F.exp(i));
        EXPECT_EQ(powers.size(), q - 1) << "generator does not generate F_" << q;
    }
}

TEST(Field, RejectsNonPrimePowers)
{
    EXPECT_THROW(Field(6), DomainError);
    EXPECT_THROW(Field(1), DomainError);
    EXPECT_THROW(Field(12), DomainError);
}

TEST(Irreducibles, SmallLists)
{
    Field F2(2);
    auto one = enumerate_monic_irreducibles(F2, 1);
    ASSERT_EQ(one.size(), 2u);
    EXPECT_EQ(one[0], P(F2, "0,1"));
    EXPECT_EQ(one[1], P(F2, "1,1"));
    auto two = enumerate_monic_irreducibles(F2, 2);
    ASSERT_EQ(two.size(), 1u);
    EXPECT_EQ(two[0], P(F2, "1,1,1"));
    EXPECT_EQ(enumerate_monic_irreducibles(Field(3), 2).size(), 3u);
}

TEST(Irreducibles, CountExamples)
{
    EXPECT_EQ(irreducible_count(2, 1, true), 1);
    EXPECT_EQ(irreducible_count(2, 1, false), 2);
    EXPECT_EQ(irreducible_count(2, 2, true), 1);
    EXPECT_EQ(irreducible_count(3, 4, true), 18);
}

TEST(Irreducibles, CountMatchesEnumerationAndTrialDivision)
{
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        Field F(q);
        for (int m = 1; m <= 6; ++m) {
            if (std::pow(double(q), m) > 2e5)
                continue;
            auto list = enumerate_monic_irreducibles(F, m);
            EXPECT_EQ(Integer(static_cast<unsigned long>(list.size())), irreducible_count(q, m, false))
                << "q=" << q << " m=" << m;
            EXPECT_TRUE(std::is_sorted(list.begin(), list.end()));
            if (m <= 4 && q <= 5) {
                std::size_t brute = 0;
                for (auto& f : enumerate_monic(F, m))
                    brute += irreducible_by_division(F, f);
                EXPECT_EQ(brute, list.size()) << "q=" << q << " m=" << m;
            }
        }
    }
}

TEST(Irreducibles, MonicCountIsQToTheD)
{
    for (std::uint32_t q : {2u, 3u, 4u})
        for (int d = 1; d <= 4; ++d)
            EXPECT_EQ(enumerate_monic(Field(q), d).size(), std::size_t(std::pow(q, d)));
}

TEST(Irreducibles, BudgetIsEnforced)
{
    Budgets b;
    b.poly_enumeration = 100;
    EXPECT_THROW(enumerate_monic_irreducibles(Field(3), 5, b), BudgetExceeded);
}

TEST(Involutions, TildeExamples)
{
    Field F4(4);
    Elem w = F4.generator();
    Poly lin = Poly::linear(F4, F4.neg(w)); // z + w
    EXPECT_EQ(tilde(F4, 2, lin), lin);
    Poly zm1 = Poly::linear(F4, 1);
    EXPECT_EQ(tilde(F4, 2, zm1), zm1);
    Poly f({w, 1, 1}); // z^2 + z + w
    EXPECT_EQ(tilde(F4, 2, tilde(F4, 2, f)), f);
}

TEST(Involutions, BarExamples)
{
    Field F3(3);
    EXPECT_EQ(bar(F3, P(F3, "2,1")), P(F3, "2,1"));
    EXPECT_EQ(bar(F3, P(F3, "1,1")), P(F3, "1,1"));
    EXPECT_EQ(bar(F3, P(F3, "1,0,1")), P(F3, "1,0,1"));
    // bar(z - a) = z - 1/a
    Field F7(7);
    for (Elem a = 1; a < 7; ++a)
        EXPECT_EQ(bar(F7, Poly::linear(F7, a)), Poly::linear(F7, F7.inv(a)));
}

TEST(Involutions, RejectZeroConstant)
{
    Field F3(3);
    EXPECT_THROW(bar(F3, P(F3, "0,1")), DomainError);
    EXPECT_THROW(tilde(Field(4), 2, Poly::monomial(1)), DomainError);
}

TEST(Involutions, InvolutiveAndMultiplicative)
{
    for (std::uint32_t q : {2u, 3u}) {
        Field F(q * q);
        std::vector<Poly> irr;
        for (int m = 1; m <= 2; ++m)
            for (auto& f : enumerate_monic_irreducibles(F, m))
                if (f.constant())
                    irr.push_back(f);
        for (std::size_t i = 0; i < irr.size(); ++i) {
            EXPECT_EQ(tilde(F, q, tilde(F, q, irr[i])), irr[i]);
            for (std::size_t j = i; j < irr.size() && j < i + 4; ++j) {
                Poly prod = poly::mul(F, irr[i], irr[j]);
                EXPECT_EQ(tilde(F, q, prod), poly::mul(F, tilde(F, q, irr[i]), tilde(F, q, irr[j])));
                Poly triple = poly::mul(F, prod, irr[(i + j) % irr.size()]);
                EXPECT_EQ(tilde(F, q, triple), poly::mul(F, tilde(F, q, prod), tilde(F, q, irr[(i + j) % irr.size()])));
            }
        }
    }
    for (std::uint32_t q : {3u, 5u}) {
        Field F(q);
        std::vector<Poly> irr;
        for (int m = 1; m <= 3; ++m)
            for (auto& f : enumerate_monic_irreducibles(F, m))
                if (f.constant())
                    irr.push_back(f);
        for (std::size_t i = 0; i < irr.size(); ++i) {
            EXPECT_EQ(bar(F, bar(F, irr[i])), irr[i]);
            for (std::size_t j = i; j < irr.size() && j < i + 4; ++j)
                EXPECT_EQ(bar(F, poly::mul(F, irr[i], irr[j])), poly::mul(F, bar(F, irr[i]), bar(F, irr[j])));
        }
    }
}

TEST(Involutions, SelfDualCounts)
{
    EXPECT_EQ(self_tilde_count(2, 1), 3);
    EXPECT_EQ(self_tilde_count(2, 2), 0);
    EXPECT_EQ(self_tilde_count(2, 3), 2);
    EXPECT_EQ(self_bar_count(3, 1), 2);
    EXPECT_EQ(self_bar_count(3, 2), 1);
    EXPECT_EQ(self_bar_count(5, 2), 2);
    EXPECT_THROW(self_bar_count(4, 2), DomainError);
    Field F5(5);
    auto sb = enumerate_self_bar(F5, 2);
    ASSERT_EQ(sb.size(), 2u);
    EXPECT_EQ(sb[0], P(F5, "1,1,1"));
    EXPECT_EQ(sb[1], P(F5, "1,4,1"));
}

TEST(Involutions, SelfDualCountsMatchFiltering)
{
    // count fixed points of the involution over the full irreducible list
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        Field F(q * q);
        for (int m = 1; m <= 6; ++m) {
            if (std::pow(double(q * q), m) > 3e5)
                continue;
            std::size_t fixed = 0;
            for (auto& f : enumerate_monic_irreducibles(F, m))
                if (f.constant() && tilde(F, q, f) == f)
                    ++fixed;
            EXPECT_EQ(Integer(static_cast<unsigned long>(fixed)), self_tilde_count(q, m)) << "q=" << q << " m=" << m;
            EXPECT_EQ(enumerate_self_tilde(F, q, m).size(), fixed);
        }
    }
    for (std::uint32_t q : {3u, 5u}) {
        Field F(q);
        for (int m = 1; m <= 6; ++m) {
            std::size_t fixed = 0;
            for (auto& f : enumerate_monic_irreducibles(F, m))
                if (f.constant() && bar(F, f) == f)
                    ++fixed;
            EXPECT_EQ(Integer(static_cast<unsigned long>(fixed)), self_bar_count(q, m)) << "q=" << q << " m=" << m;
            EXPECT_EQ(enumerate_self_bar(F, m).size(), fixed);
        }
    }
}

TEST(Factor, Examples)
{
    Field F2(2), F3(3);
    auto a = factor(F2, P(F2, "0,1,1"));
    ASSERT_EQ(a.size(), 2u);
    EXPECT_EQ(a[0].poly, P(F2, "0,1"));
    EXPECT_EQ(a[1].poly, P(F2, "1,1"));
    auto b = factor(F2, P(F2, "1,0,1"));
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b[0].poly, P(F2, "1,1"));
    EXPECT_EQ(b[0].multiplicity, 2);
    auto c = factor(F3, P(F3, "1,0,1"));
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].multiplicity, 1);
}

TEST(Factor, ProductRoundTrip)
{
    Field F(3);
    for (auto& f : enumerate_monic(F, 4)) {
        Poly prod = Poly::monomial(0);
        for (auto& fac : factor(F, f)) {
            EXPECT_TRUE(is_irreducible(F, fac.poly));
            prod = poly::mul(F, prod, poly::pow(F, fac.poly, fac.multiplicity));
        }
        EXPECT_EQ(prod, f);
    }
}

TEST(RootOrder, Examples)
{
    EXPECT_EQ(polys_with_root_order(4, 1, 3), 2);
    EXPECT_EQ(polys_with_root_order(3, 2, 4), 1);
    EXPECT_EQ(polys_with_root_order(7, 1, 1), 1);
    EXPECT_THROW(polys_with_root_order(3, 2, 5), DomainError);
    EXPECT_EQ(nt::totient(Integer(10)), 4);
    EXPECT_EQ(nt::totient(Integer(1)), 1);
    EXPECT_EQ(nt::totient(Integer(97) * 97 * 3), 97 * 96 * 2);
}

TEST(RootOrder, MatchesBruteForce)
{
    // count irreducibles of degree n whose root order is exactly N
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        Field F(q);
        for (int n = 1; n <= 3; ++n) {
            Integer M = ipow(Integer(q), n) - 1;
            for (auto d : nt::divisors(M.get_ui())) {
                Integer N = static_cast<unsigned long>(d);
                if (nt::multiplicative_order(Integer(q), N) != std::uint64_t(n))
                    continue;
                // roots of order N: N divides q^n - 1, so each such phi divides z^N - 1
                Poly zN = poly::sub(F, Poly::monomial(N.get_si()), Poly::monomial(0));
                std::size_t count = 0;
                for (auto& f : enumerate_monic_irreducibles(F, n)) {
                    if (!f.constant() || !poly::rem(F, zN, f).c.empty())
                        continue;
                    bool smaller = false;
                    for (auto e : nt::divisors(d))
                        if (e < d) {
                            Poly ze = poly::sub(F, Poly::monomial(static_cast<int>(e)), Poly::monomial(0));
                            smaller = smaller || poly::rem(F, ze, f).c.empty();
                        }
                    count += !smaller;
                }
                EXPECT_EQ(Integer(static_cast<unsigned long>(count)), polys_with_root_order(q, n, N))
                    << "q=" << q << " n=" << n << " N=" << N;
            }
        }
    }
}

TEST(Serialization, PolynomialRoundTrip)
{
    Field F2(2), F9(9);
    EXPECT_EQ(to_string(F2, P(F2, "1,1,1")), "1,1,1");
    for (auto& f : enumerate_monic_irreducibles(F9, 2))
        EXPECT_EQ(parse_poly(F9, to_string(F9, f)), f);
    EXPECT_THROW(parse_poly(F2, "1,x"), DomainError);
    EXPECT_THROW(parse_poly(F9, "[0 1 2],1"), DomainError);
}
