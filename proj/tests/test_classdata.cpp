#include <gtest/gtest.h>

#include <set>

#include "cycind/classdata.hpp"

using namespace cycind;

namespace
{

GroupId G(Family f, int n, std::uint32_t q)
{
    return GroupId{f, n, q};
}

Integer size_sum(const std::vector<ClassEntry>& cl)
{
    Integer s = 0;
    for (auto& c : cl)
        s += c.size;
    return s;
}

ClassDatum single(const Poly& phi, const Partition& l)
{
    ClassDatum d;
    d.data[phi] = l;
    return d;
}

ClassDatum signed_single(const Poly& phi, const SignedPartition& s)
{
    ClassDatum d;
    d.signed_data[phi] = s;
    return d;
}

} // namespace

TEST(GroupOrder, Examples)
{
    EXPECT_EQ(group_order(G(Family::GL, 2, 2)), 6);
    EXPECT_EQ(group_order(G(Family::U, 2, 2)), 18);
    EXPECT_EQ(group_order(G(Family::Ominus, 2, 3)), 8);
    EXPECT_EQ(group_order(G(Family::Oplus, 2, 3)), 4);
    EXPECT_EQ(group_order(G(Family::Sp, 2, 3)), 24);
    EXPECT_EQ(group_order(G(Family::Mat, 2, 3)), 81);
    EXPECT_EQ(group_order(G(Family::Oplus, 3, 3)), 48);
}

TEST(GroupOrder, RejectsBadParameters)
{
    EXPECT_THROW(group_order(G(Family::Sp, 3, 3)), DomainError);
    EXPECT_THROW(group_order(G(Family::Sp, 2, 4)), DomainError);
    EXPECT_THROW(group_order(G(Family::Oplus, 3, 2)), DomainError);
    EXPECT_THROW(group_order(G(Family::GL, 2, 6)), DomainError);
}

TEST(Validate, Examples)
{
    auto g = G(Family::GL, 2, 2);
    Field F = g.field();
    EXPECT_TRUE(validate(single(parse_poly(F, "1,1"), Partition({2})), g));

    ClassDatum bad;
    bad.data[parse_poly(F, "0,1")] = Partition({1});
    bad.data[parse_poly(F, "1,1")] = Partition({1});
    auto v = validate(bad, g);
    EXPECT_FALSE(v);
    EXPECT_EQ(v.reason, "λ_z nonempty");

    auto sp = G(Family::Sp, 2, 3);
    Field F3 = sp.field();
    SignedPartition odd{SignKind::Symplectic, Partition({1}), {}};
    auto w = validate(signed_single(z_minus_one(F3), odd), sp);
    EXPECT_FALSE(w);
    EXPECT_NE(w.reason.find("odd multiplicity"), std::string::npos) << w.reason;
}

TEST(Validate, InvolutionAndDegreeRules)
{
    auto g = G(Family::U, 1, 3);
    Field F = g.field();
    // z - a with a of norm != 1 is not self-tilde: needs its partner too
    Poly lin;
    for (Elem a = 1; a < F.q(); ++a)
        if (tilde(F, 3, Poly::linear(F, a)) != Poly::linear(F, a)) {
            lin = Poly::linear(F, a);
            break;
        }
    auto v = validate(single(lin, Partition({1})), g);
    EXPECT_FALSE(v);
    auto g2 = G(Family::GL, 3, 2);
    EXPECT_FALSE(validate(single(z_minus_one(g2.field()), Partition({2})), g2));
}

TEST(ClassSize, Transvections)
{
    for (std::uint32_t q : {2u, 3u, 4u, 5u})
        for (int n = 2; n <= 4; ++n) {
            auto g = G(Family::GL, n, q);
            std::vector<int> parts(n - 1, 1);
            parts[0] = 2;
            Integer Q = q;
            Integer expect = (ipow(Q, n) - 1) * (ipow(Q, n - 1) - 1) / (Q - 1);
            EXPECT_EQ(class_size(single(z_minus_one(g.field()), Partition(parts)), g), expect) << g.name();
        }
    auto u = G(Family::U, 2, 2);
    EXPECT_EQ(class_size(single(z_minus_one(u.field()), Partition({2})), u), 3);
}

TEST(ClassSize, SymplecticTransvectionsSplit)
{
    for (std::uint32_t q : {3u, 5u})
        for (int n = 1; n <= 3; ++n) {
            auto g = G(Family::Sp, 2 * n, q);
            Field F = g.field();
            Integer expect = (ipow(Integer(q), 2 * n) - 1) / 2;
            for (const char* sign : {"+", "-"}) {
                std::string text = std::string("[") + sign + "2";
                for (int i = 0; i < 2 * n - 2; ++i)
                    text += ",1";
                text += "]";
                auto sp = parse_signed_partition(SignKind::Symplectic, text);
                EXPECT_EQ(class_size(signed_single(z_minus_one(F), sp), g), expect) << g.name() << " " << text;
            }
        }
}

TEST(ClassSize, OrthogonalSymmetries)
{
    // -1 eigenspace of dimension one: the two classes fill q^{n-1}
    for (std::uint32_t q : {3u, 5u})
        for (int n : {3, 5}) {
            auto g = G(Family::Oplus, n, q);
            Field F = g.field();
            Integer total = 0;
            for (int s : {1, -1}) {
                ClassDatum d;
                d.signed_data[z_minus_one(F)] = SignedPartition{SignKind::Orthogonal, Partition::rectangle(1, n - 1), {{1, s}}};
                d.signed_data[z_plus_one(F)] = SignedPartition{SignKind::Orthogonal, Partition({1}), {{1, s}}};
                if (validate(d, g))
                    total += class_size(d, g);
            }
            EXPECT_EQ(total, ipow(Integer(q), n - 1)) << g.name();
        }
}

TEST(Enumerate, Examples)
{
    auto gl = enumerate_classes(G(Family::GL, 2, 2));
    ASSERT_EQ(gl.size(), 3u);
    std::multiset<Integer> sizes;
    for (auto& c : gl)
        sizes.insert(c.size);
    EXPECT_EQ(sizes, (std::multiset<Integer>{1, 2, 3}));
    auto sp = enumerate_classes(G(Family::Sp, 2, 3));
    EXPECT_EQ(sp.size(), 7u);
    EXPECT_EQ(size_sum(sp), 24);
    EXPECT_EQ(size_sum(enumerate_classes(G(Family::Mat, 2, 2))), 16);
}

TEST(Enumerate, PartitionOfUnity)
{
    std::vector<GroupId> groups;
    for (int n = 0; n <= 4; ++n)
        groups.push_back(G(Family::GL, n, 2));
    for (int n = 1; n <= 3; ++n) {
        groups.push_back(G(Family::GL, n, 3));
        groups.push_back(G(Family::Mat, n, 2));
        groups.push_back(G(Family::U, n, 2));
        groups.push_back(G(Family::U, n, 3));
    }
    groups.push_back(G(Family::GL, 2, 4));
    groups.push_back(G(Family::Mat, 2, 3));
    for (int n = 2; n <= 6; n += 2)
        groups.push_back(G(Family::Sp, n, 3));
    groups.push_back(G(Family::Sp, 4, 5));
    for (int n = 1; n <= 5; ++n) {
        groups.push_back(G(Family::Oplus, n, 3));
        groups.push_back(G(Family::Ominus, n, 3));
    }
    groups.push_back(G(Family::Oplus, 4, 5));
    groups.push_back(G(Family::Ominus, 3, 5));
    for (auto& g : groups) {
        auto cl = enumerate_classes(g);
        Integer order = group_order(g);
        EXPECT_EQ(size_sum(cl), order) << g.name();
        for (auto& c : cl) {
            EXPECT_GT(c.centralizer, 0);
            EXPECT_GT(c.size, 0);
            if (g.family != Family::Mat) {
                EXPECT_EQ(order % c.size, 0);
            }
            EXPECT_TRUE(validate(c.datum, g)) << g.name() << " " << validate(c.datum, g).reason;
            EXPECT_EQ(class_size(c.datum, g), c.size);
        }
    }
}

TEST(Enumerate, UnipotentMassIsSylowSquared)
{
    for (auto g : {G(Family::GL, 3, 2), G(Family::GL, 3, 3), G(Family::U, 3, 2), G(Family::U, 4, 2),
                   G(Family::Sp, 4, 3), G(Family::Sp, 6, 3), G(Family::Oplus, 4, 3), G(Family::Ominus, 4, 3),
                   G(Family::Oplus, 5, 3), G(Family::Ominus, 5, 3)}) {
        Integer s = sylow_order(g);
        EXPECT_EQ(unipotent_mass(enumerate_classes(g), g.field()), s * s) << g.name();
    }
}

TEST(Enumerate, BudgetIsEnforced)
{
    Budgets b;
    b.poly_enumeration = 10;
    EXPECT_THROW(enumerate_classes(G(Family::GL, 4, 3), b), BudgetExceeded);
}

TEST(Witt, GroupLaw)
{
    for (std::uint64_t q : {3u, 5u}) {
        auto types = {WittType::zero(), WittType::one(), WittType::delta(), WittType::omega()};
        for (auto a : types) {
            EXPECT_EQ(witt_add(a, WittType::zero(), q), a);
            for (auto b : types) {
                EXPECT_EQ(witt_add(a, b, q), witt_add(b, a, q));
                for (auto c : types)
                    EXPECT_EQ(witt_add(witt_add(a, b, q), c, q), witt_add(a, witt_add(b, c, q), q));
            }
        }
        EXPECT_EQ(witt_add(WittType::omega(), WittType::omega(), q), WittType::zero());
    }
    EXPECT_THROW(witt_add(WittType::one(), WittType::one(), 4), DomainError);
}

TEST(Witt, DatumAssignment)
{
    for (int n = 1; n <= 5; ++n)
        for (int s : {1, -1}) {
            ClassDatum id;
            id.signed_data[z_minus_one(Field(3))] = SignedPartition{SignKind::Orthogonal, Partition::rectangle(1, n), {{1, s}}};
            EXPECT_EQ(witt_type_of_datum(id, 3), WittType::of_orthogonal(n, s));
        }
    Field F(3);
    ClassDatum sym;
    sym.signed_data[z_minus_one(F)] = parse_signed_partition(SignKind::Orthogonal, "[+1,1]");
    sym.signed_data[z_plus_one(F)] = parse_signed_partition(SignKind::Orthogonal, "[+1]");
    EXPECT_EQ(witt_type_of_datum(sym, 3).group_sign(), 1);
    EXPECT_EQ(witt_type_of_datum(sym, 3).parity, 1);
    EXPECT_TRUE(validate(sym, G(Family::Oplus, 3, 3)));
    EXPECT_FALSE(validate(sym, G(Family::Ominus, 3, 3)));
}
