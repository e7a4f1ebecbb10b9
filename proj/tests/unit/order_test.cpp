#include "bed/order.hpp"

#include <gtest/gtest.h>

using namespace bed;

namespace {

// preimage along {b1,b2} -> {*}, as a map Sub(1) -> Sub(B)
Map preimage_bang(const Lattice& SB)
{
    return {SB.index("{}"), SB.index("{b1,b2}")};
}

} // namespace

TEST(Semilattice, PowersetValidates)
{
    Lattice P = powerset({"a", "b", "c", "d"});
    RawSemilattice raw;
    raw.elements = P.names();
    for (int a = 0; a < P.size(); ++a)
        for (int b = 0; b < P.size(); ++b)
            if (P.leq(a, b)) raw.leq.push_back({P.name(a), P.name(b)});
    EXPECT_TRUE(validate_semilattice(raw).empty());
    Diagnostics diag, notes;
    auto l = build_lattice(raw, diag, &notes);
    ASSERT_TRUE(l);
    EXPECT_EQ(l->size(), 16);
    EXPECT_FALSE(notes.empty());
    EXPECT_EQ(*l, P);
}

TEST(Semilattice, RejectsBadInput)
{
    // a vee has no meet of its two tops
    RawSemilattice vee{{"a", "b", "c"}, {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"c", "a"}, {"c", "b"}}, std::nullopt, {}};
    EXPECT_FALSE(validate_semilattice(vee).empty());
    RawSemilattice cyc{{"a", "b"}, {{"a", "a"}, {"b", "b"}, {"a", "b"}, {"b", "a"}}, std::nullopt, {}};
    EXPECT_FALSE(validate_semilattice(cyc).empty());
    RawSemilattice wrong_meet{{"0", "1"}, {{"0", "0"}, {"1", "1"}, {"0", "1"}}, std::string("1"), {{{"0", "1"}, "1"}}};
    EXPECT_FALSE(validate_semilattice(wrong_meet).empty());
}

TEST(Semilattice, Glb)
{
    Lattice P = powerset({"b1", "b2"});
    EXPECT_EQ(P.glb("{b1}", "{b2}"), P.index("{}"));
    EXPECT_EQ(P.top(), P.index("{b1,b2}"));
    EXPECT_EQ(P.bottom(), P.index("{}"));
}

TEST(Maps, PreimageAndImage)
{
    Lattice S1 = powerset({"*"}), SB = powerset({"b1", "b2"});
    Map pre = preimage_bang(SB);
    EXPECT_TRUE(is_meet_preserving(S1, SB, pre));

    // direct image Sub(B) -> Sub(1) is monotone but loses the meet of {b1} and {b2}
    Map img(SB.size());
    for (int s = 0; s < SB.size(); ++s) img[s] = s == SB.index("{}") ? S1.index("{}") : S1.index("{*}");
    EXPECT_TRUE(is_monotone(SB, S1, img));
    EXPECT_FALSE(is_meet_preserving(SB, S1, img));

    auto L = left_adjoint(S1, SB, pre);
    ASSERT_TRUE(L);
    EXPECT_EQ(*L, img);

    auto R = right_adjoint(S1, SB, pre);
    ASSERT_TRUE(R);
    for (int s = 0; s < SB.size(); ++s)
        EXPECT_EQ((*R)[s], s == SB.top() ? S1.index("{*}") : S1.index("{}")) << SB.name(s);
}

TEST(Maps, ChainAdjoints)
{
    Lattice C = chain(2);
    Map top{1, 1};
    auto L = left_adjoint(C, C, top);
    ASSERT_TRUE(L);
    EXPECT_EQ(*L, (Map{0, 0}));
    EXPECT_FALSE(left_adjoint(C, C, Map{0, 0})); // misses the top
    EXPECT_FALSE(right_adjoint(C, C, top));      // misses the bottom
    auto G = right_adjoint(C, C, Map{0, 0});
    ASSERT_TRUE(G);
    EXPECT_EQ(*G, (Map{1, 1}));
    EXPECT_EQ(compose(identity_map(C), top), top);
}
