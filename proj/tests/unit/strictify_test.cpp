#include "bed/examples.hpp"
#include "bed/strictify.hpp"

#include <gtest/gtest.h>

using namespace bed;

TEST(ProductCompletion, HomCounts)
{
    auto f = build_fixture("CHART3");
    const Category& C = *f.cat;
    ProductCompletion pc(f.cat, 2);
    const int one = C.object("1"), B = C.object("B"), Q = C.object("Q");
    EXPECT_EQ(pc.objects().size(), 12u);
    EXPECT_EQ(pc.hom({B, B}, {B}).size(), 8u);
    EXPECT_EQ(pc.hom_size({B, B}, {B}), 8);
    EXPECT_EQ(pc.hom({B}, {B, B}).size(), 16u);
    EXPECT_EQ(pc.hom({one, Q}, {B}).size(), 18u);
}

TEST(ProductCompletion, CompositionIsAssociative)
{
    auto f = build_fixture("CHART3");
    const Category& C = *f.cat;
    ProductCompletion pc(f.cat, 2);
    const int one = C.object("1"), B = C.object("B");
    auto fs = pc.hom({B}, {one, B});
    auto gs = pc.hom({one, B}, {B, B});
    auto hs = pc.hom({B, B}, {B});
    for (const auto& x : fs)
        for (const auto& y : gs)
            for (size_t k = 0; k < hs.size(); k += 3)
                EXPECT_EQ(compose_list_arrows(C, hs[k], compose_list_arrows(C, y, x)),
                          compose_list_arrows(C, compose_list_arrows(C, hs[k], y), x));
    auto p = pairing(C, projection(C, {one}, {B}, 1), projection(C, {one}, {B}, 0));
    EXPECT_EQ(p.tgt, (ListObject{B, one}));
    EXPECT_EQ(compose_list_arrows(C, projection(C, {B}, {one}, 0), p), projection(C, {one}, {B}, 1));
}

TEST(Strictification, Chart3Sub)
{
    auto f = build_fixture("CHART3");
    const Category& C = *f.cat;
    Strictification s(*f.doc, *f.eq, 2);
    const int one = C.object("1"), B = C.object("B");
    ASSERT_NE(s.calculus().fiber({one, one}), nullptr);
    EXPECT_EQ(s.calculus().fiber({one, one})->size(), 2);
    EXPECT_EQ(s.calculus().fiber({B, B})->size(), 16);
    EXPECT_EQ(s.lists().lists.size(), 9u);
    EXPECT_EQ(s.lists().R.cat().num_arrows(), 5312);
    auto r = check_strictification(s);
    EXPECT_FALSE(r.failed()) << r.text();
    EXPECT_EQ(r.count(Verdict::fail), 0);
    EqualityAssignment induced;
    auto rt = roundtrip_biased(s.lists(), &induced);
    EXPECT_FALSE(rt.failed()) << rt.text();
    EXPECT_EQ(induced, *f.eq);
}

TEST(Strictification, Chart3Psi)
{
    auto f = build_fixture("CHART3-PSI");
    Strictification s(*f.doc, *f.eq, 2);
    auto r = check_strictification(s);
    EXPECT_FALSE(r.failed()) << r.text();
    auto rt = roundtrip_biased(s.lists());
    EXPECT_FALSE(rt.failed()) << rt.text();
}

TEST(Strictification, BoxEqualityAtLengthFour)
{
    for (const char* n : {"TRIV", "CHAIN2"}) {
        auto f = build_fixture(n);
        Strictification s(*f.doc, *f.eq, 4);
        auto r = check_strictification(s);
        EXPECT_FALSE(r.failed()) << n << "\n" << r.text();
        long box = 0;
        for (const auto& c : r.checks)
            if (c.name == "box-equality" && c.verdict == Verdict::pass) ++box;
        EXPECT_GT(box, 0) << n;
    }
}

TEST(Strictification, OutOfBoundIsReported)
{
    auto f = build_fixture("TRIV");
    Strictification s(*f.doc, *f.eq, 2);
    auto r = check_strictification(s);
    EXPECT_GT(r.count(Verdict::out_of_bound), 0);
    EXPECT_THROW(delta_list(s, {0, 0}), PreconditionError);
}

TEST(Strictification, ExistentialTransfer)
{
    for (const char* n : {"TRIV", "CHAIN2", "CHART3", "NONEX"}) {
        auto f = build_fixture(n);
        Strictification s(*f.doc, *f.eq, 2);
        auto r = existential_transfer(*f.doc, *f.eq, s);
        EXPECT_FALSE(r.failed()) << n << "\n" << r.text();
    }
}

TEST(Strictification, LazyBoxEquality)
{
    auto f = build_fixture("CHART3");
    Strictification s(*f.doc, *f.eq, 2);
    auto r = box_equality_report(s.calculus(), 4);
    EXPECT_FALSE(r.failed()) << r.text();
    EXPECT_EQ(r.count(Verdict::pass), 3) << r.text(); // [1],[1], [1],[B] and [B],[1]; [B,B,B,B] has no internal product
}
