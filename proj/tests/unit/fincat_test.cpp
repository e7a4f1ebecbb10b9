#include "bed/examples.hpp"

#include <gtest/gtest.h>

using namespace bed;

namespace {

RawCategory arrow_category()
{
    RawCategory r;
    r.objects = {"a", "b"};
    r.arrows = {{"ia", "a", "a"}, {"ib", "b", "b"}, {"f", "a", "b"}};
    r.identities = {{"a", "ia"}, {"b", "ib"}};
    r.compose = {{"ia", "ia", "ia"}, {"ib", "ib", "ib"}, {"f", "ia", "f"}, {"ib", "f", "f"}};
    return r;
}

} // namespace

TEST(Category, BuildAndValidate)
{
    Diagnostics diag;
    auto c = build_category(arrow_category(), diag);
    ASSERT_TRUE(c) << diag.front();
    EXPECT_EQ(c->num_arrows(), 3);
    EXPECT_TRUE(c->check_laws().empty());
    EXPECT_EQ(c->compose(c->arrow("ib"), c->arrow("f")), c->arrow("f"));
    EXPECT_EQ(c->compose(c->arrow("f"), c->arrow("f")), -1);

    auto bad = arrow_category();
    bad.arrows.push_back({"g", "b", "a"}); // g.f and f.g left undefined
    EXPECT_FALSE(validate_category(bad).empty());
    bad = arrow_category();
    bad.compose.pop_back(); // identity composites are implicit
    EXPECT_TRUE(validate_category(bad).empty());
    bad = arrow_category();
    bad.arrows.push_back({"f", "b", "a"});
    EXPECT_FALSE(validate_category(bad).empty());
    bad = arrow_category();
    std::get<2>(bad.compose[2]) = "ia";
    EXPECT_FALSE(validate_category(bad).empty());
}

TEST(Category, Chart3Cones)
{
    auto f = build_fixture("CHART3");
    const Category& C = *f.cat;
    const int one = C.object("1"), B = C.object("B"), Q = C.object("Q");
    const int bang = C.arrow("B>1:*,*");
    EXPECT_EQ(classify_cone(C, {B, {bang, bang}}), ConeClass::weak_only);
    const int q1 = C.arrow("Q>B:b1,b1,b2,b2"), q2 = C.arrow("Q>B:b1,b2,b1,b2");
    EXPECT_EQ(classify_cone(C, {Q, {q1, q2}}), ConeClass::strict);
    EXPECT_EQ(classify_cone(C, {Q, {q1, q1}}), ConeClass::not_weak);

    const auto& wp = C.weak_products({one, one});
    ASSERT_EQ(wp.size(), 3u);
    EXPECT_EQ(C.obj_name(wp[0].first.apex), "1");
    EXPECT_EQ(wp[0].second, ConeClass::strict);
    EXPECT_EQ(C.obj_name(wp[1].first.apex), "B");
    EXPECT_EQ(wp[1].second, ConeClass::weak_only);
    EXPECT_EQ(C.obj_name(wp[2].first.apex), "Q");
    EXPECT_EQ(wp[2].second, ConeClass::weak_only);
    EXPECT_TRUE(C.weak_products({Q, Q}).empty());

    EXPECT_EQ(fill_ins(C, {B, {bang, bang}}, one, {C.id(one), C.id(one)}).size(), 2u);
    EXPECT_EQ(classify_weak_pullback(C, bang, bang, q1, q2), ConeClass::strict);
    EXPECT_EQ(classify_weak_pullback(C, bang, bang, C.id(B), C.id(B)), ConeClass::not_weak);
}

TEST(Category, SlicesAndReflection)
{
    auto f = build_fixture("CHART3");
    const Category& C = *f.cat;
    auto s = slice_category(C, C.object("B"));
    EXPECT_EQ(s.cat.num_objects(), 22);
    EXPECT_TRUE(s.cat.check_laws().empty());
    EXPECT_TRUE(validate_functor(s.cat, C, s.forget).empty());
    auto over1 = slice_category(C, C.object("1"));
    EXPECT_EQ(poset_reflection(over1.cat).poset.size(), 1);
}

TEST(Category, Equivalences)
{
    auto f = build_fixture("PREORDER-DUP");
    auto iso = iso_classes(*f.cat);
    EXPECT_EQ(iso.reps.size(), 3u); // x and y are isomorphic
    auto g = build_fixture("CHAIN2");
    auto e = find_equivalence(*f.cat, *g.cat);
    EXPECT_EQ(e.status, Equivalence::Status::absent);
    auto self = find_equivalence(*f.cat, *f.cat);
    ASSERT_EQ(self.status, Equivalence::Status::found);
    EXPECT_TRUE(verify_equivalence(*f.cat, *f.cat, self).empty());
}
