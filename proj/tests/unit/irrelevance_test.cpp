#include "bed/examples.hpp"
#include "bed/irrelevance.hpp"

#include <gtest/gtest.h>

using namespace bed;

namespace {

struct Chart3 {
    Fixture f = build_fixture("CHART3");
    const Category& C = *f.cat;
    const Doctrine& d = *f.doc;
    int one = C.object("1"), B = C.object("B"), Q = C.object("Q");
    int bang = C.arrow("B>1:*,*");
    int q1 = C.arrow("Q>B:b1,b1,b2,b2"), q2 = C.arrow("Q>B:b1,b2,b1,b2");
};

} // namespace

TEST(Rbp, OverTheWeakCone)
{
    Chart3 c;
    const Cone wb{c.B, {c.bang, c.bang}};
    EXPECT_TRUE(is_rbp(c.d, wb, c.d.at(c.B).index("{}")));
    EXPECT_TRUE(is_rbp(c.d, wb, c.d.at(c.B).index("{b1,b2}")));
    auto w = rbp_counterexample(c.d, wb, c.d.at(c.B).index("{b1}"));
    ASSERT_TRUE(w);
    EXPECT_EQ(c.C.arr_name(w->first), "1>B:b1");
    EXPECT_EQ(c.C.arr_name(w->second), "1>B:b2");
    // Q is a strict product, so everything over it is rbp
    const Cone sq{c.Q, {c.q1, c.q2}};
    for (int b = 0; b < c.d.at(c.Q).size(); ++b) EXPECT_TRUE(is_rbp(c.d, sq, b));
}

TEST(Rbp, EqualityIsRbpEverywhere)
{
    for (const auto& n : fixture_names()) {
        auto f = build_fixture(n);
        for (const auto& [p, e] : *f.eq) EXPECT_TRUE(is_rbp(*f.doc, p, e)) << n << " " << f.cat->cone_name(p);
    }
}

TEST(PiElements, Diagrams)
{
    Chart3 c;
    const Cone wb{c.B, {c.bang, c.bang}};
    EXPECT_GT(count_pi_diagrams(c.C, wb), 0);
    EXPECT_FALSE(enumerate_pi_diagrams(c.C, wb, 5).empty());
    auto pi = pi_elements(c.d, *c.f.eq, wb);
    ASSERT_EQ(pi.elements.size(), 2u);
    EXPECT_EQ(c.d.elem(c.B, pi.elements[0]), "{}");
    EXPECT_EQ(c.d.elem(c.B, pi.elements[1]), "{b1,b2}");

    const Cone sq{c.Q, {c.q1, c.q2}};
    EXPECT_EQ(count_pi_diagrams(c.C, sq), 0); // would need a weak product of (Q,Q)
    auto all = pi_elements(c.d, *c.f.eq, sq);
    EXPECT_TRUE(all.by_strict_rule);
    EXPECT_EQ(all.elements.size(), 16u);

    const int bangQ = c.C.arrow("Q>1:*,*,*,*");
    EXPECT_THROW(pi_elements(c.d, *c.f.eq, Cone{c.Q, {bangQ, bangQ}}), ChartTooShallow);
}

TEST(StrictFiber, Chart3)
{
    Chart3 c;
    auto s11 = strict_fiber(c.d, *c.f.eq, {c.one, c.one});
    EXPECT_EQ(s11.size(), 2);
    EXPECT_EQ(s11.cones.size(), 2u);
    EXPECT_EQ(s11.skipped.size(), 1u);
    const Cone wb{c.B, {c.bang, c.bang}};
    const Cone hub{c.one, {c.C.id(c.one), c.C.id(c.one)}};
    EXPECT_EQ(s11.hub(), hub);
    EXPECT_EQ(transport(c.d, s11, wb, hub, c.d.at(c.B).index("{b1,b2}")), c.d.at(c.one).index("{*}"));
    EXPECT_THROW(transport(c.d, s11, wb, hub, c.d.at(c.B).index("{b1}")), PreconditionError);

    auto sbb = strict_fiber(c.d, *c.f.eq, {c.B, c.B});
    EXPECT_EQ(sbb.size(), 16);
    EXPECT_THROW(strict_fiber(c.d, *c.f.eq, {c.Q, c.Q}), ChartTooShallow);
}

TEST(StrictFiber, RbpCoincidesWithPi)
{
    for (const char* n : {"CHART3", "CHART3-PSI"}) {
        auto f = build_fixture(n);
        auto r = check_rbp_pi_coincide(*f.doc, *f.eq);
        EXPECT_FALSE(r.failed()) << n << "\n" << r.text();
        EXPECT_GT(r.count(Verdict::pass), 0);
    }
    auto f = build_fixture("NOCOMP");
    EXPECT_FALSE(check_rbp_pi_coincide(*f.doc, *f.eq).notes.empty());
}
