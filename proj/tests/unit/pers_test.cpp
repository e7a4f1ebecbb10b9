#include "bed/pers.hpp"

#include <gtest/gtest.h>

using namespace bed;

TEST(Pers, Chart3)
{
    auto f = build_fixture("CHART3");
    const Category& C = *f.cat;
    EXPECT_EQ(internal_pers(C).size(), 43u);
    const int B = C.object("B"), Q = C.object("Q");
    Per bad{B, B, C.id(B), C.arrow("B>B:b1,b1")};
    EXPECT_TRUE(per_violation(C, bad).has_value());

    auto ws = weak_subobjects(f.cat);
    Relations R(ws.doc, ws.eq, 2);
    EXPECT_EQ(per_to_rel(R, ws, {B, B, C.id(B), C.id(B)}), (PEquivRel{B, R.delta(B)}));
    const Per full{B, Q, C.arrow("Q>B:b1,b1,b2,b2"), C.arrow("Q>B:b1,b2,b1,b2")};
    const PEquivRel rf = per_to_rel(R, ws, full);
    EXPECT_EQ(rf.rel, R.square(B).classes.top());
    EXPECT_EQ(per_to_rel(R, ws, rel_to_per(R, ws, rf)), rf);
    EXPECT_THROW(per_to_rel(R, ws, bad), PreconditionError);
    EXPECT_EQ(coequalizer(C, full.r1, full.r2), C.arrow("B>1:*,*"));

    auto r = per_report(f.cat);
    EXPECT_FALSE(r.failed()) << r.text();
}

TEST(ExactCompletion, Chart3MatchesTheCompletionOfPsi)
{
    auto f = build_fixture("CHART3");
    auto ex = exact_completion(*f.cat);
    EXPECT_EQ(ex.cat->num_objects(), 43);
    EXPECT_EQ(ex.cat->num_arrows(), 3049);
    EXPECT_TRUE(ex.cat->check_laws().empty());
    EXPECT_EQ(iso_classes(*ex.cat).reps.size(), 2u);

    auto g = build_fixture("CHART3-PSI");
    Relations R(*g.doc, *g.eq, 2);
    auto qc = quotient_completion(R);
    auto e = find_equivalence(*ex.cat, qc.doc.cat());
    ASSERT_EQ(e.status, Equivalence::Status::found) << e.reason;
    EXPECT_TRUE(verify_equivalence(*ex.cat, qc.doc.cat(), e).empty());
}

TEST(ExactCompletion, Terminal)
{
    auto f = build_fixture("TRIV");
    auto ex = exact_completion(*f.cat);
    EXPECT_EQ(ex.cat->num_objects(), 1);
    EXPECT_EQ(ex.cat->num_arrows(), 1);
}

TEST(ConeFunctors, Chart3)
{
    auto f = build_fixture("CHART3");
    const Category& C = *f.cat;
    const int one = C.object("1"), B = C.object("B");
    Report r;
    auto cf = cone_functors(f.cat, {one, one}, &r);
    ASSERT_EQ(cf.size(), 3u);
    EXPECT_EQ(cf[0].classes.size(), 1u);
    EXPECT_FALSE(r.failed()) << r.text();
    EXPECT_EQ(r.count(Verdict::chart_too_shallow), 2);

    Report r2;
    auto bb = cone_functors(f.cat, {B, B}, &r2);
    EXPECT_FALSE(r2.failed()) << r2.text();
    ASSERT_FALSE(bb.empty());
    EXPECT_EQ(bb[0].classes.size(), 15u);
    EXPECT_EQ(bb[0].pi.size(), 16u);
}
