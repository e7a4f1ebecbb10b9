#include "bed/quotient.hpp"

#include <gtest/gtest.h>

using namespace bed;

namespace {

int class_named(Relations& R, int X, const std::string& n)
{
    const Lattice& S = R.square(X).classes;
    for (int c = 0; c < S.size(); ++c)
        if (S.name(c) == n) return c;
    return -1;
}

bool has_pass(const Report& r, const std::string& name, const std::string& subject)
{
    for (const auto& c : r.checks)
        if (c.name == name && c.subject == subject && c.verdict == Verdict::pass) return true;
    return false;
}

} // namespace

TEST(Relations, EquivalencesOnB)
{
    auto f = build_fixture("CHART3");
    const Category& C = *f.cat;
    Relations R(*f.doc, *f.eq, 2);
    const int B = C.object("B"), one = C.object("1"), Q = C.object("Q");
    EXPECT_FALSE(R.has_square(Q));
    EXPECT_THROW(R.square(Q), ChartTooShallow);
    const int full = class_named(R, B, "{11,12,21,22}");
    const int diag = class_named(R, B, "{11,22}");
    const int upper = class_named(R, B, "{11,12,22}");
    ASSERT_GE(full, 0);
    ASSERT_GE(upper, 0);
    EXPECT_EQ(R.delta(B), diag);
    EXPECT_FALSE(is_p_equiv_rel(R, {B, full}).failed());
    auto r = is_p_equiv_rel(R, {B, upper});
    EXPECT_TRUE(r.failed());
    for (const auto& c : r.checks)
        if (c.verdict == Verdict::fail) EXPECT_EQ(c.name, "symmetry");
    EXPECT_EQ(equivalence_relations(R, B).size(), 2u);
    EXPECT_EQ(equivalence_relations(R, one).size(), 1u);

    const int bang = C.arrow("B>1:*,*");
    EXPECT_EQ(kernel(R, bang), (PEquivRel{B, full}));
    auto q = find_quotient(R, {B, full});
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(q->q, bang);
    auto flags = quotient_flags(R, {B, full}, bang);
    EXPECT_FALSE(flags.failed()) << flags.text();
    EXPECT_TRUE(has_pass(flags, "effective", "B>1:*,*"));
    EXPECT_TRUE(has_pass(flags, "effective-descent", "B>1:*,*"));
    EXPECT_TRUE(has_pass(flags, "stable", "B>1:*,*"));
    EXPECT_THROW(quotient_flags(R, {B, full}, C.id(B)), PreconditionError);
}

TEST(Relations, TransitivityOnTripleList)
{
    auto f = build_fixture("CHART3");
    Relations R(*f.doc, *f.eq, 3);
    const int one = f.cat->object("1");
    auto r = is_p_equiv_rel(R, {one, R.delta(one)});
    EXPECT_FALSE(r.failed()) << r.text();
    bool triple = false;
    for (const auto& c : r.checks) triple = triple || c.subject == "1 (triple list)";
    EXPECT_TRUE(triple);
}

TEST(QuotientCompletion, Chart3)
{
    auto f = build_fixture("CHART3");
    Relations R(*f.doc, *f.eq, 2);
    auto qc = quotient_completion(R);
    const Category& K = qc.doc.cat();
    EXPECT_EQ(K.num_objects(), 3);
    EXPECT_EQ(K.num_arrows(), 14);
    auto r = check_QD(qc, R);
    EXPECT_EQ(r.count(Verdict::fail), 0) << r.text();
    const std::string q = "[B>B:b1,b2]:(B,{11,22})>(B,{11,12,21,22})";
    EXPECT_TRUE(has_pass(r, "quotient", q));
    EXPECT_TRUE(has_pass(r, "effective", q));
    EXPECT_TRUE(has_pass(r, "effective-descent", q));
    EXPECT_TRUE(has_pass(r, "stable", q));
}

TEST(QuotientCompletion, AllComprehensionCompleteFixtures)
{
    for (const auto& n : fixture_names()) {
        auto f = build_fixture(n);
        if (!f.doc || !f.eq || comprehension_report(*f.doc).count(Verdict::fail) > 0) continue;
        Relations R(*f.doc, *f.eq, 2);
        auto qc = quotient_completion(R);
        auto r = check_QD(qc, R);
        EXPECT_EQ(r.count(Verdict::fail), 0) << n << "\n" << r.text();
    }
}

TEST(LeftCovering, UnitOfTheCompletion)
{
    auto f = build_fixture("CHART3");
    Relations R(*f.doc, *f.eq, 2);
    auto qc = quotient_completion(R);
    auto t = completion_target(qc, R);
    auto lc = is_left_covering(R, t, qc.J);
    EXPECT_FALSE(lc.failed()) << lc.text();
    EXPECT_EQ(lc.count(Verdict::premise_failure), 0);
    auto mc = morphism_classify(R, t, qc.J);
    EXPECT_FALSE(mc.failed()) << mc.text();
    auto L = lift_left_covering(R, qc, t, qc.J);
    EXPECT_FALSE(L.report.failed()) << L.report.text();
    EXPECT_GT(L.report.count(Verdict::pass), 0);
    for (int o = 0; o < qc.doc.cat().num_objects(); ++o) EXPECT_GE(L.quotient[o], 0);
}

TEST(LeftCovering, PremiseFailureWithoutComprehensions)
{
    auto f = build_fixture("NOCOMP");
    Relations R(*f.doc, *f.eq, 2);
    auto qc = quotient_completion(R);
    auto t = completion_target(qc, R);
    auto lc = is_left_covering(R, t, qc.J);
    EXPECT_GT(lc.count(Verdict::premise_failure), 0);
    EXPECT_THROW(lift_left_covering(R, qc, t, qc.J), PreconditionError);
}

TEST(SetTarget, RegularEpis)
{
    auto f = build_fixture("FINSET4");
    const Category& C = *f.cat;
    for (int u = 0; u < C.num_arrows(); ++u) {
        bool surjective = true;
        std::vector<int> hit(f.chart->elements[C.tgt(u)].size());
        for (int v : f.chart->fn[u]) hit[v] = 1;
        for (int h : hit) surjective = surjective && h;
        EXPECT_EQ(is_regular_epi(C, u), surjective) << C.arr_name(u);
    }
}

TEST(Slices, CommuteOverB)
{
    auto f = build_fixture("CHART3");
    auto r = slice_quotient_commute(*f.doc, *f.eq, f.cat->object("B"), 2);
    EXPECT_FALSE(r.failed()) << r.text();
    EXPECT_TRUE(has_pass(r, "equivalence-found", "8 vs 8 objects"));
    EXPECT_TRUE(has_pass(r, "N-after-M-identity", "completion of the slice"));
}

TEST(Slices, NonExistentialIsPremiseFailure)
{
    auto f = build_fixture("NONEX");
    auto r = slice_quotient_commute(*f.doc, *f.eq, 0, 2);
    EXPECT_FALSE(r.failed());
    EXPECT_EQ(r.count(Verdict::premise_failure), 1);
}
