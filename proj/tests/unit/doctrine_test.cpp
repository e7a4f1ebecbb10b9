#include "bed/examples.hpp"

#include <gtest/gtest.h>

using namespace bed;

namespace {

const Check* first_fail(const Report& r)
{
    for (const auto& c : r.checks)
        if (c.verdict == Verdict::fail) return &c;
    return nullptr;
}

// every weak product over (X,X) gets the element named `e`
EqualityAssignment with_delta(const Fixture& f, const std::string& X, const std::string& e)
{
    EqualityAssignment eq = *f.eq;
    const Category& C = *f.cat;
    const int x = C.object(X);
    for (const auto& [p, k] : C.weak_products({x, x})) eq[p] = f.doc->at(p.apex).index(e);
    return eq;
}

Doctrine constant(CategoryPtr cat, const Lattice& l)
{
    Doctrine d;
    d.base = cat;
    d.fiber.assign(cat->num_objects(), l);
    d.reindex.assign(cat->num_arrows(), identity_map(l));
    return d;
}

} // namespace

TEST(Doctrine, SubAndPsiValidate)
{
    for (const char* n : {"CHART3", "CHART3-PSI"}) {
        auto f = build_fixture(n);
        EXPECT_TRUE(validate_doctrine(*f.doc).empty()) << n;
        auto r = check_biased_elementary(*f.doc, *f.eq);
        EXPECT_FALSE(r.failed()) << n << "\n" << r.text();
        EXPECT_FALSE(check_biased_diagonals(*f.doc, *f.eq).failed()) << n;
        EXPECT_FALSE(check_strict_elementary(*f.doc, *f.strict).failed()) << n;
    }
}

TEST(Doctrine, RejectsNonFunctorialReindexing)
{
    auto f = build_fixture("CHART3");
    Doctrine d = *f.doc;
    const int sw = f.cat->arrow("B>B:b2,b1");
    d.reindex[sw] = identity_map(d.at(f.cat->object("B")));
    EXPECT_FALSE(validate_doctrine(d).empty());
}

TEST(Doctrine, FullRelationOnBFailsDescent)
{
    auto f = build_fixture("CHART3");
    auto r = check_biased_elementary(*f.doc, with_delta(f, "B", "{11,12,21,22}"));
    const Check* c = first_fail(r);
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->name, "biased-descent");
    EXPECT_EQ(c->witness, "alpha={b1}");
}

TEST(Doctrine, WrongDeltaOverTheWeakCone)
{
    auto f = build_fixture("CHART3");
    const Category& C = *f.cat;
    const int B = C.object("B"), bang = C.arrow("B>1:*,*");
    EqualityAssignment eq = *f.eq;
    const Cone wb{B, {bang, bang}};
    EXPECT_EQ(f.doc->elem(B, eq.at(wb)), "{b1,b2}");
    eq[wb] = f.doc->at(B).index("{b1}");
    auto r = check_biased_elementary(*f.doc, eq);
    const Check* c = first_fail(r);
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->name, "biased-reflexive");
    EXPECT_NE(c->witness.find("d=1>B:b2"), std::string::npos) << c->witness;
}

TEST(Doctrine, DeriveFromChoice)
{
    auto f = build_fixture("CHART3");
    const Category& C = *f.cat;
    const int one = C.object("1"), B = C.object("B"), Q = C.object("Q");
    ChoiceOfWeakProducts ch;
    ch.product[{one, one}] = Cone{one, {C.id(one), C.id(one)}};
    ch.product[{B, B}] = Cone{Q, {C.arrow("Q>B:b1,b1,b2,b2"), C.arrow("Q>B:b1,b2,b1,b2")}};
    EXPECT_TRUE(validate_choice(C, ch).empty());
    std::map<int, int> delta{{one, f.doc->at(one).index("{*}")}, {B, f.doc->at(Q).index("{11,22}")}};
    auto eq = derive_from_choice(*f.doc, ch, delta);
    EXPECT_EQ(eq, *f.eq);
    const int bang = C.arrow("B>1:*,*");
    EXPECT_EQ(f.doc->elem(B, eq.at(Cone{B, {bang, bang}})), "{b1,b2}");
    EXPECT_FALSE(check_biased_elementary(*f.doc, eq).failed());

    delta[one] = f.doc->at(one).index("{}");
    try {
        derive_from_choice(*f.doc, ch, delta);
        ADD_FAILURE() << "accepted a bottom equality on 1";
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("reflexivity fails at 1"), std::string::npos) << e.what();
    }
}

TEST(Doctrine, StrictFixturesAreBiased)
{
    for (const auto& n : fixture_names()) {
        auto f = build_fixture(n);
        if (!f.strict || check_strict_elementary(*f.doc, *f.strict).failed()) continue;
        ChoiceOfWeakProducts ch{f.strict->product};
        auto eq = derive_from_choice(*f.doc, ch, f.strict->delta);
        EXPECT_FALSE(check_biased_elementary(*f.doc, eq).failed()) << n;
    }
}

TEST(Doctrine, Comprehensions)
{
    auto f = build_fixture("CHART3");
    const Category& C = *f.cat;
    const int B = C.object("B");
    auto fl = comprehension_classify(*f.doc, B, f.doc->at(B).index("{b1}"), C.arrow("1>B:b1"));
    EXPECT_TRUE(fl.is_comprehension);
    EXPECT_TRUE(fl.strict);
    EXPECT_TRUE(fl.full);
    EXPECT_FALSE(comprehension_classify(*f.doc, B, f.doc->at(B).index("{b1}"), C.arrow("1>B:b2")).is_comprehension);
    EXPECT_EQ(comprehension_report(*f.doc).count(Verdict::fail), 0);
    EXPECT_GT(comprehension_report(*build_fixture("NOCOMP").doc).count(Verdict::fail), 0);
}

TEST(Doctrine, ComprehensiveDiagonals)
{
    auto f = build_fixture("CHART3");
    EXPECT_TRUE(has_comprehensive_diagonals_biased(*f.doc, *f.eq));

    Doctrine d = constant(f.cat, chain(1));
    EqualityAssignment eq;
    for (int X = 0; X < f.cat->num_objects(); ++X)
        for (const auto& [p, k] : f.cat->weak_products({X, X})) eq[p] = 0;
    auto w = comprehensive_diagonals_counterexample(d, eq);
    ASSERT_TRUE(w);
    EXPECT_NE(w->find("f=1>B:b1 g=1>B:b2"), std::string::npos) << *w;
}

TEST(Doctrine, Quantifiers)
{
    for (const char* n : {"CHART3", "CHART3-PSI"}) {
        auto f = build_fixture(n);
        EXPECT_FALSE(existential_report(*f.doc, *f.eq).failed()) << n;
    }
    auto sub = build_fixture("CHART3");
    EXPECT_FALSE(universal_report(*sub.doc, *sub.eq).failed());
    EXPECT_FALSE(implicational_report(*sub.doc).failed());
    EXPECT_FALSE(implicational_report(*build_fixture("CHAIN2").doc).failed());
    auto nonex = build_fixture("NONEX");
    EXPECT_TRUE(existential_report(*nonex.doc, *nonex.eq).failed());
}

TEST(Doctrine, NonDistributiveFiberHasNoImplication)
{
    RawSemilattice m3{{"0", "a", "b", "c", "1"}, {}, std::nullopt, {}};
    for (const auto& x : m3.elements) {
        m3.leq.push_back({"0", x});
        m3.leq.push_back({x, "1"});
        m3.leq.push_back({x, x});
    }
    Diagnostics diag;
    auto l = build_lattice(m3, diag);
    ASSERT_TRUE(l) << diag.front();
    auto f = build_fixture("TRIV");
    auto r = implicational_report(constant(f.cat, *l));
    const Check* c = first_fail(r);
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->witness, "alpha=a has no implication");
}

TEST(Doctrine, SliceOverBIsBiasedElementary)
{
    auto f = build_fixture("CHART3");
    auto s = slice_doctrine(*f.doc, *f.eq, f.cat->object("B"));
    EXPECT_EQ(s.doc.cat().num_objects(), 22);
    EXPECT_TRUE(validate_doctrine(s.doc).empty());
    auto r = check_biased_elementary(s.doc, s.eq);
    EXPECT_FALSE(r.failed()) << r.text();
}
