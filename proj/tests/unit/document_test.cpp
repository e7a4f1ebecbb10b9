#include "bed/cli.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace bed;

namespace {

std::string read(const std::string& name)
{
    std::ifstream f(std::string(BED_SOURCE_DIR) + "/tests/data/" + name);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

std::optional<Resolved> load(const std::string& text, std::vector<SourceError>& errors)
{
    auto p = parse_document(text);
    errors = p.errors;
    if (!p.doc) return std::nullopt;
    return resolve(*p.doc, errors);
}

} // namespace

TEST(Document, InlineTrivialDoctrine)
{
    std::vector<SourceError> errors;
    auto r = load(read("triv.bed"), errors);
    ASSERT_TRUE(r) << to_string(errors.front());
    EXPECT_EQ(r->cat->num_objects(), 1);
    EXPECT_EQ(r->cat->num_arrows(), 1);
    ASSERT_TRUE(r->doc && r->eq && r->strict);
    EXPECT_EQ(r->eq->size(), 1u);
    EXPECT_FALSE(check_biased_elementary(*r->doc, *r->eq).failed());
    EXPECT_FALSE(check_strict_elementary(*r->doc, *r->strict).failed());
}

TEST(Document, RoundTrip)
{
    for (const char* f : {"triv.bed", "chart3_eq.bed", "chain2_bad.bed"}) {
        auto p = parse_document(read(f));
        ASSERT_TRUE(p.doc) << f;
        const std::string once = print_document(*p.doc);
        auto q = parse_document(once);
        ASSERT_TRUE(q.doc) << f;
        EXPECT_EQ(print_document(*q.doc), once) << f;
    }
}

TEST(Document, ImportWithEquality)
{
    std::vector<SourceError> errors;
    auto r = load(read("chart3_eq.bed"), errors);
    ASSERT_TRUE(r) << to_string(errors.front());
    EXPECT_EQ(r->name, "CHART3");
    EXPECT_EQ(r->options.at("max-len"), "2");
    auto f = build_fixture("CHART3");
    EXPECT_EQ(*r->eq, *f.eq);

    // a different element overrides the fixture's choice
    std::string text = read("chart3_eq.bed");
    text.replace(text.find("{11,22}"), 7, "{11,12}");
    r = load(text, errors);
    ASSERT_TRUE(r);
    EXPECT_NE(*r->eq, *f.eq);
    EXPECT_TRUE(check_biased_elementary(*r->doc, *r->eq).failed());
}

TEST(Document, UnknownElementIsNamed)
{
    std::vector<SourceError> errors;
    auto r = load(read("chain2_bad.bed"), errors);
    EXPECT_FALSE(r);
    ASSERT_FALSE(errors.empty());
    EXPECT_EQ(errors.front().line, 12);
    EXPECT_NE(errors.front().message.find("'one'"), std::string::npos) << errors.front().message;
}

TEST(Document, SyntaxErrorsAreLocated)
{
    auto p = parse_document("[category]\nobject 1\narrow f : 1 1\n[fiber 1]\n[fiber 1]\nwhat\n");
    EXPECT_FALSE(p.doc);
    ASSERT_EQ(p.errors.size(), 3u);
    EXPECT_EQ(p.errors[0].line, 3);
    EXPECT_EQ(p.errors[1].line, 5);
    EXPECT_NE(p.errors[1].message.find("duplicate"), std::string::npos);
    EXPECT_EQ(p.errors[2].line, 6);
    EXPECT_EQ(p.errors[2].column, 1);
}

TEST(Document, ResolutionErrors)
{
    std::vector<SourceError> errors;
    EXPECT_FALSE(load("import CHART3\n[category]\nobject 1\n", errors));
    EXPECT_FALSE(load("import NOPE\n", errors));
    EXPECT_NE(errors.front().message.find("NOPE"), std::string::npos);
    // not a weak product
    EXPECT_FALSE(load("import CHART3\n[cone p]\napex B\nlegs B>B:b1,b1 B>B:b1,b1\n", errors));
    EXPECT_NE(errors.front().message.find("not a weak product"), std::string::npos);
    std::string triv = read("triv.bed");
    EXPECT_FALSE(load(triv + "e = 1\n", errors));
    EXPECT_NE(errors.front().message.find("unknown cone 'e'"), std::string::npos);
    // the equality must cover every weak product over (X,X)
    std::string two = triv;
    two.replace(two.find("object 1"), 8, "object 1 2\narrow id2 : 2 -> 2\nidentity 2 id2");
    two.replace(two.find("[cone d]"), 8, "[fiber 2]\nelement 1\n[cone d]");
    EXPECT_FALSE(load(two, errors));
    EXPECT_NE(errors.front().message.find("no equality for the weak product (2;id2,id2)"), std::string::npos)
        << errors.front().message;
}

TEST(Cli, Dispatch)
{
    auto r = resolve_fixture("CHART3");
    RunOptions o;
    o.feet = {"1", "1"};
    auto rep = run("pi", r, o);
    EXPECT_EQ(exit_status(rep), 0);
    bool two = false;
    for (const auto& c : rep.checks) two = two || (c.name == "classes" && c.witness == "2 classes");
    EXPECT_TRUE(two) << rep.text();

    rep = run("check-biased", r, {});
    EXPECT_EQ(exit_status(rep), 0);
    EXPECT_EQ(rep.title, "check-biased");

    rep = run("exact-compare", r, {});
    EXPECT_EQ(exit_status(rep), 0) << rep.text();
    ASSERT_FALSE(rep.checks.empty());
    EXPECT_EQ(rep.checks.front().name, "equivalence found");

    EXPECT_THROW(run("nope", r, {}), InputError);
    EXPECT_THROW(run("commute-slice", r, {}), InputError);
    o.feet = {"Z"};
    EXPECT_THROW(run("pi", r, o), InputError);
    EXPECT_EQ(commands().size(), 15u);
}

TEST(Cli, ModuleErrorsBecomeVerdicts)
{
    auto r = resolve_fixture("NOCOMP");
    auto rep = run("lift", r, {});
    EXPECT_EQ(rep.count(Verdict::premise_failure), 1) << rep.text();
    EXPECT_EQ(exit_status(rep), 0);

    auto c3 = resolve_fixture("CHART3");
    RunOptions o;
    o.feet = {"Q", "Q"};
    rep = run("pi", c3, o);
    EXPECT_GT(rep.count(Verdict::chart_too_shallow), 0) << rep.text();
}
