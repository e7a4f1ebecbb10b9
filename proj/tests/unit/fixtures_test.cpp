#include "bed/examples.hpp"
#include "bed/irrelevance.hpp"

#include <gtest/gtest.h>

using namespace bed;

TEST(Fixtures, Chart3Counts)
{
    auto f = build_fixture("CHART3");
    EXPECT_EQ(f.cat->num_objects(), 3);
    EXPECT_EQ(f.cat->num_arrows(), 301);
    EXPECT_TRUE(f.cat->check_laws().empty());
}

TEST(Fixtures, AllValidateAndPassBiased)
{
    for (const auto& n : fixture_names()) {
        auto f = build_fixture(n);
        ASSERT_TRUE(f.doc) << n;
        EXPECT_TRUE(f.cat->check_laws().empty()) << n;
        auto d = validate_doctrine(*f.doc);
        EXPECT_TRUE(d.empty()) << n << ": " << (d.empty() ? "" : d.front());
        auto r = check_biased_elementary(*f.doc, *f.eq);
        EXPECT_FALSE(r.failed()) << n << "\n" << r.text();
    }
}
