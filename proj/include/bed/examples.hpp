// Fixture generators and the worked doctrines: Sub, Psi, pers, exact completion.
#pragma once

#include "bed/doctrine.hpp"

namespace bed {

// A full subcategory of finite sets, arrows named "src>tgt:img0,img1,...".
struct SetChart {
    CategoryPtr cat;
    std::vector<std::vector<std::string>> elements; // per object
    std::vector<std::vector<int>> fn;               // per arrow, image of each source element
};
SetChart set_chart(const std::vector<std::pair<std::string, std::vector<std::string>>>& objects);
// Powerset fibers with preimage reindexing; delta^p = {w : p1 w = p2 w}.
Doctrine powerset_doctrine(const SetChart& s);
EqualityAssignment set_equality(const SetChart& s, const Doctrine& d);
StrictDelta set_strict_delta(const SetChart& s, const Doctrine& d);

struct Fixture {
    std::string name;
    CategoryPtr cat;
    std::optional<Doctrine> doc;
    std::optional<EqualityAssignment> eq;
    std::optional<StrictDelta> strict; // present for strict elementary fixtures
    std::optional<SetChart> chart;
};
const std::vector<std::string>& fixture_names();
Fixture build_fixture(const std::string& name); // throws std::invalid_argument on unknown names

// Psi: poset reflection of C/X, with a formal bottom when C has no initial object.
struct WeakSubobjects {
    Doctrine doc;
    EqualityAssignment eq;
    std::vector<std::vector<int>> cls; // per object X, arrow into X -> fiber element
    std::vector<int> formal_bottom;    // per object, -1 when absent
};
WeakSubobjects weak_subobjects(CategoryPtr cat);

// Subobjects via internal monos and internal pullbacks; ChartTooShallow when one is missing.
Doctrine subobjects(CategoryPtr cat);

} // namespace bed
