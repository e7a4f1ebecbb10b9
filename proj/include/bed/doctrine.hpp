// Doctrines over finite charts and the elementary axiom checkers.
#pragma once

#include "bed/fincat.hpp"
#include "bed/order.hpp"
#include "bed/report.hpp"

#include <map>
#include <optional>

namespace bed {

struct Doctrine {
    CategoryPtr base;
    std::vector<Lattice> fiber;  // per object
    std::vector<Map> reindex;    // per arrow f: X -> Y, a map fiber(Y) -> fiber(X)

    const Category& cat() const { return *base; }
    const Lattice& at(int X) const { return fiber[X]; }
    int P(int f, int a) const { return reindex[f][a]; }
    std::string elem(int X, int a) const { return fiber[X].name(a); }
};

// delta^p_X keyed by the cone p over (X,X)
using EqualityAssignment = std::map<Cone, int>;
int delta_at(const Doctrine& d, const EqualityAssignment& eq, const Cone& c); // throws on a missing entry

struct StrictDelta {
    std::map<std::pair<int, int>, Cone> product; // chosen strict cones
    std::map<int, int> delta;                    // X -> element over the chosen X x X
};
// First strict cone per pair, in deterministic order.
std::map<std::pair<int, int>, Cone> choose_strict_products(const Category& cat);

struct ChoiceOfWeakProducts {
    std::map<std::pair<int, int>, Cone> product;
    // f x g : X' x Y' -> X x Y, the first fill-in; -1 when a product is not chosen
    int times(const Category& cat, int f, int g) const;
};
Diagnostics validate_choice(const Category& cat, const ChoiceOfWeakProducts& c);

struct DoctrineMorphism {
    Functor F;
    std::vector<Map> f; // per source object; empty outside the domain of F
};
Diagnostics validate_morphism(const Doctrine& src, const Doctrine& tgt, const DoctrineMorphism& m);

Diagnostics validate_doctrine(const Doctrine& d);
bool descends(const Doctrine& d, const Cone& c, int beta, int alpha);
std::vector<int> descent_poset(const Doctrine& d, const Cone& c, int beta);

// Strict structure as seen by the strict checker; objects and arrows are opaque ids.
struct ProductCone {
    int apex = -1, p1 = -1, p2 = -1;
};
class StrictView {
public:
    virtual ~StrictView() = default;
    virtual std::vector<int> objects() = 0;
    virtual std::string object_name(int x) = 0;
    virtual const Lattice& fiber(int x) = 0;
    virtual int reindex(int f, int a) = 0;
    virtual int compose(int g, int f) = 0;
    virtual int identity(int x) = 0;
    // nullopt with `why` set when unavailable
    virtual std::optional<ProductCone> product(int x, int y, Verdict& why) = 0;
    virtual int pair(const ProductCone& p, int f, int g) = 0;
    virtual std::optional<int> delta(int x, Verdict& why) = 0;
};

class DoctrineStrictView : public StrictView {
public:
    DoctrineStrictView(const Doctrine& d, const StrictDelta& s) : d_(d), s_(s) {}
    std::vector<int> objects() override;
    std::string object_name(int x) override { return d_.cat().obj_name(x); }
    const Lattice& fiber(int x) override { return d_.at(x); }
    int reindex(int f, int a) override { return d_.P(f, a); }
    int compose(int g, int f) override { return d_.cat().compose(g, f); }
    int identity(int x) override { return d_.cat().id(x); }
    std::optional<ProductCone> product(int x, int y, Verdict& why) override;
    int pair(const ProductCone& p, int f, int g) override;
    std::optional<int> delta(int x, Verdict& why) override;

private:
    const Doctrine& d_;
    const StrictDelta& s_;
};

Report check_strict_elementary(StrictView& v, const std::string& title = "check-strict");
Report check_strict_elementary(const Doctrine& d, const StrictDelta& s);
Report check_biased_elementary(const Doctrine& d, const EqualityAssignment& eq);
Report check_biased_diagonals(const Doctrine& d, const EqualityAssignment& eq);
// Throws PreconditionError naming the violated condition.
EqualityAssignment derive_from_choice(const Doctrine& d, const ChoiceOfWeakProducts& choice, const std::map<int, int>& delta);

struct ComprehensionFlags {
    bool is_comprehension = false, weak = false, strict = false, full = false;
};
ComprehensionFlags comprehension_classify(const Doctrine& d, int X, int alpha, int c);
// Per (X, alpha): some full weak comprehension exists; no candidate at all is chart-too-shallow.
Report comprehension_report(const Doctrine& d);
// First internal comprehension of alpha that is full and weak, strict ones preferred.
std::optional<int> find_comprehension(const Doctrine& d, int X, int alpha);

std::optional<std::string> comprehensive_diagonals_counterexample(const Doctrine& d, const EqualityAssignment& eq);
inline bool has_comprehensive_diagonals_biased(const Doctrine& d, const EqualityAssignment& eq)
{
    return !comprehensive_diagonals_counterexample(d, eq);
}

Report existential_report(const Doctrine& d, const EqualityAssignment& eq);
Report universal_report(const Doctrine& d, const EqualityAssignment& eq);
Report implicational_report(const Doctrine& d);

struct SliceDoctrine {
    Slice slice;
    Doctrine doc;
    EqualityAssignment eq;
};
SliceDoctrine slice_doctrine(const Doctrine& d, const EqualityAssignment& eq, int A);

} // namespace bed
