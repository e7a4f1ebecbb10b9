// Truncated finite product completion and the strictification of a biased doctrine.
#pragma once

#include "bed/irrelevance.hpp"

#include <memory>

namespace bed {

using ListObject = std::vector<int>;

// (f, fhat) : src -> tgt with comps[i] : src[fhat[i]] -> tgt[i]
struct ListArrow {
    ListObject src, tgt;
    std::vector<int> fhat;
    std::vector<int> comps;
    auto operator<=>(const ListArrow&) const = default;
};

std::string list_name(const Category& c, const ListObject& l);
std::string list_arrow_name(const Category& c, const ListArrow& f);
ListArrow list_identity(const ListObject& l, const Category& c);
ListArrow compose_list_arrows(const Category& c, const ListArrow& g, const ListArrow& f); // throws PreconditionError
ListArrow embed(const Category& c, int f);                                             // the functor S
ListObject concat(const ListObject& a, const ListObject& b);
ListArrow projection(const Category& c, const ListObject& a, const ListObject& b, int which); // a++b -> a or b
ListArrow pairing(const Category& c, const ListArrow& f, const ListArrow& g);                 // <f,g> : A -> tgt f ++ tgt g

// The truncated completion, evaluated lazily.
class ProductCompletion {
public:
    ProductCompletion(CategoryPtr base, int L);
    const Category& base() const { return *base_; }
    int bound() const { return L_; }
    const std::vector<ListObject>& objects() const { return objects_; }
    std::vector<ListArrow> hom(const ListObject& a, const ListObject& b) const;
    long hom_size(const ListObject& a, const ListObject& b) const;
    bool in_bound(const ListObject& l) const { return !l.empty() && static_cast<int>(l.size()) <= L_; }

private:
    CategoryPtr base_;
    int L_;
    std::vector<ListObject> objects_;
};

// Strict fibers and their reindexing on demand, memoized.
class ListCalculus {
public:
    ListCalculus(const Doctrine& d, const EqualityAssignment& eq) : d_(d), eq_(eq) {}
    const Doctrine& doctrine() const { return d_; }
    const EqualityAssignment& equality() const { return eq_; }
    // nullptr when the chart is too shallow; `why` receives the reason
    const StrictFiber* fiber(const ListObject& l, std::string* why = nullptr);
    // P^s_f on classes; throws ChartTooShallow when an endpoint is unavailable
    int reindex(const ListArrow& f, int cls);
    const Map& reindex_map(const ListArrow& f);
    // class of the meet of P_{t_i} delta over [l, l]
    std::optional<int> delta(const ListObject& l);
    std::string class_name(const ListObject& l, int cls);

private:
    const Doctrine& d_;
    const EqualityAssignment& eq_;
    std::map<ListObject, std::optional<StrictFiber>> fibers_;
    std::map<ListObject, std::string> why_;
    std::map<ListArrow, Map> maps_;
    std::map<ListObject, std::optional<int>> deltas_;
};

// A doctrine on an explicitly materialized full subcategory of the truncated completion.
struct ListDoctrine {
    CategoryPtr base; // the category C
    int bound = 0;
    Doctrine R;       // over the materialized list category
    std::vector<ListObject> lists;
    std::vector<ListArrow> arrows;
    std::map<ListObject, int> delta; // delta_[X..] in fiber([X..,X..])
    std::vector<std::pair<ListObject, std::string>> missing; // in-bound lists left out

    int object_of(const ListObject& l) const;
    int arrow_of(const ListArrow& f) const;
    std::map<ListObject, int> obj_index;
    std::map<ListArrow, int> arr_index;
};

// Full subcategory of the completion on `lists` with fibers and reindexing from callbacks.
ListDoctrine materialize(CategoryPtr base, int L, const std::vector<ListObject>& lists,
                         const std::function<Lattice(const ListObject&)>& fiber,
                         const std::function<Map(const ListArrow&)>& reindex);

class Strictification : public StrictView {
public:
    Strictification(const Doctrine& d, const EqualityAssignment& eq, int L);
    const ListDoctrine& lists() const { return ld_; }
    ListCalculus& calculus() { return calc_; }
    int bound() const { return L_; }

    std::vector<int> objects() override;
    std::string object_name(int x) override;
    const Lattice& fiber(int x) override { return ld_.R.at(x); }
    int reindex(int f, int a) override { return ld_.R.P(f, a); }
    int compose(int g, int f) override { return ld_.R.cat().compose(g, f); }
    int identity(int x) override { return ld_.R.cat().id(x); }
    std::optional<ProductCone> product(int x, int y, Verdict& why) override;
    int pair(const ProductCone& p, int f, int g) override;
    std::optional<int> delta(int x, Verdict& why) override;

private:
    ListCalculus calc_;
    int L_;
    ListDoctrine ld_;
};

std::optional<int> delta_list(Strictification& s, const ListObject& l); // throws out-of-bound as PreconditionError
Report check_strictification(Strictification& s);
// delta_a box delta_b = delta_{a++b} for 2(|a|+|b|) <= L, evaluated lazily so only the doubled lists are built.
Report box_equality_report(ListCalculus& calc, int L);
// R.S with delta^p_X := R_{<[p1],[p2]>} delta_[X]; `induced` receives the assignment.
Report roundtrip_biased(const ListDoctrine& ld, EqualityAssignment* induced = nullptr);
// Existential structure of a strict doctrine on lists, along concatenation projections.
Report strict_existential_report(const ListDoctrine& ld);
Report existential_transfer(const Doctrine& d, const EqualityAssignment& eq, Strictification& s);

} // namespace bed
