// Finite categories given by explicit composition tables.
#pragma once

#include "bed/order.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace bed {

struct RawCategory {
    struct Arrow {
        std::string id, src, tgt;
    };
    std::vector<std::string> objects;
    std::vector<Arrow> arrows;
    std::vector<std::pair<std::string, std::string>> identities;          // object, arrow
    std::vector<std::tuple<std::string, std::string, std::string>> compose; // g, f, g.f
};

struct Cone {
    int apex = -1;
    std::vector<int> legs;
    auto operator<=>(const Cone&) const = default;
};

enum class ConeClass { not_weak, weak_only, strict };
const char* to_string(ConeClass c);

class Category {
public:
    int num_objects() const { return static_cast<int>(obj_names_.size()); }
    int num_arrows() const { return static_cast<int>(arr_names_.size()); }
    const std::string& obj_name(int o) const { return obj_names_[o]; }
    const std::string& arr_name(int a) const { return arr_names_[a]; }
    int src(int a) const { return src_[a]; }
    int tgt(int a) const { return tgt_[a]; }
    int id(int o) const { return ident_[o]; }
    bool is_identity(int a) const { return ident_[src_[a]] == a; }

    // g.f, or -1 when tgt(f) != src(g)
    int compose(int g, int f) const
    {
        if (tgt_[f] != src_[g]) return -1;
        return comp_[g][into_pos_[f]];
    }
    const std::vector<int>& hom(int a, int b) const { return hom_[static_cast<size_t>(a) * obj_names_.size() + b]; }
    int hom_pos(int f) const { return hom_pos_[f]; }
    const std::vector<int>& into(int b) const { return into_[b]; }
    const std::vector<int>& out(int a) const { return out_[a]; }

    std::optional<int> find_object(const std::string& n) const;
    std::optional<int> find_arrow(const std::string& n) const;
    int object(const std::string& n) const; // throws
    int arrow(const std::string& n) const;  // throws

    Diagnostics check_laws() const;
    RawCategory to_raw() const;

    std::vector<int> feet(const Cone& c) const;
    std::string cone_name(const Cone& c) const;

    // Memoized weak products over the given feet, deterministic order.
    const std::vector<std::pair<Cone, ConeClass>>& weak_products(const std::vector<int>& feet) const;

    class Builder;

private:
    std::vector<std::string> obj_names_, arr_names_;
    std::vector<int> src_, tgt_, ident_;
    std::vector<std::vector<int>> hom_, into_, out_, comp_;
    std::vector<int> into_pos_, hom_pos_;
    std::unordered_map<std::string, int> obj_index_, arr_index_;
    mutable std::map<std::vector<int>, std::vector<std::pair<Cone, ConeClass>>> wp_cache_;
};

// Names are sorted on build; composition is supplied over builder indices.
class Category::Builder {
public:
    int add_object(std::string name);
    int add_arrow(std::string name, int src, int tgt);
    void set_identity(int obj, int arrow);
    int num_arrows() const { return static_cast<int>(arrows_.size()); }
    int src(int a) const { return std::get<1>(arrows_[a]); }
    int tgt(int a) const { return std::get<2>(arrows_[a]); }
    Category build(const std::function<int(int g, int f)>& compose) const;

private:
    std::vector<std::string> objects_;
    std::vector<std::tuple<std::string, int, int>> arrows_;
    std::vector<int> ident_;
};

using CategoryPtr = std::shared_ptr<const Category>;

Diagnostics validate_category(const RawCategory& raw);
std::optional<Category> build_category(const RawCategory& raw, Diagnostics& diag);

struct Functor {
    std::vector<int> obj; // -1 outside the domain
    std::vector<int> arr;
};
Diagnostics validate_functor(const Category& src, const Category& tgt, const Functor& f);
Functor compose(const Functor& g, const Functor& f);

ConeClass classify_cone(const Category& cat, const Cone& cone);
std::vector<Cone> enumerate_weak_products(const Category& cat, const std::vector<int>& feet);
// All h: A -> apex with legs_i.h = targets_i.
std::vector<int> fill_ins(const Category& cat, const Cone& cone, int A, const std::vector<int>& targets);
// Cone (P; a, b) over the cospan f: X->A, g: Y->A.
ConeClass classify_weak_pullback(const Category& cat, int f, int g, int a, int b);

struct Slice {
    Category cat;
    Functor forget;
    std::vector<int> object_arrow; // slice object -> arrow of the base
    std::vector<int> arrow_base;   // slice arrow -> base arrow
};
Slice slice_category(const Category& cat, int A);

struct Reflection {
    FinitePoset poset;
    std::vector<int> cls; // object -> element
};
Reflection poset_reflection(const Category& cat);

struct IsoClasses {
    std::vector<int> rep;          // object -> representative object
    std::vector<int> to_rep;       // object x -> iso x -> rep(x)
    std::vector<int> from_rep;     // inverse
    std::vector<int> reps;         // sorted representatives
};
IsoClasses iso_classes(const Category& cat);

struct Equivalence {
    enum class Status { found, absent, budget_exhausted } status = Status::absent;
    Functor F, G;
    std::vector<int> eta; // x -> GF(x), iso in cat1
    std::vector<int> eps; // y -> FG(y), iso in cat2
    std::string reason;
    long nodes = 0;
};
Equivalence find_equivalence(const Category& a, const Category& b, long budget = 1'000'000);
// Independent law check of a returned witness.
Diagnostics verify_equivalence(const Category& a, const Category& b, const Equivalence& e);

} // namespace bed
