// Pseudo equivalence relations, their exact completion, and the cone functors U and M.
#pragma once

#include "bed/quotient.hpp"

namespace bed {

// r1, r2 : R -> X
struct Per {
    int carrier = -1;
    int rel = -1;
    int r1 = -1, r2 = -1;
    auto operator<=>(const Per&) const = default;
};
std::string per_name(const Category& c, const Per& p);
// Missing reflexivity, symmetry or transitivity witness; transitivity is read on generalized
// composable pairs u, v : A -> R with r2 u = r1 v.
std::optional<std::string> per_violation(const Category& c, const Per& p);
// Valid pers whose carrier has an internal weak product with itself, deterministic order.
std::vector<Per> internal_pers(const Category& c);

// The class of <r1,r2> over the hub of [X,X]; PreconditionError on an invalid per.
PEquivRel per_to_rel(Relations& R, const WeakSubobjects& ws, const Per& p);
// A per through the first arrow representing the class; PreconditionError on the formal bottom.
Per rel_to_per(Relations& R, const WeakSubobjects& ws, const PEquivRel& rel);
std::optional<int> coequalizer(const Category& c, int f, int g);
// Round trips, equivalence status and coequalizer/quotient agreement over every internal per.
Report per_report(CategoryPtr cat, int L = 2);

struct ExactCompletion {
    CategoryPtr cat;
    std::vector<Per> objects;
    std::vector<int> rep; // arrow class -> base arrow
};
// Arrows are compatible f : X -> Y modulo f ~ f' iff some h : X -> S has s1 h = f and s2 h = f'.
ExactCompletion exact_completion(const Category& c);

struct ConeFunctors {
    Cone cone;                          // the weak product W
    std::vector<std::string> classes;   // cone classes over the feet
    FinitePoset order;
    std::vector<int> U;                 // element of Psi(W) -> cone class, -1 on the formal bottom
    std::vector<int> M;                 // cone class -> element of Psi(W)
    std::vector<int> pi;                // proof-irrelevant elements of Psi(W)
};
// One entry per internal weak product over the feet; ChartTooShallow when there is none.
std::vector<ConeFunctors> cone_functors(CategoryPtr cat, const std::vector<int>& feet, Report* report = nullptr);

} // namespace bed
