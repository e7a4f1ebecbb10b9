// Equivalence relations, quotients and the biased elementary quotient completion.
#pragma once

#include "bed/examples.hpp"
#include "bed/strictify.hpp"

namespace bed {

// Relation arithmetic in the strict fibers of a biased doctrine.
class Relations {
public:
    Relations(const Doctrine& d, const EqualityAssignment& eq, int L = 2) : d_(d), eq_(eq), calc_(d, eq), L_(L) {}
    const Doctrine& doctrine() const { return d_; }
    const EqualityAssignment& equality() const { return eq_; }
    const Category& cat() const { return d_.cat(); }
    ListCalculus& calc() { return calc_; }
    int bound() const { return L_; }

    bool has_square(int X);                  // P^s[X,X] computable
    const StrictFiber& square(int X);        // throws ChartTooShallow
    int delta(int X);                        // class of delta_[X]
    int elem_class(int X, int a);            // P(X) -> P^s[X]
    int class_elem(int X, int c);            // P^s[X] -> P(X)
    // P^s_{[f]x[g]} on a class over the codomain pair
    int times(int f, int g, int cls);
    // P^s_{<[f],[g]>} cls as an element of P(A), f,g : A -> X
    int at_pair(int f, int g, int cls);
    int kernel(int f); // P^s_{[f]x[f]} delta_[Y]
    bool descends(int X, int rho, int alpha);
    std::vector<int> descent(int X, int rho); // ascending element indices of P(X)
    std::string class_name(int X, int cls);

private:
    const Doctrine& d_;
    const EqualityAssignment& eq_;
    ListCalculus calc_;
    int L_;
};

struct PEquivRel {
    int carrier = -1;
    int rel = -1; // class in P^s[X,X]
    auto operator<=>(const PEquivRel&) const = default;
};

// Reflexivity, symmetry, transitivity; the triple list is used when computable and in bound,
// otherwise transitivity is checked on every internal cone over (X,X,X).
Report is_p_equiv_rel(Relations& R, const PEquivRel& rho);
std::vector<PEquivRel> equivalence_relations(Relations& R, int X);

struct QuotientCertificate {
    int q = -1;
    std::vector<std::pair<int, int>> factor; // competitor g -> unique h with h.q = g
};
// Arrows out of X with the universal property, verified over every internal competitor.
std::optional<QuotientCertificate> is_quotient(Relations& R, const PEquivRel& rho, int q, std::string* why = nullptr);
std::optional<QuotientCertificate> find_quotient(Relations& R, const PEquivRel& rho);
PEquivRel kernel(Relations& R, int f);
// effective, effective-descent, stable
Report quotient_flags(Relations& R, const PEquivRel& rho, int q);

// ---- the strict side -------------------------------------------------------

// A strict doctrine given with chosen products and an equality predicate oracle.
struct StrictTarget {
    const Doctrine* doc = nullptr;
    std::function<std::optional<ProductCone>(int x, int y)> product;
    // R_{<a,b>} delta for parallel a, b; nullopt when unavailable
    std::function<std::optional<int>(int a, int b)> eq_pred;
};
StrictTarget strict_target(const Doctrine& d, const StrictDelta& s);
StrictTarget set_target(const Doctrine& d, const SetChart& chart);

// u is a coequalizer of its generalized kernel pair with unique factorization.
bool is_regular_epi(const Category& c, int u, std::string* why = nullptr);
// A relation on X read on generalized pairs: entries (a, b, pred) with a, b : V -> X, pred in R(V).
struct GenRel {
    std::vector<std::tuple<int, int, int>> pairs;
};
// g respects the relation when pred <= R_{<g a, g b>} delta for every entry.
bool respects(const StrictTarget& t, const GenRel& rel, int g);
// q is a quotient of rel: it respects rel and every respecting g factors uniquely through q.
bool is_strict_quotient(const StrictTarget& t, int q, const GenRel& rel, std::string* why = nullptr);

// ---- completion ------------------------------------------------------------

struct QuotientCompletion {
    CategoryPtr source;
    std::vector<PEquivRel> objects; // per object of the completed base
    Doctrine doc;                   // P-bar
    std::vector<int> rep;           // arrow class -> representative base arrow
    std::vector<std::vector<int>> des; // per object: fiber element -> element of P(X)
    StrictDelta strict;             // chosen strict products and equality where internal
    DoctrineMorphism J;             // (J,j); partial when P^s[X,X] is unavailable
    std::vector<std::string> notes;

    int object_of(const PEquivRel& r) const;
    int arrow_of(int from, int to, int f) const; // class containing f, -1 when incompatible
    std::map<std::tuple<int, int, int>, int> classes;
};
// Well-definedness checks run before construction; PreconditionError when they fail.
QuotientCompletion quotient_completion(Relations& R);
StrictTarget completion_target(const QuotientCompletion& qc, Relations& R);
Report check_QD(const QuotientCompletion& qc, Relations& R);

// PD, ED, EqD, QD flags of (F,f) from a biased doctrine into a strict target.
Report morphism_classify(Relations& src, const StrictTarget& tgt, const DoctrineMorphism& m);

Report is_left_covering(Relations& src, const StrictTarget& tgt, const DoctrineMorphism& m);
struct Lifting {
    DoctrineMorphism bar;       // from the completion into the target
    std::vector<int> quotient;  // per completion object, the quotient arrow F(X) -> Fbar(X,rho)
    Report report;
};
// PreconditionError when the morphism is not left covering; ChartTooShallow when a quotient is missing.
Lifting lift_left_covering(Relations& src, const QuotientCompletion& qc, const StrictTarget& tgt, const DoctrineMorphism& m);

// ---- slices ----------------------------------------------------------------

// Weak pullback data for x : X -> A with itself, read through the slice strict fiber.
struct SliceRelations {
    int x = -1;
    int apex = -1;       // C, apex of the hub weak pullback
    int pi1 = -1, pi2 = -1;
    int comprehension = -1; // C -> W, weak comprehension of rho over the hub W of [X,X]
    int rho = -1;        // kernel of x, class in P^s[X,X]
};
SliceRelations slice_relations(Relations& R, const SliceDoctrine& s, Relations& RS, int slice_obj);
// sigma <= rho gives P^s_{{rho}} sigma in P(C); throws PreconditionError otherwise.
int rel_to_slice(Relations& R, const SliceRelations& sr, int sigma);
int rel_from_slice(Relations& R, const SliceRelations& sr, int r);
Report slice_relation_report(Relations& R, const SliceDoctrine& s, Relations& RS);
Report slice_quotient_commute(const Doctrine& d, const EqualityAssignment& eq, int A, int L = 2);

} // namespace bed
