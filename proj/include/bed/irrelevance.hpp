// Reindexed-by-projections predicates, proof-irrelevant elements, strict fibers.
#pragma once

#include "bed/doctrine.hpp"

namespace bed {

// Parallel h, h' into the apex agreeing on every leg with P_h(beta) != P_h'(beta).
std::optional<std::pair<int, int>> rbp_counterexample(const Doctrine& d, const Cone& cone, int beta);
inline bool is_rbp(const Doctrine& d, const Cone& cone, int beta) { return !rbp_counterexample(d, cone, beta); }

struct PiDiagram {
    Cone p;              // main cone over X_1..X_n
    Cone r;              // doubling cone over (W,W)
    std::vector<Cone> q; // q^i over (X_i,X_i)
    std::vector<int> t;  // t_i : U -> W_i
};

// Diagrams over `cone`, at most `limit` of them, deterministic order.
std::vector<PiDiagram> enumerate_pi_diagrams(const Category& cat, const Cone& cone, std::size_t limit = 100000);
long count_pi_diagrams(const Category& cat, const Cone& cone);

struct PiResult {
    std::vector<int> elements;  // sorted
    long diagrams = 0;          // internal diagrams covered
    long distinct = 0;          // distinct value combinations actually evaluated
    bool by_strict_rule = false;
};
// ChartTooShallow when no diagram exists and the cone is not a strict product;
// PreconditionError when two diagrams disagree.
PiResult pi_elements(const Doctrine& d, const EqualityAssignment& eq, const Cone& cone);
bool pi_computable(const Category& cat, const Cone& cone);

struct StrictFiber {
    std::vector<int> feet;
    std::vector<Cone> cones;            // cones[0] is the canonical hub
    std::vector<std::vector<int>> rep;  // rep[k][c]: element over cones[k] representing class c
    std::vector<std::pair<Cone, std::string>> skipped; // internal cones lacking a pi computation
    Lattice classes;

    int size() const { return classes.size(); }
    int cone_index(const Cone& c) const; // -1 when unindexed
    int class_of(int k, int element) const; // -1 when not proof-irrelevant over cones[k]
    const Cone& hub() const { return cones.front(); }
};

// Throws ChartTooShallow when no internal cone over `feet` admits pi elements and
// PreconditionError when transports fail to be isomorphisms.
StrictFiber strict_fiber(const Doctrine& d, const EqualityAssignment& eq, const std::vector<int>& feet);
// Element over `to` corresponding to `element` over `from`; throws on an unindexed cone.
int transport(const Doctrine& d, const StrictFiber& sf, const Cone& from, const Cone& to, int element);

Report check_rbp_pi_coincide(const Doctrine& d, const EqualityAssignment& eq);

} // namespace bed
