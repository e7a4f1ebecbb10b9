#include "bed/irrelevance.hpp"

#include <algorithm>
#include <set>

namespace bed {

std::optional<std::pair<int, int>> rbp_counterexample(const Doctrine& d, const Cone& cone, int beta)
{
    const Category& C = d.cat();
    std::map<std::vector<int>, int> first;
    for (int h : C.into(cone.apex)) {
        std::vector<int> key{C.src(h)};
        for (int p : cone.legs) key.push_back(C.compose(p, h));
        auto [it, fresh] = first.emplace(key, h);
        if (!fresh && d.P(it->second, beta) != d.P(h, beta)) return std::make_pair(it->second, h);
    }
    return std::nullopt;
}

namespace {

struct Option {
    Cone q;
    int t;
};

// Per doubling cone r, the admissible (q^i, t_i) choices for each foot.
struct Family {
    Cone r;
    std::vector<std::vector<Option>> options;
    long count() const
    {
        long n = 1;
        for (const auto& o : options) n *= static_cast<long>(o.size());
        return n;
    }
};

std::vector<Family> families(const Category& C, const Cone& cone)
{
    std::vector<Family> out;
    const auto feet = C.feet(cone);
    for (const auto& [r, kr] : C.weak_products({cone.apex, cone.apex})) {
        Family f{r, {}};
        for (size_t i = 0; i < feet.size(); ++i) {
            std::vector<Option> opts;
            int a = C.compose(cone.legs[i], r.legs[0]), b = C.compose(cone.legs[i], r.legs[1]);
            for (const auto& [q, kq] : C.weak_products({feet[i], feet[i]}))
                for (int t : fill_ins(C, q, r.apex, {a, b})) opts.push_back({q, t});
            f.options.push_back(std::move(opts));
        }
        if (f.count() > 0) out.push_back(std::move(f));
    }
    return out;
}

std::string describe(const Category& C, const Cone& r, const std::vector<Option>& pick)
{
    std::string s = "U=" + C.cone_name(r) + " t=[";
    for (size_t i = 0; i < pick.size(); ++i) s += (i ? "," : "") + C.arr_name(pick[i].t) + " into " + C.cone_name(pick[i].q);
    return s + "]";
}

} // namespace

std::vector<PiDiagram> enumerate_pi_diagrams(const Category& cat, const Cone& cone, std::size_t limit)
{
    std::vector<PiDiagram> out;
    for (const auto& f : families(cat, cone)) {
        std::vector<size_t> idx(f.options.size(), 0);
        while (out.size() < limit) {
            PiDiagram dg{cone, f.r, {}, {}};
            for (size_t i = 0; i < idx.size(); ++i) {
                dg.q.push_back(f.options[i][idx[i]].q);
                dg.t.push_back(f.options[i][idx[i]].t);
            }
            out.push_back(std::move(dg));
            int i = static_cast<int>(idx.size()) - 1;
            while (i >= 0 && ++idx[i] == f.options[i].size()) idx[i--] = 0;
            if (i < 0) break;
        }
    }
    return out;
}

long count_pi_diagrams(const Category& cat, const Cone& cone)
{
    long n = 0;
    for (const auto& f : families(cat, cone)) n += f.count();
    return n;
}

bool pi_computable(const Category& cat, const Cone& cone)
{
    return !families(cat, cone).empty() || classify_cone(cat, cone) == ConeClass::strict;
}

PiResult pi_elements(const Doctrine& d, const EqualityAssignment& eq, const Cone& cone)
{
    const Category& C = d.cat();
    const Lattice& FW = d.at(cone.apex);
    PiResult res;
    std::optional<std::vector<int>> ref;
    std::string ref_diagram;
    for (const auto& f : families(C, cone)) {
        res.diagrams += f.count();
        // distinct values of P_{t_i} delta^{q^i}, with one witness each
        std::vector<std::vector<std::pair<int, Option>>> vals;
        for (const auto& opts : f.options) {
            std::map<int, Option> seen;
            for (const auto& o : opts) seen.emplace(d.P(o.t, delta_at(d, eq, o.q)), o);
            vals.emplace_back(seen.begin(), seen.end());
        }
        const int r1 = f.r.legs[0], r2 = f.r.legs[1];
        const Lattice& FU = d.at(f.r.apex);
        std::vector<size_t> idx(vals.size(), 0);
        std::set<int> meets;
        while (true) {
            int m = FU.top();
            for (size_t i = 0; i < idx.size(); ++i) m = FU.glb(m, vals[i][idx[i]].first);
            if (meets.insert(m).second) {
                ++res.distinct;
                std::vector<int> s;
                for (int a = 0; a < FW.size(); ++a)
                    if (FU.leq(FU.glb(d.P(r1, a), m), d.P(r2, a))) s.push_back(a);
                if (!ref) {
                    ref = s;
                    std::vector<Option> pick;
                    for (size_t i = 0; i < idx.size(); ++i) pick.push_back(vals[i][idx[i]].second);
                    ref_diagram = describe(C, f.r, pick);
                } else if (*ref != s) {
                    std::vector<Option> pick;
                    for (size_t i = 0; i < idx.size(); ++i) pick.push_back(vals[i][idx[i]].second);
                    throw PreconditionError("proof-irrelevant elements over " + C.cone_name(cone) + " disagree between diagrams " +
                                            ref_diagram + " and " + describe(C, f.r, pick));
                }
            }
            int i = static_cast<int>(idx.size()) - 1;
            while (i >= 0 && ++idx[i] == vals[i].size()) idx[i--] = 0;
            if (i < 0) break;
        }
    }
    if (!ref) {
        if (classify_cone(C, cone) != ConeClass::strict)
            throw ChartTooShallow("no internal diagram for proof-irrelevant elements over " + C.cone_name(cone));
        res.by_strict_rule = true;
        for (int a = 0; a < FW.size(); ++a) res.elements.push_back(a);
        return res;
    }
    res.elements = *ref;
    return res;
}

int StrictFiber::cone_index(const Cone& c) const
{
    auto it = std::find(cones.begin(), cones.end(), c);
    return it == cones.end() ? -1 : static_cast<int>(it - cones.begin());
}

int StrictFiber::class_of(int k, int element) const
{
    auto it = std::find(rep[k].begin(), rep[k].end(), element);
    return it == rep[k].end() ? -1 : static_cast<int>(it - rep[k].begin());
}

StrictFiber strict_fiber(const Doctrine& d, const EqualityAssignment& eq, const std::vector<int>& feet)
{
    const Category& C = d.cat();
    StrictFiber sf;
    sf.feet = feet;
    std::vector<std::vector<int>> pis;
    auto cones = C.weak_products(feet);
    if (feet.size() == 1) {
        // the identity cone is the hub for a singleton list
        Cone idc{feet[0], {C.id(feet[0])}};
        std::stable_partition(cones.begin(), cones.end(), [&](const auto& c) { return c.first == idc; });
    }
    for (const auto& [c, k] : cones) {
        if (!pi_computable(C, c)) {
            sf.skipped.push_back({c, "no internal diagram"});
            continue;
        }
        sf.cones.push_back(c);
        pis.push_back(pi_elements(d, eq, c).elements);
    }
    std::string fn;
    for (int x : feet) fn += (fn.empty() ? "" : ",") + C.obj_name(x);
    if (sf.cones.empty()) throw ChartTooShallow("no internal cone over [" + fn + "] admits proof-irrelevant elements");
    const Cone& hub = sf.cones[0];
    sf.rep.push_back(pis[0]);
    const Lattice& F0 = d.at(hub.apex);
    for (size_t k = 1; k < sf.cones.size(); ++k) {
        const Cone& c = sf.cones[k];
        auto to = fill_ins(C, hub, c.apex, c.legs);
        auto back = fill_ins(C, c, hub.apex, hub.legs);
        if (to.empty() || back.empty()) throw PreconditionError("no connecting arrow between " + C.cone_name(hub) + " and " + C.cone_name(c));
        const Lattice& Fk = d.at(c.apex);
        std::vector<int> r;
        for (int e : pis[0]) {
            int v = d.P(to.front(), e);
            for (int h : to)
                if (d.P(h, e) != v) throw PreconditionError("transport to " + C.cone_name(c) + " depends on the connecting arrow");
            for (int g : back)
                if (d.P(g, v) != e) throw PreconditionError("transport round trip fails at " + F0.name(e) + " via " + C.cone_name(c));
            r.push_back(v);
        }
        std::vector<int> sorted = r;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != pis[k]) throw PreconditionError("transport from the hub is not onto the proof-irrelevant elements of " + C.cone_name(c));
        for (size_t a = 0; a < r.size(); ++a)
            for (size_t b = 0; b < r.size(); ++b)
                if (Fk.leq(r[a], r[b]) != F0.leq(pis[0][a], pis[0][b]))
                    throw PreconditionError("transport to " + C.cone_name(c) + " is not an order isomorphism");
        sf.rep.push_back(std::move(r));
    }
    sf.classes = F0.restrict(pis[0]);
    return sf;
}

int transport(const Doctrine& d, const StrictFiber& sf, const Cone& from, const Cone& to, int element)
{
    int i = sf.cone_index(from), j = sf.cone_index(to);
    if (i < 0 || j < 0) throw PreconditionError("cone not indexed in the strict fiber: " + d.cat().cone_name(i < 0 ? from : to));
    int c = sf.class_of(i, element);
    if (c < 0) throw PreconditionError("element " + d.at(from.apex).name(element) + " is not proof-irrelevant");
    return sf.rep[j][c];
}

Report check_rbp_pi_coincide(const Doctrine& d, const EqualityAssignment& eq)
{
    Report r;
    r.title = "rbp";
    const Category& C = d.cat();
    bool premise = !comprehension_report(d).failed();
    auto diag = comprehensive_diagonals_counterexample(d, eq);
    if (!premise) r.notes.push_back("premise: full weak comprehensions fail");
    if (diag) r.notes.push_back("premise: comprehensive diagonals fail (" + *diag + ")");
    premise = premise && !diag;
    std::vector<std::vector<int>> feetlists;
    for (int x = 0; x < C.num_objects(); ++x) feetlists.push_back({x});
    for (int x = 0; x < C.num_objects(); ++x)
        for (int y = 0; y < C.num_objects(); ++y) feetlists.push_back({x, y});
    for (const auto& feet : feetlists)
        for (const auto& [c, k] : C.weak_products(feet)) {
            const std::string s = C.cone_name(c);
            if (!pi_computable(C, c)) {
                r.add("rbp-equals-pi", s, Verdict::chart_too_shallow, "no internal diagram");
                continue;
            }
            const Lattice& FW = d.at(c.apex);
            std::vector<int> rb;
            for (int b = 0; b < FW.size(); ++b)
                if (is_rbp(d, c, b)) rb.push_back(b);
            auto pi = pi_elements(d, eq, c).elements;
            Quant sub;
            for (int a : pi) sub.hold(std::binary_search(rb.begin(), rb.end(), a), [&] { return "pi element " + FW.name(a) + " is not rbp"; });
            sub.emit(r, "pi-within-rbp", s);
            if (rb == pi) {
                r.add("rbp-equals-pi", s, Verdict::pass, "", static_cast<long>(FW.size()));
                continue;
            }
            std::string w;
            for (int b : rb)
                if (!std::binary_search(pi.begin(), pi.end(), b)) {
                    w = "rbp but not pi: " + FW.name(b);
                    break;
                }
            r.add("rbp-equals-pi", s, premise ? Verdict::fail : Verdict::premise_failure, w, static_cast<long>(FW.size()));
        }
    return r;
}

// ---- quantifiers -----------------------------------------------------------

namespace {

struct Adjoints {
    std::optional<Map> adj[2];
};

class QuantifierCheck {
public:
    QuantifierCheck(const Doctrine& d, const EqualityAssignment& eq, bool left) : d_(d), eq_(eq), left_(left) {}

    const Adjoints& adjoints(const Cone& c)
    {
        auto it = adj_.find(c);
        if (it != adj_.end()) return it->second;
        Adjoints a;
        for (int i = 0; i < 2; ++i) {
            const int p = c.legs[i];
            const Lattice& X = d_.at(d_.cat().tgt(p));
            Map m(X.size());
            for (int x = 0; x < X.size(); ++x) m[x] = d_.P(p, x);
            a.adj[i] = left_ ? left_adjoint(X, d_.at(c.apex), m) : right_adjoint(X, d_.at(c.apex), m);
        }
        return adj_.emplace(c, std::move(a)).first->second;
    }

    const std::optional<std::vector<int>>& pi(const Cone& c)
    {
        auto it = pi_.find(c);
        if (it != pi_.end()) return it->second;
        std::optional<std::vector<int>> v;
        try {
            v = pi_elements(d_, eq_, c).elements;
        } catch (const ChartTooShallow&) {
        }
        return pi_.emplace(c, std::move(v)).first->second;
    }

private:
    const Doctrine& d_;
    const EqualityAssignment& eq_;
    bool left_;
    std::map<Cone, Adjoints> adj_;
    std::map<Cone, std::optional<std::vector<int>>> pi_;
};

Report quantifier_report(const Doctrine& d, const EqualityAssignment& eq, bool left)
{
    Report r;
    r.title = left ? "existential" : "universal";
    const char* adjname = left ? "left-adjoint" : "right-adjoint";
    const Category& C = d.cat();
    QuantifierCheck qc(d, eq, left);
    for (int X1 = 0; X1 < C.num_objects(); ++X1)
        for (int X2 = 0; X2 < C.num_objects(); ++X2)
            for (const auto& [w, kw] : C.weak_products({X1, X2})) {
                const std::string s = C.cone_name(w);
                const Adjoints& aw = qc.adjoints(w);
                for (int i = 0; i < 2; ++i) {
                    Quant q;
                    q.hold(aw.adj[i].has_value(), "P_" + C.arr_name(w.legs[i]) + " has no adjoint");
                    q.emit(r, std::string(adjname) + "-p" + std::to_string(i + 1), s);
                }
                const auto& pi = qc.pi(w);
                if (!pi) {
                    r.add("weak-beck-chevalley", s, Verdict::chart_too_shallow, "proof-irrelevant elements not computable");
                    if (left) r.add("weak-frobenius", s, Verdict::chart_too_shallow, "proof-irrelevant elements not computable");
                    continue;
                }
                const Lattice& FW = d.at(w.apex);
                if (left) {
                    Quant fr;
                    for (int i = 0; i < 2; ++i) {
                        if (!aw.adj[i]) continue;
                        const Map& E = *aw.adj[i];
                        const int p = w.legs[i];
                        const Lattice& FX = d.at(C.tgt(p));
                        for (int a = 0; a < FX.size(); ++a)
                            for (int b : *pi)
                                fr.hold(E[FW.glb(d.P(p, a), b)] == FX.glb(a, E[b]), [&] {
                                    return "p" + std::to_string(i + 1) + " alpha=" + FX.name(a) + " beta=" + FW.name(b);
                                });
                    }
                    fr.emit(r, "weak-frobenius", s);
                }
                Quant bc;
                for (int i = 0; i < 2; ++i) {
                    if (!aw.adj[i]) continue;
                    // the quantified leg i varies along f : Y -> X_i, the other foot stays
                    const int Xq = i == 0 ? X1 : X2;
                    const int Xk = i == 0 ? X2 : X1;
                    for (int Y = 0; Y < C.num_objects(); ++Y)
                        for (int f : C.hom(Y, Xq)) {
                            std::vector<int> vfeet = i == 0 ? std::vector<int>{Y, Xk} : std::vector<int>{Xk, Y};
                            for (const auto& [v, kv] : C.weak_products(vfeet)) {
                                const Adjoints& av = qc.adjoints(v);
                                if (!av.adj[i]) continue;
                                std::vector<int> legs = v.legs;
                                legs[i] = C.compose(f, v.legs[i]);
                                for (int fp : fill_ins(C, w, v.apex, legs))
                                    for (int a : *pi)
                                        bc.hold((*av.adj[i])[d.P(fp, a)] == d.P(f, (*aw.adj[i])[a]), [&] {
                                            return "p" + std::to_string(i + 1) + " f=" + C.arr_name(f) + " V=" + C.cone_name(v) +
                                                   " f'=" + C.arr_name(fp) + " alpha=" + FW.name(a);
                                        });
                            }
                        }
                }
                bc.emit(r, "weak-beck-chevalley", s);
            }
    return r;
}

} // namespace

Report existential_report(const Doctrine& d, const EqualityAssignment& eq) { return quantifier_report(d, eq, true); }
Report universal_report(const Doctrine& d, const EqualityAssignment& eq) { return quantifier_report(d, eq, false); }

} // namespace bed
