#include "bed/pers.hpp"

#include <algorithm>

namespace bed {

std::string per_name(const Category& c, const Per& p) { return "(" + c.arr_name(p.r1) + ";" + c.arr_name(p.r2) + ")"; }

std::optional<std::string> per_violation(const Category& C, const Per& p)
{
    const int X = p.carrier, R = p.rel;
    if (C.src(p.r1) != R || C.src(p.r2) != R || C.tgt(p.r1) != X || C.tgt(p.r2) != X) return "legs do not form a span over the carrier";
    bool refl = false;
    for (int d : C.hom(X, R)) refl = refl || (C.compose(p.r1, d) == C.id(X) && C.compose(p.r2, d) == C.id(X));
    if (!refl) return "no reflexivity witness";
    bool sym = false;
    for (int s : C.hom(R, R)) sym = sym || (C.compose(p.r1, s) == p.r2 && C.compose(p.r2, s) == p.r1);
    if (!sym) return "no symmetry witness";
    for (int A = 0; A < C.num_objects(); ++A)
        for (int u : C.hom(A, R))
            for (int v : C.hom(A, R)) {
                if (C.compose(p.r2, u) != C.compose(p.r1, v)) continue;
                bool t = false;
                for (int w : C.hom(A, R)) t = t || (C.compose(p.r1, w) == C.compose(p.r1, u) && C.compose(p.r2, w) == C.compose(p.r2, v));
                if (!t) return "no transitivity witness for " + C.arr_name(u) + ", " + C.arr_name(v);
            }
    return std::nullopt;
}

std::vector<Per> internal_pers(const Category& C)
{
    std::vector<Per> out;
    for (int X = 0; X < C.num_objects(); ++X) {
        if (C.weak_products({X, X}).empty()) continue;
        for (int R = 0; R < C.num_objects(); ++R)
            for (int a : C.hom(R, X))
                for (int b : C.hom(R, X)) {
                    Per p{X, R, a, b};
                    if (!per_violation(C, p)) out.push_back(p);
                }
    }
    return out;
}

PEquivRel per_to_rel(Relations& R, const WeakSubobjects& ws, const Per& p)
{
    const Category& C = R.cat();
    if (auto v = per_violation(C, p)) throw PreconditionError("invalid per " + per_name(C, p) + ": " + *v);
    const StrictFiber& sf = R.square(p.carrier);
    auto u = fill_ins(C, sf.hub(), p.rel, {p.r1, p.r2});
    if (u.empty()) throw PreconditionError("no arrow into the hub for " + per_name(C, p));
    const auto& in = C.into(sf.hub().apex);
    const int e = ws.cls[sf.hub().apex][std::lower_bound(in.begin(), in.end(), u.front()) - in.begin()];
    const int c = sf.class_of(0, e);
    if (c < 0) throw PreconditionError("the class of " + per_name(C, p) + " is not proof-irrelevant");
    return {p.carrier, c};
}

Per rel_to_per(Relations& R, const WeakSubobjects& ws, const PEquivRel& rel)
{
    const Category& C = R.cat();
    const StrictFiber& sf = R.square(rel.carrier);
    const Cone& W = sf.hub();
    const int e = sf.rep[0][rel.rel];
    const auto& in = C.into(W.apex);
    for (size_t i = 0; i < in.size(); ++i)
        if (ws.cls[W.apex][i] == e) return {rel.carrier, C.src(in[i]), C.compose(W.legs[0], in[i]), C.compose(W.legs[1], in[i])};
    throw PreconditionError("relation " + R.class_name(rel.carrier, rel.rel) + " has no representing arrow");
}

std::optional<int> coequalizer(const Category& C, int f, int g)
{
    const int X = C.tgt(f);
    for (int Z = 0; Z < C.num_objects(); ++Z)
        for (int q : C.hom(X, Z)) {
            if (C.compose(q, f) != C.compose(q, g)) continue;
            bool universal = true;
            for (int T = 0; T < C.num_objects() && universal; ++T)
                for (int k : C.hom(X, T)) {
                    if (C.compose(k, f) != C.compose(k, g)) continue;
                    int n = 0;
                    for (int h : C.hom(Z, T)) n += C.compose(h, q) == k;
                    if (n != 1) {
                        universal = false;
                        break;
                    }
                }
            if (universal) return q;
        }
    return std::nullopt;
}

Report per_report(CategoryPtr cat, int L)
{
    const Category& C = *cat;
    WeakSubobjects ws = weak_subobjects(cat);
    Relations R(ws.doc, ws.eq, L);
    Report r;
    r.title = "pers";
    const auto pers = internal_pers(C);
    r.notes.push_back(std::to_string(pers.size()) + " internal pers");
    Quant eqv, rt, back, coeq;
    for (const auto& p : pers) {
        const std::string s = per_name(C, p);
        PEquivRel rel;
        try {
            rel = per_to_rel(R, ws, p);
        } catch (const PreconditionError& e) {
            eqv.hold(false, s + ": " + e.what());
            continue;
        }
        eqv.hold(is_p_equiv_rel(R, rel).count(Verdict::fail) == 0, [&] { return s; });
        const Per q = rel_to_per(R, ws, rel);
        back.hold(per_to_rel(R, ws, q) == rel, [&] { return s + " returns as " + per_name(C, q); });
        auto c = coequalizer(C, p.r1, p.r2);
        auto fq = find_quotient(R, rel);
        coeq.hold(c.has_value() == fq.has_value(), [&] { return s + ": coequalizer and quotient disagree on existence"; });
        if (c && fq) {
            std::string why;
            coeq.hold(is_quotient(R, rel, *c, &why).has_value(), [&] { return s + ": " + why; });
        }
    }
    for (int X = 0; X < C.num_objects(); ++X) {
        if (!R.has_square(X)) continue;
        for (const auto& rel : equivalence_relations(R, X)) {
            Per p;
            try {
                p = rel_to_per(R, ws, rel);
            } catch (const PreconditionError&) {
                continue;
            }
            rt.hold(!per_violation(C, p) && per_to_rel(R, ws, p) == rel, [&] { return R.class_name(X, rel.rel); });
        }
    }
    eqv.emit(r, "per-to-relation", "internal pers");
    back.emit(r, "per-round-trip", "internal pers");
    rt.emit(r, "relation-round-trip", "equivalence relations");
    coeq.emit(r, "coequalizer-is-quotient", "internal pers");
    return r;
}

ExactCompletion exact_completion(const Category& C)
{
    ExactCompletion ex;
    const auto pers = internal_pers(C);
    if (pers.empty()) throw ChartTooShallow("no internal pers");
    const int n = static_cast<int>(pers.size());
    Category::Builder b;
    for (const auto& p : pers) b.add_object(per_name(C, p));
    std::vector<int> brep;
    std::map<std::tuple<int, int, int>, int> bclass;
    for (int o1 = 0; o1 < n; ++o1)
        for (int o2 = 0; o2 < n; ++o2) {
            const Per &P = pers[o1], &S = pers[o2];
            std::vector<int> hs = C.hom(P.carrier, S.carrier);
            if (P.carrier == S.carrier) std::stable_partition(hs.begin(), hs.end(), [&](int f) { return f == C.id(P.carrier); });
            std::vector<int> reps, ids;
            for (int f : hs) {
                bool compatible = false;
                for (int t : C.hom(P.rel, S.rel))
                    if (C.compose(S.r1, t) == C.compose(f, P.r1) && C.compose(S.r2, t) == C.compose(f, P.r2)) {
                        compatible = true;
                        break;
                    }
                if (!compatible) continue;
                int k = -1;
                for (size_t i = 0; i < reps.size() && k < 0; ++i)
                    for (int h : C.hom(P.carrier, S.rel))
                        if (C.compose(S.r1, h) == reps[i] && C.compose(S.r2, h) == f) {
                            k = static_cast<int>(i);
                            break;
                        }
                if (k < 0) {
                    reps.push_back(f);
                    ids.push_back(b.add_arrow("[" + C.arr_name(f) + "]:" + per_name(C, P) + ">" + per_name(C, S), o1, o2));
                    brep.push_back(f);
                    k = static_cast<int>(reps.size()) - 1;
                }
                if (o1 == o2 && f == C.id(P.carrier)) b.set_identity(o1, ids[k]);
                bclass[{o1, o2, f}] = ids[k];
            }
        }
    auto cat = std::make_shared<Category>(b.build([&](int g, int f) {
        const int h = C.compose(brep[g], brep[f]);
        auto it = bclass.find({b.src(f), b.tgt(g), h});
        if (it == bclass.end()) throw PreconditionError("composite " + C.arr_name(h) + " is not compatible");
        return it->second;
    }));
    ex.objects.resize(n);
    for (int i = 0; i < n; ++i) ex.objects[cat->object(per_name(C, pers[i]))] = pers[i];
    ex.rep.resize(cat->num_arrows());
    for (int a = 0; a < b.num_arrows(); ++a) {
        const std::string nm = "[" + C.arr_name(brep[a]) + "]:" + per_name(C, pers[b.src(a)]) + ">" + per_name(C, pers[b.tgt(a)]);
        ex.rep[cat->arrow(nm)] = brep[a];
    }
    ex.cat = cat;
    return ex;
}

namespace {

struct ConeClasses {
    std::vector<std::pair<int, std::vector<int>>> cones; // (apex, legs)
    std::vector<int> cls;
    std::vector<int> first; // class -> first cone
    std::map<std::pair<int, std::vector<int>>, int> index;
};

bool factors(const Category& C, const std::pair<int, std::vector<int>>& a, const std::pair<int, std::vector<int>>& b)
{
    for (int h : C.hom(a.first, b.first)) {
        bool ok = true;
        for (size_t i = 0; i < a.second.size() && ok; ++i) ok = C.compose(b.second[i], h) == a.second[i];
        if (ok) return true;
    }
    return false;
}

ConeClasses cone_classes(const Category& C, const std::vector<int>& feet, FinitePoset& order, std::vector<std::string>& names)
{
    ConeClasses cc;
    for (int A = 0; A < C.num_objects(); ++A) {
        std::vector<std::vector<int>> tuples{{}};
        for (int X : feet) {
            std::vector<std::vector<int>> next;
            for (const auto& t : tuples)
                for (int a : C.hom(A, X)) {
                    auto u = t;
                    u.push_back(a);
                    next.push_back(std::move(u));
                }
            tuples = std::move(next);
        }
        for (auto& t : tuples) cc.cones.push_back({A, std::move(t)});
    }
    const size_t n = cc.cones.size();
    cc.cls.assign(n, -1);
    for (size_t i = 0; i < n; ++i) {
        cc.index[cc.cones[i]] = static_cast<int>(i);
        if (cc.cls[i] >= 0) continue;
        cc.cls[i] = static_cast<int>(cc.first.size());
        cc.first.push_back(static_cast<int>(i));
        for (size_t j = i + 1; j < n; ++j)
            if (cc.cls[j] < 0 && factors(C, cc.cones[i], cc.cones[j]) && factors(C, cc.cones[j], cc.cones[i])) cc.cls[j] = cc.cls[i];
    }
    const size_t k = cc.first.size();
    order.elements.clear();
    order.le.assign(k * k, 0);
    names.clear();
    for (size_t a = 0; a < k; ++a) {
        const auto& c = cc.cones[cc.first[a]];
        std::string s = "(" + C.obj_name(c.first) + ";";
        for (size_t i = 0; i < c.second.size(); ++i) s += (i ? "," : "") + C.arr_name(c.second[i]);
        names.push_back(s + ")");
        for (size_t b = 0; b < k; ++b) order.le[a * k + b] = factors(C, c, cc.cones[cc.first[b]]);
    }
    order.elements = names;
    return cc;
}

} // namespace

std::vector<ConeFunctors> cone_functors(CategoryPtr cat, const std::vector<int>& feet, Report* report)
{
    const Category& C = *cat;
    WeakSubobjects ws = weak_subobjects(cat);
    const auto& wps = C.weak_products(feet);
    if (wps.empty()) throw ChartTooShallow("no internal weak product over the feet");
    FinitePoset order;
    std::vector<std::string> names;
    ConeClasses cc = cone_classes(C, feet, order, names);
    std::vector<ConeFunctors> out;
    for (const auto& [W, k] : wps) {
        ConeFunctors cf;
        cf.cone = W;
        cf.classes = names;
        cf.order = order;
        const Lattice& PW = ws.doc.at(W.apex);
        const auto& in = C.into(W.apex);
        cf.U.assign(PW.size(), -1);
        for (size_t i = 0; i < in.size(); ++i) {
            const int e = ws.cls[W.apex][i];
            if (cf.U[e] >= 0) continue;
            std::vector<int> legs;
            for (int p : W.legs) legs.push_back(C.compose(p, in[i]));
            cf.U[e] = cc.cls[cc.index.at({C.src(in[i]), legs})];
        }
        // the largest fill-in class over all cones of the class; a single fill-in depends on the representative
        cf.M.assign(cc.first.size(), -1);
        std::vector<std::vector<int>> seen(cc.first.size());
        for (size_t i = 0; i < cc.cones.size(); ++i)
            for (int h : fill_ins(C, W, cc.cones[i].first, cc.cones[i].second))
                seen[cc.cls[i]].push_back(ws.cls[W.apex][std::lower_bound(in.begin(), in.end(), h) - in.begin()]);
        for (size_t a = 0; a < seen.size(); ++a) {
            for (int e : seen[a])
                if (cf.M[a] < 0 || PW.leq(cf.M[a], e)) cf.M[a] = e;
            for (int e : seen[a])
                if (!PW.leq(e, cf.M[a])) throw ChartTooShallow("fill-ins of " + names[a] + " have no largest class");
        }
        std::string shallow;
        try {
            cf.pi = pi_elements(ws.doc, ws.eq, W).elements;
        } catch (const ChartTooShallow& e) {
            shallow = e.what();
        }
        if (report) {
            const std::string s = C.cone_name(W);
            Quant um, mu, mono, outside;
            long non_pi = 0;
            for (int e = 0; e < PW.size(); ++e) {
                if (e == ws.formal_bottom[W.apex]) continue;
                if (!std::binary_search(cf.pi.begin(), cf.pi.end(), e)) {
                    ++non_pi;
                    continue;
                }
                mu.hold(cf.M[cf.U[e]] == e, [&] { return "element " + PW.name(e); });
            }
            for (size_t a = 0; a < cc.first.size(); ++a) {
                um.hold(cf.U[cf.M[a]] == static_cast<int>(a), [&] { return "class " + names[a]; });
                outside.hold(std::binary_search(cf.pi.begin(), cf.pi.end(), cf.M[a]), [&] { return "M " + names[a] + " is not proof-irrelevant"; });
                for (size_t b = 0; b < cc.first.size(); ++b)
                    mono.hold(!order.leq(static_cast<int>(a), static_cast<int>(b)) || PW.leq(cf.M[a], cf.M[b]),
                              [&] { return names[a] + " <= " + names[b]; });
            }
            um.emit(*report, "U-after-M", s);
            mono.emit(*report, "M-monotone", s);
            if (!shallow.empty()) {
                report->add("M-after-U", s, Verdict::chart_too_shallow, shallow);
                report->add("M-lands-in-pi", s, Verdict::chart_too_shallow, shallow);
            } else {
                mu.emit(*report, "M-after-U", s);
                outside.emit(*report, "M-lands-in-pi", s);
            }
            if (non_pi && shallow.empty()) report->notes.push_back(s + ": " + std::to_string(non_pi) + " weak subobjects outside the proof-irrelevant classes");
        }
        out.push_back(std::move(cf));
    }
    return out;
}

} // namespace bed
