#include "bed/quotient.hpp"

#include <algorithm>
#include <set>

namespace bed {

namespace {

ListArrow lpair(const Category& C, int f, int g) { return {{C.src(f)}, {C.tgt(f), C.tgt(g)}, {0, 0}, {f, g}}; }
ListArrow ltimes(const Category& C, int f, int g) { return {{C.src(f), C.src(g)}, {C.tgt(f), C.tgt(g)}, {0, 1}, {f, g}}; }
ListArrow lproj(const Category& C, int X, int i) { return {{X, X}, {X}, {i}, {C.id(X)}}; }
ListArrow lswap(const Category& C, int X) { return {{X, X}, {X, X}, {1, 0}, {C.id(X), C.id(X)}}; }
ListArrow ldiag(const Category& C, int X) { return {{X}, {X, X}, {0, 0}, {C.id(X), C.id(X)}}; }

int index_in(const std::vector<int>& sorted, int v)
{
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    return it != sorted.end() && *it == v ? static_cast<int>(it - sorted.begin()) : -1;
}

} // namespace

// ---- relation arithmetic ---------------------------------------------------

bool Relations::has_square(int X) { return calc_.fiber({X, X}) != nullptr; }

const StrictFiber& Relations::square(int X)
{
    std::string why;
    const StrictFiber* sf = calc_.fiber({X, X}, &why);
    if (!sf) throw ChartTooShallow(why);
    return *sf;
}

int Relations::delta(int X)
{
    auto v = calc_.delta({X});
    if (!v) throw ChartTooShallow("no fibered equality class over [" + cat().obj_name(X) + "," + cat().obj_name(X) + "]");
    return *v;
}

int Relations::elem_class(int X, int a) { return calc_.fiber({X})->class_of(0, a); }
int Relations::class_elem(int X, int c) { return calc_.fiber({X})->rep[0][c]; }
int Relations::times(int f, int g, int cls) { return calc_.reindex(ltimes(cat(), f, g), cls); }
int Relations::at_pair(int f, int g, int cls) { return class_elem(cat().src(f), calc_.reindex(lpair(cat(), f, g), cls)); }
int Relations::kernel(int f) { return times(f, f, delta(cat().tgt(f))); }

bool Relations::descends(int X, int rho, int alpha)
{
    const Lattice& S = square(X).classes;
    const int c = elem_class(X, alpha);
    const int l = calc_.reindex(lproj(cat(), X, 0), c), r = calc_.reindex(lproj(cat(), X, 1), c);
    return S.leq(S.glb(l, rho), r);
}

std::vector<int> Relations::descent(int X, int rho)
{
    std::vector<int> out;
    for (int a = 0; a < d_.at(X).size(); ++a)
        if (descends(X, rho, a)) out.push_back(a);
    return out;
}

std::string Relations::class_name(int X, int cls) { return square(X).classes.name(cls); }

Report is_p_equiv_rel(Relations& R, const PEquivRel& rho)
{
    const Category& C = R.cat();
    const int X = rho.carrier;
    Report r;
    r.title = "p-equivalence " + C.obj_name(X) + " " + R.class_name(X, rho.rel);
    const Lattice& S = R.square(X).classes;
    ListCalculus& calc = R.calc();
    {
        Quant q;
        const int v = calc.reindex(ldiag(C, X), rho.rel);
        q.hold(v == calc.fiber({X})->classes.top(), [&] { return "P_diag rho=" + calc.fiber({X})->classes.name(v); });
        q.emit(r, "reflexivity", C.obj_name(X));
    }
    {
        Quant q;
        const int v = calc.reindex(lswap(C, X), rho.rel);
        q.hold(S.leq(v, rho.rel), [&] { return "P_swap rho=" + S.name(v); });
        q.emit(r, "symmetry", C.obj_name(X));
    }
    Quant q;
    const StrictFiber* triple = R.bound() >= 3 ? calc.fiber({X, X, X}) : nullptr;
    if (triple) {
        auto leg = [&](int i, int j) { return ListArrow{{X, X, X}, {X, X}, {i, j}, {C.id(X), C.id(X)}}; };
        const Lattice& T = triple->classes;
        const int a = calc.reindex(leg(0, 1), rho.rel), b = calc.reindex(leg(1, 2), rho.rel), c = calc.reindex(leg(0, 2), rho.rel);
        q.hold(T.leq(T.glb(a, b), c), "on the triple list");
        q.emit(r, "transitivity", C.obj_name(X) + " (triple list)");
        return r;
    }
    for (int A = 0; A < C.num_objects(); ++A) {
        const auto& hs = C.hom(A, X);
        const Lattice& FA = R.doctrine().at(A);
        const size_t n = hs.size();
        std::vector<int> t(n * n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) t[i * n + j] = R.at_pair(hs[i], hs[j], rho.rel);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k)
                    q.hold(FA.leq(FA.glb(t[i * n + j], t[j * n + k]), t[i * n + k]), [&] {
                        return "cone (" + C.obj_name(A) + ";" + C.arr_name(hs[i]) + "," + C.arr_name(hs[j]) + "," + C.arr_name(hs[k]) + ")";
                    });
    }
    q.emit(r, "transitivity", C.obj_name(X) + " (internal cones)");
    return r;
}

std::vector<PEquivRel> equivalence_relations(Relations& R, int X)
{
    std::vector<PEquivRel> out;
    for (int c = 0; c < R.square(X).size(); ++c)
        if (is_p_equiv_rel(R, {X, c}).count(Verdict::fail) == 0) out.push_back({X, c});
    return out;
}

std::optional<QuotientCertificate> is_quotient(Relations& R, const PEquivRel& rho, int q, std::string* why)
{
    const Category& C = R.cat();
    const int X = rho.carrier, Z = C.tgt(q);
    auto fail = [&](std::string s) -> std::optional<QuotientCertificate> {
        if (why) *why = std::move(s);
        return std::nullopt;
    };
    if (C.src(q) != X) return fail("wrong domain");
    if (!R.has_square(Z)) return fail("no P^s[" + C.obj_name(Z) + "," + C.obj_name(Z) + "]");
    const Lattice& S = R.square(X).classes;
    if (!S.leq(rho.rel, R.kernel(q))) return fail("does not coequalize");
    QuotientCertificate cert{q, {}};
    for (int Y = 0; Y < C.num_objects(); ++Y) {
        if (!R.has_square(Y)) continue;
        for (int g : C.hom(X, Y)) {
            if (!S.leq(rho.rel, R.kernel(g))) continue;
            std::vector<int> hs;
            for (int h : C.hom(Z, Y))
                if (C.compose(h, q) == g) hs.push_back(h);
            if (hs.size() != 1)
                return fail("competitor " + C.arr_name(g) + " has " + std::to_string(hs.size()) + " factorizations");
            cert.factor.push_back({g, hs.front()});
        }
    }
    return cert;
}

std::optional<QuotientCertificate> find_quotient(Relations& R, const PEquivRel& rho)
{
    const Category& C = R.cat();
    for (int Z = 0; Z < C.num_objects(); ++Z)
        for (int q : C.hom(rho.carrier, Z))
            if (auto c = is_quotient(R, rho, q)) return c;
    return std::nullopt;
}

PEquivRel kernel(Relations& R, int f) { return {R.cat().src(f), R.kernel(f)}; }

Report quotient_flags(Relations& R, const PEquivRel& rho, int q)
{
    const Category& C = R.cat();
    const Doctrine& d = R.doctrine();
    std::string why;
    if (!is_quotient(R, rho, q, &why)) throw PreconditionError(C.arr_name(q) + " is not a quotient: " + why);
    const int X = rho.carrier, Z = C.tgt(q);
    const std::string s = C.arr_name(q);
    Report r;
    r.title = "quotient flags " + s;
    {
        Quant e;
        const int k = R.kernel(q);
        e.hold(k == rho.rel, [&] { return "kernel=" + R.class_name(X, k) + " rho=" + R.class_name(X, rho.rel); });
        e.emit(r, "effective", s);
    }
    {
        Quant e;
        const Lattice& FZ = d.at(Z);
        const auto des = R.descent(X, rho.rel);
        std::set<int> image;
        for (int a = 0; a < FZ.size(); ++a) {
            image.insert(d.P(q, a));
            for (int b = 0; b < FZ.size(); ++b)
                e.hold(!d.at(X).leq(d.P(q, a), d.P(q, b)) || FZ.leq(a, b), [&] { return "order not reflected at " + FZ.name(a) + "," + FZ.name(b); });
        }
        e.hold(image == std::set<int>(des.begin(), des.end()), [&] {
            return "image has " + std::to_string(image.size()) + " elements, descent data " + std::to_string(des.size());
        });
        e.emit(r, "effective-descent", s);
    }
    Quant st;
    for (int f : C.into(Z)) {
        const int Y = C.src(f);
        std::optional<std::pair<int, int>> pb;
        for (int P = 0; P < C.num_objects() && !pb; ++P)
            for (int a : C.hom(P, X)) {
                for (int b : C.hom(P, Y))
                    if (C.compose(q, a) == C.compose(f, b) && classify_weak_pullback(C, q, f, a, b) == ConeClass::strict) {
                        pb = {a, b};
                        break;
                    }
                if (pb) break;
            }
        if (!pb) {
            r.add("stable", s + " along " + C.arr_name(f), Verdict::chart_too_shallow, "no internal pullback");
            continue;
        }
        const int P = C.src(pb->first);
        if (!R.has_square(P)) {
            r.add("stable", s + " along " + C.arr_name(f), Verdict::chart_too_shallow, "no P^s[" + C.obj_name(P) + "," + C.obj_name(P) + "]");
            continue;
        }
        const Lattice& SP = R.square(P).classes;
        PEquivRel pulled{P, SP.glb(R.times(pb->first, pb->first, rho.rel), R.kernel(pb->second))};
        std::string w;
        st.hold(is_quotient(R, pulled, pb->second, &w).has_value(), [&] { return "along " + C.arr_name(f) + ": " + w; });
    }
    st.emit(r, "stable", s);
    return r;
}

// ---- strict targets --------------------------------------------------------

StrictTarget strict_target(const Doctrine& d, const StrictDelta& s)
{
    StrictTarget t;
    t.doc = &d;
    t.product = [&d, &s](int x, int y) -> std::optional<ProductCone> {
        auto it = s.product.find({x, y});
        if (it == s.product.end()) return std::nullopt;
        return ProductCone{it->second.apex, it->second.legs[0], it->second.legs[1]};
    };
    t.eq_pred = [&d, &s](int a, int b) -> std::optional<int> {
        const Category& C = d.cat();
        const int X = C.tgt(a);
        auto it = s.product.find({X, X});
        auto dt = s.delta.find(X);
        if (it == s.product.end() || dt == s.delta.end()) return std::nullopt;
        auto h = fill_ins(C, it->second, C.src(a), {a, b});
        if (h.size() != 1) return std::nullopt;
        return d.P(h.front(), dt->second);
    };
    return t;
}

StrictTarget set_target(const Doctrine& d, const SetChart& chart)
{
    StrictTarget t;
    t.doc = &d;
    t.product = [&d](int x, int y) -> std::optional<ProductCone> {
        for (const auto& [c, k] : d.cat().weak_products({x, y}))
            if (k == ConeClass::strict) return ProductCone{c.apex, c.legs[0], c.legs[1]};
        return std::nullopt;
    };
    t.eq_pred = [&chart](int a, int b) -> std::optional<int> {
        unsigned mask = 0;
        for (size_t w = 0; w < chart.fn[a].size(); ++w)
            if (chart.fn[a][w] == chart.fn[b][w]) mask |= 1u << w;
        return static_cast<int>(mask);
    };
    return t;
}

bool is_regular_epi(const Category& C, int u, std::string* why)
{
    const int X = C.src(u), Y = C.tgt(u);
    std::vector<std::vector<int>> groups;
    for (int A = 0; A < C.num_objects(); ++A) {
        std::map<int, std::vector<int>> by;
        for (int a : C.hom(A, X)) by[C.compose(u, a)].push_back(a);
        for (auto& [k, v] : by)
            if (v.size() > 1) groups.push_back(std::move(v));
    }
    for (int T = 0; T < C.num_objects(); ++T)
        for (int g : C.hom(X, T)) {
            bool ok = true;
            for (const auto& grp : groups) {
                for (int a : grp) ok = ok && C.compose(g, a) == C.compose(g, grp.front());
                if (!ok) break;
            }
            if (!ok) continue;
            int n = 0;
            for (int h : C.hom(Y, T)) n += C.compose(h, u) == g;
            if (n != 1) {
                if (why) *why = "competitor " + C.arr_name(g) + " has " + std::to_string(n) + " factorizations";
                return false;
            }
        }
    return true;
}

bool respects(const StrictTarget& t, const GenRel& rel, int g)
{
    const Category& C = t.doc->cat();
    for (const auto& [a, b, pred] : rel.pairs) {
        auto e = t.eq_pred(C.compose(g, a), C.compose(g, b));
        if (!e || !t.doc->at(C.src(a)).leq(pred, *e)) return false;
    }
    return true;
}

bool is_strict_quotient(const StrictTarget& t, int q, const GenRel& rel, std::string* why)
{
    const Category& C = t.doc->cat();
    if (!respects(t, rel, q)) {
        if (why) *why = "does not coequalize";
        return false;
    }
    const int X = C.src(q), Z = C.tgt(q);
    for (int T = 0; T < C.num_objects(); ++T)
        for (int g : C.hom(X, T)) {
            if (!respects(t, rel, g)) continue;
            int n = 0;
            for (int h : C.hom(Z, T)) n += C.compose(h, q) == g;
            if (n != 1) {
                if (why) *why = "competitor " + C.arr_name(g) + " has " + std::to_string(n) + " factorizations";
                return false;
            }
        }
    return true;
}

// ---- completion ------------------------------------------------------------

int QuotientCompletion::object_of(const PEquivRel& r) const
{
    for (size_t i = 0; i < objects.size(); ++i)
        if (objects[i] == r) return static_cast<int>(i);
    return -1;
}

int QuotientCompletion::arrow_of(int from, int to, int f) const
{
    auto it = classes.find({from, to, f});
    return it == classes.end() ? -1 : it->second;
}

QuotientCompletion quotient_completion(Relations& R)
{
    const Category& C = R.cat();
    const Doctrine& d = R.doctrine();
    QuotientCompletion qc;
    qc.source = d.base;
    std::vector<PEquivRel> objs;
    std::vector<std::vector<int>> des;
    for (int X = 0; X < C.num_objects(); ++X) {
        if (!R.has_square(X)) {
            qc.notes.push_back("no computable P^s[" + C.obj_name(X) + "," + C.obj_name(X) + "]; " + C.obj_name(X) + " carries no relations");
            continue;
        }
        for (const auto& rel : equivalence_relations(R, X)) {
            objs.push_back(rel);
            des.push_back(R.descent(X, rel.rel));
        }
    }
    auto oname = [&](size_t i) { return "(" + C.obj_name(objs[i].carrier) + "," + R.class_name(objs[i].carrier, objs[i].rel) + ")"; };
    Category::Builder b;
    for (size_t i = 0; i < objs.size(); ++i) b.add_object(oname(i));
    std::vector<int> brep;
    std::map<std::tuple<int, int, int>, int> bclass;
    long instances = 0;
    const int n = static_cast<int>(objs.size());
    for (int o1 = 0; o1 < n; ++o1)
        for (int o2 = 0; o2 < n; ++o2) {
            const int X = objs[o1].carrier, Y = objs[o2].carrier;
            const int rho = objs[o1].rel, sigma = objs[o2].rel;
            const Lattice& SX = R.square(X).classes;
            std::vector<int> reps, ids;
            std::vector<int> hs = C.hom(X, Y);
            if (X == Y) std::stable_partition(hs.begin(), hs.end(), [&](int f) { return f == C.id(X); });
            for (int f : hs) {
                if (!SX.leq(rho, R.times(f, f, sigma))) continue;
                for (int beta : des[o2]) {
                    ++instances;
                    if (!R.descends(X, rho, d.P(f, beta)))
                        throw PreconditionError("reindexing along " + C.arr_name(f) + " leaves the descent data of " + oname(o1));
                }
                int k = -1;
                for (size_t i = 0; i < reps.size() && k < 0; ++i)
                    if (SX.leq(rho, R.times(f, reps[i], sigma))) k = static_cast<int>(i);
                if (k < 0) {
                    reps.push_back(f);
                    ids.push_back(b.add_arrow("[" + C.arr_name(f) + "]:" + oname(o1) + ">" + oname(o2), o1, o2));
                    brep.push_back(f);
                    k = static_cast<int>(reps.size()) - 1;
                } else {
                    if (!SX.leq(rho, R.times(reps[k], f, sigma)))
                        throw PreconditionError("arrow equivalence is not symmetric at " + C.arr_name(f));
                    for (int beta : des[o2]) {
                        ++instances;
                        if (d.P(f, beta) != d.P(reps[k], beta))
                            throw PreconditionError("equivalent arrows " + C.arr_name(f) + ", " + C.arr_name(reps[k]) + " reindex differently");
                    }
                }
                if (o1 == o2 && f == C.id(X)) b.set_identity(o1, ids[k]);
                bclass[{o1, o2, f}] = ids[k];
            }
        }
    qc.notes.push_back("well-definedness of descent reindexing checked on " + std::to_string(instances) + " instances");
    auto cat = std::make_shared<Category>(b.build([&](int g, int f) {
        const int h = C.compose(brep[g], brep[f]);
        auto it = bclass.find({b.src(f), b.tgt(g), h});
        if (it == bclass.end()) throw PreconditionError("composite " + C.arr_name(h) + " is not compatible");
        return it->second;
    }));
    const Category& K = *cat;
    std::vector<int> omap(n);
    for (int i = 0; i < n; ++i) omap[i] = K.object(oname(i));
    qc.objects.resize(n);
    qc.des.resize(n);
    for (int i = 0; i < n; ++i) {
        qc.objects[omap[i]] = objs[i];
        qc.des[omap[i]] = des[i];
    }
    qc.rep.resize(K.num_arrows());
    for (const auto& [key, ba] : bclass) {
        const auto& [o1, o2, f] = key;
        const int fa = K.arrow("[" + C.arr_name(brep[ba]) + "]:" + oname(o1) + ">" + oname(o2));
        qc.rep[fa] = brep[ba];
        qc.classes[{omap[o1], omap[o2], f}] = fa;
    }
    qc.doc.base = cat;
    for (int o = 0; o < n; ++o) qc.doc.fiber.push_back(d.at(qc.objects[o].carrier).restrict(qc.des[o]));
    for (int a = 0; a < K.num_arrows(); ++a) {
        const int s = K.src(a), t = K.tgt(a);
        Map m;
        for (int beta : qc.des[t]) m.push_back(index_in(qc.des[s], d.P(qc.rep[a], beta)));
        qc.doc.reindex.push_back(std::move(m));
    }
    // chosen products (W, rho box sigma) and the equality on them
    for (int o1 = 0; o1 < n; ++o1)
        for (int o2 = 0; o2 < n; ++o2) {
            const PEquivRel& r1 = qc.objects[o1];
            const PEquivRel& r2 = qc.objects[o2];
            for (const auto& [W, k] : C.weak_products({r1.carrier, r2.carrier})) {
                if (!R.has_square(W.apex)) continue;
                const Lattice& SW = R.square(W.apex).classes;
                const int box = SW.glb(R.times(W.legs[0], W.legs[0], r1.rel), R.times(W.legs[1], W.legs[1], r2.rel));
                const int o = qc.object_of({W.apex, box});
                if (o < 0) throw PreconditionError("box product over " + C.cone_name(W) + " is not an equivalence relation");
                qc.strict.product[{o1, o2}] = Cone{o, {qc.arrow_of(o, o1, W.legs[0]), qc.arrow_of(o, o2, W.legs[1])}};
                break;
            }
        }
    for (int o = 0; o < n; ++o) {
        auto it = qc.strict.product.find({o, o});
        if (it == qc.strict.product.end()) continue;
        const int w = it->second.apex;
        const int e = R.at_pair(qc.rep[it->second.legs[0]], qc.rep[it->second.legs[1]], qc.objects[o].rel);
        const int i = index_in(qc.des[w], e);
        if (i < 0) throw PreconditionError("equality of " + K.obj_name(o) + " does not descend");
        qc.strict.delta[o] = i;
    }
    // (J,j)
    qc.J.F.obj.assign(C.num_objects(), -1);
    qc.J.F.arr.assign(C.num_arrows(), -1);
    qc.J.f.resize(C.num_objects());
    for (int X = 0; X < C.num_objects(); ++X) {
        if (!R.has_square(X)) continue;
        const int o = qc.object_of({X, R.delta(X)});
        qc.J.F.obj[X] = o;
        for (int a = 0; a < d.at(X).size(); ++a) qc.J.f[X].push_back(index_in(qc.des[o], a));
    }
    for (int f = 0; f < C.num_arrows(); ++f) {
        const int s = qc.J.F.obj[C.src(f)], t = qc.J.F.obj[C.tgt(f)];
        if (s >= 0 && t >= 0) qc.J.F.arr[f] = qc.arrow_of(s, t, f);
    }
    return qc;
}

StrictTarget completion_target(const QuotientCompletion& qc, Relations& R)
{
    StrictTarget t = strict_target(qc.doc, qc.strict);
    t.eq_pred = [&qc, &R](int a, int b) -> std::optional<int> {
        const Category& K = qc.doc.cat();
        const int s = K.src(a);
        const int e = R.at_pair(qc.rep[a], qc.rep[b], qc.objects[K.tgt(a)].rel);
        const int i = index_in(qc.des[s], e);
        if (i < 0) return std::nullopt;
        return i;
    };
    return t;
}

namespace {

bool is_mono(const Category& K, int c)
{
    for (int A = 0; A < K.num_objects(); ++A) {
        std::set<int> seen;
        for (int a : K.hom(A, K.src(c)))
            if (!seen.insert(K.compose(c, a)).second) return false;
    }
    return true;
}

} // namespace

Report check_QD(const QuotientCompletion& qc, Relations& R)
{
    const Category& C = R.cat();
    const Doctrine& P = qc.doc;
    const Category& K = P.cat();
    const StrictTarget T = completion_target(qc, R);
    Report r;
    r.title = "check-QD";
    r.notes = qc.notes;
    {
        auto lv = K.check_laws();
        r.add("category-laws", "completion", lv.empty() ? Verdict::pass : Verdict::fail, lv.empty() ? "" : lv.front(), K.num_arrows());
        auto dv = validate_doctrine(P);
        r.add("doctrine-laws", "completion", dv.empty() ? Verdict::pass : Verdict::fail, dv.empty() ? "" : dv.front(), K.num_arrows());
    }
    for (int o1 = 0; o1 < K.num_objects(); ++o1)
        for (int o2 = 0; o2 < K.num_objects(); ++o2) {
            const std::string s = K.obj_name(o1) + " x " + K.obj_name(o2);
            auto it = qc.strict.product.find({o1, o2});
            if (it == qc.strict.product.end()) {
                r.add("strict-product", s, Verdict::chart_too_shallow, "no weak product with computable P^s[W,W]");
                continue;
            }
            const ConeClass k = classify_cone(K, it->second);
            r.add("strict-product", s, k == ConeClass::strict ? Verdict::pass : Verdict::fail, k == ConeClass::strict ? "" : to_string(k), 1);
        }
    r.merge(check_strict_elementary(P, qc.strict));
    r.merge(comprehension_report(P));
    {
        Quant q;
        for (int o = 0; o < K.num_objects(); ++o)
            for (int a = 0; a < P.at(o).size(); ++a)
                if (auto c = find_comprehension(P, o, a)) q.hold(is_mono(K, *c), [&] { return K.arr_name(*c); });
        q.emit(r, "strict-comprehension", "completion");
    }
    {
        Quant q;
        for (int o = 0; o < K.num_objects(); ++o) {
            if (!qc.strict.product.count({o, o})) continue;
            for (int A = 0; A < K.num_objects(); ++A)
                for (int f : K.hom(A, o))
                    for (int g : K.hom(A, o)) {
                        auto e = T.eq_pred(f, g);
                        if (e && *e == P.at(A).top()) q.hold(f == g, [&] { return K.arr_name(f) + " vs " + K.arr_name(g); });
                    }
        }
        q.emit(r, "comprehensive-diagonals", "completion");
    }
    // every P-bar equivalence relation on (X,rho) is (X,mu) with rho <= mu, read on generalized pairs;
    // its canonical quotient is [1_X]
    for (int o = 0; o < K.num_objects(); ++o) {
        const int X = qc.objects[o].carrier;
        const Lattice& FO = P.at(o);
        for (int t = 0; t < K.num_objects(); ++t) {
            if (qc.objects[t].carrier != X) continue;
            const int q = qc.arrow_of(o, t, C.id(X));
            if (q < 0) continue;
            const int mu = qc.objects[t].rel;
            const std::string s = K.arr_name(q);
            GenRel g;
            bool read = true;
            for (int A = 0; A < K.num_objects() && read; ++A)
                for (int a : K.hom(A, o))
                    for (int b : K.hom(A, o)) {
                        const int i = index_in(qc.des[A], R.at_pair(qc.rep[a], qc.rep[b], mu));
                        read = read && i >= 0;
                        g.pairs.push_back({a, b, i});
                    }
            if (!read) {
                r.add("quotient", s, Verdict::fail, "relation does not descend to the completion");
                continue;
            }
            std::string why;
            const bool isq = is_strict_quotient(T, q, g, &why);
            r.add("quotient", s, isq ? Verdict::pass : Verdict::fail, why, 1);
            if (!isq) continue;
            {
                Quant e2;
                for (const auto& [a, b, pred] : g.pairs) {
                    auto k = T.eq_pred(K.compose(q, a), K.compose(q, b));
                    e2.hold(k && *k == pred, [&] { return "on " + K.arr_name(a) + "," + K.arr_name(b); });
                }
                e2.emit(r, "effective", s);
            }
            {
                Quant ed;
                const Lattice& FT = P.at(t);
                std::set<int> image, des;
                for (int al = 0; al < FO.size(); ++al) {
                    bool in = true;
                    for (const auto& [a, b, pred] : g.pairs) {
                        const Lattice& FA = P.at(K.src(a));
                        in = in && FA.leq(FA.glb(P.P(a, al), pred), P.P(b, al));
                    }
                    if (in) des.insert(al);
                }
                for (int a = 0; a < FT.size(); ++a) {
                    image.insert(P.P(q, a));
                    for (int b2 = 0; b2 < FT.size(); ++b2)
                        ed.hold(!FO.leq(P.P(q, a), P.P(q, b2)) || FT.leq(a, b2), "order not reflected");
                }
                ed.hold(image == des && static_cast<int>(image.size()) == FT.size(), "image differs from the descent data");
                ed.emit(r, "effective-descent", s);
            }
            Quant st;
            for (int f : K.into(t)) {
                const int Y = K.src(f);
                std::optional<int> pb;
                for (int Pp = 0; Pp < K.num_objects() && !pb; ++Pp)
                    for (int a : K.hom(Pp, o)) {
                        for (int b2 : K.hom(Pp, Y))
                            if (K.compose(q, a) == K.compose(f, b2) && classify_weak_pullback(K, q, f, a, b2) == ConeClass::strict) {
                                pb = b2;
                                break;
                            }
                        if (pb) break;
                    }
                if (!pb) {
                    r.add("stable", s + " along " + K.arr_name(f), Verdict::chart_too_shallow, "no internal pullback");
                    continue;
                }
                std::string w2;
                st.hold(is_regular_epi(K, *pb, &w2), [&] { return "along " + K.arr_name(f) + ": " + w2; });
            }
            st.emit(r, "stable", s);
        }
    }
    return r;
}

// ---- morphisms -------------------------------------------------------------

namespace {

std::vector<int> domain(const DoctrineMorphism& m)
{
    std::vector<int> out;
    for (size_t X = 0; X < m.F.obj.size(); ++X)
        if (m.F.obj[X] >= 0) out.push_back(static_cast<int>(X));
    return out;
}

GenRel image_relation(Relations& R, const DoctrineMorphism& m, const PEquivRel& rho)
{
    const Category& C = R.cat();
    GenRel g;
    for (int A : domain(m))
        for (int a : C.hom(A, rho.carrier))
            for (int b : C.hom(A, rho.carrier)) g.pairs.push_back({m.F.arr[a], m.F.arr[b], m.f[A][R.at_pair(a, b, rho.rel)]});
    return g;
}

void equality_check(Report& r, Relations& src, const StrictTarget& tgt, const DoctrineMorphism& m, const std::string& name)
{
    const Category& C = src.cat();
    Quant q;
    long shallow = 0;
    for (int X : domain(m))
        for (const auto& [p, k] : C.weak_products({X, X})) {
            if (m.F.obj[p.apex] < 0) {
                ++shallow;
                continue;
            }
            auto e = tgt.eq_pred(m.F.arr[p.legs[0]], m.F.arr[p.legs[1]]);
            if (!e) {
                ++shallow;
                continue;
            }
            const int v = m.f[p.apex][delta_at(src.doctrine(), src.equality(), p)];
            q.hold(v == *e, [&] { return "cone " + C.cone_name(p); });
        }
    q.emit(r, name, "fibered equality");
    if (shallow) r.add(name, "fibered equality", Verdict::chart_too_shallow, "cones outside the domain or without a target product", shallow);
}

} // namespace

Report morphism_classify(Relations& src, const StrictTarget& tgt, const DoctrineMorphism& m)
{
    const Doctrine& d = src.doctrine();
    const Category& C = d.cat();
    const Doctrine& T = *tgt.doc;
    auto v = validate_morphism(d, T, m);
    if (!v.empty()) throw PreconditionError("not a doctrine morphism: " + v.front());
    Report r;
    r.title = "morphism-classify";
    {
        Quant q;
        for (int X : domain(m)) q.hold(m.f[X][d.at(X).top()] == T.at(m.F.obj[X]).top(), [&] { return "top at " + C.obj_name(X); });
        q.emit(r, "PD", "fiber maps preserve top and meets; naturality");
    }
    equality_check(r, src, tgt, m, "ED");
    {
        Quant q;
        long missing = 0;
        for (int X : domain(m))
            for (int a = 0; a < d.at(X).size(); ++a) {
                auto c = find_comprehension(d, X, a);
                if (!c || m.F.obj[C.src(*c)] < 0) {
                    ++missing;
                    continue;
                }
                auto fl = comprehension_classify(T, m.F.obj[X], m.f[X][a], m.F.arr[*c]);
                q.hold(fl.full && fl.weak, [&] { return "comprehension " + C.arr_name(*c) + " of " + d.elem(X, a); });
            }
        q.emit(r, "EqD", "comprehensions preserved");
        if (missing) r.add("EqD", "comprehensions preserved", Verdict::chart_too_shallow, "elements without an internal comprehension in the domain", missing);
    }
    {
        Quant q;
        long missing = 0;
        for (int X : domain(m)) {
            if (!src.has_square(X)) continue;
            for (const auto& rho : equivalence_relations(src, X)) {
                auto qt = find_quotient(src, rho);
                if (!qt) continue;
                if (m.F.obj[C.tgt(qt->q)] < 0) {
                    ++missing;
                    continue;
                }
                std::string why;
                q.hold(is_strict_quotient(tgt, m.F.arr[qt->q], image_relation(src, m, rho), &why),
                       [&] { return C.arr_name(qt->q) + ": " + why; });
            }
        }
        q.emit(r, "QD", "quotients preserved");
        if (missing) r.add("QD", "quotients preserved", Verdict::chart_too_shallow, "quotients outside the domain", missing);
    }
    return r;
}

Report is_left_covering(Relations& src, const StrictTarget& tgt, const DoctrineMorphism& m)
{
    const Doctrine& d = src.doctrine();
    const Category& C = d.cat();
    const Doctrine& T = *tgt.doc;
    const Category& D = T.cat();
    Report r;
    r.title = "left-covering";
    if (comprehension_report(d).count(Verdict::fail) > 0) {
        r.add("premise", "full weak comprehensions", Verdict::premise_failure, "the source lacks full weak comprehensions");
        return r;
    }
    if (auto w = comprehensive_diagonals_counterexample(d, src.equality())) {
        r.add("premise", "comprehensive diagonals", Verdict::premise_failure, *w);
        return r;
    }
    auto v = validate_morphism(d, T, m);
    if (!v.empty()) {
        r.add("premise", "doctrine morphism", Verdict::premise_failure, v.front());
        return r;
    }
    {
        Quant q;
        long shallow = 0;
        for (int X : domain(m))
            for (int Y : domain(m))
                for (const auto& [p, k] : C.weak_products({X, Y})) {
                    if (m.F.obj[p.apex] < 0) {
                        ++shallow;
                        continue;
                    }
                    auto P = tgt.product(m.F.obj[X], m.F.obj[Y]);
                    if (!P) {
                        ++shallow;
                        continue;
                    }
                    auto u = fill_ins(D, Cone{P->apex, {P->p1, P->p2}}, m.F.obj[p.apex], {m.F.arr[p.legs[0]], m.F.arr[p.legs[1]]});
                    std::string why = u.size() == 1 ? "" : "no unique comparison arrow";
                    q.hold(u.size() == 1 && is_regular_epi(D, u.front(), &why), [&] { return "cone " + C.cone_name(p) + ": " + why; });
                }
        q.emit(r, "weak-product-quotient", "weak products");
        if (shallow) r.add("weak-product-quotient", "weak products", Verdict::chart_too_shallow, "cones outside the domain or without a target product", shallow);
    }
    {
        Quant q;
        for (int X : domain(m)) q.hold(m.f[X][d.at(X).top()] == T.at(m.F.obj[X]).top(), [&] { return "top at " + C.obj_name(X); });
        q.emit(r, "fiber-structure", "top and meets");
        equality_check(r, src, tgt, m, "fiber-structure");
    }
    {
        Quant q;
        long shallow = 0;
        for (int A : domain(m))
            for (int a = 0; a < d.at(A).size(); ++a) {
                auto c = find_comprehension(d, A, a);
                if (!c || m.F.obj[C.src(*c)] < 0) {
                    ++shallow;
                    continue;
                }
                auto c2 = find_comprehension(T, m.F.obj[A], m.f[A][a]);
                if (!c2) {
                    ++shallow;
                    continue;
                }
                const int Fc = m.F.arr[*c];
                bool ok = false;
                for (int u : D.hom(D.src(Fc), D.src(*c2)))
                    if (D.compose(*c2, u) == Fc && is_regular_epi(D, u)) {
                        ok = true;
                        break;
                    }
                q.hold(ok, [&] { return "comprehension " + C.arr_name(*c) + " of " + d.elem(A, a); });
            }
        q.emit(r, "comprehension-factor", "comprehensions");
        if (shallow) r.add("comprehension-factor", "comprehensions", Verdict::chart_too_shallow, "no internal comprehension on one side", shallow);
    }
    return r;
}

Lifting lift_left_covering(Relations& src, const QuotientCompletion& qc, const StrictTarget& tgt, const DoctrineMorphism& m)
{
    const Category& C = src.cat();
    const Doctrine& T = *tgt.doc;
    const Category& D = T.cat();
    const Category& K = qc.doc.cat();
    Report lc = is_left_covering(src, tgt, m);
    if (lc.failed() || lc.count(Verdict::premise_failure) > 0) throw PreconditionError("the morphism is not left covering");
    Lifting L;
    L.report.title = "lift";
    const int n = K.num_objects();
    L.quotient.assign(n, -1);
    for (int o = 0; o < n; ++o) {
        const PEquivRel& rho = qc.objects[o];
        const int FX = m.F.obj[rho.carrier];
        if (FX < 0) throw ChartTooShallow(C.obj_name(rho.carrier) + " is outside the domain of the morphism");
        const GenRel g = image_relation(src, m, rho);
        if (rho.rel == src.delta(rho.carrier) && is_strict_quotient(tgt, D.id(FX), g)) {
            L.quotient[o] = D.id(FX);
            continue;
        }
        for (int Z = 0; Z < D.num_objects() && L.quotient[o] < 0; ++Z)
            for (int q : D.hom(FX, Z))
                if (is_strict_quotient(tgt, q, g)) {
                    L.quotient[o] = q;
                    break;
                }
        if (L.quotient[o] < 0) throw ChartTooShallow("no internal quotient of the image of " + K.obj_name(o));
    }
    DoctrineMorphism& bar = L.bar;
    bar.F.obj.resize(n);
    for (int o = 0; o < n; ++o) bar.F.obj[o] = D.tgt(L.quotient[o]);
    bar.F.arr.resize(K.num_arrows());
    for (int a = 0; a < K.num_arrows(); ++a) {
        const int s = K.src(a), t = K.tgt(a);
        const int want = D.compose(L.quotient[t], m.F.arr[qc.rep[a]]);
        std::vector<int> hs;
        for (int h : D.hom(bar.F.obj[s], bar.F.obj[t]))
            if (D.compose(h, L.quotient[s]) == want) hs.push_back(h);
        if (hs.size() != 1) throw PreconditionError("induced arrow for " + K.arr_name(a) + " is not unique");
        bar.F.arr[a] = hs.front();
    }
    bar.f.resize(n);
    for (int o = 0; o < n; ++o) {
        const int X = qc.objects[o].carrier;
        const int u = L.quotient[o];
        const Lattice& FZ = T.at(bar.F.obj[o]);
        for (int e : qc.des[o]) {
            const int want = m.f[X][e];
            int found = -1;
            for (int b = 0; b < FZ.size(); ++b)
                if (T.P(u, b) == want) {
                    if (found >= 0) throw PreconditionError("reindexing along the quotient of " + K.obj_name(o) + " is not injective");
                    found = b;
                }
            if (found < 0) throw PreconditionError("image of " + qc.doc.elem(o, index_in(qc.des[o], e)) + " does not descend along the quotient");
            bar.f[o].push_back(found);
        }
    }
    Report& r = L.report;
    {
        auto v = validate_functor(K, D, bar.F);
        r.add("functor", "Fbar", v.empty() ? Verdict::pass : Verdict::fail, v.empty() ? "" : v.front(), K.num_arrows());
        auto w = validate_morphism(qc.doc, T, bar);
        r.add("natural", "fbar", w.empty() ? Verdict::pass : Verdict::fail, w.empty() ? "" : w.front(), n);
    }
    {
        Quant iso, nat, fib;
        for (int X : domain(m)) {
            const int JX = qc.J.F.obj[X];
            if (JX < 0) continue;
            const int th = L.quotient[JX];
            bool inv = false;
            for (int v : D.hom(D.tgt(th), D.src(th))) inv = inv || (D.compose(v, th) == D.id(D.src(th)) && D.compose(th, v) == D.id(D.tgt(th)));
            iso.hold(inv, [&] { return "component at " + C.obj_name(X) + " is not invertible"; });
            for (int a = 0; a < src.doctrine().at(X).size(); ++a)
                fib.hold(T.P(th, bar.f[JX][qc.J.f[X][a]]) == m.f[X][a], [&] { return "fiber at " + C.obj_name(X) + " on " + src.doctrine().elem(X, a); });
        }
        for (int f = 0; f < C.num_arrows(); ++f) {
            const int X = C.src(f), Y = C.tgt(f);
            if (m.F.obj[X] < 0 || m.F.obj[Y] < 0 || qc.J.F.obj[X] < 0 || qc.J.F.obj[Y] < 0) continue;
            const int lhs = D.compose(bar.F.arr[qc.J.F.arr[f]], L.quotient[qc.J.F.obj[X]]);
            const int rhs = D.compose(L.quotient[qc.J.F.obj[Y]], m.F.arr[f]);
            nat.hold(lhs == rhs, [&] { return "naturality at " + C.arr_name(f); });
        }
        iso.emit(r, "composite-iso", "components");
        nat.emit(r, "composite-iso", "naturality");
        fib.emit(r, "composite-iso", "fibers");
    }
    {
        Quant q;
        for (int a = 0; a < K.num_arrows(); ++a) {
            const int s = K.src(a), t = K.tgt(a);
            if (s == t || qc.objects[s].carrier != qc.objects[t].carrier || qc.arrow_of(s, t, C.id(qc.objects[s].carrier)) != a) continue;
            std::string why;
            q.hold(is_regular_epi(D, bar.F.arr[a], &why), [&] { return K.arr_name(a) + ": " + why; });
        }
        q.emit(r, "preserves-quotients", "canonical quotients");
    }
    return L;
}

// ---- slices ----------------------------------------------------------------

SliceRelations slice_relations(Relations& R, const SliceDoctrine& s, Relations& RS, int xo)
{
    const Category& C = R.cat();
    const Doctrine& d = R.doctrine();
    SliceRelations sr;
    sr.x = s.slice.object_arrow[xo];
    const int X = C.src(sr.x);
    const Cone& hub = RS.square(xo).hub();
    sr.apex = C.src(s.slice.object_arrow[hub.apex]);
    sr.pi1 = s.slice.arrow_base[hub.legs[0]];
    sr.pi2 = s.slice.arrow_base[hub.legs[1]];
    sr.rho = R.kernel(sr.x);
    const Cone& W = R.square(X).hub();
    auto cs = fill_ins(C, W, sr.apex, {sr.pi1, sr.pi2});
    if (cs.empty()) throw ChartTooShallow("no arrow from the weak pullback into " + C.cone_name(W));
    sr.comprehension = cs.front();
    const int rw = R.at_pair(W.legs[0], W.legs[1], sr.rho);
    auto fl = comprehension_classify(d, W.apex, rw, sr.comprehension);
    if (!(fl.weak && fl.full)) throw PreconditionError(C.arr_name(sr.comprehension) + " is not a full weak comprehension of the kernel of " + C.arr_name(sr.x));
    return sr;
}

int rel_to_slice(Relations& R, const SliceRelations& sr, int sigma)
{
    const int X = R.cat().src(sr.x);
    if (!R.square(X).classes.leq(sigma, sr.rho)) throw PreconditionError("relation is not below the kernel of " + R.cat().arr_name(sr.x));
    return R.at_pair(sr.pi1, sr.pi2, sigma);
}

namespace {

std::optional<Map> slice_exists(Relations& R, const SliceRelations& sr)
{
    const int X = R.cat().src(sr.x);
    const Lattice& S = R.square(X).classes;
    Map m(S.size());
    for (int c = 0; c < S.size(); ++c) m[c] = R.at_pair(sr.pi1, sr.pi2, c);
    return left_adjoint(S, R.doctrine().at(sr.apex), m);
}

bool slice_descends(const Doctrine& d, const SliceRelations& sr, int r, int alpha)
{
    const Lattice& FC = d.at(sr.apex);
    return FC.leq(FC.glb(d.P(sr.pi1, alpha), r), d.P(sr.pi2, alpha));
}

std::vector<int> slice_descent(const Doctrine& d, const SliceRelations& sr, int r)
{
    std::vector<int> out;
    const int X = d.cat().src(sr.x);
    for (int a = 0; a < d.at(X).size(); ++a)
        if (slice_descends(d, sr, r, a)) out.push_back(a);
    return out;
}

} // namespace

int rel_from_slice(Relations& R, const SliceRelations& sr, int r)
{
    auto E = slice_exists(R, sr);
    if (!E) throw PreconditionError("no left adjoint along the comprehension of the kernel of " + R.cat().arr_name(sr.x));
    return (*E)[r];
}

Report slice_relation_report(Relations& R, const SliceDoctrine& s, Relations& RS)
{
    const Category& C = R.cat();
    const Doctrine& d = R.doctrine();
    const Category& SC = s.slice.cat;
    Report r;
    r.title = "slice relations";
    {
        Quant q;
        long shallow = 0;
        for (int X = 0; X < C.num_objects(); ++X)
            for (int a = 0; a < d.at(X).size(); ++a) {
                auto c = find_comprehension(d, X, a);
                if (!c) {
                    ++shallow;
                    continue;
                }
                const Lattice& FX = d.at(X);
                Map m(FX.size());
                for (int b = 0; b < FX.size(); ++b) m[b] = d.P(*c, b);
                auto E = left_adjoint(FX, d.at(C.src(*c)), m);
                if (!E) {
                    q.hold(false, "no left adjoint along " + C.arr_name(*c));
                    continue;
                }
                for (int b = 0; b < FX.size(); ++b)
                    q.hold((*E)[m[b]] == FX.glb(a, b), [&] { return "alpha=" + FX.name(a) + " beta=" + FX.name(b); });
            }
        q.emit(r, "comprehension-exists", "descent data");
        if (shallow) r.add("comprehension-exists", "descent data", Verdict::chart_too_shallow, "no internal comprehension", shallow);
    }
    Quant b2, b3, p1, p2, rt;
    for (int xo = 0; xo < SC.num_objects(); ++xo) {
        if (!RS.has_square(xo)) {
            r.add("slice-relations", SC.obj_name(xo), Verdict::chart_too_shallow, "no computable slice strict fiber");
            continue;
        }
        SliceRelations sr;
        try {
            sr = slice_relations(R, s, RS, xo);
        } catch (const ChartTooShallow& e) {
            r.add("slice-relations", SC.obj_name(xo), Verdict::chart_too_shallow, e.what());
            continue;
        }
        const int X = C.src(sr.x);
        const Lattice& S = R.square(X).classes;
        const Lattice& FC = d.at(sr.apex);
        auto E = slice_exists(R, sr);
        if (!E) {
            b2.hold(false, "no left adjoint at " + SC.obj_name(xo));
            continue;
        }
        for (int g = 0; g < S.size(); ++g)
            b2.hold((*E)[R.at_pair(sr.pi1, sr.pi2, g)] == S.glb(sr.rho, g), [&] { return SC.obj_name(xo) + " gamma=" + S.name(g); });
        // descent along the kernel of {rho}_s, read on generalized pairs with equal projections
        for (int beta = 0; beta < FC.size(); ++beta) {
            bool in = true;
            for (int Z = 0; Z < C.num_objects() && in; ++Z)
                for (int a : C.hom(Z, sr.apex))
                    for (int b : C.hom(Z, sr.apex))
                        if (C.compose(sr.pi1, a) == C.compose(sr.pi1, b) && C.compose(sr.pi2, a) == C.compose(sr.pi2, b))
                            in = in && d.P(a, beta) == d.P(b, beta);
            if (in) b3.hold(R.at_pair(sr.pi1, sr.pi2, (*E)[beta]) == beta, [&] { return SC.obj_name(xo) + " beta=" + FC.name(beta); });
        }
        for (const auto& sigma : equivalence_relations(R, X)) {
            if (!S.leq(sigma.rel, sr.rho)) continue;
            const int e = rel_to_slice(R, sr, sigma.rel);
            const int c = RS.square(xo).class_of(0, e);
            const std::string w = SC.obj_name(xo) + " sigma=" + S.name(sigma.rel);
            p1.hold(c >= 0 && is_p_equiv_rel(RS, {xo, c}).count(Verdict::fail) == 0, [&] { return w + " is not a slice equivalence relation"; });
            p1.hold(R.descent(X, sigma.rel) == slice_descent(d, sr, e), [&] { return w + " descent differs"; });
            rt.hold(rel_from_slice(R, sr, e) == sigma.rel, [&] { return w; });
        }
        for (const auto& rr : equivalence_relations(RS, xo)) {
            const int e = RS.square(xo).rep[0][rr.rel];
            const int ex = (*E)[e];
            const std::string w = SC.obj_name(xo) + " r=" + FC.name(e);
            p2.hold(is_p_equiv_rel(R, {X, ex}).count(Verdict::fail) == 0, [&] { return w + " pushes to a non-equivalence"; });
            p2.hold(R.descent(X, ex) == slice_descent(d, sr, e), [&] { return w + " descent differs"; });
        }
    }
    b2.emit(r, "strict-comprehension-exists", "slice objects");
    b3.emit(r, "exists-section", "slice objects");
    p1.emit(r, "relations-to-slice", "slice objects");
    p2.emit(r, "relations-from-slice", "slice objects");
    rt.emit(r, "round-trip", "slice objects");
    return r;
}

Report slice_quotient_commute(const Doctrine& d, const EqualityAssignment& eq, int A, int L)
{
    const Category& C = d.cat();
    Report r;
    r.title = "slice/quotient commutation over " + C.obj_name(A);
    if (existential_report(d, eq).failed()) {
        r.add("premise", "existential", Verdict::premise_failure, "the doctrine is not existential");
        return r;
    }
    if (comprehension_report(d).count(Verdict::fail) > 0) {
        r.add("premise", "full weak comprehensions", Verdict::premise_failure, "missing full weak comprehensions");
        return r;
    }
    if (auto w = comprehensive_diagonals_counterexample(d, eq)) {
        r.add("premise", "comprehensive diagonals", Verdict::premise_failure, *w);
        return r;
    }
    Relations R(d, eq, L);
    QuotientCompletion qc = quotient_completion(R);
    SliceDoctrine s;
    try {
        s = slice_doctrine(d, eq, A);
    } catch (const ChartTooShallow& e) {
        r.add("slice", C.obj_name(A), Verdict::chart_too_shallow, e.what());
        return r;
    }
    Relations RS(s.doc, s.eq, L);
    r.merge(slice_relation_report(R, s, RS));
    QuotientCompletion qs = quotient_completion(RS);
    const Category& Lc = qs.doc.cat();
    const int a0 = qc.object_of({A, R.delta(A)});
    if (a0 < 0) {
        r.add("slice", C.obj_name(A), Verdict::chart_too_shallow, "no (A, delta) in the completion");
        return r;
    }
    Slice sl = slice_category(qc.doc.cat(), a0);
    const Category& Rc = sl.cat;
    const Category& K = qc.doc.cat();
    const Category& SC = s.slice.cat;
    std::map<int, int> right_of_arrow; // completion arrow into (A,delta) -> right object
    for (int o = 0; o < Rc.num_objects(); ++o) right_of_arrow[sl.object_arrow[o]] = o;
    std::map<std::tuple<int, int, int>, int> right_arrow; // (src, tgt, completion arrow)
    for (int a = 0; a < Rc.num_arrows(); ++a) right_arrow[{Rc.src(a), Rc.tgt(a), sl.arrow_base[a]}] = a;
    std::map<int, int> slice_obj_of; // base arrow into A -> slice object
    for (int o = 0; o < SC.num_objects(); ++o) slice_obj_of[s.slice.object_arrow[o]] = o;
    std::map<std::tuple<int, int, int>, int> slice_arrow;
    for (int a = 0; a < SC.num_arrows(); ++a) slice_arrow[{SC.src(a), SC.tgt(a), s.slice.arrow_base[a]}] = a;

    Functor M{std::vector<int>(Lc.num_objects(), -1), std::vector<int>(Lc.num_arrows(), -1)};
    Functor N{std::vector<int>(Rc.num_objects(), -1), std::vector<int>(Rc.num_arrows(), -1)};
    std::vector<int> Mcarrier(Lc.num_objects(), -1);
    Quant mo, no, fib;
    for (int o = 0; o < Lc.num_objects(); ++o) {
        const int xo = qs.objects[o].carrier;
        const SliceRelations sr = slice_relations(R, s, RS, xo);
        const int e = RS.square(xo).rep[0][qs.objects[o].rel];
        const int lam = rel_from_slice(R, sr, e);
        const int X = C.src(sr.x);
        const int ox = qc.object_of({X, lam});
        const int ar = ox < 0 ? -1 : qc.arrow_of(ox, a0, sr.x);
        auto it = ar < 0 ? right_of_arrow.end() : right_of_arrow.find(ar);
        mo.hold(it != right_of_arrow.end(), [&] { return Lc.obj_name(o); });
        if (it == right_of_arrow.end()) continue;
        M.obj[o] = it->second;
        Mcarrier[o] = ox;
        std::vector<int> left_des = qs.des[o];
        fib.hold(left_des == qc.des[ox], [&] { return Lc.obj_name(o) + " vs " + K.obj_name(ox); });
    }
    for (int a = 0; a < Lc.num_arrows(); ++a) {
        const int s0 = Lc.src(a), t0 = Lc.tgt(a);
        if (M.obj[s0] < 0 || M.obj[t0] < 0) continue;
        const int f = s.slice.arrow_base[qs.rep[a]];
        const int ka = qc.arrow_of(Mcarrier[s0], Mcarrier[t0], f);
        auto it = right_arrow.find({M.obj[s0], M.obj[t0], ka});
        mo.hold(it != right_arrow.end(), [&] { return Lc.arr_name(a); });
        if (it != right_arrow.end()) M.arr[a] = it->second;
    }
    for (int o = 0; o < Rc.num_objects(); ++o) {
        const int u = sl.object_arrow[o];
        const int x = qc.rep[u];
        auto xs = slice_obj_of.find(x);
        if (xs == slice_obj_of.end() || !RS.has_square(xs->second)) {
            no.hold(false, [&] { return Rc.obj_name(o); });
            continue;
        }
        const SliceRelations sr = slice_relations(R, s, RS, xs->second);
        const int lam = qc.objects[K.src(u)].rel;
        const int cls = RS.square(xs->second).class_of(0, rel_to_slice(R, sr, lam));
        const int lo = cls < 0 ? -1 : qs.object_of({xs->second, cls});
        no.hold(lo >= 0, [&] { return Rc.obj_name(o); });
        N.obj[o] = lo;
    }
    for (int a = 0; a < Rc.num_arrows(); ++a) {
        const int s0 = N.obj[Rc.src(a)], t0 = N.obj[Rc.tgt(a)];
        if (s0 < 0 || t0 < 0) continue;
        const int f = qc.rep[sl.arrow_base[a]];
        auto it = slice_arrow.find({qs.objects[s0].carrier, qs.objects[t0].carrier, f});
        const int la = it == slice_arrow.end() ? -1 : qs.arrow_of(s0, t0, it->second);
        no.hold(la >= 0, [&] { return Rc.arr_name(a); });
        N.arr[a] = la;
    }
    mo.emit(r, "M-defined", "completion of the slice");
    no.emit(r, "N-defined", "slice of the completion");
    fib.emit(r, "fibers-agree", "m = identity");
    {
        auto v = validate_functor(Lc, Rc, M);
        r.add("M-functor", "M", v.empty() ? Verdict::pass : Verdict::fail, v.empty() ? "" : v.front(), Lc.num_arrows());
        auto w = validate_functor(Rc, Lc, N);
        r.add("N-functor", "N", w.empty() ? Verdict::pass : Verdict::fail, w.empty() ? "" : w.front(), Rc.num_arrows());
    }
    {
        Quant nm, mn;
        for (int o = 0; o < Lc.num_objects(); ++o) nm.hold(M.obj[o] >= 0 && N.obj[M.obj[o]] == o, [&] { return Lc.obj_name(o); });
        for (int a = 0; a < Lc.num_arrows(); ++a) nm.hold(M.arr[a] >= 0 && N.arr[M.arr[a]] == a, [&] { return Lc.arr_name(a); });
        for (int o = 0; o < Rc.num_objects(); ++o) mn.hold(N.obj[o] >= 0 && M.obj[N.obj[o]] == o, [&] { return Rc.obj_name(o); });
        for (int a = 0; a < Rc.num_arrows(); ++a) mn.hold(N.arr[a] >= 0 && M.arr[N.arr[a]] == a, [&] { return Rc.arr_name(a); });
        nm.emit(r, "N-after-M-identity", "completion of the slice");
        mn.emit(r, "M-after-N-identity", "slice of the completion");
    }
    {
        Equivalence e = find_equivalence(Lc, Rc);
        const bool ok = e.status == Equivalence::Status::found && verify_equivalence(Lc, Rc, e).empty();
        r.add("equivalence-found", std::to_string(Lc.num_objects()) + " vs " + std::to_string(Rc.num_objects()) + " objects",
              ok ? Verdict::pass : Verdict::fail, ok ? "" : e.reason, 1);
    }
    return r;
}

} // namespace bed
