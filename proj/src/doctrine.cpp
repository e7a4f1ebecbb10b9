#include "bed/doctrine.hpp"

#include <algorithm>
#include <set>

namespace bed {

int delta_at(const Doctrine& d, const EqualityAssignment& eq, const Cone& c)
{
    auto it = eq.find(c);
    if (it == eq.end()) throw PreconditionError("missing delta entry for internal cone " + d.cat().cone_name(c));
    return it->second;
}

std::map<std::pair<int, int>, Cone> choose_strict_products(const Category& cat)
{
    std::map<std::pair<int, int>, Cone> r;
    for (int x = 0; x < cat.num_objects(); ++x)
        for (int y = 0; y < cat.num_objects(); ++y)
            for (const auto& [c, k] : cat.weak_products({x, y}))
                if (k == ConeClass::strict) {
                    r.emplace(std::make_pair(x, y), c);
                    break;
                }
    return r;
}

int ChoiceOfWeakProducts::times(const Category& cat, int f, int g) const
{
    auto s = product.find({cat.src(f), cat.src(g)});
    auto t = product.find({cat.tgt(f), cat.tgt(g)});
    if (s == product.end() || t == product.end()) return -1;
    const Cone& sc = s->second;
    const Cone& tc = t->second;
    if (sc == tc && cat.is_identity(f) && cat.is_identity(g)) return cat.id(sc.apex);
    auto h = fill_ins(cat, tc, sc.apex, {cat.compose(f, sc.legs[0]), cat.compose(g, sc.legs[1])});
    return h.empty() ? -1 : h.front();
}

Diagnostics validate_choice(const Category& cat, const ChoiceOfWeakProducts& ch)
{
    Diagnostics d;
    for (const auto& [xy, c] : ch.product) {
        if (cat.feet(c) != std::vector<int>{xy.first, xy.second})
            d.push_back("chosen cone " + cat.cone_name(c) + " has the wrong feet");
        else if (classify_cone(cat, c) == ConeClass::not_weak)
            d.push_back("chosen cone " + cat.cone_name(c) + " is not a weak product");
    }
    if (!d.empty()) return d;
    for (const auto& [xy, c] : ch.product) {
        int i = ch.times(cat, cat.id(xy.first), cat.id(xy.second));
        if (i != cat.id(c.apex)) d.push_back("id x id is not the identity on " + cat.obj_name(c.apex));
    }
    // composition: (f.f') x (g.g') = (f x g).(f' x g')
    for (const auto& [s, cs] : ch.product)
        for (const auto& [m, cm] : ch.product)
            for (const auto& [t, ct] : ch.product)
                for (int f1 : cat.hom(s.first, m.first))
                    for (int g1 : cat.hom(s.second, m.second))
                        for (int f2 : cat.hom(m.first, t.first))
                            for (int g2 : cat.hom(m.second, t.second)) {
                                int lhs = ch.times(cat, cat.compose(f2, f1), cat.compose(g2, g1));
                                int rhs = cat.compose(ch.times(cat, f2, g2), ch.times(cat, f1, g1));
                                if (lhs != rhs) {
                                    d.push_back("choice not functorial at (" + cat.arr_name(f2) + "." + cat.arr_name(f1) + ") x (" +
                                                cat.arr_name(g2) + "." + cat.arr_name(g1) + ")");
                                    return d;
                                }
                            }
    return d;
}

Diagnostics validate_morphism(const Doctrine& s, const Doctrine& t, const DoctrineMorphism& m)
{
    Diagnostics d = validate_functor(s.cat(), t.cat(), m.F);
    if (!d.empty()) return d;
    const Category& C = s.cat();
    for (int X = 0; X < C.num_objects(); ++X) {
        if (m.F.obj[X] < 0) continue;
        const Map& fx = m.f[X];
        if (static_cast<int>(fx.size()) != s.at(X).size()) {
            d.push_back("fiber map at " + C.obj_name(X) + " has the wrong size");
            continue;
        }
        if (!is_meet_preserving(s.at(X), t.at(m.F.obj[X]), fx)) d.push_back("fiber map at " + C.obj_name(X) + " does not preserve meets");
    }
    if (!d.empty()) return d;
    for (int g = 0; g < C.num_arrows(); ++g) {
        int X = C.src(g), Y = C.tgt(g);
        if (m.F.obj[X] < 0 || m.F.obj[Y] < 0) continue;
        for (int a = 0; a < s.at(Y).size(); ++a)
            if (m.f[X][s.P(g, a)] != t.P(m.F.arr[g], m.f[Y][a])) {
                d.push_back("naturality fails at " + C.arr_name(g) + " on " + s.elem(Y, a));
                break;
            }
    }
    return d;
}

Diagnostics validate_doctrine(const Doctrine& doc)
{
    Diagnostics d;
    const Category& C = doc.cat();
    if (static_cast<int>(doc.fiber.size()) != C.num_objects() || static_cast<int>(doc.reindex.size()) != C.num_arrows()) {
        d.push_back("fiber or reindex table count does not match the base");
        return d;
    }
    for (int f = 0; f < C.num_arrows(); ++f) {
        const Lattice& S = doc.at(C.tgt(f));
        const Lattice& T = doc.at(C.src(f));
        const Map& m = doc.reindex[f];
        bool ok = static_cast<int>(m.size()) == S.size();
        for (int v : m) ok = ok && v >= 0 && v < T.size();
        if (!ok) {
            d.push_back("reindex table of " + C.arr_name(f) + " is malformed");
            continue;
        }
        if (!is_monotone(S, T, m)) d.push_back("reindex of " + C.arr_name(f) + " is not monotone");
        else if (!is_meet_preserving(S, T, m)) d.push_back("reindex of " + C.arr_name(f) + " does not preserve meets");
    }
    if (!d.empty()) return d;
    for (int X = 0; X < C.num_objects(); ++X)
        if (doc.reindex[C.id(X)] != identity_map(doc.at(X))) d.push_back("reindex of identity " + C.arr_name(C.id(X)) + " is not the identity");
    for (int f = 0; f < C.num_arrows(); ++f)
        for (int g : C.out(C.tgt(f))) {
            int gf = C.compose(g, f);
            for (int a = 0; a < doc.at(C.tgt(g)).size(); ++a)
                if (doc.P(gf, a) != doc.P(f, doc.P(g, a))) {
                    d.push_back("P_{g.f} != P_f.P_g at (g,f)=(" + C.arr_name(g) + "," + C.arr_name(f) + ") on " + doc.elem(C.tgt(g), a));
                    break;
                }
            if (d.size() > 20) return d;
        }
    return d;
}

bool descends(const Doctrine& d, const Cone& c, int beta, int alpha)
{
    const Lattice& W = d.at(c.apex);
    return W.leq(W.glb(d.P(c.legs[0], alpha), beta), d.P(c.legs[1], alpha));
}

std::vector<int> descent_poset(const Doctrine& d, const Cone& c, int beta)
{
    if (beta < 0 || beta >= d.at(c.apex).size()) throw std::out_of_range("element not in apex fiber");
    std::vector<int> r;
    for (int a = 0; a < d.at(d.cat().tgt(c.legs[0])).size(); ++a)
        if (descends(d, c, beta, a)) r.push_back(a);
    return r;
}

// ---- strict checker --------------------------------------------------------

std::vector<int> DoctrineStrictView::objects()
{
    std::vector<int> r(d_.cat().num_objects());
    for (size_t i = 0; i < r.size(); ++i) r[i] = static_cast<int>(i);
    return r;
}

std::optional<ProductCone> DoctrineStrictView::product(int x, int y, Verdict& why)
{
    auto it = s_.product.find({x, y});
    if (it == s_.product.end()) {
        why = Verdict::chart_too_shallow;
        return std::nullopt;
    }
    return ProductCone{it->second.apex, it->second.legs[0], it->second.legs[1]};
}

int DoctrineStrictView::pair(const ProductCone& p, int f, int g)
{
    Cone c{p.apex, {p.p1, p.p2}};
    auto h = fill_ins(d_.cat(), c, d_.cat().src(f), {f, g});
    return h.empty() ? -1 : h.front();
}

std::optional<int> DoctrineStrictView::delta(int x, Verdict& why)
{
    auto it = s_.delta.find(x);
    if (it == s_.delta.end()) {
        why = Verdict::chart_too_shallow;
        return std::nullopt;
    }
    return it->second;
}

Report check_strict_elementary(StrictView& v, const std::string& title)
{
    Report r;
    r.title = title;
    auto objs = v.objects();
    std::map<int, ProductCone> sq;
    std::map<int, int> dl;
    bool elem_ok = true, adjoint_ok = true, any = false;
    for (int X : objs) {
        const std::string nm = v.object_name(X);
        Verdict why = Verdict::chart_too_shallow;
        auto P = v.product(X, X, why);
        std::optional<int> d;
        if (P) d = v.delta(X, why);
        if (!P || !d) {
            r.add("elem-reflexive", nm, why, P ? "delta unavailable" : "no strict product X x X");
            r.add("elem-descent", nm, why);
            r.add("adjoint-diagonal", nm, why);
            continue;
        }
        any = true;
        sq[X] = *P;
        dl[X] = *d;
        const Lattice& FX = v.fiber(X);
        const Lattice& FW = v.fiber(P->apex);
        int diag = v.pair(*P, v.identity(X), v.identity(X));
        Quant c1;
        c1.hold(v.reindex(diag, *d) == FX.top(), [&] { return "P_Delta(delta) = " + FX.name(v.reindex(diag, *d)); });
        c1.emit(r, "elem-reflexive", nm);
        Quant c2;
        for (int a = 0; a < FX.size(); ++a) {
            int lhs = FW.glb(v.reindex(P->p1, a), *d);
            c2.hold(FW.leq(lhs, v.reindex(P->p2, a)), [&] { return "alpha=" + FX.name(a); });
        }
        c2.emit(r, "elem-descent", nm);
        // exists_Delta(a) := P_p1 a ^ delta is left adjoint to P_Delta
        Quant ad;
        for (int a = 0; a < FX.size(); ++a) {
            int ex = FW.glb(v.reindex(P->p1, a), *d);
            for (int b = 0; b < FW.size(); ++b)
                ad.hold(FW.leq(ex, b) == FX.leq(a, v.reindex(diag, b)),
                        [&] { return "alpha=" + FX.name(a) + " beta=" + FW.name(b); });
        }
        ad.emit(r, "adjoint-diagonal", nm);
        elem_ok = elem_ok && !c1.failed() && !c2.failed();
        adjoint_ok = adjoint_ok && !ad.failed();
    }
    for (int X : objs)
        for (int Y : objs) {
            const std::string nm = v.object_name(X) + "," + v.object_name(Y);
            Verdict why = Verdict::chart_too_shallow;
            auto XY = v.product(X, Y, why);
            if (!XY || !sq.count(X) || !sq.count(Y)) {
                r.add("elem-box", nm, XY ? Verdict::chart_too_shallow : why, XY ? "delta of a factor unavailable" : "no strict product");
                r.add("adjoint-e", nm, XY ? Verdict::chart_too_shallow : why);
                continue;
            }
            // (X x Y) x (X x Y)
            auto Z = v.product(XY->apex, XY->apex, why);
            std::optional<int> dxy;
            if (Z) dxy = v.delta(XY->apex, why);
            if (!Z || !dxy) {
                r.add("elem-box", nm, why, Z ? "delta of X x Y unavailable" : "no strict product (XxY)x(XxY)");
            } else {
                int px1 = v.compose(XY->p1, Z->p1), py1 = v.compose(XY->p2, Z->p1);
                int px2 = v.compose(XY->p1, Z->p2), py2 = v.compose(XY->p2, Z->p2);
                int p13 = v.pair(sq[X], px1, px2), p24 = v.pair(sq[Y], py1, py2);
                const Lattice& FZ = v.fiber(Z->apex);
                int box = FZ.glb(v.reindex(p13, dl[X]), v.reindex(p24, dl[Y]));
                Quant c3;
                c3.hold(FZ.leq(box, *dxy), [&] { return "box=" + FZ.name(box) + " delta=" + FZ.name(*dxy); });
                c3.emit(r, "elem-box", nm);
                elem_ok = elem_ok && !c3.failed();
            }
            // e = <p1,p2,p2> : X x Y -> (X x Y) x Y
            auto T = v.product(XY->apex, Y, why);
            if (!T) {
                r.add("adjoint-e", nm, why, "no strict product (XxY)xY");
                continue;
            }
            int e = v.pair(*T, v.identity(XY->apex), XY->p2);
            int p23 = v.pair(sq[Y], v.compose(XY->p2, T->p1), T->p2);
            const Lattice& FXY = v.fiber(XY->apex);
            const Lattice& FT = v.fiber(T->apex);
            Quant ad;
            for (int a = 0; a < FXY.size(); ++a) {
                int ex = FT.glb(v.reindex(T->p1, a), v.reindex(p23, dl[Y]));
                for (int b = 0; b < FT.size(); ++b)
                    ad.hold(FT.leq(ex, b) == FXY.leq(a, v.reindex(e, b)),
                            [&] { return "alpha=" + FXY.name(a) + " beta=" + FT.name(b); });
            }
            ad.emit(r, "adjoint-e", nm);
            adjoint_ok = adjoint_ok && !ad.failed();
        }
    if (any) {
        Quant agree;
        agree.hold(elem_ok == adjoint_ok, "descent conditions and adjunctions disagree");
        agree.emit(r, "adjoint-agrees-elem", "");
    }
    return r;
}

Report check_strict_elementary(const Doctrine& d, const StrictDelta& s)
{
    DoctrineStrictView v(d, s);
    Report r = check_strict_elementary(v, "check-strict");
    // other strict cones over (X,X): transported delta satisfies the same conditions
    const Category& C = d.cat();
    for (const auto& [X, dx] : s.delta) {
        auto it = s.product.find({X, X});
        if (it == s.product.end()) continue;
        Quant q;
        for (const auto& [c, k] : C.weak_products({X, X})) {
            if (k != ConeClass::strict || c == it->second) continue;
            auto h = fill_ins(C, it->second, c.apex, c.legs);
            auto back = fill_ins(C, c, it->second.apex, it->second.legs);
            int moved = d.P(h.front(), dx);
            int returned = d.P(back.front(), moved);
            bool ok = returned == dx;
            auto dg = fill_ins(C, c, X, {C.id(X), C.id(X)});
            ok = ok && d.P(dg.front(), moved) == d.at(X).top();
            for (int a = 0; a < d.at(X).size() && ok; ++a) ok = descends(d, c, moved, a);
            q.hold(ok, [&] { return "cone " + C.cone_name(c); });
        }
        q.emit(r, "strict-cone-coherence", C.obj_name(X));
    }
    return r;
}

// ---- biased checker --------------------------------------------------------

namespace {

std::string subj(const Category& C, int X, const Cone& c) { return C.obj_name(X) + " " + C.cone_name(c); }

std::set<int> values(const Doctrine& d, const std::vector<int>& arrows, int a)
{
    std::set<int> s;
    for (int t : arrows) s.insert(d.P(t, a));
    return s;
}

} // namespace

Report check_biased_elementary(const Doctrine& d, const EqualityAssignment& eq)
{
    Report r;
    r.title = "check-biased";
    const Category& C = d.cat();
    for (int X = 0; X < C.num_objects(); ++X) {
        const Lattice& FX = d.at(X);
        for (const auto& [p, k] : C.weak_products({X, X})) {
            const int W = p.apex;
            const int dl = delta_at(d, eq, p);
            const std::string s = subj(C, X, p);
            Quant c1;
            for (int dg : fill_ins(C, p, X, {C.id(X), C.id(X)}))
                c1.hold(d.P(dg, dl) == FX.top(), [&] { return "d=" + C.arr_name(dg) + " P_d(delta)=" + FX.name(d.P(dg, dl)); });
            c1.emit(r, "biased-reflexive", s);
            Quant c2;
            for (int a = 0; a < FX.size(); ++a) c2.hold(descends(d, p, dl, a), [&] { return "alpha=" + FX.name(a); });
            c2.emit(r, "biased-descent", s);
            Quant c3;
            for (int X2 = 0; X2 < C.num_objects(); ++X2)
                for (const auto& [p2, k2] : C.weak_products({X2, X2})) {
                    const int d2 = delta_at(d, eq, p2);
                    const Lattice& FW2 = d.at(p2.apex);
                    for (int g : C.hom(p2.apex, W)) {
                        int a = C.compose(p.legs[0], g), b = C.compose(p.legs[1], g);
                        for (int f : C.hom(X2, X))
                            if (a == C.compose(f, p2.legs[0]) && b == C.compose(f, p2.legs[1]))
                                c3.hold(FW2.leq(d2, d.P(g, dl)), [&] {
                                    return "cone'=" + C.cone_name(p2) + " f=" + C.arr_name(f) + " g=" + C.arr_name(g);
                                });
                    }
                }
            c3.emit(r, "biased-stability", s);
            Quant c4;
            for (const auto& [u, ku] : C.weak_products({W, W})) {
                const int U = u.apex;
                const Lattice& FU = d.at(U);
                std::vector<int> T, T2;
                int a1 = C.compose(p.legs[0], u.legs[0]), a2 = C.compose(p.legs[0], u.legs[1]);
                int b1 = C.compose(p.legs[1], u.legs[0]), b2 = C.compose(p.legs[1], u.legs[1]);
                T = fill_ins(C, p, U, {a1, a2});
                T2 = fill_ins(C, p, U, {b1, b2});
                auto v1 = values(d, T, dl), v2 = values(d, T2, dl);
                int lhs0 = d.P(u.legs[0], dl), rhs = d.P(u.legs[1], dl);
                for (int x : v1)
                    for (int y : v2)
                        c4.hold(FU.leq(FU.glb(lhs0, FU.glb(x, y)), rhs), [&] { return "U=" + C.cone_name(u); });
            }
            c4.emit(r, "biased-transitivity", s);
        }
    }
    return r;
}

Report check_biased_diagonals(const Doctrine& d, const EqualityAssignment& eq)
{
    Report r;
    r.title = "biased diagonals";
    const Category& C = d.cat();
    const int n = C.num_objects();
    Quant b1;
    for (int X = 0; X < n; ++X)
        for (int X2 = 0; X2 < n; ++X2)
            for (const auto& [q, kq] : C.weak_products({X, X2})) {
                const int V = q.apex;
                for (const auto& [u, ku] : C.weak_products({V, V})) {
                    const int dv = delta_at(d, eq, u);
                    const Lattice& FU = d.at(u.apex);
                    auto check = [&](const Cone& p, int first) {
                        int dp = delta_at(d, eq, p);
                        int l1 = C.compose(q.legs[first], u.legs[0]), l2 = C.compose(q.legs[first], u.legs[1]);
                        for (int t : fill_ins(C, p, u.apex, {l1, l2}))
                            b1.hold(FU.leq(dv, d.P(t, dp)), [&] {
                                return "V=" + C.cone_name(q) + " U=" + C.cone_name(u) + " t=" + C.arr_name(t) + " into " + C.cone_name(p);
                            });
                    };
                    for (const auto& [p, kp] : C.weak_products({X, X})) check(p, 0);
                    for (const auto& [p, kp] : C.weak_products({X2, X2})) check(p, 1);
                }
            }
    b1.emit(r, "biased-product-diagonal", "");
    Quant b2, cor;
    for (int X = 0; X < n; ++X)
        for (const auto& [p, kp] : C.weak_products({X, X}))
            for (const auto& [p2, kp2] : C.weak_products({X, X})) {
                int dp = delta_at(d, eq, p), dp2 = delta_at(d, eq, p2);
                const Lattice& F2 = d.at(p2.apex);
                for (int h : fill_ins(C, p, p2.apex, p2.legs)) {
                    b2.hold(F2.leq(dp2, d.P(h, dp)), [&] { return C.cone_name(p2) + " -> " + C.cone_name(p) + " via " + C.arr_name(h); });
                    cor.hold(d.P(h, dp) == dp2, [&] { return C.cone_name(p2) + " -> " + C.cone_name(p) + " via " + C.arr_name(h); });
                }
            }
    b2.emit(r, "biased-connecting-arrow", "");
    cor.emit(r, "corollary-delta-transport", "");
    return r;
}

EqualityAssignment derive_from_choice(const Doctrine& d, const ChoiceOfWeakProducts& ch, const std::map<int, int>& delta)
{
    const Category& C = d.cat();
    auto diag = validate_choice(C, ch);
    if (!diag.empty()) throw PreconditionError("invalid choice of weak products: " + diag.front());
    auto prod = [&](int X) -> const Cone* {
        auto it = ch.product.find({X, X});
        return it == ch.product.end() ? nullptr : &it->second;
    };
    for (const auto& [X, dx] : delta) {
        const Cone* p = prod(X);
        if (!p) throw PreconditionError("no chosen product for " + C.obj_name(X) + " x " + C.obj_name(X));
        bool some = false;
        for (int dg : fill_ins(C, *p, X, {C.id(X), C.id(X)})) some = some || d.P(dg, dx) == d.at(X).top();
        if (!some) throw PreconditionError("reflexivity fails at " + C.obj_name(X));
        for (int a = 0; a < d.at(X).size(); ++a)
            if (!descends(d, *p, dx, a)) throw PreconditionError("descent fails at " + C.obj_name(X) + " alpha=" + d.elem(X, a));
    }
    for (const auto& [X, dx] : delta)
        for (const auto& [Y, dy] : delta)
            for (int f : C.hom(Y, X)) {
                int ff = ch.times(C, f, f);
                if (ff < 0) continue;
                if (!d.at(prod(Y)->apex).leq(dy, d.P(ff, dx)))
                    throw PreconditionError("stability fails at f=" + C.arr_name(f));
            }
    for (const auto& [X, dx] : delta) {
        const Cone& p = *prod(X);
        auto zit = ch.product.find({p.apex, p.apex});
        if (zit == ch.product.end()) continue; // nothing internal to check
        const Cone& z = zit->second;
        const Lattice& FZ = d.at(z.apex);
        auto h13 = fill_ins(C, p, z.apex, {C.compose(p.legs[0], z.legs[0]), C.compose(p.legs[0], z.legs[1])});
        auto h24 = fill_ins(C, p, z.apex, {C.compose(p.legs[1], z.legs[0]), C.compose(p.legs[1], z.legs[1])});
        for (int a : h13)
            for (int b : h24)
                if (!FZ.leq(FZ.glb(d.P(z.legs[0], dx), FZ.glb(d.P(a, dx), d.P(b, dx))), d.P(z.legs[1], dx)))
                    throw PreconditionError("transitivity fails at " + C.obj_name(X));
    }
    EqualityAssignment eq;
    for (int X = 0; X < C.num_objects(); ++X)
        for (const auto& [c, k] : C.weak_products({X, X})) {
            auto it = delta.find(X);
            const Cone* p = prod(X);
            if (it == delta.end() || !p) throw PreconditionError("no delta for " + C.obj_name(X) + " though " + C.cone_name(c) + " is internal");
            auto hs = fill_ins(C, *p, c.apex, c.legs);
            if (hs.empty()) throw PreconditionError("no connecting arrow into the chosen product from " + C.cone_name(c));
            int v = d.P(hs.front(), it->second);
            for (int h : hs)
                if (d.P(h, it->second) != v) throw PreconditionError("delta is not rbp at " + C.cone_name(c));
            eq[c] = v;
        }
    return eq;
}

// ---- comprehensions, diagonals, implication --------------------------------

ComprehensionFlags comprehension_classify(const Doctrine& d, int X, int alpha, int c)
{
    const Category& C = d.cat();
    ComprehensionFlags fl;
    const int Cc = C.src(c);
    if (C.tgt(c) != X) return fl;
    fl.is_comprehension = d.P(c, alpha) == d.at(Cc).top();
    if (!fl.is_comprehension) return fl;
    const auto& into = C.into(X);
    std::vector<int> mult(into.size(), 0);
    for (int Y = 0; Y < C.num_objects(); ++Y)
        for (int h : C.hom(Y, Cc)) {
            int f = C.compose(c, h);
            // position of f among arrows into X
            ++mult[std::lower_bound(into.begin(), into.end(), f) - into.begin()];
        }
    fl.weak = fl.strict = true;
    for (size_t i = 0; i < into.size(); ++i) {
        int f = into[i];
        if (d.P(f, alpha) != d.at(C.src(f)).top()) continue;
        if (mult[i] == 0) fl.weak = false;
        if (mult[i] != 1) fl.strict = false;
    }
    fl.strict = fl.strict && fl.weak;
    fl.full = true;
    for (int b = 0; b < d.at(X).size(); ++b)
        if (d.P(c, b) == d.at(Cc).top() && !d.at(X).leq(alpha, b)) fl.full = false;
    return fl;
}

std::optional<int> find_comprehension(const Doctrine& d, int X, int alpha)
{
    std::optional<int> weak;
    for (int c : d.cat().into(X)) {
        auto fl = comprehension_classify(d, X, alpha, c);
        if (fl.weak && fl.full) {
            if (fl.strict) return c;
            if (!weak) weak = c;
        }
    }
    return weak;
}

Report comprehension_report(const Doctrine& d)
{
    Report r;
    r.title = "comprehensions";
    const Category& C = d.cat();
    for (int X = 0; X < C.num_objects(); ++X) {
        Quant q;
        long shallow = 0;
        std::string shallow_names;
        for (int a = 0; a < d.at(X).size(); ++a) {
            int cands = 0;
            bool good = false;
            for (int c : C.into(X)) {
                auto fl = comprehension_classify(d, X, a, c);
                cands += fl.is_comprehension;
                good = good || (fl.weak && fl.full);
            }
            if (cands == 0) {
                ++shallow;
                shallow_names += (shallow_names.empty() ? "" : ",") + d.elem(X, a);
                continue;
            }
            q.hold(good, [&] { return "alpha=" + d.elem(X, a) + " has " + std::to_string(cands) + " candidates, none full and weak"; });
        }
        q.emit(r, "full-weak-comprehension", C.obj_name(X));
        if (shallow) r.add("full-weak-comprehension", C.obj_name(X), Verdict::chart_too_shallow, "no internal candidate for " + shallow_names, shallow);
    }
    return r;
}

std::optional<std::string> comprehensive_diagonals_counterexample(const Doctrine& d, const EqualityAssignment& eq)
{
    const Category& C = d.cat();
    for (int X = 0; X < C.num_objects(); ++X)
        for (const auto& [p, k] : C.weak_products({X, X})) {
            int dl = delta_at(d, eq, p);
            for (int h : C.into(p.apex)) {
                int f = C.compose(p.legs[0], h), g = C.compose(p.legs[1], h);
                if (f != g && d.P(h, dl) == d.at(C.src(h)).top())
                    return "f=" + C.arr_name(f) + " g=" + C.arr_name(g) + " h=" + C.arr_name(h) + " cone " + C.cone_name(p);
            }
        }
    return std::nullopt;
}

Report implicational_report(const Doctrine& d)
{
    Report r;
    r.title = "implicational";
    const Category& C = d.cat();
    for (int X = 0; X < C.num_objects(); ++X) {
        const Lattice& L = d.at(X);
        Quant q;
        for (int a = 0; a < L.size(); ++a) {
            Map m(L.size());
            for (int x = 0; x < L.size(); ++x) m[x] = L.glb(a, x);
            q.hold(right_adjoint(L, L, m).has_value(), [&] { return "alpha=" + L.name(a) + " has no implication"; });
        }
        q.emit(r, "right-adjoint-of-meet", C.obj_name(X));
    }
    return r;
}

SliceDoctrine slice_doctrine(const Doctrine& d, const EqualityAssignment& eq, int A)
{
    const Category& C = d.cat();
    SliceDoctrine s{slice_category(C, A), {}, {}};
    auto base = std::make_shared<Category>(s.slice.cat);
    s.doc.base = base;
    const Category& S = *base;
    for (int x = 0; x < S.num_objects(); ++x) s.doc.fiber.push_back(d.at(s.slice.forget.obj[x]));
    for (int a = 0; a < S.num_arrows(); ++a) s.doc.reindex.push_back(d.reindex[s.slice.arrow_base[a]]);
    for (int x = 0; x < S.num_objects(); ++x) {
        const int X = s.slice.forget.obj[x];
        for (const auto& [pi, k] : S.weak_products({x, x})) {
            const auto& base_cones = C.weak_products({X, X});
            if (base_cones.empty())
                throw ChartTooShallow("no internal weak product of " + C.obj_name(X) + " for slice object " + S.obj_name(x));
            const Cone& p = base_cones.front().first;
            const int W = s.slice.forget.obj[pi.apex];
            auto h = fill_ins(C, p, W, {s.slice.arrow_base[pi.legs[0]], s.slice.arrow_base[pi.legs[1]]});
            s.eq[pi] = d.P(h.front(), delta_at(d, eq, p));
        }
    }
    return s;
}

} // namespace bed
