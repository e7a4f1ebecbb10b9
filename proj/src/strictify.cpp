#include "bed/strictify.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace bed {

std::string list_name(const Category& c, const ListObject& l)
{
    std::string s = "[";
    for (size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + c.obj_name(l[i]);
    return s + "]";
}

std::string list_arrow_name(const Category& c, const ListArrow& f)
{
    std::string s = list_name(c, f.src) + ">" + list_name(c, f.tgt) + ":";
    for (size_t i = 0; i < f.comps.size(); ++i) s += (i ? ";" : "") + std::to_string(f.fhat[i]) + "." + c.arr_name(f.comps[i]);
    return s;
}

ListArrow list_identity(const ListObject& l, const Category& c)
{
    ListArrow f{l, l, {}, {}};
    for (size_t i = 0; i < l.size(); ++i) {
        f.fhat.push_back(static_cast<int>(i));
        f.comps.push_back(c.id(l[i]));
    }
    return f;
}

ListArrow compose_list_arrows(const Category& c, const ListArrow& g, const ListArrow& f)
{
    if (f.tgt != g.src) throw PreconditionError("list arrows not composable: " + list_name(c, f.tgt) + " vs " + list_name(c, g.src));
    ListArrow h{f.src, g.tgt, {}, {}};
    for (size_t i = 0; i < g.comps.size(); ++i) {
        h.fhat.push_back(f.fhat[g.fhat[i]]);
        h.comps.push_back(c.compose(g.comps[i], f.comps[g.fhat[i]]));
    }
    return h;
}

ListArrow embed(const Category& c, int f) { return {{c.src(f)}, {c.tgt(f)}, {0}, {f}}; }

ListObject concat(const ListObject& a, const ListObject& b)
{
    ListObject r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

ListArrow projection(const Category& c, const ListObject& a, const ListObject& b, int which)
{
    const ListObject& t = which == 0 ? a : b;
    const int off = which == 0 ? 0 : static_cast<int>(a.size());
    ListArrow f{concat(a, b), t, {}, {}};
    for (size_t i = 0; i < t.size(); ++i) {
        f.fhat.push_back(off + static_cast<int>(i));
        f.comps.push_back(c.id(t[i]));
    }
    return f;
}

ListArrow pairing(const Category& c, const ListArrow& f, const ListArrow& g)
{
    if (f.src != g.src) throw PreconditionError("pairing of arrows with different sources " + list_name(c, f.src) + ", " + list_name(c, g.src));
    ListArrow h{f.src, concat(f.tgt, g.tgt), f.fhat, f.comps};
    h.fhat.insert(h.fhat.end(), g.fhat.begin(), g.fhat.end());
    h.comps.insert(h.comps.end(), g.comps.begin(), g.comps.end());
    return h;
}

// ---- completion ------------------------------------------------------------

ProductCompletion::ProductCompletion(CategoryPtr base, int L) : base_(std::move(base)), L_(L)
{
    if (L < 1) throw PreconditionError("truncation bound must be at least 1");
    const int n = base_->num_objects();
    std::vector<ListObject> layer{{}};
    for (int len = 1; len <= L; ++len) {
        std::vector<ListObject> next;
        for (const auto& l : layer)
            for (int x = 0; x < n; ++x) {
                next.push_back(l);
                next.back().push_back(x);
            }
        objects_.insert(objects_.end(), next.begin(), next.end());
        layer = std::move(next);
    }
}

namespace {

// Options for a single target entry Y from list a: every (j, f : a_j -> Y).
std::vector<std::pair<int, int>> entry_options(const Category& c, const ListObject& a, int Y)
{
    std::vector<std::pair<int, int>> o;
    for (size_t j = 0; j < a.size(); ++j)
        for (int f : c.hom(a[j], Y)) o.push_back({static_cast<int>(j), f});
    return o;
}

} // namespace

long ProductCompletion::hom_size(const ListObject& a, const ListObject& b) const
{
    long n = 1;
    for (int y : b) n *= static_cast<long>(entry_options(*base_, a, y).size());
    return n;
}

std::vector<ListArrow> ProductCompletion::hom(const ListObject& a, const ListObject& b) const
{
    std::vector<std::vector<std::pair<int, int>>> opts;
    for (int y : b) opts.push_back(entry_options(*base_, a, y));
    std::vector<ListArrow> out;
    for (const auto& o : opts)
        if (o.empty()) return out;
    std::vector<size_t> idx(b.size(), 0);
    while (true) {
        ListArrow f{a, b, {}, {}};
        for (size_t i = 0; i < b.size(); ++i) {
            f.fhat.push_back(opts[i][idx[i]].first);
            f.comps.push_back(opts[i][idx[i]].second);
        }
        out.push_back(std::move(f));
        int i = static_cast<int>(b.size()) - 1;
        while (i >= 0 && ++idx[i] == opts[i].size()) idx[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

// ---- lazy strict fibers ----------------------------------------------------

const StrictFiber* ListCalculus::fiber(const ListObject& l, std::string* why)
{
    auto it = fibers_.find(l);
    if (it == fibers_.end()) {
        std::optional<StrictFiber> sf;
        try {
            sf = strict_fiber(d_, eq_, l);
        } catch (const ChartTooShallow& e) {
            why_[l] = e.what();
        }
        it = fibers_.emplace(l, std::move(sf)).first;
    }
    if (!it->second) {
        if (why) *why = why_[l];
        return nullptr;
    }
    return &*it->second;
}

const Map& ListCalculus::reindex_map(const ListArrow& f)
{
    auto it = maps_.find(f);
    if (it != maps_.end()) return it->second;
    const Category& C = d_.cat();
    std::string why;
    const StrictFiber* a = fiber(f.src, &why);
    if (!a) throw ChartTooShallow(why);
    const StrictFiber* b = fiber(f.tgt, &why);
    if (!b) throw ChartTooShallow(why);
    const Cone& ha = a->hub();
    const Cone& hb = b->hub();
    std::vector<int> targets;
    for (size_t j = 0; j < f.tgt.size(); ++j) targets.push_back(C.compose(f.comps[j], ha.legs[f.fhat[j]]));
    auto gs = fill_ins(C, hb, ha.apex, targets);
    if (gs.empty()) throw ChartTooShallow("no connecting arrow for " + list_arrow_name(C, f));
    Map m(b->size());
    for (int c = 0; c < b->size(); ++c) {
        const int e = b->rep[0][c];
        const int v = d_.P(gs.front(), e);
        for (int g : gs)
            if (d_.P(g, e) != v)
                throw PreconditionError("reindexing along " + list_arrow_name(C, f) + " depends on the connecting arrow " + C.arr_name(g));
        m[c] = a->class_of(0, v);
        if (m[c] < 0) throw PreconditionError("reindexing along " + list_arrow_name(C, f) + " leaves the proof-irrelevant elements");
    }
    return maps_.emplace(f, std::move(m)).first->second;
}

int ListCalculus::reindex(const ListArrow& f, int cls) { return reindex_map(f)[cls]; }

std::optional<int> ListCalculus::delta(const ListObject& l)
{
    auto it = deltas_.find(l);
    if (it != deltas_.end()) return it->second;
    const Category& C = d_.cat();
    const ListObject dl = concat(l, l);
    const StrictFiber* sf = fiber(dl);
    std::optional<int> res;
    if (sf) {
        const Cone& W = sf->hub();
        const Lattice& FW = d_.at(W.apex);
        const int n = static_cast<int>(l.size());
        int m = FW.top();
        for (int i = 0; i < n; ++i) {
            std::optional<int> v;
            for (const auto& [q, k] : C.weak_products({l[i], l[i]}))
                for (int t : fill_ins(C, q, W.apex, {W.legs[i], W.legs[n + i]})) {
                    int x = d_.P(t, delta_at(d_, eq_, q));
                    if (v && *v != x) throw PreconditionError("fibered equality over " + list_name(C, dl) + " depends on the chosen cone");
                    v = x;
                }
            if (!v) throw ChartTooShallow("no internal weak product of " + C.obj_name(l[i]) + " with itself");
            m = FW.glb(m, *v);
        }
        int c = sf->class_of(0, m);
        if (c < 0) throw PreconditionError("fibered equality over " + list_name(C, dl) + " is not proof-irrelevant");
        res = c;
    }
    deltas_.emplace(l, res);
    return res;
}

std::string ListCalculus::class_name(const ListObject& l, int cls)
{
    const StrictFiber* sf = fiber(l);
    return sf ? sf->classes.name(cls) : "?";
}

// ---- materialization -------------------------------------------------------

int ListDoctrine::object_of(const ListObject& l) const
{
    auto it = obj_index.find(l);
    return it == obj_index.end() ? -1 : it->second;
}

int ListDoctrine::arrow_of(const ListArrow& f) const
{
    auto it = arr_index.find(f);
    return it == arr_index.end() ? -1 : it->second;
}

ListDoctrine materialize(CategoryPtr base, int L, const std::vector<ListObject>& lists,
                         const std::function<Lattice(const ListObject&)>& fiber,
                         const std::function<Map(const ListArrow&)>& reindex)
{
    const Category& C = *base;
    ProductCompletion pc(base, L);
    ListDoctrine ld;
    ld.base = base;
    ld.bound = L;
    const int n = static_cast<int>(lists.size());
    std::map<ListObject, int> pos;
    for (int i = 0; i < n; ++i) pos[lists[i]] = i;

    // per (source list, target object): options and the offset of each source entry
    std::map<std::pair<int, int>, std::vector<int>> pre;
    auto offsets = [&](int a, int Y) -> const std::vector<int>& {
        auto it = pre.find({a, Y});
        if (it != pre.end()) return it->second;
        std::vector<int> o{0};
        for (int x : lists[a]) o.push_back(o.back() + static_cast<int>(C.hom(x, Y).size()));
        return pre.emplace(std::make_pair(a, Y), std::move(o)).first->second;
    };
    std::vector<long> base_off(static_cast<size_t>(n) * n);
    long total = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            base_off[a * n + b] = total;
            total += pc.hom_size(lists[a], lists[b]);
        }
    auto encode = [&](int a, int b, const ListArrow& f) {
        long code = 0;
        for (size_t i = 0; i < f.tgt.size(); ++i) {
            const auto& o = offsets(a, f.tgt[i]);
            code = code * o.back() + o[f.fhat[i]] + C.hom_pos(f.comps[i]);
        }
        return base_off[a * n + b] + code;
    };

    Category::Builder bld;
    for (const auto& l : lists) bld.add_object(list_name(C, l));
    std::vector<ListArrow> barrows;
    barrows.reserve(total);
    std::vector<int> bsrc, btgt;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (auto& f : pc.hom(lists[a], lists[b])) {
                int id = bld.add_arrow(list_arrow_name(C, f), a, b);
                if (a == b && f == list_identity(lists[a], C)) bld.set_identity(a, id);
                barrows.push_back(std::move(f));
            }
    auto cat = std::make_shared<Category>(bld.build([&](int g, int f) {
        ListArrow h = compose_list_arrows(C, barrows[g], barrows[f]);
        return static_cast<int>(encode(pos[h.src], pos[h.tgt], h));
    }));
    ld.R.base = cat;
    ld.lists.resize(n);
    for (int o = 0; o < cat->num_objects(); ++o) {
        for (int i = 0; i < n; ++i)
            if (list_name(C, lists[i]) == cat->obj_name(o)) ld.lists[o] = lists[i];
        ld.obj_index[ld.lists[o]] = o;
    }
    std::unordered_map<std::string, int> byname;
    for (int i = 0; i < static_cast<int>(barrows.size()); ++i) byname[list_arrow_name(C, barrows[i])] = i;
    ld.arrows.resize(cat->num_arrows());
    for (int a = 0; a < cat->num_arrows(); ++a) {
        ld.arrows[a] = barrows[byname.at(cat->arr_name(a))];
        ld.arr_index[ld.arrows[a]] = a;
    }
    for (int o = 0; o < cat->num_objects(); ++o) ld.R.fiber.push_back(fiber(ld.lists[o]));
    for (int a = 0; a < cat->num_arrows(); ++a) ld.R.reindex.push_back(reindex(ld.arrows[a]));
    return ld;
}

// ---- strictification -------------------------------------------------------

Strictification::Strictification(const Doctrine& d, const EqualityAssignment& eq, int L) : calc_(d, eq), L_(L)
{
    ProductCompletion pc(d.base, L);
    std::vector<ListObject> keep;
    std::vector<std::pair<ListObject, std::string>> missing;
    for (const auto& l : pc.objects()) {
        std::string why;
        if (calc_.fiber(l, &why)) keep.push_back(l);
        else missing.push_back({l, why});
    }
    ld_ = materialize(
        d.base, L, keep, [&](const ListObject& l) { return calc_.fiber(l)->classes; },
        [&](const ListArrow& f) { return calc_.reindex_map(f); });
    ld_.missing = std::move(missing);
    for (const auto& l : ld_.lists)
        if (static_cast<int>(l.size()) * 2 <= L)
            if (auto v = calc_.delta(l)) ld_.delta[l] = *v;
}

std::vector<int> Strictification::objects()
{
    std::vector<int> r(ld_.lists.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = static_cast<int>(i);
    return r;
}

std::string Strictification::object_name(int x) { return ld_.R.cat().obj_name(x); }

std::optional<ProductCone> Strictification::product(int x, int y, Verdict& why)
{
    const Category& C = *ld_.base;
    const ListObject& a = ld_.lists[x];
    const ListObject& b = ld_.lists[y];
    if (static_cast<int>(a.size() + b.size()) > L_) {
        why = Verdict::out_of_bound;
        return std::nullopt;
    }
    int o = ld_.object_of(concat(a, b));
    if (o < 0) {
        why = Verdict::chart_too_shallow;
        return std::nullopt;
    }
    return ProductCone{o, ld_.arrow_of(projection(C, a, b, 0)), ld_.arrow_of(projection(C, a, b, 1))};
}

int Strictification::pair(const ProductCone&, int f, int g)
{
    return ld_.arrow_of(pairing(*ld_.base, ld_.arrows[f], ld_.arrows[g]));
}

std::optional<int> Strictification::delta(int x, Verdict& why)
{
    const ListObject& l = ld_.lists[x];
    auto it = ld_.delta.find(l);
    if (it != ld_.delta.end()) return it->second;
    why = static_cast<int>(l.size()) * 2 > L_ ? Verdict::out_of_bound : Verdict::chart_too_shallow;
    return std::nullopt;
}

std::optional<int> delta_list(Strictification& s, const ListObject& l)
{
    if (static_cast<int>(l.size()) * 2 > s.bound())
        throw PreconditionError("doubled list " + list_name(*s.lists().base, l) + " exceeds the bound");
    return s.calculus().delta(l);
}

Report check_strictification(Strictification& s)
{
    const ListDoctrine& ld = s.lists();
    const Category& C = *ld.base;
    const Category& S = ld.R.cat();
    Report r;
    r.title = "strictification";
    for (const auto& [l, why] : ld.missing) r.notes.push_back("fiber of " + list_name(C, l) + " unavailable: " + why);
    {
        auto diag = validate_doctrine(ld.R);
        Quant q;
        q.hold(diag.empty(), diag.empty() ? std::string() : diag.front());
        q.emit(r, "functoriality", "");
    }
    for (int x = 0; x < S.num_objects(); ++x)
        for (int y = 0; y < S.num_objects(); ++y) {
            const std::string nm = S.obj_name(x) + "," + S.obj_name(y);
            Verdict why = Verdict::chart_too_shallow;
            auto P = s.product(x, y, why);
            if (!P) {
                r.add("concatenation-strict-product", nm, why);
                continue;
            }
            Quant q;
            for (int A = 0; A < S.num_objects(); ++A) {
                std::set<std::pair<int, int>> seen;
                for (int h : S.hom(A, P->apex)) seen.insert({S.compose(P->p1, h), S.compose(P->p2, h)});
                const size_t want = S.hom(A, x).size() * S.hom(A, y).size();
                q.hold(seen.size() == want && S.hom(A, P->apex).size() == want, [&] { return "from " + S.obj_name(A); });
            }
            q.emit(r, "concatenation-strict-product", nm);
        }
    r.merge(check_strict_elementary(s, "strictification"));
    for (int x = 0; x < S.num_objects(); ++x)
        for (int y = 0; y < S.num_objects(); ++y) {
            const ListObject& a = ld.lists[x];
            const ListObject& b = ld.lists[y];
            const ListObject ab = concat(a, b);
            const std::string nm = S.obj_name(x) + "," + S.obj_name(y);
            if (static_cast<int>(ab.size()) * 2 > ld.bound) {
                r.add("box-equality", nm, Verdict::out_of_bound);
                continue;
            }
            const ListObject Z = concat(ab, ab);
            int z = ld.object_of(Z), aa = ld.object_of(concat(a, a)), bb = ld.object_of(concat(b, b));
            auto da = ld.delta.find(a), db = ld.delta.find(b), dab = ld.delta.find(ab);
            if (z < 0 || aa < 0 || bb < 0 || da == ld.delta.end() || db == ld.delta.end() || dab == ld.delta.end()) {
                r.add("box-equality", nm, Verdict::chart_too_shallow);
                continue;
            }
            const int n = static_cast<int>(a.size()), m = static_cast<int>(b.size());
            ListArrow p13{Z, concat(a, a), {}, {}}, p24{Z, concat(b, b), {}, {}};
            for (int half = 0; half < 2; ++half) {
                for (int i = 0; i < n; ++i) {
                    p13.fhat.push_back(half * (n + m) + i);
                    p13.comps.push_back(C.id(a[i]));
                }
                for (int i = 0; i < m; ++i) {
                    p24.fhat.push_back(half * (n + m) + n + i);
                    p24.comps.push_back(C.id(b[i]));
                }
            }
            const Lattice& FZ = ld.R.at(z);
            int box = FZ.glb(ld.R.P(ld.arrow_of(p13), da->second), ld.R.P(ld.arrow_of(p24), db->second));
            Quant q;
            q.hold(box == dab->second, [&] { return "box=" + FZ.name(box) + " delta=" + FZ.name(dab->second); });
            q.emit(r, "box-equality", nm);
        }
    return r;
}

Report box_equality_report(ListCalculus& calc, int L)
{
    const Doctrine& d = calc.doctrine();
    const Category& C = d.cat();
    Report r;
    r.title = "box equality";
    std::vector<ListObject> lists;
    const int half = L / 2;
    std::vector<ListObject> frontier{{}};
    for (int len = 1; len < half; ++len) {
        std::vector<ListObject> next;
        for (const auto& l : frontier)
            for (int x = 0; x < C.num_objects(); ++x) {
                ListObject m = l;
                m.push_back(x);
                next.push_back(m);
            }
        lists.insert(lists.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    for (const auto& a : lists)
        for (const auto& b : lists) {
            if (static_cast<int>(a.size() + b.size()) > half) continue;
            const ListObject ab = concat(a, b), Z = concat(ab, ab);
            const std::string nm = list_name(C, a) + "," + list_name(C, b);
            const int n = static_cast<int>(a.size()), m = static_cast<int>(b.size());
            ListArrow p13{Z, concat(a, a), {}, {}}, p24{Z, concat(b, b), {}, {}};
            for (int h = 0; h < 2; ++h) {
                for (int i = 0; i < n; ++i) {
                    p13.fhat.push_back(h * (n + m) + i);
                    p13.comps.push_back(C.id(a[i]));
                }
                for (int i = 0; i < m; ++i) {
                    p24.fhat.push_back(h * (n + m) + n + i);
                    p24.comps.push_back(C.id(b[i]));
                }
            }
            try {
                auto da = calc.delta(a), db = calc.delta(b), dab = calc.delta(ab);
                if (!da || !db || !dab) {
                    r.add("box-equality", nm, Verdict::chart_too_shallow, "no strict fiber over a doubled list");
                    continue;
                }
                const Lattice& FZ = calc.fiber(Z)->classes;
                const int box = FZ.glb(calc.reindex(p13, *da), calc.reindex(p24, *db));
                Quant q;
                q.hold(box == *dab, [&] { return "box=" + FZ.name(box) + " delta=" + FZ.name(*dab); });
                q.emit(r, "box-equality", nm);
            } catch (const ChartTooShallow& e) {
                r.add("box-equality", nm, Verdict::chart_too_shallow, e.what());
            }
        }
    return r;
}

Report roundtrip_biased(const ListDoctrine& ld, EqualityAssignment* induced)
{
    const Category& C = *ld.base;
    Report r;
    r.title = "roundtrip";
    Doctrine RS;
    RS.base = ld.base;
    for (int X = 0; X < C.num_objects(); ++X) {
        int o = ld.object_of({X});
        if (o < 0) {
            r.add("roundtrip-biased", C.obj_name(X), Verdict::chart_too_shallow, "singleton list missing");
            return r;
        }
        RS.fiber.push_back(ld.R.at(o));
    }
    for (int f = 0; f < C.num_arrows(); ++f) RS.reindex.push_back(ld.R.reindex[ld.arrow_of(embed(C, f))]);
    EqualityAssignment eq;
    bool complete = true;
    for (int X = 0; X < C.num_objects(); ++X)
        for (const auto& [p, k] : C.weak_products({X, X})) {
            auto dx = ld.delta.find({X});
            int pa = ld.arrow_of({{p.apex}, {X, X}, {0, 0}, {p.legs[0], p.legs[1]}});
            if (dx == ld.delta.end() || pa < 0) {
                r.add("induced-delta", C.cone_name(p), Verdict::chart_too_shallow, "delta of [" + C.obj_name(X) + "] unavailable");
                complete = false;
                continue;
            }
            eq[p] = ld.R.P(pa, dx->second);
        }
    if (induced) *induced = eq;
    if (!complete) return r;
    r.merge(check_biased_elementary(RS, eq));
    return r;
}

Report strict_existential_report(const ListDoctrine& ld)
{
    const Category& C = *ld.base;
    const Doctrine& R = ld.R;
    const Category& S = R.cat();
    Report r;
    r.title = "existential (strict)";
    auto adjoint = [&](int p) {
        const Lattice& X = R.at(S.tgt(p));
        Map m(X.size());
        for (int x = 0; x < X.size(); ++x) m[x] = R.P(p, x);
        return left_adjoint(X, R.at(S.src(p)), m);
    };
    for (int x = 0; x < S.num_objects(); ++x)
        for (int y = 0; y < S.num_objects(); ++y) {
            const ListObject& a = ld.lists[x];
            const ListObject& b = ld.lists[y];
            const int w = ld.object_of(concat(a, b));
            if (w < 0) continue;
            const std::string s = S.obj_name(w);
            const Lattice& FW = R.at(w);
            int p[2] = {ld.arrow_of(projection(C, a, b, 0)), ld.arrow_of(projection(C, a, b, 1))};
            std::optional<Map> E[2] = {adjoint(p[0]), adjoint(p[1])};
            for (int i = 0; i < 2; ++i) {
                Quant q;
                q.hold(E[i].has_value(), "no left adjoint");
                q.emit(r, "left-adjoint-p" + std::to_string(i + 1), s);
            }
            Quant fr, bc;
            for (int i = 0; i < 2; ++i) {
                if (!E[i]) continue;
                const Lattice& FX = R.at(S.tgt(p[i]));
                for (int al = 0; al < FX.size(); ++al)
                    for (int be = 0; be < FW.size(); ++be)
                        fr.hold((*E[i])[FW.glb(R.P(p[i], al), be)] == FX.glb(al, (*E[i])[be]), [&] {
                            return "p" + std::to_string(i + 1) + " alpha=" + FX.name(al) + " beta=" + FW.name(be);
                        });
                // the quantified side varies along f : c -> (a or b)
                const ListObject& moving = i == 0 ? a : b;
                for (int c = 0; c < S.num_objects(); ++c) {
                    const ListObject& lc = ld.lists[c];
                    const ListObject vl = i == 0 ? concat(lc, b) : concat(a, lc);
                    const int v = ld.object_of(vl);
                    if (v < 0) continue;
                    const ListObject& other = i == 0 ? b : a;
                    ListArrow vp[2] = {projection(C, i == 0 ? lc : a, i == 0 ? b : lc, 0), projection(C, i == 0 ? lc : a, i == 0 ? b : lc, 1)};
                    int vpi = ld.arrow_of(vp[i]);
                    auto EV = adjoint(vpi);
                    if (!EV) continue;
                    (void)other;
                    for (int f : S.hom(c, ld.object_of(moving))) {
                        ListArrow moved = compose_list_arrows(C, ld.arrows[f], vp[i]);
                        ListArrow fp = i == 0 ? pairing(C, moved, vp[1]) : pairing(C, vp[0], moved);
                        int fpa = ld.arrow_of(fp);
                        for (int al = 0; al < FW.size(); ++al)
                            bc.hold((*EV)[R.P(fpa, al)] == R.P(f, (*E[i])[al]), [&] {
                                return "p" + std::to_string(i + 1) + " f=" + S.arr_name(f) + " alpha=" + FW.name(al);
                            });
                    }
                }
            }
            fr.emit(r, "frobenius", s);
            bc.emit(r, "beck-chevalley", s);
        }
    return r;
}

Report existential_transfer(const Doctrine& d, const EqualityAssignment& eq, Strictification& s)
{
    Report biased = existential_report(d, eq);
    Report strict = strict_existential_report(s.lists());
    auto first_fail = [](const Report& rep) -> std::string {
        for (const auto& c : rep.checks)
            if (c.verdict == Verdict::fail) return c.name + " @ " + c.subject + " -- " + c.witness;
        return "none";
    };
    Report r;
    r.title = "existential-transfer";
    const bool b = !biased.failed(), t = !strict.failed();
    r.notes.push_back(std::string("biased side: ") + (b ? "existential" : "not existential") + "; first failure: " + first_fail(biased));
    r.notes.push_back(std::string("strict side: ") + (t ? "existential" : "not existential") + "; first failure: " + first_fail(strict));
    Quant q;
    q.hold(b == t, "existential status differs between the doctrine and its strictification");
    q.emit(r, "existential-iff-strictification-existential", "L=" + std::to_string(s.bound()));
    if (!b && !t) {
        // same failing condition and the same elements on both sides
        auto key = [](const Report& rep) -> std::string {
            for (const auto& c : rep.checks)
                if (c.verdict == Verdict::fail) {
                    std::string n = c.name.rfind("weak-", 0) == 0 ? c.name.substr(5) : c.name;
                    return n + ": " + c.witness;
                }
            return {};
        };
        Quant w;
        w.hold(key(biased) == key(strict), [&] { return key(biased) + " vs " + key(strict); });
        w.emit(r, "matching-witness", key(biased));
    }
    return r;
}

} // namespace bed
