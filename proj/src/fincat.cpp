#include "bed/fincat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bed {

const char* to_string(ConeClass c)
{
    switch (c) {
    case ConeClass::not_weak: return "not_weak";
    case ConeClass::weak_only: return "weak_only";
    case ConeClass::strict: return "strict";
    }
    return "?";
}

int Category::Builder::add_object(std::string name)
{
    objects_.push_back(std::move(name));
    ident_.push_back(-1);
    return static_cast<int>(objects_.size()) - 1;
}

int Category::Builder::add_arrow(std::string name, int src, int tgt)
{
    arrows_.emplace_back(std::move(name), src, tgt);
    return static_cast<int>(arrows_.size()) - 1;
}

void Category::Builder::set_identity(int obj, int arrow) { ident_[obj] = arrow; }

Category Category::Builder::build(const std::function<int(int, int)>& compose) const
{
    Category c;
    const int no = static_cast<int>(objects_.size()), na = static_cast<int>(arrows_.size());
    std::vector<int> oord(no), aord(na);
    std::iota(oord.begin(), oord.end(), 0);
    std::iota(aord.begin(), aord.end(), 0);
    std::sort(oord.begin(), oord.end(), [&](int a, int b) { return objects_[a] < objects_[b]; });
    std::sort(aord.begin(), aord.end(), [&](int a, int b) { return std::get<0>(arrows_[a]) < std::get<0>(arrows_[b]); });
    std::vector<int> onew(no), anew(na);
    for (int i = 0; i < no; ++i) onew[oord[i]] = i;
    for (int i = 0; i < na; ++i) anew[aord[i]] = i;

    for (int i = 0; i < no; ++i) {
        c.obj_names_.push_back(objects_[oord[i]]);
        if (!c.obj_index_.emplace(c.obj_names_.back(), i).second)
            throw std::invalid_argument("duplicate object '" + c.obj_names_.back() + "'");
    }
    for (int i = 0; i < na; ++i) {
        const auto& [n, s, t] = arrows_[aord[i]];
        c.arr_names_.push_back(n);
        if (!c.arr_index_.emplace(n, i).second) throw std::invalid_argument("duplicate arrow '" + n + "'");
        c.src_.push_back(onew[s]);
        c.tgt_.push_back(onew[t]);
    }
    c.ident_.resize(no);
    for (int i = 0; i < no; ++i) {
        int a = ident_[oord[i]];
        if (a < 0) throw std::invalid_argument("object '" + c.obj_names_[i] + "' has no identity");
        c.ident_[i] = anew[a];
    }
    c.hom_.assign(static_cast<size_t>(no) * no, {});
    c.into_.assign(no, {});
    c.out_.assign(no, {});
    c.into_pos_.resize(na);
    c.hom_pos_.resize(na);
    for (int a = 0; a < na; ++a) {
        auto& h = c.hom_[static_cast<size_t>(c.src_[a]) * no + c.tgt_[a]];
        c.hom_pos_[a] = static_cast<int>(h.size());
        h.push_back(a);
        c.into_pos_[a] = static_cast<int>(c.into_[c.tgt_[a]].size());
        c.into_[c.tgt_[a]].push_back(a);
        c.out_[c.src_[a]].push_back(a);
    }
    c.comp_.resize(na);
    for (int g = 0; g < na; ++g) {
        const auto& in = c.into_[c.src_[g]];
        auto& row = c.comp_[g];
        row.resize(in.size());
        for (size_t k = 0; k < in.size(); ++k) {
            int r = compose(aord[g], aord[in[k]]);
            if (r < 0 || r >= na) throw std::invalid_argument("composition undefined for (" + c.arr_names_[g] + "," + c.arr_names_[in[k]] + ")");
            row[k] = anew[r];
        }
    }
    return c;
}

std::optional<int> Category::find_object(const std::string& n) const
{
    auto it = obj_index_.find(n);
    if (it == obj_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Category::find_arrow(const std::string& n) const
{
    auto it = arr_index_.find(n);
    if (it == arr_index_.end()) return std::nullopt;
    return it->second;
}

int Category::object(const std::string& n) const
{
    auto o = find_object(n);
    if (!o) throw std::out_of_range("unknown object '" + n + "'");
    return *o;
}

int Category::arrow(const std::string& n) const
{
    auto a = find_arrow(n);
    if (!a) throw std::out_of_range("unknown arrow '" + n + "'");
    return *a;
}

Diagnostics Category::check_laws() const
{
    Diagnostics d;
    for (int f = 0; f < num_arrows(); ++f) {
        if (compose(id(tgt(f)), f) != f) d.push_back("left identity law fails at " + arr_name(f));
        if (compose(f, id(src(f))) != f) d.push_back("right identity law fails at " + arr_name(f));
        for (int g : out(tgt(f))) {
            int gf = compose(g, f);
            if (src(gf) != src(f) || tgt(gf) != tgt(g)) {
                d.push_back("composite " + arr_name(g) + "." + arr_name(f) + " has wrong endpoints");
                continue;
            }
            for (int h : out(tgt(g)))
                if (compose(h, gf) != compose(compose(h, g), f))
                    d.push_back("associativity fails at (" + arr_name(h) + "," + arr_name(g) + "," + arr_name(f) + ")");
        }
        if (d.size() > 50) break;
    }
    return d;
}

RawCategory Category::to_raw() const
{
    RawCategory r;
    r.objects = obj_names_;
    for (int a = 0; a < num_arrows(); ++a) r.arrows.push_back({arr_names_[a], obj_names_[src_[a]], obj_names_[tgt_[a]]});
    for (int o = 0; o < num_objects(); ++o) r.identities.emplace_back(obj_names_[o], arr_names_[ident_[o]]);
    for (int g = 0; g < num_arrows(); ++g)
        for (int f : into_[src_[g]]) r.compose.emplace_back(arr_names_[g], arr_names_[f], arr_names_[compose(g, f)]);
    return r;
}

std::vector<int> Category::feet(const Cone& c) const
{
    std::vector<int> r;
    for (int l : c.legs) r.push_back(tgt(l));
    return r;
}

std::string Category::cone_name(const Cone& c) const
{
    std::string s = "(" + obj_name(c.apex) + ";";
    for (size_t i = 0; i < c.legs.size(); ++i) s += (i ? "," : "") + arr_name(c.legs[i]);
    return s + ")";
}

namespace {

constexpr long kCap = 1L << 40;

long hom_product(const Category& cat, int A, const std::vector<int>& feet)
{
    long p = 1;
    for (int x : feet) {
        p *= static_cast<long>(cat.hom(A, x).size());
        if (p > kCap) return kCap;
    }
    return p;
}

// Mixed-radix code of (legs_i . h) in the product of hom(A, foot_i).
long code_of(const Category& cat, const Cone& cone, int h, int A, const std::vector<int>& feet)
{
    long c = 0;
    for (size_t i = 0; i < feet.size(); ++i)
        c = c * static_cast<long>(cat.hom(A, feet[i]).size()) + cat.hom_pos(cat.compose(cone.legs[i], h));
    return c;
}

ConeClass classify_with_feet(const Category& cat, const Cone& cone, const std::vector<int>& feet)
{
    bool unique = true;
    std::vector<int> count;
    for (int A = 0; A < cat.num_objects(); ++A) {
        const long total = hom_product(cat, A, feet);
        const auto& hs = cat.hom(A, cone.apex);
        if (total > static_cast<long>(hs.size())) return ConeClass::not_weak;
        count.assign(static_cast<size_t>(total), 0);
        long covered = 0;
        for (int h : hs) {
            int& n = count[code_of(cat, cone, h, A, feet)];
            if (n++ == 0) ++covered;
            else unique = false;
        }
        if (covered != total) return ConeClass::not_weak;
    }
    return unique ? ConeClass::strict : ConeClass::weak_only;
}

} // namespace

ConeClass classify_cone(const Category& cat, const Cone& cone) { return classify_with_feet(cat, cone, cat.feet(cone)); }

const std::vector<std::pair<Cone, ConeClass>>& Category::weak_products(const std::vector<int>& feet) const
{
    auto it = wp_cache_.find(feet);
    if (it != wp_cache_.end()) return it->second;
    std::vector<std::pair<Cone, ConeClass>> out;
    for (int W = 0; W < num_objects(); ++W) {
        bool possible = true;
        for (int A = 0; A < num_objects() && possible; ++A)
            possible = hom_product(*this, A, feet) <= static_cast<long>(hom(A, W).size());
        if (!possible) continue;
        std::vector<const std::vector<int>*> homs;
        bool empty = false;
        for (int x : feet) {
            homs.push_back(&hom(W, x));
            empty = empty || homs.back()->empty();
        }
        if (empty) continue;
        std::vector<size_t> idx(feet.size(), 0);
        while (true) {
            Cone c{W, {}};
            for (size_t i = 0; i < feet.size(); ++i) c.legs.push_back((*homs[i])[idx[i]]);
            ConeClass k = classify_with_feet(*this, c, feet);
            if (k != ConeClass::not_weak) out.emplace_back(std::move(c), k);
            int i = static_cast<int>(feet.size()) - 1;
            while (i >= 0 && ++idx[i] == homs[i]->size()) idx[i--] = 0;
            if (i < 0) break;
        }
    }
    return wp_cache_.emplace(feet, std::move(out)).first->second;
}

std::vector<Cone> enumerate_weak_products(const Category& cat, const std::vector<int>& feet)
{
    std::vector<Cone> r;
    for (const auto& [c, k] : cat.weak_products(feet)) r.push_back(c);
    return r;
}

std::vector<int> fill_ins(const Category& cat, const Cone& cone, int A, const std::vector<int>& targets)
{
    std::vector<int> r;
    for (int h : cat.hom(A, cone.apex)) {
        bool ok = true;
        for (size_t i = 0; i < targets.size() && ok; ++i) ok = cat.compose(cone.legs[i], h) == targets[i];
        if (ok) r.push_back(h);
    }
    return r;
}

ConeClass classify_weak_pullback(const Category& cat, int f, int g, int a, int b)
{
    if (cat.tgt(f) != cat.tgt(g) || cat.src(a) != cat.src(b) || cat.tgt(a) != cat.src(f) || cat.tgt(b) != cat.src(g))
        throw std::invalid_argument("square does not type-check");
    if (cat.compose(f, a) != cat.compose(g, b)) throw std::invalid_argument("candidate square does not commute");
    const int P = cat.src(a), X = cat.src(f), Y = cat.src(g);
    bool unique = true;
    for (int Z = 0; Z < cat.num_objects(); ++Z) {
        const auto& hx = cat.hom(Z, X);
        const auto& hy = cat.hom(Z, Y);
        std::vector<int> count(hx.size() * hy.size(), 0);
        for (int h : cat.hom(Z, P)) {
            int u = cat.compose(a, h), v = cat.compose(b, h);
            ++count[cat.hom_pos(u) * hy.size() + cat.hom_pos(v)];
        }
        for (int u : hx)
            for (int v : hy) {
                if (cat.compose(f, u) != cat.compose(g, v)) continue;
                int n = count[cat.hom_pos(u) * hy.size() + cat.hom_pos(v)];
                if (n == 0) return ConeClass::not_weak;
                if (n > 1) unique = false;
            }
    }
    return unique ? ConeClass::strict : ConeClass::weak_only;
}

Diagnostics validate_category(const RawCategory& raw)
{
    Diagnostics d;
    build_category(raw, d);
    return d;
}

std::optional<Category> build_category(const RawCategory& raw, Diagnostics& d)
{
    std::unordered_map<std::string, int> oi, ai;
    for (const auto& o : raw.objects)
        if (!oi.emplace(o, static_cast<int>(oi.size())).second) d.push_back("duplicate object '" + o + "'");
    std::vector<int> s, t;
    for (const auto& a : raw.arrows) {
        if (!ai.emplace(a.id, static_cast<int>(ai.size())).second) d.push_back("duplicate arrow '" + a.id + "'");
        auto is = oi.find(a.src), it = oi.find(a.tgt);
        if (is == oi.end() || it == oi.end()) {
            d.push_back("arrow '" + a.id + "' names an unknown object");
            s.push_back(0);
            t.push_back(0);
        } else {
            s.push_back(is->second);
            t.push_back(it->second);
        }
    }
    if (!d.empty()) return std::nullopt;
    std::vector<int> ident(raw.objects.size(), -1);
    for (const auto& [o, a] : raw.identities) {
        auto io = oi.find(o);
        auto ia = ai.find(a);
        if (io == oi.end() || ia == ai.end()) {
            d.push_back("identity entry (" + o + "," + a + ") unresolved");
            continue;
        }
        if (s[ia->second] != io->second || t[ia->second] != io->second)
            d.push_back("identity '" + a + "' is not an endo-arrow of " + o);
        ident[io->second] = ia->second;
    }
    for (size_t o = 0; o < ident.size(); ++o)
        if (ident[o] < 0) d.push_back("object '" + raw.objects[o] + "' has no identity");
    const size_t na = raw.arrows.size();
    std::vector<int> table(na * na, -1);
    for (const auto& [g, f, h] : raw.compose) {
        auto ig = ai.find(g), iF = ai.find(f), ih = ai.find(h);
        if (ig == ai.end() || iF == ai.end() || ih == ai.end()) {
            d.push_back("composition entry (" + g + "," + f + ")=" + h + " unresolved");
            continue;
        }
        if (t[iF->second] != s[ig->second]) {
            d.push_back("composition entry (" + g + "," + f + ") is not composable");
            continue;
        }
        if (s[ih->second] != s[iF->second] || t[ih->second] != t[ig->second])
            d.push_back("composite " + g + "." + f + "=" + h + " has wrong endpoints");
        int& slot = table[ig->second * na + iF->second];
        if (slot >= 0 && slot != ih->second) d.push_back("duplicate composition entry (" + g + "," + f + ")");
        slot = ih->second;
    }
    for (size_t g = 0; g < na; ++g)
        for (size_t f = 0; f < na; ++f)
            if (t[f] == s[g] && table[g * na + f] < 0) {
                // identities compose implicitly
                if (ident[s[g]] == static_cast<int>(g)) table[g * na + f] = static_cast<int>(f);
                else if (ident[t[f]] == static_cast<int>(f)) table[g * na + f] = static_cast<int>(g);
                else d.push_back("composition missing for (" + raw.arrows[g].id + "," + raw.arrows[f].id + ")");
            }
    if (!d.empty()) return std::nullopt;
    Category::Builder b;
    for (const auto& o : raw.objects) b.add_object(o);
    for (size_t a = 0; a < na; ++a) b.add_arrow(raw.arrows[a].id, s[a], t[a]);
    for (size_t o = 0; o < ident.size(); ++o) b.set_identity(static_cast<int>(o), ident[o]);
    Category c = b.build([&](int g, int f) { return table[g * na + f]; });
    Diagnostics laws = c.check_laws();
    if (!laws.empty()) {
        d.insert(d.end(), laws.begin(), laws.end());
        return std::nullopt;
    }
    return c;
}

Diagnostics validate_functor(const Category& s, const Category& t, const Functor& F)
{
    Diagnostics d;
    if (static_cast<int>(F.obj.size()) != s.num_objects() || static_cast<int>(F.arr.size()) != s.num_arrows()) {
        d.push_back("functor tables have the wrong size");
        return d;
    }
    for (int o = 0; o < s.num_objects(); ++o)
        if (F.obj[o] >= 0 && F.arr[s.id(o)] != t.id(F.obj[o])) d.push_back("identity not preserved at " + s.obj_name(o));
    for (int f = 0; f < s.num_arrows(); ++f) {
        if (F.obj[s.src(f)] < 0 || F.obj[s.tgt(f)] < 0) continue;
        int Ff = F.arr[f];
        if (Ff < 0 || t.src(Ff) != F.obj[s.src(f)] || t.tgt(Ff) != F.obj[s.tgt(f)]) {
            d.push_back("endpoints not preserved at " + s.arr_name(f));
            continue;
        }
        for (int g : s.out(s.tgt(f))) {
            if (F.obj[s.tgt(g)] < 0) continue;
            if (F.arr[s.compose(g, f)] != t.compose(F.arr[g], Ff))
                d.push_back("composition not preserved at (" + s.arr_name(g) + "," + s.arr_name(f) + ")");
        }
        if (d.size() > 50) break;
    }
    return d;
}

Functor compose(const Functor& g, const Functor& f)
{
    Functor r;
    for (int o : f.obj) r.obj.push_back(o < 0 ? -1 : g.obj[o]);
    for (int a : f.arr) r.arr.push_back(a < 0 ? -1 : g.arr[a]);
    return r;
}

Slice slice_category(const Category& cat, int A)
{
    Slice s;
    Category::Builder b;
    std::vector<int> objs = cat.into(A);
    for (int x : objs) {
        b.add_object(cat.arr_name(x));
        s.object_arrow.push_back(x);
    }
    std::vector<std::tuple<int, int, int>> arrs; // h, x-index, y-index
    for (size_t xi = 0; xi < objs.size(); ++xi)
        for (size_t yi = 0; yi < objs.size(); ++yi)
            for (int h : cat.hom(cat.src(objs[xi]), cat.src(objs[yi])))
                if (cat.compose(objs[yi], h) == objs[xi]) {
                    std::string n = "<" + cat.arr_name(objs[xi]) + "|" + cat.arr_name(h) + "|" + cat.arr_name(objs[yi]) + ">";
                    int a = b.add_arrow(n, static_cast<int>(xi), static_cast<int>(yi));
                    arrs.emplace_back(h, static_cast<int>(xi), static_cast<int>(yi));
                    if (h == cat.id(cat.src(objs[xi])) && xi == yi) b.set_identity(static_cast<int>(xi), a);
                }
    std::map<std::tuple<int, int, int>, int> lookup;
    for (size_t i = 0; i < arrs.size(); ++i) lookup[arrs[i]] = static_cast<int>(i);
    s.cat = b.build([&](int g, int f) {
        auto [hg, gx, gy] = arrs[g];
        auto [hf, fx, fy] = arrs[f];
        return lookup.at({cat.compose(hg, hf), fx, gy});
    });
    // Builder sorted names; recover base data through the names.
    std::vector<int> sorted_obj(s.cat.num_objects());
    for (int o = 0; o < s.cat.num_objects(); ++o) sorted_obj[o] = cat.arrow(s.cat.obj_name(o));
    s.object_arrow = sorted_obj;
    s.forget.obj.resize(s.cat.num_objects());
    for (int o = 0; o < s.cat.num_objects(); ++o) s.forget.obj[o] = cat.src(s.object_arrow[o]);
    std::unordered_map<std::string, int> by_name;
    for (size_t i = 0; i < arrs.size(); ++i) {
        auto [h, xi, yi] = arrs[i];
        by_name["<" + cat.arr_name(objs[xi]) + "|" + cat.arr_name(h) + "|" + cat.arr_name(objs[yi]) + ">"] = h;
    }
    s.arrow_base.resize(s.cat.num_arrows());
    for (int a = 0; a < s.cat.num_arrows(); ++a) s.arrow_base[a] = by_name.at(s.cat.arr_name(a));
    s.forget.arr = s.arrow_base;
    return s;
}

Reflection poset_reflection(const Category& cat)
{
    const int n = cat.num_objects();
    auto reach = [&](int a, int b) { return !cat.hom(a, b).empty(); };
    Reflection r;
    r.cls.assign(n, -1);
    std::vector<int> first;
    for (int o = 0; o < n; ++o) {
        if (r.cls[o] >= 0) continue;
        int k = static_cast<int>(first.size());
        first.push_back(o);
        for (int p = o; p < n; ++p)
            if (r.cls[p] < 0 && reach(o, p) && reach(p, o)) r.cls[p] = k;
    }
    const int m = static_cast<int>(first.size());
    r.poset.le.assign(static_cast<size_t>(m) * m, 0);
    for (int i = 0; i < m; ++i) {
        r.poset.elements.push_back(cat.obj_name(first[i]));
        for (int j = 0; j < m; ++j) r.poset.le[i * m + j] = reach(first[i], first[j]);
    }
    return r;
}

IsoClasses iso_classes(const Category& cat)
{
    const int n = cat.num_objects();
    IsoClasses ic;
    ic.rep.assign(n, -1);
    ic.to_rep.assign(n, -1);
    ic.from_rep.assign(n, -1);
    for (int o = 0; o < n; ++o) {
        if (ic.rep[o] >= 0) continue;
        ic.reps.push_back(o);
        ic.rep[o] = o;
        ic.to_rep[o] = ic.from_rep[o] = cat.id(o);
        for (int p = o + 1; p < n; ++p) {
            if (ic.rep[p] >= 0) continue;
            for (int f : cat.hom(p, o)) {
                for (int g : cat.hom(o, p))
                    if (cat.compose(g, f) == cat.id(p) && cat.compose(f, g) == cat.id(o)) {
                        ic.rep[p] = o;
                        ic.to_rep[p] = f;
                        ic.from_rep[p] = g;
                        break;
                    }
                if (ic.rep[p] >= 0) break;
            }
        }
    }
    return ic;
}

namespace {

struct SkeletonSearch {
    const Category& a;
    const Category& b;
    const std::vector<int>& ra;
    const std::vector<int>& rb;
    long budget;
    long nodes = 0;
    bool exhausted = false;
    std::vector<int> omap;     // a-object -> b-object (reps only)
    std::vector<int> amap;     // a-arrow -> b-arrow, -1 unassigned
    std::vector<char> used;    // b-arrow already an image
    std::vector<int> order;    // arrows of the a-skeleton in assignment order
    std::vector<char> in_skel; // a-arrow belongs to the skeleton

    bool assign(int x, int y, std::vector<int>& trail)
    {
        if (amap[x] >= 0) return amap[x] == y;
        if (used[y]) return false;
        if (b.src(y) != omap[a.src(x)] || b.tgt(y) != omap[a.tgt(x)]) return false;
        amap[x] = y;
        used[y] = 1;
        trail.push_back(x);
        std::vector<std::pair<int, int>> queue{{x, y}};
        while (!queue.empty()) {
            auto [u, v] = queue.back();
            queue.pop_back();
            // composites with every assigned arrow are forced
            for (int w : a.out(a.tgt(u))) {
                if (!in_skel[w] || amap[w] < 0) continue;
                int c = a.compose(w, u), img = b.compose(amap[w], v);
                if (amap[c] >= 0) {
                    if (amap[c] != img) return false;
                } else {
                    if (used[img]) return false;
                    amap[c] = img;
                    used[img] = 1;
                    trail.push_back(c);
                    queue.emplace_back(c, img);
                }
            }
            for (int w : a.into(a.src(u))) {
                if (!in_skel[w] || amap[w] < 0) continue;
                int c = a.compose(u, w), img = b.compose(v, amap[w]);
                if (amap[c] >= 0) {
                    if (amap[c] != img) return false;
                } else {
                    if (used[img]) return false;
                    amap[c] = img;
                    used[img] = 1;
                    trail.push_back(c);
                    queue.emplace_back(c, img);
                }
            }
        }
        return true;
    }

    void undo(std::vector<int>& trail, size_t mark)
    {
        while (trail.size() > mark) {
            int x = trail.back();
            trail.pop_back();
            used[amap[x]] = 0;
            amap[x] = -1;
        }
    }

    bool arrows(size_t k, std::vector<int>& trail)
    {
        while (k < order.size() && amap[order[k]] >= 0) ++k;
        if (k == order.size()) return true;
        if (++nodes > budget) {
            exhausted = true;
            return false;
        }
        int x = order[k];
        for (int y : b.hom(omap[a.src(x)], omap[a.tgt(x)])) {
            size_t mark = trail.size();
            if (assign(x, y, trail) && arrows(k + 1, trail)) return true;
            undo(trail, mark);
            if (exhausted) return false;
        }
        return false;
    }

    bool objects(size_t k, std::vector<char>& taken, std::vector<int>& trail)
    {
        if (k == ra.size()) {
            size_t mark = trail.size();
            bool ok = true;
            for (int o : ra) ok = ok && assign(a.id(o), b.id(omap[o]), trail);
            if (ok && arrows(0, trail)) return true;
            undo(trail, mark);
            return false;
        }
        int x = ra[k];
        for (size_t j = 0; j < rb.size(); ++j) {
            if (taken[j]) continue;
            int y = rb[j];
            bool fits = true;
            for (size_t i = 0; i <= k && fits; ++i) {
                int xi = ra[i], yi = (i == k) ? y : omap[xi];
                fits = a.hom(x, xi).size() == b.hom(y, yi).size() && a.hom(xi, x).size() == b.hom(yi, y).size();
            }
            if (!fits) continue;
            if (++nodes > budget) {
                exhausted = true;
                return false;
            }
            omap[x] = y;
            taken[j] = 1;
            if (objects(k + 1, taken, trail)) return true;
            taken[j] = 0;
            omap[x] = -1;
            if (exhausted) return false;
        }
        return false;
    }
};

} // namespace

Equivalence find_equivalence(const Category& a, const Category& b, long budget)
{
    Equivalence e;
    IsoClasses ia = iso_classes(a), ib = iso_classes(b);
    if (ia.reps.size() != ib.reps.size()) {
        e.status = Equivalence::Status::absent;
        e.reason = std::to_string(ia.reps.size()) + " vs " + std::to_string(ib.reps.size()) + " iso classes";
        return e;
    }
    SkeletonSearch s{a, b, ia.reps, ib.reps, budget, 0, false, {}, {}, {}, {}, {}};
    s.omap.assign(a.num_objects(), -1);
    s.amap.assign(a.num_arrows(), -1);
    s.used.assign(b.num_arrows(), 0);
    s.in_skel.assign(a.num_arrows(), 0);
    for (int x : ia.reps)
        for (int y : ia.reps)
            for (int f : a.hom(x, y)) {
                s.in_skel[f] = 1;
                s.order.push_back(f);
            }
    std::vector<char> taken(ib.reps.size(), 0);
    std::vector<int> trail;
    bool ok = s.objects(0, taken, trail);
    e.nodes = s.nodes;
    if (!ok) {
        e.status = s.exhausted ? Equivalence::Status::budget_exhausted : Equivalence::Status::absent;
        e.reason = s.exhausted ? "search budget exhausted" : "no isomorphism between skeleta";
        return e;
    }
    std::vector<int> inv(b.num_arrows(), -1);
    for (int f = 0; f < a.num_arrows(); ++f)
        if (s.amap[f] >= 0) inv[s.amap[f]] = f;
    std::vector<int> oinv(b.num_objects(), -1);
    for (int x : ia.reps) oinv[s.omap[x]] = x;

    e.status = Equivalence::Status::found;
    e.F.obj.resize(a.num_objects());
    e.F.arr.resize(a.num_arrows());
    for (int x = 0; x < a.num_objects(); ++x) e.F.obj[x] = s.omap[ia.rep[x]];
    for (int f = 0; f < a.num_arrows(); ++f) {
        int core = a.compose(ia.to_rep[a.tgt(f)], a.compose(f, ia.from_rep[a.src(f)]));
        e.F.arr[f] = s.amap[core];
    }
    e.G.obj.resize(b.num_objects());
    e.G.arr.resize(b.num_arrows());
    for (int y = 0; y < b.num_objects(); ++y) e.G.obj[y] = oinv[ib.rep[y]];
    for (int g = 0; g < b.num_arrows(); ++g) {
        int core = b.compose(ib.to_rep[b.tgt(g)], b.compose(g, ib.from_rep[b.src(g)]));
        e.G.arr[g] = inv[core];
    }
    e.eta = ia.to_rep;
    e.eps = ib.to_rep;
    return e;
}

Diagnostics verify_equivalence(const Category& a, const Category& b, const Equivalence& e)
{
    Diagnostics d = validate_functor(a, b, e.F);
    Diagnostics g = validate_functor(b, a, e.G);
    d.insert(d.end(), g.begin(), g.end());
    if (!d.empty()) return d;
    auto natural_iso = [&](const Category& c, const Functor& H, const std::vector<int>& comp, const char* tag) {
        for (int x = 0; x < c.num_objects(); ++x) {
            int u = comp[x];
            if (c.src(u) != x || c.tgt(u) != H.obj[x]) {
                d.push_back(std::string(tag) + " component at " + c.obj_name(x) + " has wrong endpoints");
                continue;
            }
            bool iso = false;
            for (int v : c.hom(H.obj[x], x))
                iso = iso || (c.compose(v, u) == c.id(x) && c.compose(u, v) == c.id(H.obj[x]));
            if (!iso) d.push_back(std::string(tag) + " component at " + c.obj_name(x) + " is not invertible");
        }
        for (int f = 0; f < c.num_arrows(); ++f)
            if (c.compose(H.arr[f], comp[c.src(f)]) != c.compose(comp[c.tgt(f)], f))
                d.push_back(std::string(tag) + " not natural at " + c.arr_name(f));
    };
    natural_iso(a, compose(e.G, e.F), e.eta, "eta");
    natural_iso(b, compose(e.F, e.G), e.eps, "eps");
    return d;
}

} // namespace bed
