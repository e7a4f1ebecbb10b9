#include "bed/examples.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace bed {

namespace {

std::string fn_name(const std::string& s, const std::string& t, const std::vector<std::string>& te, const std::vector<int>& img)
{
    std::string n = s + ">" + t + ":";
    for (size_t i = 0; i < img.size(); ++i) n += (i ? "," : "") + te[img[i]];
    return n;
}

Lattice from_order(const std::vector<std::string>& names, const std::vector<std::pair<int, int>>& le, const std::string& what)
{
    RawSemilattice raw;
    raw.elements = names;
    for (int i = 0; i < static_cast<int>(names.size()); ++i) raw.leq.push_back({names[i], names[i]});
    for (auto [a, b] : le) raw.leq.push_back({names[a], names[b]});
    Diagnostics d;
    auto l = build_lattice(raw, d);
    if (!l) throw ChartTooShallow(what + ": " + d.front());
    return *l;
}

Lattice named_chain(const std::vector<std::string>& names)
{
    std::vector<std::pair<int, int>> le;
    for (int i = 0; i < static_cast<int>(names.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(names.size()); ++j) le.push_back({i, j});
    return from_order(names, le, "chain");
}

// Preorder on arrows into X: f <= g iff f factors through g.
std::vector<std::vector<char>> factor_order(const Category& C, int X)
{
    const auto& in = C.into(X);
    const size_t n = in.size();
    std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
    for (size_t gi = 0; gi < n; ++gi)
        for (int h : C.into(C.src(in[gi]))) {
            int f = C.compose(in[gi], h);
            le[std::lower_bound(in.begin(), in.end(), f) - in.begin()][gi] = 1;
        }
    return le;
}

bool has_initial(const Category& C)
{
    for (int I = 0; I < C.num_objects(); ++I) {
        bool ok = true;
        for (int Y = 0; Y < C.num_objects() && ok; ++Y) ok = C.hom(I, Y).size() == 1;
        if (ok) return true;
    }
    return false;
}

// Classes of the given arrows into X under mutual factorization.
struct ArrowClasses {
    std::vector<int> cls;   // per position in `arrows`, -1 if excluded
    std::vector<int> first; // per class, first arrow position
};

ArrowClasses classify(const std::vector<std::vector<char>>& le, const std::vector<char>& keep)
{
    ArrowClasses ac;
    const size_t n = le.size();
    ac.cls.assign(n, -1);
    for (size_t i = 0; i < n; ++i) {
        if (!keep[i] || ac.cls[i] >= 0) continue;
        int c = static_cast<int>(ac.first.size());
        ac.first.push_back(static_cast<int>(i));
        for (size_t j = i; j < n; ++j)
            if (keep[j] && le[i][j] && le[j][i]) ac.cls[j] = c;
    }
    return ac;
}

} // namespace

SetChart set_chart(const std::vector<std::pair<std::string, std::vector<std::string>>>& objects)
{
    SetChart s;
    Category::Builder b;
    for (const auto& [n, e] : objects) b.add_object(n);
    std::map<std::string, std::vector<int>> fns;
    std::map<std::tuple<int, int, std::vector<int>>, int> lookup;
    const int no = static_cast<int>(objects.size());
    for (int x = 0; x < no; ++x)
        for (int y = 0; y < no; ++y) {
            const int m = static_cast<int>(objects[x].second.size()), n = static_cast<int>(objects[y].second.size());
            std::vector<int> img(m, 0);
            while (true) {
                std::string nm = fn_name(objects[x].first, objects[y].first, objects[y].second, img);
                int a = b.add_arrow(nm, x, y);
                fns[nm] = img;
                lookup[{x, y, img}] = a;
                bool ident = x == y;
                for (int i = 0; i < m && ident; ++i) ident = img[i] == i;
                if (ident) b.set_identity(x, a);
                int i = 0;
                while (i < m && ++img[i] == n) img[i++] = 0;
                if (i == m) break;
            }
        }
    std::vector<std::vector<int>> bfn(b.num_arrows());
    for (const auto& [k, a] : lookup) bfn[a] = std::get<2>(k);
    auto cat = std::make_shared<Category>(b.build([&](int g, int f) {
        std::vector<int> img(bfn[f].size());
        for (size_t i = 0; i < img.size(); ++i) img[i] = bfn[g][bfn[f][i]];
        return lookup.at({b.src(f), b.tgt(g), img});
    }));
    s.cat = cat;
    for (int o = 0; o < cat->num_objects(); ++o)
        for (const auto& [n, e] : objects)
            if (n == cat->obj_name(o)) s.elements.push_back(e);
    for (int a = 0; a < cat->num_arrows(); ++a) s.fn.push_back(fns.at(cat->arr_name(a)));
    return s;
}

Doctrine powerset_doctrine(const SetChart& s)
{
    Doctrine d;
    d.base = s.cat;
    for (const auto& e : s.elements) d.fiber.push_back(powerset(e));
    for (int f = 0; f < s.cat->num_arrows(); ++f) {
        const auto& img = s.fn[f];
        const unsigned n = 1u << s.elements[s.cat->tgt(f)].size();
        Map m(n);
        for (unsigned mask = 0; mask < n; ++mask) {
            unsigned pre = 0;
            for (size_t i = 0; i < img.size(); ++i)
                if (mask >> img[i] & 1u) pre |= 1u << i;
            m[mask] = static_cast<int>(pre);
        }
        d.reindex.push_back(std::move(m));
    }
    return d;
}

EqualityAssignment set_equality(const SetChart& s, const Doctrine&)
{
    EqualityAssignment eq;
    const Category& C = *s.cat;
    for (int X = 0; X < C.num_objects(); ++X)
        for (const auto& [p, k] : C.weak_products({X, X})) {
            unsigned mask = 0;
            const auto& a = s.fn[p.legs[0]];
            const auto& b = s.fn[p.legs[1]];
            for (size_t w = 0; w < a.size(); ++w)
                if (a[w] == b[w]) mask |= 1u << w;
            eq[p] = static_cast<int>(mask);
        }
    return eq;
}

StrictDelta set_strict_delta(const SetChart& s, const Doctrine& d)
{
    StrictDelta sd;
    sd.product = choose_strict_products(*s.cat);
    auto eq = set_equality(s, d);
    for (int X = 0; X < s.cat->num_objects(); ++X) {
        auto it = sd.product.find({X, X});
        if (it != sd.product.end()) sd.delta[X] = eq.at(it->second);
    }
    return sd;
}

WeakSubobjects weak_subobjects(CategoryPtr cat)
{
    const Category& C = *cat;
    WeakSubobjects ws;
    ws.doc.base = cat;
    const bool formal = !has_initial(C);
    for (int X = 0; X < C.num_objects(); ++X) {
        const auto& in = C.into(X);
        auto le = factor_order(C, X);
        auto ac = classify(le, std::vector<char>(in.size(), 1));
        const int n = static_cast<int>(ac.first.size());
        std::vector<std::string> names;
        std::vector<std::pair<int, int>> ord;
        for (int c = 0; c < n; ++c) names.push_back("[" + C.arr_name(in[ac.first[c]]) + "]");
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b && le[ac.first[a]][ac.first[b]]) ord.push_back({a, b});
        if (formal) {
            names.push_back("0");
            for (int c = 0; c < n; ++c) ord.push_back({n, c});
        }
        ws.doc.fiber.push_back(from_order(names, ord, "weak subobjects of " + C.obj_name(X)));
        ws.cls.push_back(ac.cls);
        ws.formal_bottom.push_back(formal ? n : -1);
    }
    for (int f = 0; f < C.num_arrows(); ++f) {
        const int X = C.src(f), Y = C.tgt(f);
        const Lattice& PX = ws.doc.at(X);
        Map ex(PX.size());
        const auto& inX = C.into(X);
        const auto& inY = C.into(Y);
        for (size_t i = 0; i < inX.size(); ++i) {
            int g = C.compose(f, inX[i]);
            ex[ws.cls[X][i]] = ws.cls[Y][std::lower_bound(inY.begin(), inY.end(), g) - inY.begin()];
        }
        if (formal) ex[ws.formal_bottom[X]] = ws.formal_bottom[Y];
        auto r = right_adjoint(PX, ws.doc.at(Y), ex);
        if (!r) throw ChartTooShallow("no internal weak pullback along " + C.arr_name(f));
        ws.doc.reindex.push_back(*r);
    }
    for (int X = 0; X < C.num_objects(); ++X)
        for (const auto& [p, k] : C.weak_products({X, X})) {
            const int W = p.apex;
            const Lattice& PW = ws.doc.at(W);
            const auto& in = C.into(W);
            std::vector<int> eqz;
            for (size_t i = 0; i < in.size(); ++i)
                if (C.compose(p.legs[0], in[i]) == C.compose(p.legs[1], in[i])) eqz.push_back(ws.cls[W][i]);
            int best = formal ? ws.formal_bottom[W] : -1;
            for (int c : eqz)
                if (best < 0 || PW.leq(best, c)) best = c;
            for (int c : eqz)
                if (best < 0 || !PW.leq(c, best)) best = -1;
            if (best < 0) throw ChartTooShallow("no internal weak equalizer of the legs of " + C.cone_name(p));
            ws.eq[p] = best;
        }
    return ws;
}

Doctrine subobjects(CategoryPtr cat)
{
    const Category& C = *cat;
    Doctrine d;
    d.base = cat;
    auto is_mono = [&](int m) {
        for (int A = 0; A < C.num_objects(); ++A) {
            std::set<int> seen;
            for (int a : C.hom(A, C.src(m)))
                if (!seen.insert(C.compose(m, a)).second) return false;
        }
        return true;
    };
    std::vector<std::vector<int>> cls;
    std::vector<std::vector<std::vector<char>>> orders;
    for (int X = 0; X < C.num_objects(); ++X) {
        const auto& in = C.into(X);
        std::vector<char> keep(in.size());
        for (size_t i = 0; i < in.size(); ++i) keep[i] = is_mono(in[i]);
        auto le = factor_order(C, X);
        auto ac = classify(le, keep);
        std::vector<std::string> names;
        std::vector<std::pair<int, int>> ord;
        const int n = static_cast<int>(ac.first.size());
        for (int c = 0; c < n; ++c) names.push_back("[" + C.arr_name(in[ac.first[c]]) + "]");
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b && le[ac.first[a]][ac.first[b]]) ord.push_back({a, b});
        d.fiber.push_back(from_order(names, ord, "subobjects of " + C.obj_name(X)));
        cls.push_back(ac.cls);
        orders.push_back(std::move(le));
    }
    for (int f = 0; f < C.num_arrows(); ++f) {
        const int X = C.src(f), Y = C.tgt(f);
        const auto& inX = C.into(X);
        const auto& inY = C.into(Y);
        const Lattice& PX = d.at(X);
        Map m(d.at(Y).size(), -1);
        for (size_t j = 0; j < inY.size(); ++j) {
            if (cls[Y][j] < 0 || m[cls[Y][j]] >= 0) continue;
            // largest mono n into X with f.n factoring through inY[j]
            std::vector<int> cand;
            for (size_t i = 0; i < inX.size(); ++i) {
                if (cls[X][i] < 0) continue;
                int g = C.compose(f, inX[i]);
                if (orders[Y][std::lower_bound(inY.begin(), inY.end(), g) - inY.begin()][j]) cand.push_back(cls[X][i]);
            }
            int best = -1;
            for (int c : cand)
                if (best < 0 || PX.leq(best, c)) best = c;
            for (int c : cand)
                if (best < 0 || !PX.leq(c, best)) best = -1;
            if (best < 0) throw ChartTooShallow("no internal pullback of " + C.arr_name(inY[j]) + " along " + C.arr_name(f));
            m[cls[Y][j]] = best;
        }
        d.reindex.push_back(std::move(m));
    }
    return d;
}

// ---- fixtures --------------------------------------------------------------

const std::vector<std::string>& fixture_names()
{
    static const std::vector<std::string> n{"TRIV", "CHAIN2", "CHART3", "CHART3-PSI", "PREORDER-DUP", "NOCOMP", "NONEX", "FINSET4"};
    return n;
}

namespace {

SetChart chart3()
{
    return set_chart({{"1", {"*"}}, {"B", {"b1", "b2"}}, {"Q", {"11", "12", "21", "22"}}});
}

Fixture one_point(const std::string& name, const Lattice& fiber)
{
    Fixture f;
    f.name = name;
    auto s = set_chart({{"1", {"*"}}});
    f.cat = s.cat;
    Doctrine d;
    d.base = s.cat;
    d.fiber = {fiber};
    d.reindex = {identity_map(fiber)};
    EqualityAssignment eq;
    for (const auto& [c, k] : s.cat->weak_products({0, 0})) eq[c] = fiber.top();
    StrictDelta sd;
    sd.product = choose_strict_products(*s.cat);
    sd.delta[0] = fiber.top();
    f.doc = std::move(d);
    f.eq = std::move(eq);
    f.strict = std::move(sd);
    return f;
}

// every fiber a copy of `fiber`, reindexing the identity, delta top
void constant_doctrine(Fixture& f, const Lattice& fiber)
{
    Doctrine d;
    d.base = f.cat;
    d.fiber.assign(f.cat->num_objects(), fiber);
    d.reindex.assign(f.cat->num_arrows(), identity_map(fiber));
    EqualityAssignment eq;
    for (int X = 0; X < f.cat->num_objects(); ++X)
        for (const auto& [c, k] : f.cat->weak_products({X, X})) eq[c] = fiber.top();
    StrictDelta sd;
    sd.product = choose_strict_products(*f.cat);
    for (int X = 0; X < f.cat->num_objects(); ++X)
        if (sd.product.count({X, X})) sd.delta[X] = fiber.top();
    f.doc = std::move(d);
    f.eq = std::move(eq);
    f.strict = std::move(sd);
}

Fixture preorder_dup()
{
    Fixture f;
    f.name = "PREORDER-DUP";
    const std::vector<std::string> obj{"bot", "x", "y", "top"};
    auto le = [](int a, int b) { return a == b || a == 0 || b == 3 || (a != 3 && b != 0); };
    Category::Builder b;
    for (const auto& o : obj) b.add_object(o);
    std::map<std::pair<int, int>, int> arr;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (le(i, j)) {
                arr[{i, j}] = b.add_arrow(obj[i] + "<=" + obj[j], i, j);
                if (i == j) b.set_identity(i, arr[{i, j}]);
            }
    f.cat = std::make_shared<Category>(b.build([&](int g, int h) { return arr.at({b.src(h), b.tgt(g)}); }));
    constant_doctrine(f, named_chain({"0", "1"}));
    return f;
}

Fixture nocomp()
{
    Fixture f;
    f.name = "NOCOMP";
    Category::Builder b;
    int one = b.add_object("1"), e = b.add_object("E");
    int id1 = b.add_arrow("id1", one, one), idE = b.add_arrow("idE", e, e), bang = b.add_arrow("!", e, one);
    b.set_identity(one, id1);
    b.set_identity(e, idE);
    f.cat = std::make_shared<Category>(b.build([&](int g, int h) {
        if (g == id1) return h;
        if (h == idE) return g;
        if (g == idE) return h;
        return bang;
    }));
    const Category& C = *f.cat;
    Doctrine d;
    d.base = f.cat;
    const int O = C.object("1"), E = C.object("E");
    d.fiber.resize(2);
    d.fiber[O] = named_chain({"0", "m", "1"});
    d.fiber[E] = named_chain({"1"});
    d.reindex.resize(3);
    d.reindex[C.id(O)] = identity_map(d.fiber[O]);
    d.reindex[C.id(E)] = identity_map(d.fiber[E]);
    d.reindex[C.arrow("!")] = Map{0, 0, 0};
    EqualityAssignment eq;
    for (int X = 0; X < 2; ++X)
        for (const auto& [c, k] : C.weak_products({X, X})) eq[c] = d.at(c.apex).top();
    StrictDelta sd;
    sd.product = choose_strict_products(C);
    for (int X = 0; X < 2; ++X)
        if (sd.product.count({X, X})) sd.delta[X] = d.at(X).top();
    f.doc = std::move(d);
    f.eq = std::move(eq);
    f.strict = std::move(sd);
    return f;
}

Fixture nonex()
{
    Fixture f;
    f.name = "NONEX";
    auto s = set_chart({{"1", {"*"}}, {"B", {"b1", "b2"}}});
    f.cat = s.cat;
    const Category& C = *s.cat;
    const int O = C.object("1"), B = C.object("B");
    Doctrine d;
    d.base = s.cat;
    d.fiber.resize(2);
    d.fiber[O] = named_chain({"0", "m", "1"});
    d.fiber[B] = from_order({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}, "diamond");
    for (int a = 0; a < C.num_arrows(); ++a) {
        const auto& img = s.fn[a];
        const int X = C.src(a), Y = C.tgt(a);
        Map m;
        if (X == O && Y == O) m = {0, 1, 2};
        else if (X == O) m = {0, 1, 0, 2};     // points: a -> m, b -> 0
        else if (Y == O) m = {0, 1, 3};        // ! : m -> a
        else if (img[0] != img[1]) m = {0, 1, 2, 3};
        else m = {0, 1, 0, 3};                 // constants
        d.reindex.push_back(m);
    }
    EqualityAssignment eq;
    for (int X = 0; X < 2; ++X)
        for (const auto& [c, k] : C.weak_products({X, X})) eq[c] = d.at(c.apex).top();
    StrictDelta sd;
    sd.product = choose_strict_products(C);
    for (int X = 0; X < 2; ++X)
        if (sd.product.count({X, X})) sd.delta[X] = d.at(X).top();
    f.doc = std::move(d);
    f.eq = std::move(eq);
    f.strict = std::move(sd);
    f.chart = std::move(s);
    return f;
}

Fixture from_chart(const std::string& name, SetChart s)
{
    Fixture f;
    f.name = name;
    f.cat = s.cat;
    f.doc = powerset_doctrine(s);
    f.eq = set_equality(s, *f.doc);
    f.strict = set_strict_delta(s, *f.doc);
    f.chart = std::move(s);
    return f;
}

} // namespace

Fixture build_fixture(const std::string& name)
{
    if (name == "TRIV") return one_point(name, named_chain({"1"}));
    if (name == "CHAIN2") return one_point(name, named_chain({"0", "1"}));
    if (name == "CHART3") return from_chart(name, chart3());
    if (name == "CHART3-PSI") {
        Fixture f;
        f.name = name;
        auto s = chart3();
        f.cat = s.cat;
        auto ws = weak_subobjects(s.cat);
        StrictDelta sd;
        sd.product = choose_strict_products(*s.cat);
        for (int X = 0; X < s.cat->num_objects(); ++X) {
            auto it = sd.product.find({X, X});
            if (it != sd.product.end()) sd.delta[X] = ws.eq.at(it->second);
        }
        f.doc = std::move(ws.doc);
        f.eq = std::move(ws.eq);
        f.strict = std::move(sd);
        f.chart = std::move(s);
        return f;
    }
    if (name == "PREORDER-DUP") return preorder_dup();
    if (name == "NOCOMP") return nocomp();
    if (name == "NONEX") return nonex();
    if (name == "FINSET4") {
        std::vector<std::pair<std::string, std::vector<std::string>>> objs;
        for (int n = 1; n <= 4; ++n) {
            std::vector<std::string> e;
            for (int i = 0; i < n; ++i) e.push_back(std::to_string(i));
            objs.push_back({std::to_string(n), e});
        }
        return from_chart(name, set_chart(objs));
    }
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

} // namespace bed
