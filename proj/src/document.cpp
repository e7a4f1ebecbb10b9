#include "bed/document.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace bed {

std::string to_string(const SourceError& e)
{
    return std::to_string(e.line) + ":" + std::to_string(e.column) + ": " + e.message;
}

namespace {

struct Token {
    std::string text;
    int column = 0;
};

std::vector<Token> tokenize(const std::string& line)
{
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

// le entries generate the order: reflexive and transitive closure over the declared elements
RawSemilattice closed_order(RawSemilattice raw)
{
    const auto& el = raw.elements;
    std::map<std::string, size_t> idx;
    for (size_t i = 0; i < el.size(); ++i) idx.emplace(el[i], i);
    const size_t n = el.size();
    std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
    std::vector<std::pair<std::string, std::string>> unknown;
    for (const auto& [a, b] : raw.leq) {
        auto i = idx.find(a), j = idx.find(b);
        if (i == idx.end() || j == idx.end()) unknown.push_back({a, b});
        else le[i->second][j->second] = 1;
    }
    for (size_t i = 0; i < n; ++i) le[i][i] = 1;
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            if (le[i][k])
                for (size_t j = 0; j < n; ++j)
                    if (le[k][j]) le[i][j] = 1;
    raw.leq = std::move(unknown); // left for validation to report
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (le[i][j]) raw.leq.push_back({el[i], el[j]});
    return raw;
}

enum class Section { top, category, fiber, reindex, cone, equality };

} // namespace

ParseResult parse_document(const std::string& text)
{
    ParseResult res;
    DoctrineDocument d;
    std::istringstream in(text);
    std::string line;
    int ln = 0;
    Section sec = Section::top;
    std::set<std::string> fibers_seen, reindex_seen, cones_seen;
    bool category_seen = false, equality_seen = false;
    auto err = [&](int col, std::string m) { res.errors.push_back({ln, col, std::move(m)}); };
    while (std::getline(in, line)) {
        ++ln;
        auto t = tokenize(line);
        if (t.empty()) continue;
        const std::string& k = t[0].text;
        if (k.front() == '[') {
            std::string head = line.substr(t[0].column - 1);
            head = head.substr(0, head.find('#'));
            while (!head.empty() && std::isspace(static_cast<unsigned char>(head.back()))) head.pop_back();
            if (head.back() != ']') {
                err(t[0].column, "unterminated section header");
                continue;
            }
            auto words = tokenize(head.substr(1, head.size() - 2));
            if (words.empty()) {
                err(t[0].column, "empty section header");
                continue;
            }
            const std::string& kind = words[0].text;
            const std::string arg = words.size() > 1 ? words[1].text : "";
            const bool needs_arg = kind == "fiber" || kind == "reindex" || kind == "cone";
            if ((needs_arg && words.size() != 2) || (!needs_arg && words.size() != 1)) {
                err(t[0].column, "malformed section header '" + head + "'");
                continue;
            }
            if (kind == "category") {
                if (category_seen) err(t[0].column, "duplicate definition of [category]");
                category_seen = d.has_category = true;
                sec = Section::category;
            } else if (kind == "equality") {
                if (equality_seen) err(t[0].column, "duplicate definition of [equality]");
                equality_seen = true;
                sec = Section::equality;
            } else if (kind == "fiber") {
                if (!fibers_seen.insert(arg).second) err(t[0].column, "duplicate definition of fiber " + arg);
                d.fibers.push_back({arg, {}, ln});
                sec = Section::fiber;
            } else if (kind == "reindex") {
                if (!reindex_seen.insert(arg).second) err(t[0].column, "duplicate definition of reindex " + arg);
                d.reindex.push_back({arg, {}, {}, ln});
                sec = Section::reindex;
            } else if (kind == "cone") {
                if (!cones_seen.insert(arg).second) err(t[0].column, "duplicate definition of cone " + arg);
                d.cones.push_back({arg, "", {}, ln});
                sec = Section::cone;
            } else {
                err(t[0].column, "unknown section '" + kind + "'");
            }
            continue;
        }
        auto arity = [&](size_t n) {
            if (t.size() == n) return true;
            err(t[0].column, "'" + k + "' expects " + std::to_string(n - 1) + " arguments");
            return false;
        };
        auto punct = [&](size_t i, const char* p) {
            if (t[i].text == p) return true;
            err(t[i].column, std::string("expected '") + p + "'");
            return false;
        };
        switch (sec) {
        case Section::top:
            if (k == "import") {
                if (!arity(2)) break;
                if (d.import) err(t[0].column, "duplicate definition of import");
                d.import = t[1].text;
            } else if (k == "option") {
                if (!arity(3)) break;
                if (d.options.count(t[1].text)) err(t[1].column, "duplicate definition of option " + t[1].text);
                d.options[t[1].text] = t[2].text;
            } else {
                err(t[0].column, "unexpected '" + k + "' outside a section");
            }
            break;
        case Section::category:
            if (k == "object") {
                if (t.size() < 2) err(t[0].column, "'object' expects names");
                for (size_t i = 1; i < t.size(); ++i) d.category.objects.push_back(t[i].text);
            } else if (k == "arrow") {
                if (!arity(6) || !punct(2, ":") || !punct(4, "->")) break;
                d.category.arrows.push_back({t[1].text, t[3].text, t[5].text});
            } else if (k == "identity") {
                if (!arity(3)) break;
                d.category.identities.push_back({t[1].text, t[2].text});
            } else if (k == "compose") {
                if (!arity(5) || !punct(3, "=")) break;
                d.category.compose.push_back({t[1].text, t[2].text, t[4].text});
            } else {
                err(t[0].column, "unknown category entry '" + k + "'");
            }
            break;
        case Section::fiber: {
            RawSemilattice& raw = d.fibers.back().raw;
            if (k == "element") {
                if (t.size() < 2) err(t[0].column, "'element' expects names");
                for (size_t i = 1; i < t.size(); ++i) raw.elements.push_back(t[i].text);
            } else if (k == "le") {
                if (arity(3)) raw.leq.push_back({t[1].text, t[2].text});
            } else if (k == "top") {
                if (!arity(2)) break;
                if (raw.top) err(t[0].column, "duplicate definition of top");
                raw.top = t[1].text;
            } else if (k == "meet") {
                if (arity(5) && punct(3, "=")) raw.meet.push_back({{t[1].text, t[2].text}, t[4].text});
            } else {
                err(t[0].column, "unknown fiber entry '" + k + "'");
            }
            break;
        }
        case Section::reindex:
            if (arity(3) && punct(1, "->")) {
                d.reindex.back().map.push_back({t[0].text, t[2].text});
                d.reindex.back().lines.push_back(ln);
            }
            break;
        case Section::cone:
            if (k == "apex") {
                if (!arity(2)) break;
                if (!d.cones.back().apex.empty()) err(t[0].column, "duplicate definition of apex");
                d.cones.back().apex = t[1].text;
            } else if (k == "legs") {
                if (t.size() < 2) err(t[0].column, "'legs' expects arrow names");
                for (size_t i = 1; i < t.size(); ++i) d.cones.back().legs.push_back(t[i].text);
            } else {
                err(t[0].column, "unknown cone entry '" + k + "'");
            }
            break;
        case Section::equality:
            if (arity(3) && punct(1, "=")) d.equality.push_back({t[0].text, t[2].text, ln});
            break;
        }
    }
    if (res.errors.empty()) res.doc = std::move(d);
    return res;
}

std::string print_document(const DoctrineDocument& d)
{
    std::string s;
    if (d.import) s += "import " + *d.import + "\n";
    for (const auto& [k, v] : d.options) s += "option " + k + " " + v + "\n";
    if (d.has_category) {
        s += "[category]\n";
        if (!d.category.objects.empty()) {
            s += "object";
            for (const auto& o : d.category.objects) s += " " + o;
            s += "\n";
        }
        for (const auto& a : d.category.arrows) s += "arrow " + a.id + " : " + a.src + " -> " + a.tgt + "\n";
        for (const auto& [o, a] : d.category.identities) s += "identity " + o + " " + a + "\n";
        for (const auto& [g, f, h] : d.category.compose) s += "compose " + g + " " + f + " = " + h + "\n";
    }
    for (const auto& f : d.fibers) {
        s += "[fiber " + f.object + "]\n";
        if (!f.raw.elements.empty()) {
            s += "element";
            for (const auto& e : f.raw.elements) s += " " + e;
            s += "\n";
        }
        for (const auto& [a, b] : f.raw.leq) s += "le " + a + " " + b + "\n";
        if (f.raw.top) s += "top " + *f.raw.top + "\n";
        for (const auto& [ab, c] : f.raw.meet) s += "meet " + ab.first + " " + ab.second + " = " + c + "\n";
    }
    for (const auto& r : d.reindex) {
        s += "[reindex " + r.arrow + "]\n";
        for (const auto& [a, b] : r.map) s += a + " -> " + b + "\n";
    }
    for (const auto& c : d.cones) {
        s += "[cone " + c.name + "]\n";
        if (!c.apex.empty()) s += "apex " + c.apex + "\n";
        if (!c.legs.empty()) {
            s += "legs";
            for (const auto& l : c.legs) s += " " + l;
            s += "\n";
        }
    }
    if (!d.equality.empty()) {
        s += "[equality]\n";
        for (const auto& e : d.equality) s += e.cone + " = " + e.element + "\n";
    }
    return s;
}

Resolved resolve_fixture(const std::string& name)
{
    Fixture f = build_fixture(name);
    Resolved r;
    r.name = name;
    r.cat = f.cat;
    r.doc = std::move(f.doc);
    r.eq = std::move(f.eq);
    r.strict = std::move(f.strict);
    r.chart = std::move(f.chart);
    return r;
}

std::optional<Resolved> resolve(const DoctrineDocument& d, std::vector<SourceError>& errors)
{
    const size_t before = errors.size();
    auto err = [&](int line, std::string m) { errors.push_back({line, 1, std::move(m)}); };
    Resolved r;
    r.options = d.options;
    if (d.import) {
        if (d.has_category || !d.fibers.empty() || !d.reindex.empty()) {
            err(1, "an imported fixture cannot be combined with category, fiber or reindex sections");
            return std::nullopt;
        }
        try {
            r = resolve_fixture(*d.import);
            r.options = d.options;
        } catch (const std::invalid_argument& e) {
            err(1, e.what());
            return std::nullopt;
        }
    } else {
        if (!d.has_category) {
            err(1, "missing [category] section");
            return std::nullopt;
        }
        RawCategory raw = d.category;
        std::set<std::string> declared;
        for (const auto& a : raw.arrows) declared.insert(a.id);
        for (const auto& [o, a] : d.category.identities)
            if (!declared.count(a)) {
                raw.arrows.push_back({a, o, o});
                declared.insert(a);
            }
        Diagnostics diag;
        auto cat = build_category(raw, diag);
        if (!cat) {
            for (const auto& m : diag) err(1, "category: " + m);
            return std::nullopt;
        }
        r.cat = std::make_shared<Category>(std::move(*cat));
        r.name = "document";
        const Category& C = *r.cat;
        if (!d.fibers.empty() || !d.reindex.empty()) {
            Doctrine doc;
            doc.base = r.cat;
            std::vector<std::optional<Lattice>> fib(C.num_objects());
            for (const auto& f : d.fibers) {
                auto o = C.find_object(f.object);
                if (!o) {
                    err(f.line, "unknown object '" + f.object + "'");
                    continue;
                }
                Diagnostics dl, notes;
                auto l = build_lattice(closed_order(f.raw), dl, &notes);
                for (const auto& m : dl) err(f.line, "fiber " + f.object + ": " + m);
                for (const auto& m : notes) r.notes.push_back("fiber " + f.object + ": " + m);
                fib[*o] = std::move(l);
            }
            std::set<std::string> given;
            for (const auto& f : d.fibers) given.insert(f.object);
            for (int X = 0; X < C.num_objects(); ++X)
                if (!given.count(C.obj_name(X))) err(1, "no fiber for object '" + C.obj_name(X) + "'");
            if (errors.size() > before) return std::nullopt;
            for (auto& l : fib) doc.fiber.push_back(std::move(*l));
            std::vector<std::optional<Map>> maps(C.num_arrows());
            for (const auto& ri : d.reindex) {
                auto f = C.find_arrow(ri.arrow);
                if (!f) {
                    err(ri.line, "unknown arrow '" + ri.arrow + "'");
                    continue;
                }
                const Lattice& PY = doc.at(C.tgt(*f));
                const Lattice& PX = doc.at(C.src(*f));
                Map m(PY.size(), -1);
                for (size_t i = 0; i < ri.map.size(); ++i) {
                    auto a = PY.find(ri.map[i].first);
                    auto b = PX.find(ri.map[i].second);
                    if (!a) err(ri.lines[i], "unknown element '" + ri.map[i].first + "' in the fiber of " + C.obj_name(C.tgt(*f)));
                    if (!b) err(ri.lines[i], "unknown element '" + ri.map[i].second + "' in the fiber of " + C.obj_name(C.src(*f)));
                    if (a && b) {
                        if (m[*a] >= 0 && m[*a] != *b) err(ri.lines[i], "element '" + ri.map[i].first + "' mapped twice");
                        m[*a] = *b;
                    }
                }
                for (int a = 0; a < PY.size(); ++a)
                    if (m[a] < 0) err(ri.line, "reindex " + ri.arrow + " leaves '" + PY.name(a) + "' unmapped");
                maps[*f] = std::move(m);
            }
            for (int f = 0; f < C.num_arrows(); ++f)
                if (!maps[f]) {
                    if (C.id(C.src(f)) == f)
                        maps[f] = identity_map(doc.at(C.src(f)));
                    else
                        err(1, "no reindex section for arrow '" + C.arr_name(f) + "'");
                }
            if (errors.size() > before) return std::nullopt;
            for (auto& m : maps) doc.reindex.push_back(std::move(*m));
            for (const auto& m : validate_doctrine(doc)) err(1, "doctrine: " + m);
            if (errors.size() > before) return std::nullopt;
            r.doc = std::move(doc);
        }
    }
    const Category& C = *r.cat;
    std::map<std::string, Cone> cones;
    for (const auto& c : d.cones) {
        Cone k;
        auto apex = C.find_object(c.apex);
        if (!apex) {
            err(c.line, "cone " + c.name + ": unknown apex '" + c.apex + "'");
            continue;
        }
        k.apex = *apex;
        bool ok = true;
        for (const auto& l : c.legs) {
            auto a = C.find_arrow(l);
            if (!a || C.src(*a) != *apex) {
                err(c.line, "cone " + c.name + ": leg '" + l + "' does not leave the apex");
                ok = false;
            } else {
                k.legs.push_back(*a);
            }
        }
        if (!ok) continue;
        if (classify_cone(C, k) == ConeClass::not_weak) err(c.line, "cone " + c.name + " is not a weak product");
        cones[c.name] = k;
    }
    if (!d.equality.empty()) {
        if (!r.doc) {
            err(d.equality.front().line, "equality given without a doctrine");
            return std::nullopt;
        }
        EqualityAssignment eq = r.eq.value_or(EqualityAssignment{});
        for (const auto& e : d.equality) {
            auto it = cones.find(e.cone);
            if (it == cones.end()) {
                err(e.line, "unknown cone '" + e.cone + "'");
                continue;
            }
            const Cone& k = it->second;
            if (k.legs.size() != 2 || C.tgt(k.legs[0]) != C.tgt(k.legs[1])) {
                err(e.line, "cone '" + e.cone + "' is not over a pair (X,X)");
                continue;
            }
            auto el = r.doc->at(k.apex).find(e.element);
            if (!el) {
                err(e.line, "unknown element '" + e.element + "' in the fiber of " + C.obj_name(k.apex));
                continue;
            }
            eq[k] = *el;
        }
        for (int X = 0; X < C.num_objects(); ++X)
            for (const auto& [p, kls] : C.weak_products({X, X}))
                if (!eq.count(p)) err(1, "no equality for the weak product " + C.cone_name(p));
        if (errors.size() > before) return std::nullopt;
        if (!d.import && !r.strict) r.strict = StrictDelta{choose_strict_products(C), {}};
        if (r.strict)
            for (const auto& [xy, p] : r.strict->product)
                if (xy.first == xy.second) r.strict->delta[xy.first] = eq.at(p);
        r.eq = std::move(eq);
    }
    if (errors.size() > before) return std::nullopt;
    return r;
}

} // namespace bed
