#include "bed/cli.hpp"

#include <functional>

namespace bed {

namespace {

const Doctrine& need_doc(const Resolved& r)
{
    if (!r.doc) throw InputError("the document has no doctrine");
    return *r.doc;
}

const EqualityAssignment& need_eq(const Resolved& r)
{
    need_doc(r);
    if (!r.eq) throw InputError("the document has no equality section");
    return *r.eq;
}

int need_object(const Resolved& r, const std::optional<std::string>& name)
{
    if (!name) throw InputError("--object is required");
    auto o = r.cat->find_object(*name);
    if (!o) throw InputError("unknown object '" + *name + "'");
    return *o;
}

std::vector<int> need_feet(const Resolved& r, const std::vector<std::string>& names)
{
    if (names.empty()) throw InputError("--feet is required");
    std::vector<int> feet;
    for (const auto& n : names) {
        auto o = r.cat->find_object(n);
        if (!o) throw InputError("unknown object '" + n + "' in --feet");
        feet.push_back(*o);
    }
    return feet;
}

std::string join(const Category& C, const std::vector<int>& objs)
{
    std::string s;
    for (int x : objs) s += (s.empty() ? "" : ",") + C.obj_name(x);
    return s;
}

Report validate(const Resolved& r)
{
    Report rep;
    const Category& C = *r.cat;
    auto laws = C.check_laws();
    rep.add("category-laws", r.name, laws.empty() ? Verdict::pass : Verdict::fail, laws.empty() ? "" : laws.front(),
            C.num_arrows());
    if (r.doc) {
        auto dd = validate_doctrine(*r.doc);
        rep.add("doctrine", r.name, dd.empty() ? Verdict::pass : Verdict::fail, dd.empty() ? "" : dd.front(), C.num_arrows());
    }
    if (r.eq) {
        Quant q;
        for (const auto& [p, e] : *r.eq) {
            q.hold(classify_cone(C, p) != ConeClass::not_weak, [&] { return C.cone_name(p) + " is not a weak product"; });
            q.hold(e >= 0 && e < r.doc->at(p.apex).size(), [&] { return "element out of range over " + C.cone_name(p); });
        }
        q.emit(rep, "equality-cones", r.name);
    }
    if (r.strict) {
        Quant q;
        for (const auto& [xy, p] : r.strict->product)
            q.hold(classify_cone(C, p) == ConeClass::strict, [&] { return C.cone_name(p) + " is not a strict product"; });
        q.emit(rep, "strict-products", r.name);
    }
    rep.notes.push_back(std::to_string(C.num_objects()) + " objects, " + std::to_string(C.num_arrows()) + " arrows");
    return rep;
}

Report rbp(const Resolved& r)
{
    const Doctrine& d = need_doc(r);
    const EqualityAssignment& eq = need_eq(r);
    const Category& C = d.cat();
    Report rep;
    for (const auto& [p, e] : eq) {
        auto ce = rbp_counterexample(d, p, e);
        rep.add("delta-rbp", C.cone_name(p), ce ? Verdict::fail : Verdict::pass,
                ce ? "P_" + C.arr_name(ce->first) + " and P_" + C.arr_name(ce->second) + " differ" : "",
                static_cast<long>(C.num_arrows()));
    }
    rep.merge(check_rbp_pi_coincide(d, eq));
    return rep;
}

Report pi(const Resolved& r, const RunOptions& o)
{
    const Doctrine& d = need_doc(r);
    const EqualityAssignment& eq = need_eq(r);
    const Category& C = d.cat();
    const auto feet = need_feet(r, o.feet);
    const std::string fs = join(C, feet);
    Report rep;
    for (const auto& [c, k] : C.weak_products(feet)) {
        const std::string s = C.cone_name(c);
        try {
            auto res = pi_elements(d, eq, c);
            std::string w = std::to_string(res.elements.size()) + " elements";
            if (res.by_strict_rule) w += ", strict product";
            rep.add("diagram-independence", s, Verdict::pass, w, res.diagrams);
        } catch (const ChartTooShallow& e) {
            rep.add("diagram-independence", s, Verdict::chart_too_shallow, e.what());
        } catch (const PreconditionError& e) {
            rep.add("diagram-independence", s, Verdict::fail, e.what());
        }
    }
    auto sf = strict_fiber(d, eq, feet);
    for (int c = 0; c < sf.size(); ++c) rep.notes.push_back("class " + std::to_string(c) + ": " + sf.classes.name(c));
    rep.add("classes", fs, Verdict::pass, std::to_string(sf.size()) + " classes");
    return rep;
}

Report strict_fiber_cmd(const Resolved& r, const RunOptions& o)
{
    const Doctrine& d = need_doc(r);
    const EqualityAssignment& eq = need_eq(r);
    const Category& C = d.cat();
    const auto feet = need_feet(r, o.feet);
    Report rep;
    StrictFiber sf;
    try {
        sf = strict_fiber(d, eq, feet);
    } catch (const PreconditionError& e) {
        rep.add("transport-isomorphism", join(C, feet), Verdict::fail, e.what());
        return rep;
    }
    rep.notes.push_back("hub " + C.cone_name(sf.hub()) + ", " + std::to_string(sf.size()) + " classes");
    for (const auto& [c, why] : sf.skipped) rep.add("transport-isomorphism", C.cone_name(c), Verdict::chart_too_shallow, why);
    for (const auto& a : sf.cones)
        for (const auto& b : sf.cones) {
            if (a == b) continue;
            const Lattice& Fa = d.at(a.apex);
            const Lattice& Fb = d.at(b.apex);
            Quant q;
            for (int c = 0; c < sf.size(); ++c) {
                const int x = sf.rep[sf.cone_index(a)][c];
                const int y = transport(d, sf, a, b, x);
                q.hold(transport(d, sf, b, a, y) == x, [&] { return "round trip moves " + Fa.name(x); });
                for (int c2 = 0; c2 < sf.size(); ++c2) {
                    const int x2 = sf.rep[sf.cone_index(a)][c2];
                    const int y2 = transport(d, sf, a, b, x2);
                    q.hold(Fa.leq(x, x2) == Fb.leq(y, y2), [&] { return "order differs at " + Fa.name(x) + ", " + Fa.name(x2); });
                }
            }
            q.emit(rep, "transport-isomorphism", C.cone_name(a) + " -> " + C.cone_name(b));
        }
    rep.add("classes", join(C, feet), Verdict::pass, std::to_string(sf.size()) + " classes");
    return rep;
}

Report strictify(const Resolved& r, int L)
{
    const Doctrine& d = need_doc(r);
    const EqualityAssignment& eq = need_eq(r);
    Strictification s(d, eq, L);
    Report rep = check_strictification(s);
    rep.merge(box_equality_report(s.calculus(), 2 * L));
    rep.merge(roundtrip_biased(s.lists()));
    rep.merge(existential_transfer(d, eq, s));
    rep.notes.push_back(std::to_string(s.lists().lists.size()) + " lists materialized at L=" + std::to_string(L));
    for (const auto& [l, why] : s.lists().missing) rep.notes.push_back("left out " + list_name(d.cat(), l) + ": " + why);
    return rep;
}

Report complete(const Resolved& r, int L)
{
    Relations R(need_doc(r), need_eq(r), L);
    auto qc = quotient_completion(R);
    Report rep = check_QD(qc, R);
    rep.notes.push_back(std::to_string(qc.doc.cat().num_objects()) + " objects, " +
                        std::to_string(qc.doc.cat().num_arrows()) + " arrows");
    for (const auto& n : qc.notes) rep.notes.push_back(n);
    return rep;
}

Report flags_of_quotient(const Resolved& r, int L)
{
    const Doctrine& d = need_doc(r);
    Relations R(d, need_eq(r), L);
    const Category& C = d.cat();
    Report rep;
    for (int X = 0; X < C.num_objects(); ++X) {
        if (!R.has_square(X)) {
            rep.add("relations", C.obj_name(X), Verdict::chart_too_shallow, "no strict fiber over [" + C.obj_name(X) + "," + C.obj_name(X) + "]");
            continue;
        }
        for (const auto& rho : equivalence_relations(R, X)) {
            const std::string s = C.obj_name(X) + " " + R.class_name(X, rho.rel);
            auto q = find_quotient(R, rho);
            if (!q) {
                rep.add("quotient", s, Verdict::chart_too_shallow, "no internal quotient");
                continue;
            }
            rep.add("quotient", s, Verdict::pass, C.arr_name(q->q), static_cast<long>(q->factor.size()));
            rep.merge(quotient_flags(R, rho, q->q));
        }
    }
    return rep;
}

Report left_covering(const Resolved& r, int L)
{
    Relations R(need_doc(r), need_eq(r), L);
    auto qc = quotient_completion(R);
    auto t = completion_target(qc, R);
    Report rep = is_left_covering(R, t, qc.J);
    rep.merge(morphism_classify(R, t, qc.J));
    return rep;
}

Report lift(const Resolved& r, int L)
{
    Relations R(need_doc(r), need_eq(r), L);
    auto qc = quotient_completion(R);
    auto t = completion_target(qc, R);
    return lift_left_covering(R, qc, t, qc.J).report;
}

Report equivalence(const Category& a, const Category& b, const std::string& subject)
{
    Report rep;
    auto e = find_equivalence(a, b);
    switch (e.status) {
    case Equivalence::Status::found: {
        auto v = verify_equivalence(a, b, e);
        rep.add("equivalence found", subject, v.empty() ? Verdict::pass : Verdict::fail, v.empty() ? "" : v.front(), e.nodes);
        break;
    }
    case Equivalence::Status::absent:
        rep.add("equivalence found", subject, Verdict::fail, e.reason, e.nodes);
        break;
    case Equivalence::Status::budget_exhausted:
        rep.add("equivalence found", subject, Verdict::out_of_bound, e.reason, e.nodes);
        break;
    }
    return rep;
}

Report exact_compare(const Resolved& r, int L)
{
    auto ex = exact_completion(*r.cat);
    auto ws = weak_subobjects(r.cat);
    Relations R(ws.doc, ws.eq, L);
    auto qc = quotient_completion(R);
    Report rep = equivalence(*ex.cat, qc.doc.cat(), "exact completion vs quotient completion of Psi");
    rep.notes.push_back("exact completion: " + std::to_string(ex.cat->num_objects()) + " objects, " +
                        std::to_string(ex.cat->num_arrows()) + " arrows");
    rep.notes.push_back("quotient completion: " + std::to_string(qc.doc.cat().num_objects()) + " objects, " +
                        std::to_string(qc.doc.cat().num_arrows()) + " arrows");
    return rep;
}

Report equiv(const Resolved& r, const RunOptions& o, int L)
{
    if (!o.against) throw InputError("--against is required");
    Resolved other;
    try {
        other = resolve_fixture(*o.against);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    Relations R(need_doc(r), need_eq(r), L);
    auto qc = quotient_completion(R);
    Report rep = equivalence(qc.doc.cat(), *other.cat, "completion of " + r.name + " vs " + other.name);
    rep.notes.push_back("completion: " + std::to_string(iso_classes(qc.doc.cat()).reps.size()) + " iso classes");
    rep.notes.push_back(other.name + ": " + std::to_string(iso_classes(*other.cat).reps.size()) + " iso classes");
    return rep;
}

struct Command {
    const char* name;
    std::function<Report(const Resolved&, const RunOptions&, int)> fn;
};

const std::vector<Command>& table()
{
    static const std::vector<Command> t{
        {"validate", [](const Resolved& r, const RunOptions&, int) { return validate(r); }},
        {"check-biased",
         [](const Resolved& r, const RunOptions&, int) {
             Report rep = check_biased_elementary(need_doc(r), need_eq(r));
             rep.merge(check_biased_diagonals(*r.doc, *r.eq));
             return rep;
         }},
        {"check-strict",
         [](const Resolved& r, const RunOptions&, int) {
             if (!r.strict) throw PreconditionError("the document has no chosen strict products");
             return check_strict_elementary(need_doc(r), *r.strict);
         }},
        {"rbp", [](const Resolved& r, const RunOptions&, int) { return rbp(r); }},
        {"pi", [](const Resolved& r, const RunOptions& o, int) { return pi(r, o); }},
        {"strict-fiber", [](const Resolved& r, const RunOptions& o, int) { return strict_fiber_cmd(r, o); }},
        {"strictify", [](const Resolved& r, const RunOptions&, int L) { return strictify(r, L); }},
        {"complete", [](const Resolved& r, const RunOptions&, int L) { return complete(r, L); }},
        {"flags-of-quotient", [](const Resolved& r, const RunOptions&, int L) { return flags_of_quotient(r, L); }},
        {"left-covering", [](const Resolved& r, const RunOptions&, int L) { return left_covering(r, L); }},
        {"lift", [](const Resolved& r, const RunOptions&, int L) { return lift(r, L); }},
        {"commute-slice",
         [](const Resolved& r, const RunOptions& o, int L) {
             return slice_quotient_commute(need_doc(r), need_eq(r), need_object(r, o.object), L);
         }},
        {"per", [](const Resolved& r, const RunOptions&, int L) { return per_report(r.cat, L); }},
        {"exact-compare", [](const Resolved& r, const RunOptions&, int L) { return exact_compare(r, L); }},
        {"equiv", [](const Resolved& r, const RunOptions& o, int L) { return equiv(r, o, L); }},
    };
    return t;
}

} // namespace

const std::vector<std::string>& commands()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& c : table()) v.push_back(c.name);
        return v;
    }();
    return names;
}

Report run(const std::string& command, const Resolved& doc, const RunOptions& opts)
{
    const Command* cmd = nullptr;
    for (const auto& c : table())
        if (command == c.name) cmd = &c;
    if (!cmd) throw InputError("unknown command '" + command + "'");
    const int L = opts.max_len.value_or(2);
    if (L < 1) throw InputError("--max-len must be at least 1");
    Report rep;
    try {
        rep = cmd->fn(doc, opts, L);
    } catch (const ChartTooShallow& e) {
        rep = Report{};
        rep.add(command, doc.name, Verdict::chart_too_shallow, e.what());
    } catch (const PreconditionError& e) {
        rep = Report{};
        rep.add(command, doc.name, Verdict::premise_failure, e.what());
    }
    rep.title = opts.echo.empty() ? command : opts.echo;
    Diagnostics notes = doc.notes;
    notes.insert(notes.end(), rep.notes.begin(), rep.notes.end());
    rep.notes = std::move(notes);
    return rep;
}

} // namespace bed
