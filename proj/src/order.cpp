#include "bed/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace bed {

Lattice::Lattice(std::vector<std::string> names, std::vector<std::uint8_t> le, int top, std::vector<int> meet)
    : names_(std::move(names)), le_(std::move(le)), meet_(std::move(meet)), top_(top)
{
    for (int i = 0; i < size(); ++i) index_.emplace(names_[i], i);
    bottom_ = top_;
    for (int i = 0; i < size(); ++i) bottom_ = glb(bottom_, i);
}

std::optional<int> Lattice::find(const std::string& id) const
{
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int Lattice::index(const std::string& id) const
{
    auto it = index_.find(id);
    if (it == index_.end()) throw std::out_of_range("unknown element '" + id + "'");
    return it->second;
}

Lattice Lattice::restrict(const std::vector<int>& keep) const
{
    const int n = static_cast<int>(keep.size());
    std::vector<int> pos(names_.size(), -1);
    for (int i = 0; i < n; ++i) pos[keep[i]] = i;
    std::vector<std::string> nm;
    std::vector<std::uint8_t> le(static_cast<size_t>(n) * n);
    std::vector<int> mt(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        nm.push_back(names_[keep[i]]);
        for (int j = 0; j < n; ++j) {
            le[i * n + j] = leq(keep[i], keep[j]);
            int m = pos[glb(keep[i], keep[j])];
            if (m < 0) throw std::logic_error("restrict: subset not meet-closed");
            mt[i * n + j] = m;
        }
    }
    if (pos[top_] < 0) throw std::logic_error("restrict: subset lacks top");
    return Lattice(std::move(nm), std::move(le), pos[top_], std::move(mt));
}

namespace {

struct Resolved {
    int n = 0;
    std::vector<std::uint8_t> le;
};

bool resolve(const RawSemilattice& raw, Resolved& r, Diagnostics& d)
{
    std::unordered_map<std::string, int> idx;
    for (const auto& e : raw.elements)
        if (!idx.emplace(e, static_cast<int>(idx.size())).second) d.push_back("duplicate element '" + e + "'");
    r.n = static_cast<int>(raw.elements.size());
    r.le.assign(static_cast<size_t>(r.n) * r.n, 0);
    bool ok = d.empty();
    for (const auto& [a, b] : raw.leq) {
        auto ia = idx.find(a), ib = idx.find(b);
        if (ia == idx.end() || ib == idx.end()) {
            d.push_back("order pair (" + a + "," + b + ") names an unknown element");
            ok = false;
            continue;
        }
        r.le[ia->second * r.n + ib->second] = 1;
    }
    return ok;
}

} // namespace

static void check_order(const RawSemilattice& raw, const Resolved& r, Diagnostics& d)
{
    const int n = r.n;
    auto L = [&](int a, int b) { return r.le[a * n + b] != 0; };
    const auto& e = raw.elements;
    for (int a = 0; a < n; ++a)
        if (!L(a, a)) d.push_back("reflexivity violated at " + e[a]);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (L(a, b) && L(b, a)) d.push_back("antisymmetry violated at (" + e[a] + "," + e[b] + ")");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (L(a, b) && a != b)
                for (int c = 0; c < n; ++c)
                    if (L(b, c) && b != c && !L(a, c))
                        d.push_back("transitivity violated at (" + e[a] + "," + e[b] + "," + e[c] + ")");
}

// Greatest lower bound from the order, -1 when absent.
static int order_glb(const Resolved& r, int a, int b)
{
    const int n = r.n;
    int best = -1;
    for (int c = 0; c < n; ++c) {
        if (!r.le[c * n + a] || !r.le[c * n + b]) continue;
        if (best < 0 || r.le[best * n + c]) best = c;
    }
    if (best < 0) return -1;
    for (int c = 0; c < n; ++c)
        if (r.le[c * n + a] && r.le[c * n + b] && !r.le[c * n + best]) return -1;
    return best;
}

static std::optional<Lattice> build_impl(const RawSemilattice& raw, Diagnostics& d, Diagnostics* notes)
{
    Resolved r;
    if (!resolve(raw, r, d)) return std::nullopt;
    check_order(raw, r, d);
    if (!d.empty()) return std::nullopt;
    const int n = r.n;
    const auto& e = raw.elements;
    if (n == 0) {
        d.push_back("empty fiber has no top");
        return std::nullopt;
    }
    int top = -1;
    for (int a = 0; a < n; ++a) {
        bool greatest = true;
        for (int b = 0; b < n; ++b) greatest = greatest && r.le[b * n + a];
        if (greatest) top = a;
    }
    if (raw.top) {
        auto it = std::find(e.begin(), e.end(), *raw.top);
        if (it == e.end()) {
            d.push_back("top '" + *raw.top + "' is not an element");
        } else if (top != it - e.begin()) {
            d.push_back("top '" + *raw.top + "' is not the greatest element");
        }
    } else if (top < 0) {
        d.push_back("no greatest element");
    }
    std::vector<int> meet(static_cast<size_t>(n) * n, -1);
    if (!raw.meet.empty()) {
        for (const auto& [ab, m] : raw.meet) {
            auto f = [&](const std::string& s) {
                auto it = std::find(e.begin(), e.end(), s);
                return it == e.end() ? -1 : static_cast<int>(it - e.begin());
            };
            int a = f(ab.first), b = f(ab.second), c = f(m);
            if (a < 0 || b < 0 || c < 0) {
                d.push_back("meet entry (" + ab.first + "," + ab.second + ")=" + m + " names an unknown element");
                continue;
            }
            meet[a * n + b] = c;
            if (meet[b * n + a] < 0) meet[b * n + a] = c;
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (meet[a * n + b] < 0) {
                    d.push_back("meet table missing (" + e[a] + "," + e[b] + ")");
                    continue;
                }
                int g = order_glb(r, a, b);
                if (g != meet[a * n + b])
                    d.push_back("meet(" + e[a] + "," + e[b] + ")=" + e[meet[a * n + b]] + " is not the greatest lower bound");
            }
        for (int a = 0; a < n && d.empty(); ++a)
            for (int b = 0; b < n; ++b) {
                if (meet[a * n + b] != meet[b * n + a])
                    d.push_back("meet not commutative at (" + e[a] + "," + e[b] + ")");
                for (int c = 0; c < n; ++c)
                    if (meet[a * n + meet[b * n + c]] != meet[meet[a * n + b] * n + c])
                        d.push_back("meet not associative at (" + e[a] + "," + e[b] + "," + e[c] + ")");
            }
    } else {
        bool synthesized = true;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int g = order_glb(r, a, b);
                if (g < 0) {
                    if (a < b) d.push_back("no greatest lower bound for (" + e[a] + "," + e[b] + ")");
                    synthesized = false;
                }
                meet[a * n + b] = g;
            }
        if (synthesized && notes) notes->push_back("meet table synthesized from order");
    }
    if (!d.empty()) return std::nullopt;
    return Lattice(raw.elements, std::move(r.le), top, std::move(meet));
}

Diagnostics validate_semilattice(const RawSemilattice& raw)
{
    Diagnostics d;
    build_impl(raw, d, nullptr);
    return d;
}

std::optional<Lattice> build_lattice(const RawSemilattice& raw, Diagnostics& diag, Diagnostics* notes)
{
    return build_impl(raw, diag, notes);
}

Lattice chain(int n)
{
    std::vector<std::string> nm;
    std::vector<std::uint8_t> le(static_cast<size_t>(n) * n);
    std::vector<int> mt(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        nm.push_back(std::to_string(i));
        for (int j = 0; j < n; ++j) {
            le[i * n + j] = i <= j;
            mt[i * n + j] = std::min(i, j);
        }
    }
    return Lattice(std::move(nm), std::move(le), n - 1, std::move(mt));
}

std::string subset_name(const std::vector<std::string>& base, unsigned mask)
{
    std::string s = "{";
    bool first = true;
    for (size_t i = 0; i < base.size(); ++i)
        if (mask >> i & 1u) {
            if (!first) s += ',';
            s += base[i];
            first = false;
        }
    return s + "}";
}

Lattice powerset(const std::vector<std::string>& base)
{
    const unsigned n = 1u << base.size();
    std::vector<std::string> nm;
    std::vector<std::uint8_t> le(static_cast<size_t>(n) * n);
    std::vector<int> mt(static_cast<size_t>(n) * n);
    for (unsigned a = 0; a < n; ++a) {
        nm.push_back(subset_name(base, a));
        for (unsigned b = 0; b < n; ++b) {
            le[a * n + b] = (a & ~b) == 0;
            mt[a * n + b] = static_cast<int>(a & b);
        }
    }
    return Lattice(std::move(nm), std::move(le), static_cast<int>(n - 1), std::move(mt));
}

Map identity_map(const Lattice& l)
{
    Map m(l.size());
    for (int i = 0; i < l.size(); ++i) m[i] = i;
    return m;
}

bool is_monotone(const Lattice& src, const Lattice& tgt, const Map& m)
{
    for (int a = 0; a < src.size(); ++a)
        for (int b = 0; b < src.size(); ++b)
            if (src.leq(a, b) && !tgt.leq(m[a], m[b])) return false;
    return true;
}

bool is_meet_preserving(const Lattice& src, const Lattice& tgt, const Map& m)
{
    if (m[src.top()] != tgt.top()) return false;
    for (int a = 0; a < src.size(); ++a)
        for (int b = a; b < src.size(); ++b)
            if (m[src.glb(a, b)] != tgt.glb(m[a], m[b])) return false;
    return true;
}

std::optional<Map> left_adjoint(const Lattice& src, const Lattice& tgt, const Map& m)
{
    Map f(tgt.size());
    for (int b = 0; b < tgt.size(); ++b) {
        int least = -1;
        for (int a = 0; a < src.size(); ++a)
            if (tgt.leq(b, m[a]) && (least < 0 || src.leq(a, least))) least = a;
        if (least < 0) return std::nullopt;
        f[b] = least;
    }
    for (int b = 0; b < tgt.size(); ++b)
        for (int a = 0; a < src.size(); ++a)
            if (src.leq(f[b], a) != tgt.leq(b, m[a])) return std::nullopt;
    return f;
}

std::optional<Map> right_adjoint(const Lattice& src, const Lattice& tgt, const Map& m)
{
    Map g(tgt.size());
    for (int b = 0; b < tgt.size(); ++b) {
        int greatest = -1;
        for (int a = 0; a < src.size(); ++a)
            if (tgt.leq(m[a], b) && (greatest < 0 || src.leq(greatest, a))) greatest = a;
        if (greatest < 0) return std::nullopt;
        g[b] = greatest;
    }
    for (int b = 0; b < tgt.size(); ++b)
        for (int a = 0; a < src.size(); ++a)
            if (tgt.leq(m[a], b) != src.leq(a, g[b])) return std::nullopt;
    return g;
}

Map compose(const Map& g, const Map& f)
{
    Map r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = g[f[i]];
    return r;
}

} // namespace bed
