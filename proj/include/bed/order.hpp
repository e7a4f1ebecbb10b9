// Finite posets, inf-semilattices and Galois adjoints between them.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bed {

using Diagnostics = std::vector<std::string>;

struct FinitePoset {
    std::vector<std::string> elements;
    std::vector<std::uint8_t> le; // row-major n*n

    int size() const { return static_cast<int>(elements.size()); }
    bool leq(int a, int b) const { return le[static_cast<size_t>(a) * elements.size() + b] != 0; }
};

// Unvalidated input: identifiers plus order pairs, optional top and meet.
struct RawSemilattice {
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> leq;
    std::optional<std::string> top;
    std::vector<std::pair<std::pair<std::string, std::string>, std::string>> meet;
};

class Lattice {
public:
    Lattice() = default;
    // Tables must already be valid; use build_lattice for untrusted input.
    Lattice(std::vector<std::string> names, std::vector<std::uint8_t> le, int top, std::vector<int> meet);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int a) const { return names_[a]; }
    const std::vector<std::string>& names() const { return names_; }
    bool leq(int a, int b) const { return le_[static_cast<size_t>(a) * names_.size() + b] != 0; }
    int glb(int a, int b) const { return meet_[static_cast<size_t>(a) * names_.size() + b]; }
    int top() const { return top_; }
    int bottom() const { return bottom_; }
    std::optional<int> find(const std::string& id) const;
    int index(const std::string& id) const; // throws std::out_of_range
    int glb(const std::string& a, const std::string& b) const { return glb(index(a), index(b)); }
    FinitePoset poset() const { return {names_, le_}; }

    // Sub-semilattice on a meet-closed subset containing top, element order kept.
    Lattice restrict(const std::vector<int>& keep) const;

    bool operator==(const Lattice& o) const { return names_ == o.names_ && le_ == o.le_; }

private:
    std::vector<std::string> names_;
    std::vector<std::uint8_t> le_;
    std::vector<int> meet_;
    std::unordered_map<std::string, int> index_;
    int top_ = 0;
    int bottom_ = 0;
};

Diagnostics validate_semilattice(const RawSemilattice& raw);
// Validates and builds; meet is synthesized from leq when absent (notice appended to `notes`).
std::optional<Lattice> build_lattice(const RawSemilattice& raw, Diagnostics& diag, Diagnostics* notes = nullptr);

Lattice chain(int n);                                  // 0 < 1 < ... < n-1
Lattice powerset(const std::vector<std::string>& base); // subsets named "{a,b}"
std::string subset_name(const std::vector<std::string>& base, unsigned mask);

// Monotone maps are plain tables: map[a] is the image of source element a.
using Map = std::vector<int>;

Map identity_map(const Lattice& l);
bool is_monotone(const Lattice& src, const Lattice& tgt, const Map& m);
bool is_meet_preserving(const Lattice& src, const Lattice& tgt, const Map& m);
// F : tgt -> src with F(b) <= a iff b <= m(a)
std::optional<Map> left_adjoint(const Lattice& src, const Lattice& tgt, const Map& m);
// G : tgt -> src with m(a) <= b iff a <= G(b)
std::optional<Map> right_adjoint(const Lattice& src, const Lattice& tgt, const Map& m);
Map compose(const Map& g, const Map& f); // g after f

} // namespace bed
