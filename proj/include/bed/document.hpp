// The textual document format: sections of identifier-based entries, '#' comments.
//
//   import CHART3
//   option max-len 2
//   [category]
//   object 1 B
//   arrow b1 : 1 -> B
//   identity B idB
//   compose f g = h
//   [fiber B]
//   element 0 a 1
//   le 0 a                  (generating pairs; closed reflexively and transitively)
//   top 1
//   meet a 1 = a
//   [reindex f]
//   a -> b
//   [cone p]
//   apex Q
//   legs q1 q2
//   [equality]
//   p = d
#pragma once

#include "bed/examples.hpp"

#include <map>

namespace bed {

struct SourceError {
    int line = 0, column = 0;
    std::string message;
};
std::string to_string(const SourceError& e);

struct DoctrineDocument {
    struct Fiber {
        std::string object;
        RawSemilattice raw;
        int line = 0;
    };
    struct Reindex {
        std::string arrow;
        std::vector<std::pair<std::string, std::string>> map; // element over the codomain -> over the domain
        std::vector<int> lines;
        int line = 0;
    };
    struct DeclaredCone {
        std::string name, apex;
        std::vector<std::string> legs;
        int line = 0;
    };
    struct Equality {
        std::string cone, element;
        int line = 0;
    };

    std::optional<std::string> import;
    std::map<std::string, std::string> options;
    bool has_category = false;
    RawCategory category;
    std::vector<Fiber> fibers;
    std::vector<Reindex> reindex;
    std::vector<DeclaredCone> cones;
    std::vector<Equality> equality;
};

struct ParseResult {
    std::optional<DoctrineDocument> doc;
    std::vector<SourceError> errors;
};
ParseResult parse_document(const std::string& text);
// Normalized text; parse(print(d)) prints identically.
std::string print_document(const DoctrineDocument& d);

// A document with every identifier resolved and every embedded structure validated.
struct Resolved {
    std::string name;
    CategoryPtr cat;
    std::optional<Doctrine> doc;
    std::optional<EqualityAssignment> eq;
    std::optional<StrictDelta> strict;
    std::optional<SetChart> chart;
    std::map<std::string, std::string> options;
    Diagnostics notes;
};
// nullopt with located errors on failure.
std::optional<Resolved> resolve(const DoctrineDocument& d, std::vector<SourceError>& errors);
Resolved resolve_fixture(const std::string& name); // std::invalid_argument on unknown names

} // namespace bed
