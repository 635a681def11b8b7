#pragma once

#include <string>
#include <vector>

#include "ktdom/graph.hpp"

namespace ktdom {

enum class FamilyKind {
    path,            // n
    cycle,           // n >= 3
    complete,        // n
    multipartite,    // parts, stored ascending
    rook,            // rows x cols complete factors
    sharpness,       // blocks disjoint K_{k+1} joined to an empty graph on delta-k vertices
    disjoint_union,  // children
    join_of,         // 2 children
    cartesian,       // 2 children
    cross,           // 2 children
    k_join_of,       // 2 children + k, canonical member
};

// Tagged description of a generated graph family.  Vertex numbering per
// family is fixed and documented in the README; generate() realizes it.
struct FamilySpec {
    FamilyKind kind = FamilyKind::path;
    int n = 0;
    int m = 0;
    int blocks = 0, delta = 0;
    int k = 0;
    std::vector<int> parts;
    std::vector<FamilySpec> children;

    static FamilySpec path(int n);
    static FamilySpec cycle(int n);
    static FamilySpec complete(int n);
    static FamilySpec multipartite(std::vector<int> parts);
    static FamilySpec rook(int rows, int cols);
    static FamilySpec sharpness(int blocks, int delta, int k);
    static FamilySpec disjoint_union(std::vector<FamilySpec> specs);
    static FamilySpec join_of(FamilySpec a, FamilySpec b);
    static FamilySpec cartesian(FamilySpec a, FamilySpec b);
    static FamilySpec cross(FamilySpec a, FamilySpec b);
    static FamilySpec k_join_of(FamilySpec f, FamilySpec h, int k);

    void validate() const;  // throws ParameterError
    std::string to_string() const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

Graph generate(const FamilySpec& spec);

// Grammar: name:arg[,arg...] with names path, cycle, complete, multipartite
// (parts dash-separated), rook, sharp, plus combinators cart(a,b), cross(a,b),
// join(a,b), union(a,b), kjoin(a,b,k).  parse_family(to_string()) round-trips.
FamilySpec parse_family(const std::string& text);

}  // namespace ktdom
