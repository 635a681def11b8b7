#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ktdom/bits.hpp"
#include "ktdom/errors.hpp"

namespace ktdom {

// Subset of the vertices of a host structure (graph or hypergraph).
struct VertexSet {
    int host_size = 0;
    Mask bits = 0;

    VertexSet() = default;
    VertexSet(int host_size, Mask bits);
    static VertexSet of(int host_size, std::initializer_list<int> members);
    static VertexSet from_members(int host_size, const std::vector<int>& members);

    int size() const { return popcount(bits); }
    bool empty() const { return bits == 0; }
    bool contains(int v) const { return v >= 0 && v < host_size && (bits & vbit(v)); }
    std::vector<int> members() const;
    std::string to_string() const;  // "{0,2,5}", 0-based indices

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

// Lexicographic order on the sorted member sequences, so with four vertices
// {0,1,2} < {0,1,3} < {0,2} < {1,2,3} and a proper prefix sorts first.
// This is the tie-break order for all solver witnesses.
bool set_lex_less(Mask a, Mask b);
bool set_lex_less(const VertexSet& a, const VertexSet& b);

}  // namespace ktdom
