#include "ktdom/vertex_set.hpp"

namespace ktdom {

VertexSet::VertexSet(int host_size_, Mask bits_) : host_size(host_size_), bits(bits_) {
    if (host_size < 0 || host_size > kMaxVertices)
        throw ParameterError("vertex set host size out of range: " + std::to_string(host_size));
    if (bits & ~full_mask(host_size))
        throw ParameterError("vertex set member outside [0, " + std::to_string(host_size) + ")");
}

VertexSet VertexSet::of(int host_size, std::initializer_list<int> members) {
    return from_members(host_size, std::vector<int>(members));
}

VertexSet VertexSet::from_members(int host_size, const std::vector<int>& members) {
    Mask bits = 0;
    for (int v : members) {
        if (v < 0 || v >= host_size)
            throw ParameterError("vertex set member outside [0, " + std::to_string(host_size) +
                                 "): " + std::to_string(v));
        bits |= vbit(v);
    }
    return VertexSet(host_size, bits);
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(size());
    for (Mask s = bits; s; s &= s - 1) out.push_back(lowest_bit(s));
    return out;
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (Mask s = bits; s; s &= s - 1) {
        if (!first) out += ",";
        out += std::to_string(lowest_bit(s));
        first = false;
    }
    out += "}";
    return out;
}

bool set_lex_less(Mask a, Mask b) {
    if (a == b) return false;
    int v = lowest_bit(a ^ b);
    // v is the smallest vertex the two sets disagree on; everything below it
    // is shared.  If a owns v, a sorts first unless b has already run out.
    if (a & vbit(v)) return (b >> v) != 0;
    return (a >> v) == 0;
}

bool set_lex_less(const VertexSet& a, const VertexSet& b) { return set_lex_less(a.bits, b.bits); }

}  // namespace ktdom
