#pragma once

#include <bit>
#include <cstdint>

namespace ktdom {

// Vertex subsets live in a single machine word; this caps every structure
// at 64 vertices, far above anything exact search can handle anyway.
using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr Mask vbit(int v) { return Mask{1} << v; }

constexpr Mask full_mask(int n) {
    return n >= kMaxVertices ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr int lowest_bit(Mask m) { return std::countr_zero(m); }

// Usage: for (Mask s = m; s; s &= s - 1) { int v = lowest_bit(s); ... }

}  // namespace ktdom
