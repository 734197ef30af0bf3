#pragma once

#include "satake/core/numeric.hpp"

namespace satake {

// Brute-force counts in the (q+1)-regular tree with base vertex o.
// Number of vertices at distance r from o.
BigInt tree_sphere_size(int64_t q, int64_t r);
// Number of pairs (x, y) with d(o,x) = a, d(x,y) = b, d(y,o) = c.
BigInt tree_triangle_count(int64_t q, int64_t a, int64_t b, int64_t c);

}  // namespace satake
