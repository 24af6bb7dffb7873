#pragma once

/// Cartesian grids A x B of two number sets.

#include <utility>

#include "richlines/number_set.hpp"

namespace richlines {

struct Grid {
    NumberSet a;  // x-coordinates
    NumberSet b;  // y-coordinates

    std::size_t point_count() const { return a.size() * b.size(); }
    bool is_square() const { return a == b; }

    bool operator==(const Grid&) const = default;
};

/// Replaces A x B by the square grid C x C with C = A u B. Idempotent.
inline Grid symmetrize(const Grid& g) {
    NumberSet c = unite(g.a, g.b);
    return Grid{c, c};
}

}  // namespace richlines
