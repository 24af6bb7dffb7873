#pragma once

/**
 * @file line.hpp
 * @brief Non-vertical lines, their affine-map form, and line combination.
 *
 * A line y = s*x + t is identified with the upper-triangular matrix
 *
 *     [ s  t ]
 *     [ 0  1 ]
 *
 * acting on column vectors (x, 1). Combining two lines l and lp that share
 * many y-values in a grid produces the line of the matrix product
 * M(lp)^{-1} M(l):
 *
 *     z = (s/s') x + (t - t')/s'
 *
 * which again meets the grid in at least as many points as the two
 * y-projections overlap. Vertical lines are not representable; horizontal
 * lines (s = 0) are representable but cannot appear on the right of a
 * combination, since the matrix is then singular.
 */

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "richlines/errors.hpp"
#include "richlines/grid.hpp"
#include "richlines/scalar.hpp"

namespace richlines {

struct Line {
    Scalar slope;
    Scalar intercept;

    /// y-value at x.
    Scalar at(const Scalar& x) const { return slope * x + intercept; }

    bool operator==(const Line&) const = default;
    auto operator<=>(const Line&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const Line& l) {
    return os << l.slope.str() << " " << l.intercept.str();
}

struct LineHash {
    std::size_t operator()(const Line& l) const {
        std::size_t h = l.slope.hash();
        return h ^ (l.intercept.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};

/// The map x -> scale*x + offset, i.e. the matrix [[scale, offset], [0, 1]].
struct AffineMap {
    Scalar scale;
    Scalar offset;

    Scalar apply(const Scalar& x) const { return scale * x + offset; }
    bool invertible() const { return !scale.is_zero(); }

    bool operator==(const AffineMap&) const = default;
};

inline AffineMap to_matrix(const Line& l) { return AffineMap{l.slope, l.intercept}; }

inline Line from_matrix(const AffineMap& m) { return Line{m.scale, m.offset}; }

/// Matrix product m1 * m2 (apply m2 first).
inline AffineMap compose(const AffineMap& m1, const AffineMap& m2) {
    return AffineMap{m1.scale * m2.scale, m1.scale * m2.offset + m1.offset};
}

inline AffineMap inverse(const AffineMap& m) {
    if (!m.invertible()) throw InvalidArgument("non-invertible map");
    return AffineMap{m.scale.reciprocal(), -(m.offset / m.scale)};
}

/// Number of grid points on the line: |{a in A : s*a + t in B}|.
inline count_t richness(const Line& l, const Grid& g) {
    count_t n = 0;
    for (const Scalar& x : g.a)
        if (g.b.contains(l.at(x))) ++n;
    return n;
}

/// Projection of (line intersect A x B) onto the x-axis.
inline NumberSet x_projection(const Line& l, const Grid& g) {
    std::vector<Scalar> xs;
    for (const Scalar& x : g.a)
        if (g.b.contains(l.at(x))) xs.push_back(x);
    return NumberSet(std::move(xs));
}

/// Projection of (line intersect A x B) onto the y-axis.
inline NumberSet y_projection(const Line& l, const Grid& g) {
    std::vector<Scalar> ys;
    for (const Scalar& x : g.a) {
        Scalar y = l.at(x);
        if (g.b.contains(y)) ys.push_back(std::move(y));
    }
    return NumberSet(std::move(ys));
}

/// Richness of a line together with both projections. The x-projection
/// always has one point per incidence; the y-projection collapses to at
/// most one point for horizontal lines.
struct RichnessReport {
    Line line;
    count_t richness = 0;
    NumberSet x_proj;
    NumberSet y_proj;
};

inline RichnessReport richness_report(const Line& l, const Grid& g) {
    RichnessReport rep{l, 0, x_projection(l, g), y_projection(l, g)};
    rep.richness = rep.x_proj.size();
    return rep;
}

/// Combination of l: y = s*x + t with lp: y = s'*x + t', giving
/// z = (s/s') x + (t - t')/s'. Equals from_matrix(inverse(M(lp)) * M(l)).
inline Line combine(const Line& l, const Line& lp) {
    if (lp.slope.is_zero()) throw InvalidArgument("non-invertible map");
    return Line{l.slope / lp.slope, (l.intercept - lp.intercept) / lp.slope};
}

/// Combination of two parallel lines of slope s: y = x + (t - t')/s.
inline Line same_slope_combine(const Line& l, const Line& lp) {
    if (l.slope != lp.slope) throw InvalidArgument("slopes differ");
    if (l.slope.is_zero()) throw InvalidArgument("non-invertible map");
    return Line{Scalar(1), (l.intercept - lp.intercept) / l.slope};
}

/// Intersection point of two non-parallel lines.
inline std::pair<Scalar, Scalar> intersection(const Line& l1, const Line& l2) {
    if (l1.slope == l2.slope) throw InvalidArgument("parallel lines");
    Scalar x = (l2.intercept - l1.intercept) / (l1.slope - l2.slope);
    return {x, l1.at(x)};
}

/// Greedy selection of a family in general position: scan in
/// (slope, intercept) order, accept a line iff it is not parallel to any
/// accepted line and passes through no intersection point of two accepted
/// lines. Output has pairwise distinct slopes and no three concurrent.
inline std::vector<Line> general_position_select(std::vector<Line> lines) {
    std::sort(lines.begin(), lines.end());
    std::vector<Line> accepted;
    for (const Line& cand : lines) {
        bool ok = true;
        for (const Line& a : accepted) {
            if (a.slope == cand.slope) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        for (std::size_t i = 0; ok && i + 1 < accepted.size(); ++i) {
            for (std::size_t j = i + 1; j < accepted.size(); ++j) {
                auto [x, y] = intersection(accepted[i], accepted[j]);
                if (cand.at(x) == y) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) accepted.push_back(cand);
    }
    return accepted;
}

}  // namespace richlines

template <>
struct std::hash<richlines::Line> {
    std::size_t operator()(const richlines::Line& l) const { return richlines::LineHash{}(l); }
};
