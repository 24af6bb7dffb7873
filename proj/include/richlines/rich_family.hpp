#pragma once

/**
 * @file rich_family.hpp
 * @brief Enumeration of r-rich lines in a grid and the operations on
 *        families of them: overlap statistics, the two-hypothesis check,
 *        and one amplification step combining two parallel classes.
 *
 * Enumeration hashes the canonical line through every pair of grid points
 * and confirms candidates by a direct richness count. A line through k
 * grid points is hit by C(k,2) point pairs, so the pair count alone
 * already separates r-rich lines from the rest; the direct recount keeps
 * the enumerator honest. Complexity is O(P^2) for P grid points, which is
 * fine for the desk scales this library targets (P up to a few thousand).
 */

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "richlines/errors.hpp"
#include "richlines/grid.hpp"
#include "richlines/line.hpp"

namespace richlines {

/// All known r-rich non-vertical lines of one grid, grouped by slope.
/// Vertical lines are not representable as Line values; their count is
/// reported separately as metadata.
class RichFamily {
public:
    RichFamily(Grid grid, count_t threshold, count_t vertical_count = 0)
        : grid_(std::move(grid)), threshold_(threshold), vertical_count_(vertical_count) {}

    /// Caller guarantees the line is threshold-rich in the grid.
    void insert(const Line& l) { classes_[l.slope].insert(l.intercept); }

    bool contains(const Line& l) const {
        auto it = classes_.find(l.slope);
        return it != classes_.end() && it->second.count(l.intercept) > 0;
    }

    count_t size() const {
        count_t n = 0;
        for (const auto& [slope, intercepts] : classes_) n += intercepts.size();
        return n;
    }

    count_t slope_count() const { return classes_.size(); }
    count_t threshold() const { return threshold_; }
    count_t vertical_count() const { return vertical_count_; }
    const Grid& grid() const { return grid_; }

    const std::map<Scalar, std::set<Scalar>>& classes() const { return classes_; }

    /// All lines sorted by (slope, intercept).
    std::vector<Line> lines() const {
        std::vector<Line> out;
        out.reserve(size());
        for (const auto& [slope, intercepts] : classes_)
            for (const Scalar& mu : intercepts) out.push_back(Line{slope, mu});
        return out;
    }

private:
    Grid grid_;
    count_t threshold_;
    count_t vertical_count_;
    std::map<Scalar, std::set<Scalar>> classes_;  // slope -> intercepts
};

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

namespace detail {

/// Canonical line through every pair of grid points with distinct x,
/// mapped to the number of point pairs it carries.
inline std::unordered_map<Line, count_t, LineHash> pair_hash_lines(const Grid& g,
                                                                   const ProgressFn& progress = {}) {
    std::vector<std::pair<Scalar, Scalar>> pts;
    pts.reserve(g.point_count());
    for (const Scalar& x : g.a)
        for (const Scalar& y : g.b) pts.emplace_back(x, y);

    std::unordered_map<Line, count_t, LineHash> counts;
    const std::size_t total = pts.size() * (pts.size() - 1) / 2;
    std::size_t done = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[i].first != pts[j].first) {
                Scalar slope = (pts[j].second - pts[i].second) / (pts[j].first - pts[i].first);
                Scalar mu = pts[i].second - slope * pts[i].first;
                ++counts[Line{std::move(slope), std::move(mu)}];
            }
        }
        done += pts.size() - i - 1;
        if (progress && (i & 63) == 0) progress(done, total);
    }
    if (progress) progress(total, total);
    return counts;
}

}  // namespace detail

/// Exactly the set of non-vertical lines with richness >= r, r >= 2.
inline RichFamily enumerate_rich_lines(const Grid& g, count_t r, const ProgressFn& progress = {}) {
    if (r < 2) throw InvalidArgument("threshold too small");
    const count_t vertical = g.b.size() >= r ? g.a.size() : 0;
    RichFamily family(g, r, vertical);
    const count_t min_pairs = r * (r - 1) / 2;
    for (const auto& [line, pairs] : detail::pair_hash_lines(g, progress)) {
        if (pairs >= min_pairs && richness(line, g) >= r) family.insert(line);
    }
    return family;
}

/// Number of distinct non-vertical lines through at least two grid points.
/// Always <= C(|A|*|B|, 2).
inline count_t count_two_rich(const Grid& g, const ProgressFn& progress = {}) {
    return detail::pair_hash_lines(g, progress).size();
}

/// C(|A|*|B|, 2): the trivial cap on lines through two grid points.
inline mpz_class grid_pair_bound(const Grid& g) {
    mpz_class p(static_cast<unsigned long>(g.point_count()));
    return p * (p - 1) / 2;
}

struct OverlapStats {
    count_t pair_count_above = 0;  // ordered pairs, i = j included
    count_t threshold_tau = 0;
    count_t total_pairs = 0;  // K^2
    std::vector<std::pair<Line, Line>> witness_pairs;
};

/// Counts ordered pairs (i, j) with |Y(l_i) n Y(l_j)| >= tau, keeping up to
/// max_witnesses qualifying pairs in scan order.
inline OverlapStats overlap_pairs(const std::vector<Line>& ls, const Grid& g, count_t tau,
                                  std::size_t max_witnesses = 8) {
    std::vector<NumberSet> proj;
    proj.reserve(ls.size());
    for (const Line& l : ls) proj.push_back(y_projection(l, g));

    OverlapStats stats;
    stats.threshold_tau = tau;
    stats.total_pairs = static_cast<count_t>(ls.size()) * static_cast<count_t>(ls.size());
    for (std::size_t i = 0; i < ls.size(); ++i) {
        for (std::size_t j = 0; j < ls.size(); ++j) {
            if (intersect(proj[i], proj[j]).size() >= tau) {
                ++stats.pair_count_above;
                if (stats.witness_pairs.size() < max_witnesses)
                    stats.witness_pairs.emplace_back(ls[i], ls[j]);
            }
        }
    }
    return stats;
}

struct Theorem2Report {
    count_t n = 0;  // side of the square grid
    Scalar epsilon;
    Scalar delta;
    bool hypotheses_met = false;
    count_t slope_count = 0;
    count_t min_class_size = 0;
    count_t max_uniform_richness = 0;  // max r with every family line r-rich
    bool uniform_richness_below_bound = false;  // max_uniform_richness < n^(1-delta)
    std::optional<std::string> witness;
};

/// Evaluates both hypotheses (>= n^eps distinct slopes, every class of size
/// >= n^eps) by exact integer-power comparison and reports how the family's
/// uniform richness compares against n^(1-delta). The comparison is stated,
/// not asserted: the underlying statement is asymptotic.
inline Theorem2Report theorem2_check(const Grid& g, const RichFamily& f, const Scalar& epsilon,
                                     const Scalar& delta) {
    if (!g.is_square()) throw InvalidArgument("symmetrize first");
    Theorem2Report rep;
    rep.n = g.a.size();
    rep.epsilon = epsilon;
    rep.delta = delta;
    rep.slope_count = f.slope_count();

    bool classes_ok = f.slope_count() > 0;
    count_t min_class = 0;
    for (const auto& [slope, intercepts] : f.classes()) {
        count_t sz = intercepts.size();
        if (min_class == 0 || sz < min_class) min_class = sz;
    }
    rep.min_class_size = min_class;
    if (classes_ok) classes_ok = at_least_pow(min_class, rep.n, epsilon);
    rep.hypotheses_met = classes_ok && f.slope_count() > 0 && at_least_pow(rep.slope_count, rep.n, epsilon);

    if (f.slope_count() > 0) {
        count_t min_rich = 0;
        Line min_line{Scalar(0), Scalar(0)};
        for (const Line& l : f.lines()) {
            count_t r = richness(l, g);
            if (min_rich == 0 || r < min_rich) {
                min_rich = r;
                min_line = l;
            }
        }
        rep.max_uniform_richness = min_rich;
        rep.uniform_richness_below_bound =
            !at_least_pow(rep.max_uniform_richness, rep.n, Scalar(1) - delta);
        if (rep.hypotheses_met)
            rep.witness = "least-rich line y = " + min_line.slope.str() + "*x + " +
                          min_line.intercept.str() + " has richness " + std::to_string(min_rich);
    }
    if (!rep.hypotheses_met) {
        rep.witness = f.slope_count() == 0 ? std::optional<std::string>("family is empty")
                                           : std::nullopt;
    }
    return rep;
}

/// One slope class of a family: a slope with its set of intercepts.
struct SlopeClass {
    Scalar slope;
    std::vector<Scalar> intercepts;
};

/// One amplification step: for every ordered pair (l, lp) across the two
/// classes whose y-projections overlap in at least tau points, the combined
/// line is inserted into a fresh family with threshold tau. Every emitted
/// line is re-verified tau-rich.
inline RichFamily amplify(const SlopeClass& class_a, const SlopeClass& class_b, const Grid& g,
                          count_t tau) {
    if (class_a.slope.is_zero() || class_b.slope.is_zero())
        throw InvalidArgument("non-invertible map");
    if (!g.is_square()) throw InvalidArgument("symmetrize first");

    std::vector<NumberSet> proj_a, proj_b;
    proj_a.reserve(class_a.intercepts.size());
    for (const Scalar& mu : class_a.intercepts)
        proj_a.push_back(y_projection(Line{class_a.slope, mu}, g));
    proj_b.reserve(class_b.intercepts.size());
    for (const Scalar& mu : class_b.intercepts)
        proj_b.push_back(y_projection(Line{class_b.slope, mu}, g));

    RichFamily out(g, tau);
    for (std::size_t i = 0; i < class_a.intercepts.size(); ++i) {
        for (std::size_t j = 0; j < class_b.intercepts.size(); ++j) {
            if (intersect(proj_a[i], proj_b[j]).size() < tau) continue;
            Line l{class_a.slope, class_a.intercepts[i]};
            Line lp{class_b.slope, class_b.intercepts[j]};
            Line z = combine(l, lp);
            if (richness(z, g) < tau)
                throw Error("amplified line fell below the richness threshold");
            out.insert(z);
        }
    }
    return out;
}

}  // namespace richlines
