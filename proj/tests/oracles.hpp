#pragma once

// Independent brute-force oracles used by the test suites. These stay
// deliberately naive (nested loops over std::set) and never share code with
// the library paths they check.

#include <map>
#include <set>
#include <vector>

#include "richlines/grid.hpp"
#include "richlines/incidence.hpp"
#include "richlines/line.hpp"
#include "richlines/measure.hpp"
#include "richlines/number_set.hpp"
#include "richlines/scalar.hpp"

namespace oracle {

using richlines::count_t;
using richlines::Grid;
using richlines::Line;
using richlines::Measure;
using richlines::NumberSet;
using richlines::Scalar;

inline NumberSet pairwise_sum(const NumberSet& x, const NumberSet& y) {
    std::set<Scalar> out;
    for (const Scalar& u : x)
        for (const Scalar& v : y) out.insert(u + v);
    return NumberSet(std::vector<Scalar>(out.begin(), out.end()));
}

inline NumberSet pairwise_product(const NumberSet& x, const NumberSet& y) {
    std::set<Scalar> out;
    for (const Scalar& u : x)
        for (const Scalar& v : y) out.insert(u * v);
    return NumberSet(std::vector<Scalar>(out.begin(), out.end()));
}

inline NumberSet pairwise_difference(const NumberSet& x, const NumberSet& y) {
    std::set<Scalar> out;
    for (const Scalar& u : x)
        for (const Scalar& v : y) out.insert(u - v);
    return NumberSet(std::vector<Scalar>(out.begin(), out.end()));
}

/// Quartic-loop additive energy.
inline count_t energy_quadruples(const NumberSet& x, const NumberSet& y) {
    count_t e = 0;
    for (const Scalar& a : x)
        for (const Scalar& ap : x)
            for (const Scalar& b : y)
                for (const Scalar& bp : y)
                    if (a - b == ap - bp) ++e;
    return e;
}

/// All distinct non-vertical lines through at least r grid points, found by
/// testing the line of every point pair against every grid point.
inline std::set<Line> rich_lines_bruteforce(const Grid& g, count_t r) {
    std::vector<std::pair<Scalar, Scalar>> pts;
    for (const Scalar& x : g.a)
        for (const Scalar& y : g.b) pts.emplace_back(x, y);
    std::set<Line> found;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[i].first == pts[j].first) continue;
            Scalar slope = (pts[j].second - pts[i].second) / (pts[j].first - pts[i].first);
            Line l{slope, pts[i].second - slope * pts[i].first};
            if (found.count(l)) continue;
            count_t hits = 0;
            for (const auto& [px, py] : pts)
                if (l.slope * px + l.intercept == py) ++hits;
            if (hits >= r) found.insert(l);
        }
    }
    return found;
}

/// Direct quadruple-sum star convolution, O(|C|^4).
inline std::map<Scalar, Scalar> star_quadruples(const Measure& f) {
    std::map<Scalar, Scalar> out;
    for (const auto& [c1, w1] : f.entries())
        for (const auto& [c2, w2] : f.entries())
            for (const auto& [c3, w3] : f.entries())
                for (const auto& [c4, w4] : f.entries()) {
                    Scalar key = c1 * c2 - c3 * c4;
                    auto it = out.find(key);
                    if (it == out.end())
                        out.emplace(std::move(key), w1 * w2 * w3 * w4);
                    else
                        it->second += w1 * w2 * w3 * w4;
                }
    return out;
}

/// Membership count taking the slope-intercept or vertical route rather
/// than the a*x + b*y = c evaluation used by the library.
inline count_t incidences_per_line(const richlines::Configuration& cfg) {
    count_t total = 0;
    for (const richlines::GeneralLine& l : cfg.lines) {
        for (const richlines::Point& p : cfg.points) {
            bool on;
            if (l.b().is_zero()) {
                on = p.x == l.c() / l.a();  // vertical: x = c/a
            } else {
                Scalar slope = -(l.a() / l.b());
                Scalar intercept = l.c() / l.b();
                on = p.y == slope * p.x + intercept;
            }
            if (on) ++total;
        }
    }
    return total;
}

/// Quadruple loop for |{(a,b,c,d) : ab - cd = x}|.
inline count_t representation_quadruples(const Scalar& x, const NumberSet& ca, const NumberSet& cb,
                                         const NumberSet& cg, const NumberSet& cd) {
    count_t total = 0;
    for (const Scalar& a : ca)
        for (const Scalar& b : cb)
            for (const Scalar& c : cg)
                for (const Scalar& d : cd)
                    if (a * b - c * d == x) ++total;
    return total;
}

}  // namespace oracle
