#pragma once

/**
 * @file incidence.hpp
 * @brief Exact point-line incidence counting, Szemeredi-Trotter ratio
 *        diagnostics, the representation-count reduction, and the
 *        classic sumset-times-productset experiment.
 *
 * Unlike line.hpp, lines here are general: a*x + b*y = c with
 * (a, b) != (0, 0), canonicalized so the first nonzero coefficient is 1.
 * That admits vertical lines and the a*X - c*Y = z families arising from
 * representation counts.
 */

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "richlines/bigfloat.hpp"
#include "richlines/errors.hpp"
#include "richlines/grid.hpp"
#include "richlines/line.hpp"
#include "richlines/number_set.hpp"
#include "richlines/scalar.hpp"

namespace richlines {

struct Point {
    Scalar x;
    Scalar y;

    bool operator==(const Point&) const = default;
    auto operator<=>(const Point&) const = default;
};

struct PointHash {
    std::size_t operator()(const Point& p) const {
        std::size_t h = p.x.hash();
        return h ^ (p.y.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};

/// General line a*x + b*y = c, (a, b) != (0, 0), stored with the first
/// nonzero coefficient normalized to 1.
class GeneralLine {
public:
    GeneralLine(Scalar a, Scalar b, Scalar c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
        if (a_.is_zero() && b_.is_zero()) throw InvalidArgument("degenerate line");
        const Scalar lead = a_.is_zero() ? b_ : a_;
        if (lead != Scalar(1)) {
            a_ /= lead;
            b_ /= lead;
            c_ /= lead;
        }
    }

    static GeneralLine from_line(const Line& l) {
        // y = s*x + t  ->  s*x - y = -t
        return GeneralLine(l.slope, Scalar(-1), -l.intercept);
    }

    const Scalar& a() const { return a_; }
    const Scalar& b() const { return b_; }
    const Scalar& c() const { return c_; }

    bool contains(const Point& p) const { return a_ * p.x + b_ * p.y == c_; }

    bool operator==(const GeneralLine&) const = default;
    auto operator<=>(const GeneralLine&) const = default;

private:
    Scalar a_, b_, c_;
};

struct GeneralLineHash {
    std::size_t operator()(const GeneralLine& l) const {
        std::size_t h = l.a().hash();
        h ^= l.b().hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= l.c().hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

/// A point set and a line set. Proper configurations carry no duplicate
/// points and no duplicate lines; the file loader and the builders below
/// enforce that.
struct Configuration {
    std::vector<Point> points;
    std::vector<GeneralLine> lines;
};

/// Throws InvalidArgument if the configuration carries duplicates.
inline void validate_configuration(const Configuration& cfg) {
    auto pts = cfg.points;
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
        throw InvalidArgument("duplicate point");
    auto lns = cfg.lines;
    std::sort(lns.begin(), lns.end());
    if (std::adjacent_find(lns.begin(), lns.end()) != lns.end())
        throw InvalidArgument("duplicate line");
}

/// The grid's points together with the given non-vertical lines.
inline Configuration grid_configuration(const Grid& g, const std::vector<Line>& lines) {
    Configuration cfg;
    cfg.points.reserve(g.point_count());
    for (const Scalar& x : g.a)
        for (const Scalar& y : g.b) cfg.points.push_back(Point{x, y});
    cfg.lines.reserve(lines.size());
    for (const Line& l : lines) cfg.lines.push_back(GeneralLine::from_line(l));
    std::sort(cfg.lines.begin(), cfg.lines.end());
    cfg.lines.erase(std::unique(cfg.lines.begin(), cfg.lines.end()), cfg.lines.end());
    return cfg;
}

struct IncidenceReport {
    count_t n_points = 0;
    count_t n_lines = 0;
    count_t incidences = 0;
    std::string st_ratio;  // I / ((N L)^(2/3) + N + L), high-precision decimal
    double st_ratio_value = 0.0;
    unsigned precision_digits = 50;
};

/// Exact incidence count by membership testing, plus the Szemeredi-Trotter
/// ratio I / ((N L)^(2/3) + N + L).
inline IncidenceReport count_incidences(const Configuration& cfg,
                                        unsigned digits = diagnostic_precision_digits()) {
    IncidenceReport rep;
    rep.n_points = cfg.points.size();
    rep.n_lines = cfg.lines.size();
    rep.precision_digits = digits;
    for (const GeneralLine& l : cfg.lines)
        for (const Point& p : cfg.points)
            if (l.contains(p)) ++rep.incidences;

    mpz_class nl = mpz_class(static_cast<unsigned long>(rep.n_points)) *
                   mpz_class(static_cast<unsigned long>(rep.n_lines));
    BigFloat denom = BigFloat::of(nl * nl, digits).cbrt() +
                     BigFloat::of(rep.n_points + rep.n_lines, digits);
    if (denom.is_zero()) {
        BigFloat zero(digits);
        rep.st_ratio = zero.str();
        rep.st_ratio_value = 0.0;
        return rep;
    }
    BigFloat ratio = BigFloat::of(rep.incidences, digits) / denom;
    rep.st_ratio = ratio.str();
    rep.st_ratio_value = ratio.to_double();
    return rep;
}

/// Exact count of quadruples (a, b, c, d) in ca x cb x cg x cd with
/// a*b - c*d = x, by hashing the two product multisets.
inline count_t representation_count(const Scalar& x, const NumberSet& ca, const NumberSet& cb,
                                    const NumberSet& cg, const NumberSet& cd) {
    std::unordered_map<Scalar, count_t, ScalarHash> left, right;
    for (const Scalar& a : ca)
        for (const Scalar& b : cb) ++left[a * b];
    for (const Scalar& c : cg)
        for (const Scalar& d : cd) ++right[c * d];
    count_t total = 0;
    for (const auto& [prod, n] : left) {
        auto it = right.find(prod - x);
        if (it != right.end()) total += n * it->second;
    }
    return total;
}

/// The representation count recast as incidences: one line per coefficient
/// pair (a, c) in ca x cg, carrying the equation a*X - c*Y = x, against the
/// point grid cb x cd. The quadruple (a, b, c, d) solves a*b - c*d = x
/// exactly when point (b, d) lies on the (a, c) line, so the family's
/// incidence count equals representation_count(x, ...).
///
/// The lines form an indexed family, not a set: distinct coefficient pairs
/// can canonicalize to the same line and must still be counted separately,
/// and the pair (0, 0) degenerates to the relation 0 = x, incident to every
/// point when x = 0. The family is therefore kept apart from Configuration.
struct RepresentationReduction {
    Scalar rhs;                      // x
    std::vector<Point> points;       // cb x cd
    std::vector<GeneralLine> lines;  // with multiplicity
    count_t degenerate_pairs = 0;    // coefficient pairs (0, 0)
};

inline RepresentationReduction representation_as_incidences(const Scalar& x, const NumberSet& ca,
                                                            const NumberSet& cb,
                                                            const NumberSet& cg,
                                                            const NumberSet& cd) {
    RepresentationReduction red;
    red.rhs = x;
    red.points.reserve(cb.size() * cd.size());
    for (const Scalar& b : cb)
        for (const Scalar& d : cd) red.points.push_back(Point{b, d});
    red.lines.reserve(ca.size() * cg.size());
    for (const Scalar& a : ca) {
        for (const Scalar& c : cg) {
            if (a.is_zero() && c.is_zero())
                ++red.degenerate_pairs;
            else
                red.lines.emplace_back(a, -c, x);
        }
    }
    return red;
}

inline count_t incidence_count(const RepresentationReduction& red) {
    count_t total = 0;
    for (const GeneralLine& l : red.lines)
        for (const Point& p : red.points)
            if (l.contains(p)) ++total;
    if (red.rhs.is_zero()) total += red.degenerate_pairs * red.points.size();
    return total;
}

struct ElekesReport {
    count_t n = 0;
    count_t sumset_size = 0;
    count_t productset_size = 0;
    mpz_class product;        // |A+A| * |A.A|
    bool bound_holds = false; // product >= n^(5/2), compared as squares
    std::string exponent;     // log(product) / log(n)
    unsigned precision_digits = 50;
};

/// Sum-product experiment: |A+A| * |A.A| against n^(5/2), exact.
inline ElekesReport elekes_experiment(const NumberSet& a,
                                      unsigned digits = diagnostic_precision_digits()) {
    if (a.size() < 2) throw InvalidArgument("set too small");
    ElekesReport rep;
    rep.precision_digits = digits;
    rep.n = a.size();
    rep.sumset_size = sumset(a, a).size();
    rep.productset_size = productset(a, a).size();
    rep.product = mpz_class(static_cast<unsigned long>(rep.sumset_size)) *
                  mpz_class(static_cast<unsigned long>(rep.productset_size));
    rep.bound_holds =
        at_least_pow(rep.product, mpz_class(static_cast<unsigned long>(rep.n)), Scalar(5, 2));
    rep.exponent =
        (BigFloat::of(rep.product, digits).ln() / BigFloat::of(rep.n, digits).ln()).str();
    return rep;
}

}  // namespace richlines
