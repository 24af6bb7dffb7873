#pragma once

/**
 * @file measure.hpp
 * @brief Additive energy, finitely supported probability measures, the
 *        quadruple ("star") convolution, its iteration, dyadic level sets
 *        and the flattening diagnostic.
 *
 * The star convolution pushes f x f x f x f forward under
 * (c1, c2, c3, c4) -> c1*c2 - c3*c4:
 *
 *     fstar(x) = sum over c1*c2 - c3*c4 = x of f(c1) f(c2) f(c3) f(c4).
 *
 * It is computed in two stages: the product measure
 * p(y) = sum over c1*c2 = y of f(c1) f(c2), then the difference
 * convolution fstar(x) = sum over y1 - y2 = x of p(y1) p(y2). Weights stay
 * exact rationals throughout, so conservation of mass is an equality test.
 *
 * Iterating star makes supports grow doubly exponentially, so iterate_star
 * and theta_iterate take explicit caps and fail loudly with a
 * ComputationError instead of grinding.
 */

#include <algorithm>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "richlines/bigfloat.hpp"
#include "richlines/errors.hpp"
#include "richlines/number_set.hpp"
#include "richlines/scalar.hpp"

namespace richlines {

/// Finitely supported probability measure with exact positive rational
/// weights summing to exactly 1. Immutable after construction.
class Measure {
public:
    using Entry = std::pair<Scalar, Scalar>;  // (value, weight)

    /// Validates: distinct sorted support, positive weights, total mass 1.
    static Measure from_entries(std::vector<Entry> entries) {
        std::sort(entries.begin(), entries.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
        Scalar total(0);
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i].second.sign() <= 0)
                throw InvalidArgument("weight " + entries[i].second.str() + " at value " +
                                      entries[i].first.str() + " is not positive");
            if (i > 0 && entries[i].first == entries[i - 1].first)
                throw InvalidArgument("duplicate value " + entries[i].first.str());
            total += entries[i].second;
        }
        if (total != Scalar(1))
            throw InvalidArgument("total mass " + total.str() + " differs from 1 by " +
                                  (Scalar(1) - total).str());
        return Measure(std::move(entries));
    }

    static Measure uniform(const NumberSet& support) {
        if (support.empty()) throw InvalidArgument("empty set");
        Scalar w(1, static_cast<long>(support.size()));
        std::vector<Entry> entries;
        entries.reserve(support.size());
        for (const Scalar& v : support) entries.emplace_back(v, w);
        return Measure(std::move(entries));
    }

    std::size_t size() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }

    NumberSet support() const {
        std::vector<Scalar> vs;
        vs.reserve(entries_.size());
        for (const Entry& e : entries_) vs.push_back(e.first);
        return NumberSet(std::move(vs));
    }

    Scalar max_weight() const {
        Scalar m(0);
        for (const Entry& e : entries_)
            if (e.second > m) m = e.second;
        return m;
    }

    /// Weight at v, zero off the support.
    Scalar weight(const Scalar& v) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                                   [](const Entry& e, const Scalar& x) { return e.first < x; });
        if (it != entries_.end() && it->first == v) return it->second;
        return Scalar(0);
    }

    bool operator==(const Measure& rhs) const { return entries_ == rhs.entries_; }

private:
    explicit Measure(std::vector<Entry> entries) : entries_(std::move(entries)) {}

    std::vector<Entry> entries_;  // sorted by value
};

/// Resource limits for support-doubling iterations.
struct StarCaps {
    count_t max_support = 1'000'000;        // values in any intermediate support
    count_t max_pair_ops = 1'000'000'000;   // pair operations per convolution stage
};

/// Additive energy E(X,Y) = |{(x, x', y, y') : x - y = x' - y'}| computed
/// as sum over d of r(d)^2 with r(d) = |{(x, y) : x - y = d}|.
inline count_t additive_energy(const NumberSet& x, const NumberSet& y) {
    if (x.empty() || y.empty()) throw InvalidArgument("empty set");
    std::unordered_map<Scalar, count_t, ScalarHash> r;
    for (const Scalar& u : x)
        for (const Scalar& v : y) ++r[u - v];
    count_t e = 0;
    for (const auto& [d, c] : r) e += c * c;
    return e;
}

/// Executable witness of the identity
/// E(X,Y) = sum over (u, v) in X x Y of |(X - u) n (Y - v)|.
/// The right side is evaluated by translated-set intersections, a different
/// route than the difference-count formula on the left.
inline bool energy_identity_check(const NumberSet& x, const NumberSet& y) {
    count_t lhs = additive_energy(x, y);
    count_t rhs = 0;
    for (const Scalar& u : x)
        for (const Scalar& v : y)
            rhs += intersect(translate(x, -u), translate(y, -v)).size();
    return lhs == rhs;
}

struct Translate {
    Scalar shift;
    count_t overlap = 0;
};

/// Best translate u maximizing |(X + u) n Y| over u in Y - X; the smallest
/// maximizer is returned. The search set is exhaustive: any translate with
/// nonzero overlap maps some element of X onto Y. For |X| = |Y| = M the
/// result satisfies overlap >= ceil(E(X,Y) / M^2).
inline Translate find_translate(const NumberSet& x, const NumberSet& y) {
    if (x.empty() || y.empty()) throw InvalidArgument("empty set");
    if (x.size() != y.size()) throw InvalidArgument("sizes differ");
    Translate best{Scalar(0), 0};
    bool have = false;
    for (const Scalar& u : differenceset(y, x)) {
        count_t overlap = intersect(translate(x, u), y).size();
        if (!have || overlap > best.overlap) {
            best = Translate{u, overlap};
            have = true;
        }
    }
    return best;
}

struct EnergyReport {
    count_t energy = 0;
    count_t m = 0;  // common size of X and Y
    Scalar best_translate;
    count_t best_overlap = 0;
};

inline EnergyReport make_energy_report(const NumberSet& x, const NumberSet& y) {
    if (x.empty() || y.empty()) throw InvalidArgument("empty set");
    if (x.size() != y.size()) throw InvalidArgument("sizes differ");
    EnergyReport rep;
    rep.energy = additive_energy(x, y);
    rep.m = x.size();
    Translate t = find_translate(x, y);
    rep.best_translate = t.shift;
    rep.best_overlap = t.overlap;
    return rep;
}

namespace detail {

using WeightMap = std::unordered_map<Scalar, Scalar, ScalarHash>;

template <typename Op>
WeightMap convolve_stage(const std::vector<std::pair<Scalar, Scalar>>& lhs,
                         const std::vector<std::pair<Scalar, Scalar>>& rhs, Op op,
                         const StarCaps& caps) {
    const count_t work = static_cast<count_t>(lhs.size()) * static_cast<count_t>(rhs.size());
    if (work > caps.max_pair_ops)
        throw ComputationError("support blowup: " + std::to_string(work) +
                               " pair operations exceed cap " + std::to_string(caps.max_pair_ops));
    WeightMap out;
    for (const auto& [v1, w1] : lhs) {
        for (const auto& [v2, w2] : rhs) {
            out[op(v1, v2)] += w1 * w2;
            if (out.size() > caps.max_support)
                throw ComputationError("support blowup: projected support size exceeds cap " +
                                       std::to_string(caps.max_support));
        }
    }
    return out;
}

inline std::vector<std::pair<Scalar, Scalar>> sorted_entries(WeightMap m) {
    std::vector<std::pair<Scalar, Scalar>> out(std::make_move_iterator(m.begin()),
                                               std::make_move_iterator(m.end()));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

inline Measure star_impl(const Measure& f, const StarCaps& caps) {
    auto product = sorted_entries(
        convolve_stage(f.entries(), f.entries(),
                       [](const Scalar& a, const Scalar& b) { return a * b; }, caps));
    auto out = sorted_entries(convolve_stage(
        product, product, [](const Scalar& a, const Scalar& b) { return a - b; }, caps));
    return Measure::from_entries(std::move(out));
}

}  // namespace detail

/// The quadruple convolution fstar, supported on CC - CC. Mass is conserved
/// exactly and the result is symmetric: fstar(x) = fstar(-x).
inline Measure star(const Measure& f) { return detail::star_impl(f, StarCaps{}); }

inline Measure star_capped(const Measure& f, const StarCaps& caps) {
    return detail::star_impl(f, caps);
}

/// f_j: f_0 is uniform on theta, f_{i+1} = star(f_i).
inline Measure iterate_star(const NumberSet& theta, count_t j, const StarCaps& caps = {}) {
    Measure f = Measure::uniform(theta);
    for (count_t i = 0; i < j; ++i) f = detail::star_impl(f, caps);
    return f;
}

/// Theta_j as a value set: Theta_0 = Theta,
/// Theta_{j+1} = Theta_j . Theta_j - Theta_j . Theta_j.
/// Always equals the support of iterate_star(theta, j).
inline NumberSet theta_iterate(const NumberSet& theta, count_t j, const StarCaps& caps = {}) {
    if (theta.empty()) throw InvalidArgument("empty set");
    auto capped = [&caps](const NumberSet& s, const NumberSet& t, auto op) {
        std::vector<std::pair<Scalar, Scalar>> ls, rs;
        ls.reserve(s.size());
        rs.reserve(t.size());
        for (const Scalar& v : s) ls.emplace_back(v, Scalar(1));
        for (const Scalar& v : t) rs.emplace_back(v, Scalar(1));
        auto m = detail::convolve_stage(ls, rs, op, caps);
        std::vector<Scalar> vals;
        vals.reserve(m.size());
        for (auto& [v, w] : m) vals.push_back(v);
        return NumberSet(std::move(vals));
    };
    NumberSet s = theta;
    for (count_t i = 0; i < j; ++i) {
        NumberSet prod = capped(s, s, [](const Scalar& a, const Scalar& b) { return a * b; });
        s = capped(prod, prod, [](const Scalar& a, const Scalar& b) { return a - b; });
    }
    return s;
}

struct DyadicDecomposition {
    Scalar m_max;                   // M = max f
    count_t k = 0;                  // floor(5 log2 |C|) + 1
    std::vector<NumberSet> levels;  // C_1 .. C_k
    NumberSet c0;                   // remainder
};

/// Partition of the support into level sets
/// C_i = { c : f(c) in (2^-i M, 2^-i+1 M] } for i = 1..k, remainder C_0.
/// k = floor(5 log2 |C|) + 1 computed exactly from the bit length of |C|^5.
inline DyadicDecomposition dyadic_decompose(const Measure& f) {
    DyadicDecomposition dec;
    dec.m_max = f.max_weight();
    mpz_class n5;
    mpz_ui_pow_ui(n5.get_mpz_t(), static_cast<unsigned long>(f.size()), 5);
    dec.k = mpz_sizeinbase(n5.get_mpz_t(), 2);  // floor(log2 |C|^5) + 1

    std::vector<std::vector<Scalar>> buckets(dec.k);
    std::vector<Scalar> rest;
    for (const auto& [value, weight] : f.entries()) {
        Scalar lower = dec.m_max / Scalar(2);
        count_t i = 1;
        for (; i <= dec.k; ++i, lower /= Scalar(2)) {
            if (weight > lower) {
                buckets[i - 1].push_back(value);
                break;
            }
        }
        if (i > dec.k) rest.push_back(value);
    }
    dec.levels.reserve(dec.k);
    for (auto& b : buckets) dec.levels.emplace_back(std::move(b));
    dec.c0 = NumberSet(std::move(rest));
    return dec;
}

struct FlatteningReport {
    Scalar m;                  // max f
    Scalar m_star;             // max fstar
    count_t support_size = 0;  // |C|
    std::string m_pow_4_3;     // M^(4/3) as a decimal
    std::string log2_support;  // log2 |C|
    std::string ratio;         // M* / (M^(4/3) (log2 |C|)^2)
    unsigned precision_digits = 50;
};

/// Diagnostic for the flattening behaviour of star: reports
/// M* / (M^(4/3) (log2 |C|)^2) without asserting any constant. M and M*
/// are exact; the ratio is a high-precision decimal.
inline FlatteningReport flattening_report(const Measure& f,
                                          unsigned digits = diagnostic_precision_digits(),
                                          const StarCaps& caps = {}) {
    if (f.size() < 2) throw InvalidArgument("log of 1");
    FlatteningReport rep;
    rep.precision_digits = digits;
    rep.m = f.max_weight();
    rep.m_star = star_capped(f, caps).max_weight();
    rep.support_size = f.size();

    BigFloat m43 = BigFloat::of(rep.m * rep.m * rep.m * rep.m, digits).cbrt();
    BigFloat log2c = BigFloat::of(rep.support_size, digits).log2();
    BigFloat ratio = BigFloat::of(rep.m_star, digits) / (m43 * log2c * log2c);
    rep.m_pow_4_3 = m43.str();
    rep.log2_support = log2c.str();
    rep.ratio = ratio.str();
    return rep;
}

}  // namespace richlines
