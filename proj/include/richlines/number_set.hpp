#pragma once

/**
 * @file number_set.hpp
 * @brief Sorted duplicate-free sets of rationals and their arithmetic.
 *
 * NumberSet is the workhorse value type: sumsets, product sets, difference
 * sets, translates, unions and intersections all return new sets. Values
 * are immutable after construction, so sets can be shared freely across
 * threads.
 */

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "richlines/errors.hpp"
#include "richlines/scalar.hpp"

namespace richlines {

class NumberSet {
public:
    NumberSet() = default;

    /// Sorts and removes duplicates.
    explicit NumberSet(std::vector<Scalar> values) : values_(std::move(values)) {
        std::sort(values_.begin(), values_.end());
        values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    }

    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    bool contains(const Scalar& v) const {
        return std::binary_search(values_.begin(), values_.end(), v);
    }

    const std::vector<Scalar>& values() const { return values_; }
    const Scalar& operator[](std::size_t i) const { return values_[i]; }

    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    bool operator==(const NumberSet& rhs) const = default;

private:
    std::vector<Scalar> values_;  // strictly increasing
};

namespace detail {

inline void require_nonempty(const NumberSet& x, const NumberSet& y) {
    if (x.empty() || y.empty()) throw InvalidArgument("empty set");
}

template <typename Op>
NumberSet pairwise(const NumberSet& x, const NumberSet& y, Op op) {
    require_nonempty(x, y);
    std::vector<Scalar> out;
    out.reserve(x.size() * y.size());
    for (const Scalar& u : x)
        for (const Scalar& v : y) out.push_back(op(u, v));
    return NumberSet(std::move(out));
}

/// Deterministic uniform draw from [0, bound) by power-of-two rejection.
/// mt19937_64 output is pinned by the standard, so results are identical
/// across platforms.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t mask = std::bit_ceil(bound) - 1;
    for (;;) {
        std::uint64_t v = rng() & mask;
        if (v < bound) return v;
    }
}

}  // namespace detail

inline NumberSet sumset(const NumberSet& x, const NumberSet& y) {
    return detail::pairwise(x, y, [](const Scalar& u, const Scalar& v) { return u + v; });
}

inline NumberSet productset(const NumberSet& x, const NumberSet& y) {
    return detail::pairwise(x, y, [](const Scalar& u, const Scalar& v) { return u * v; });
}

inline NumberSet differenceset(const NumberSet& x, const NumberSet& y) {
    return detail::pairwise(x, y, [](const Scalar& u, const Scalar& v) { return u - v; });
}

inline NumberSet translate(const NumberSet& x, const Scalar& t) {
    std::vector<Scalar> out;
    out.reserve(x.size());
    for (const Scalar& u : x) out.push_back(u + t);
    return NumberSet(std::move(out));
}

inline NumberSet intersect(const NumberSet& x, const NumberSet& y) {
    std::vector<Scalar> out;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return NumberSet(std::move(out));
}

inline NumberSet unite(const NumberSet& x, const NumberSet& y) {
    std::vector<Scalar> out;
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return NumberSet(std::move(out));
}

/// Arithmetic progression start, start+step, ..., of n distinct terms.
inline NumberSet make_ap(count_t n, const Scalar& start, const Scalar& step) {
    if (n < 1 || step.is_zero()) throw InvalidArgument("degenerate generator");
    std::vector<Scalar> out;
    out.reserve(n);
    Scalar v = start;
    for (count_t i = 0; i < n; ++i, v += step) out.push_back(v);
    return NumberSet(std::move(out));
}

/// Geometric progression start, start*ratio, ..., of n distinct terms.
inline NumberSet make_gp(count_t n, const Scalar& start, const Scalar& ratio) {
    if (n < 1 || start.is_zero() || ratio.is_zero() || ratio == Scalar(1) || ratio == Scalar(-1))
        throw InvalidArgument("degenerate generator");
    std::vector<Scalar> out;
    out.reserve(n);
    Scalar v = start;
    for (count_t i = 0; i < n; ++i, v *= ratio) out.push_back(v);
    return NumberSet(std::move(out));
}

/// n distinct integers drawn uniformly from [0, range). Deterministic in seed.
inline NumberSet make_random(count_t n, std::uint64_t seed, std::uint64_t range) {
    if (n < 1 || range < n) throw InvalidArgument("degenerate generator");
    std::mt19937_64 rng(seed);
    std::vector<Scalar> picked;
    picked.reserve(n);
    while (picked.size() < n) {
        Scalar v(mpz_class(static_cast<unsigned long>(detail::uniform_below(rng, range))));
        if (std::find(picked.begin(), picked.end(), v) == picked.end()) picked.push_back(std::move(v));
    }
    return NumberSet(std::move(picked));
}

}  // namespace richlines
