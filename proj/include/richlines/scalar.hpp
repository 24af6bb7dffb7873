#pragma once

/**
 * @file scalar.hpp
 * @brief Exact rational scalars.
 *
 * All coordinates, slopes, intercepts and measure weights in this library
 * are arbitrary-precision rationals. Working over the rationals (rather
 * than floating point) makes every equality test, set membership check and
 * hash exact: there are no tolerance parameters anywhere.
 *
 * Invariants enforced by this class:
 *  - always stored in lowest terms,
 *  - denominator always positive (sign carried by the numerator),
 *  - zero uniquely represented as 0/1.
 *
 * Text form: an integer ("12", "-3") or a fraction "p/q" with q > 0
 * ("7/2"). parse() accepts unreduced fractions and canonicalizes; str()
 * always emits the reduced form.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>

#include "richlines/errors.hpp"

namespace richlines {

using count_t = std::uint64_t;

class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(int n) : v_(static_cast<long>(n)) {}
    Scalar(long n) : v_(n) {}
    explicit Scalar(const mpz_class& n) : v_(n) {}

    Scalar(long num, long den) : Scalar(mpz_class(num), mpz_class(den)) {}

    Scalar(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw InvalidArgument("zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    /// Parses the scalar text form. Throws InvalidArgument on bad syntax.
    static Scalar parse(std::string_view text) {
        const std::string_view whole = text;
        auto fail = [&]() -> Scalar {
            throw InvalidArgument("invalid scalar '" + std::string(whole) + "'");
        };
        if (text.empty()) return fail();
        std::string_view num = text;
        std::string_view den;
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            num = text.substr(0, slash);
            den = text.substr(slash + 1);
            if (den.empty()) return fail();
        }
        auto digits_only = [](std::string_view s) {
            if (s.empty()) return false;
            for (char c : s)
                if (c < '0' || c > '9') return false;
            return true;
        };
        std::string_view num_digits = num;
        if (!num_digits.empty() && num_digits.front() == '-') num_digits.remove_prefix(1);
        if (!digits_only(num_digits)) return fail();
        if (!den.empty() && !digits_only(den)) return fail();

        mpz_class n(std::string(num), 10);
        if (den.empty()) return Scalar(n);
        mpz_class d(std::string(den), 10);
        if (d == 0)
            throw InvalidArgument("zero denominator in '" + std::string(whole) + "'");
        return Scalar(n, d);
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    /// Underlying canonical GMP rational (used by the decimal diagnostics).
    const mpq_class& value() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Scalar operator-() const { return Scalar(mpq_class(-v_)); }

    Scalar operator+(const Scalar& rhs) const { return Scalar(mpq_class(v_ + rhs.v_)); }
    Scalar operator-(const Scalar& rhs) const { return Scalar(mpq_class(v_ - rhs.v_)); }
    Scalar operator*(const Scalar& rhs) const { return Scalar(mpq_class(v_ * rhs.v_)); }

    Scalar operator/(const Scalar& rhs) const {
        if (rhs.is_zero()) throw InvalidArgument("division by zero");
        return Scalar(mpq_class(v_ / rhs.v_));
    }

    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }
    Scalar& operator/=(const Scalar& rhs) { return *this = *this / rhs; }

    Scalar reciprocal() const {
        if (is_zero()) throw InvalidArgument("division by zero");
        return Scalar(v_.get_den(), v_.get_num());
    }

    /// 2^e for any integer e, exact.
    static Scalar pow2(long e) {
        mpz_class p = 1;
        mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
        return e < 0 ? Scalar(1, p) : Scalar(p);
    }

    bool operator==(const Scalar& rhs) const { return mpq_equal(v_.get_mpq_t(), rhs.v_.get_mpq_t()) != 0; }
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    std::strong_ordering operator<=>(const Scalar& rhs) const {
        int c = mpq_cmp(v_.get_mpq_t(), rhs.v_.get_mpq_t());
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Canonical text form: "p" when integral, else "p/q".
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    std::size_t hash() const {
        std::size_t h = hash_mpz(mpq_numref(v_.get_mpq_t()));
        return combine(h, hash_mpz(mpq_denref(v_.get_mpq_t())));
    }

private:
    explicit Scalar(mpq_class v) : v_(std::move(v)) {}

    static std::size_t combine(std::size_t h, std::size_t k) {
        return h ^ (k + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }

    static std::size_t hash_mpz(mpq_srcptr) = delete;
    static std::size_t hash_mpz(mpz_srcptr z) {
        std::size_t h = mpz_sgn(z) < 0 ? 0x517cc1b727220a95ULL : 0;
        const std::size_t limbs = mpz_size(z);
        for (std::size_t i = 0; i < limbs; ++i)
            h = combine(h, static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i))));
        return h;
    }

    mpq_class v_;  // canonical at all times
};

inline Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

struct ScalarHash {
    std::size_t operator()(const Scalar& s) const { return s.hash(); }
};

/// Exact comparison value >= base^(p/q) for a nonnegative rational exponent
/// p/q, performed entirely on integers: value^q >= base^p.
inline bool at_least_pow(const mpz_class& value, const mpz_class& base, const Scalar& exponent) {
    if (exponent.sign() < 0) throw InvalidArgument("negative exponent");
    if (value < 0 || base < 0) throw InvalidArgument("negative base");
    const mpz_class p = exponent.numerator();
    const mpz_class q = exponent.denominator();
    if (!p.fits_ulong_p() || !q.fits_ulong_p()) throw InvalidArgument("exponent too large");
    mpz_class lhs, rhs;
    mpz_pow_ui(lhs.get_mpz_t(), value.get_mpz_t(), q.get_ui());
    mpz_pow_ui(rhs.get_mpz_t(), base.get_mpz_t(), p.get_ui());
    return lhs >= rhs;
}

inline bool at_least_pow(count_t value, count_t base, const Scalar& exponent) {
    auto to_mpz = [](count_t v) {
        mpz_class z;
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
        return z;
    };
    return at_least_pow(to_mpz(value), to_mpz(base), exponent);
}

}  // namespace richlines

template <>
struct std::hash<richlines::Scalar> {
    std::size_t operator()(const richlines::Scalar& s) const { return s.hash(); }
};
