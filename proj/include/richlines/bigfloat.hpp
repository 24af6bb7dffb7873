#pragma once

/// Minimal value-semantic wrapper over MPFR for the handful of decimal
/// diagnostics (Szemeredi-Trotter ratios, flattening ratios, exponents).
/// Everything structural in the library stays in exact rationals; these
/// floats only ever appear in reports.

#include <mpfr.h>

#include <cmath>
#include <cstdlib>
#include <string>

#include "richlines/errors.hpp"
#include "richlines/scalar.hpp"

namespace richlines {

/// Decimal precision used by diagnostics: RICHLINES_PRECISION digits if the
/// environment variable is set, 50 otherwise.
inline unsigned diagnostic_precision_digits() {
    if (const char* env = std::getenv("RICHLINES_PRECISION")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 2 && v <= 100000) return static_cast<unsigned>(v);
    }
    return 50;
}

class BigFloat {
public:
    static mpfr_prec_t bits_for_digits(unsigned digits) {
        // log2(10) = 3.3219...; a few guard bits on top.
        return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 16);
    }

    explicit BigFloat(unsigned digits = 50) : digits_(digits) {
        mpfr_init2(v_, bits_for_digits(digits));
        mpfr_set_zero(v_, 1);
    }

    BigFloat(const BigFloat& o) : digits_(o.digits_) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    BigFloat(BigFloat&& o) noexcept : digits_(o.digits_) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }

    BigFloat& operator=(BigFloat o) noexcept {
        std::swap(digits_, o.digits_);
        mpfr_swap(v_, o.v_);
        return *this;
    }

    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat of(const Scalar& s, unsigned digits) {
        BigFloat r(digits);
        mpfr_set_q(r.v_, s.value().get_mpq_t(), MPFR_RNDN);
        return r;
    }

    static BigFloat of(const mpz_class& z, unsigned digits) {
        BigFloat r(digits);
        mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
        return r;
    }

    static BigFloat of(count_t n, unsigned digits) {
        BigFloat r(digits);
        mpfr_set_ui(r.v_, static_cast<unsigned long>(n), MPFR_RNDN);
        return r;
    }

    /// Parses a decimal string (as produced by str()).
    static BigFloat parse(const std::string& text, unsigned digits) {
        BigFloat r(digits);
        if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0)
            throw InvalidArgument("invalid decimal '" + text + "'");
        return r;
    }

    BigFloat operator+(const BigFloat& rhs) const { return bin(rhs, mpfr_add); }
    BigFloat operator-(const BigFloat& rhs) const { return bin(rhs, mpfr_sub); }
    BigFloat operator*(const BigFloat& rhs) const { return bin(rhs, mpfr_mul); }
    BigFloat operator/(const BigFloat& rhs) const { return bin(rhs, mpfr_div); }

    BigFloat cbrt() const { return un(mpfr_cbrt); }
    BigFloat log2() const { return un(mpfr_log2); }
    BigFloat ln() const { return un(mpfr_log); }
    BigFloat abs() const { return un(mpfr_abs); }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int cmp(const BigFloat& rhs) const { return mpfr_cmp(v_, rhs.v_); }
    bool operator<(const BigFloat& rhs) const { return cmp(rhs) < 0; }
    bool operator<=(const BigFloat& rhs) const { return cmp(rhs) <= 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Normalized scientific form with the configured number of significant
    /// digits, e.g. "3.1888738713666915...e-01". Deterministic.
    std::string str() const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Re", static_cast<int>(digits_) - 1, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    unsigned digits() const { return digits_; }

private:
    template <typename Fn>
    BigFloat bin(const BigFloat& rhs, Fn fn) const {
        BigFloat r(std::max(digits_, rhs.digits_));
        fn(r.v_, v_, rhs.v_, MPFR_RNDN);
        return r;
    }

    template <typename Fn>
    BigFloat un(Fn fn) const {
        BigFloat r(digits_);
        fn(r.v_, v_, MPFR_RNDN);
        return r;
    }

    unsigned digits_;
    mpfr_t v_;
};

}  // namespace richlines
