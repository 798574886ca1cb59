#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

#include "genusgate/error.hpp"

namespace genusgate {

/// Precisions (bits) tried in order when a comparison lands inside the rounding slack.
inline constexpr std::array<mpfr_prec_t, 3> precision_levels{53, 128, 256};

/// Closed real interval [lo, hi] with MPFR endpoints; every operation rounds outward,
/// so the true value of the expression is always enclosed.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    Interval(const Interval& o) : Interval(o.precision()) {
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    Interval& operator=(const Interval& o) {
        if (this != &o) {
            mpfr_set_prec(lo_, o.precision());
            mpfr_set_prec(hi_, o.precision());
            mpfr_set(lo_, o.lo_, MPFR_RNDD);
            mpfr_set(hi_, o.hi_, MPFR_RNDU);
        }
        return *this;
    }
    ~Interval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    static Interval exact(const mpq_class& q, mpfr_prec_t prec) {
        Interval r(prec);
        mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
        return r;
    }
    static Interval exact(const mpz_class& z, mpfr_prec_t prec) { return exact(mpq_class(z), prec); }
    static Interval exact(long v, mpfr_prec_t prec) { return exact(mpq_class(v), prec); }

    static Interval pi(mpfr_prec_t prec) {
        Interval r(prec);
        mpfr_const_pi(r.lo_, MPFR_RNDD);
        mpfr_const_pi(r.hi_, MPFR_RNDU);
        return r;
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }
    double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double mid_double() const { return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)); }
    bool nonnegative() const { return mpfr_sgn(lo_) >= 0; }

    friend Interval operator*(const Interval& a, const Interval& b) {
        require_nonnegative(a, b);
        Interval r(std::max(a.precision(), b.precision()));
        mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_mul(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }
    friend Interval operator/(const Interval& a, const Interval& b) {
        require_nonnegative(a, b);
        if (mpfr_sgn(b.lo_) <= 0) throw error(errc::invalid_argument, "interval division by a range touching zero");
        Interval r(std::max(a.precision(), b.precision()));
        mpfr_div(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_div(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
        return r;
    }
    Interval operator-() const {
        Interval r(precision());
        mpfr_neg(r.lo_, hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        return r;
    }

    /// Applies a monotone increasing MPFR function endpoint-wise.
    template <class Fn>
    Interval monotone(Fn fn) const {
        Interval r(precision());
        fn(r.lo_, lo_, MPFR_RNDD);
        fn(r.hi_, hi_, MPFR_RNDU);
        return r;
    }

    Interval exp() const {
        return monotone([](mpfr_ptr out, mpfr_srcptr in, mpfr_rnd_t rnd) { mpfr_exp(out, in, rnd); });
    }
    Interval sqrt() const {
        require_nonnegative(*this, *this);
        return monotone([](mpfr_ptr out, mpfr_srcptr in, mpfr_rnd_t rnd) { mpfr_sqrt(out, in, rnd); });
    }
    Interval pow(unsigned long k) const {
        require_nonnegative(*this, *this);
        return monotone([k](mpfr_ptr out, mpfr_srcptr in, mpfr_rnd_t rnd) { mpfr_pow_ui(out, in, k, rnd); });
    }
    Interval root(unsigned long k) const {
        require_nonnegative(*this, *this);
        return monotone([k](mpfr_ptr out, mpfr_srcptr in, mpfr_rnd_t rnd) { mpfr_rootn_ui(out, in, k, rnd); });
    }

    /// Certain answer to "this <= other", or nothing when the enclosures overlap.
    std::optional<bool> certainly_le(const Interval& other) const {
        if (mpfr_lessequal_p(hi_, other.lo_)) return true;
        if (mpfr_greater_p(lo_, other.hi_)) return false;
        return std::nullopt;
    }
    std::optional<bool> certainly_le(const mpq_class& q) const {
        if (mpfr_cmp_q(hi_, q.get_mpq_t()) <= 0) return true;
        if (mpfr_cmp_q(lo_, q.get_mpq_t()) > 0) return false;
        return std::nullopt;
    }
    std::optional<bool> certainly_ge(const mpq_class& q) const {
        if (mpfr_cmp_q(lo_, q.get_mpq_t()) >= 0) return true;
        if (mpfr_cmp_q(hi_, q.get_mpq_t()) < 0) return false;
        return std::nullopt;
    }

    std::string to_string(int digits = 6) const {
        char buf[128];
        mpfr_snprintf(buf, sizeof buf, "[%.*RDf, %.*RUf]", digits, lo_, digits, hi_);
        return buf;
    }

private:
    static void require_nonnegative(const Interval& a, const Interval& b) {
        if (!a.nonnegative() || !b.nonnegative())
            throw error(errc::invalid_argument, "interval operation defined for nonnegative ranges only");
    }

    mpfr_t lo_;
    mpfr_t hi_;
};

/// Runs `attempt(prec)` at each precision level until it returns a certain answer.
/// A comparison still inside the slack at the last level is an error, never a guess.
template <class Attempt>
bool decide_with_escalation(Attempt&& attempt, const std::string& what) {
    for (mpfr_prec_t prec : precision_levels) {
        if (std::optional<bool> r = attempt(prec)) return *r;
    }
    throw error(errc::undecided_comparison, what + " undecided at " + std::to_string(precision_levels.back()) + " bits");
}

} // namespace genusgate
