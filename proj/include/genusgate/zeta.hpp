#pragma once

#include <string>

#include <gmpxx.h>

#include "genusgate/integers.hpp"
#include "genusgate/interval.hpp"
#include "genusgate/numberfield.hpp"

namespace genusgate {

/// |zeta_K(-1)| / 2^(d-1) as a positive rational in lowest terms.
class ZetaRatio {
public:
    explicit ZetaRatio(mpq_class value) : value_(std::move(value)) {
        value_.canonicalize();
        if (value_ <= 0) throw error(errc::invalid_argument, "zeta ratio must be positive");
    }
    ZetaRatio(const mpz_class& num, const mpz_class& den) : ZetaRatio(mpq_class(num, den)) {
        if (den == 0) throw error(errc::invalid_argument, "zeta ratio denominator is zero");
    }

    const mpq_class& value() const { return value_; }
    mpz_class num() const { return value_.get_num(); }
    mpz_class den() const { return value_.get_den(); }
    std::string to_string() const { return value_.get_num().get_str() + "/" + value_.get_den().get_str(); }

    friend bool operator==(const ZetaRatio& a, const ZetaRatio& b) { return a.value_ == b.value_; }

private:
    mpq_class value_;
};

/// Zagier's divisor sum: sum of sigma1((D - x^2)/4) over x with x^2 = D mod 4 and x^2 < D.
inline i64 zagier_e1(i64 disc) {
    if (disc <= 0) throw error(errc::invalid_argument, "quadratic discriminant must be positive");
    if (disc % 4 != 0 && disc % 4 != 1)
        throw error(errc::invalid_argument, std::to_string(disc) + " is not 0 or 1 mod 4");
    i64 total = 0;
    for (i64 x = (disc % 2 == 0) ? 0 : 1; x * x < disc; x += 2) {
        const i64 term = sigma1((disc - x * x) / 4);
        total += (x == 0) ? term : 2 * term;
    }
    return total;
}

/// Fundamental discriminant of Q(sqrt d): d if d = 1 mod 4, else 4d.
inline i64 quadratic_discriminant(i64 d) {
    if (d < 2 || !is_squarefree(d)) throw error(errc::non_squarefree, std::to_string(d) + " is not a squarefree d >= 2");
    return d % 4 == 1 ? d : 4 * d;
}

/// zeta_K(-1)/2 for K = Q(sqrt d), which is the genus factor of K.
inline mpq_class zagier_quadratic(i64 d) {
    mpq_class r(zagier_e1(quadratic_discriminant(d)), 120);
    r.canonicalize();
    return r;
}

inline ZetaRatio genus_factor(unsigned degree, const mpq_class& zeta_minus1_abs) {
    if (degree == 0) throw error(errc::invalid_argument, "degree must be positive");
    if (zeta_minus1_abs <= 0) throw error(errc::invalid_argument, "|zeta_K(-1)| must be positive");
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, degree - 1);
    return ZetaRatio(zeta_minus1_abs / mpq_class(pow2));
}

struct ZetaBounds {
    Interval lower;
    Interval upper;
};

/// Enclosures of 2 D^(3/2) / (pi^(2d) 4^d) and D^(3/2) / (2^(d-1) 12^d).
inline ZetaBounds zeta_bounds(const mpz_class& disc, unsigned degree, mpfr_prec_t prec = 128) {
    if (disc < 1 || degree < 1) throw error(errc::invalid_argument, "zeta_bounds needs disc >= 1 and degree >= 1");
    const Interval d32 = Interval::exact(disc, prec).pow(3).sqrt();
    mpz_class four_d, low_den, high_den;
    mpz_ui_pow_ui(four_d.get_mpz_t(), 4, degree);
    const Interval lower = Interval::exact(2, prec) * d32 / (Interval::pi(prec).pow(2 * degree) * Interval::exact(four_d, prec));
    mpz_ui_pow_ui(high_den.get_mpz_t(), 12, degree);
    high_den *= mpz_class(1) << (degree - 1);
    const Interval upper = d32 / Interval::exact(high_den, prec);
    return {lower, upper};
}

namespace detail {

/// Exact test ratio <= D^(3/2) / (2^(d-1) 12^d), i.e. (ratio 2^(d-1) 12^d)^2 <= D^3.
inline bool below_upper_bound(const mpq_class& ratio, const mpz_class& disc, unsigned degree) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 12, degree);
    scale <<= (degree - 1);
    const mpq_class lhs = ratio * mpq_class(scale);
    const mpq_class sq = lhs * lhs;
    const mpz_class cube = disc * disc * disc;
    return sq <= mpq_class(cube);
}

inline bool above_lower_bound(const mpq_class& ratio, const mpz_class& disc, unsigned degree) {
    return decide_with_escalation(
        [&](mpfr_prec_t prec) { return zeta_bounds(disc, degree, prec).lower.certainly_le(ratio); },
        "zeta lower bound for disc " + disc.get_str());
}

} // namespace detail

/// True iff the ratio satisfies both analytic bounds and, for quadratic fields,
/// equals the Zagier value exactly.
inline bool validate_zeta(const mpz_class& disc, unsigned degree, const ZetaRatio& ratio) {
    if (!detail::below_upper_bound(ratio.value(), disc, degree)) return false;
    if (!detail::above_lower_bound(ratio.value(), disc, degree)) return false;
    if (degree == 2) {
        if (!disc.fits_slong_p()) return false;
        const long D = disc.get_si();
        if (D % 4 != 0 && D % 4 != 1) return false;
        mpq_class z(zagier_e1(D), 120);
        z.canonicalize();
        return z == ratio.value();
    }
    return true;
}

inline bool validate_zeta(const NumberField& K, const ZetaRatio& ratio) {
    return validate_zeta(K.disc(), K.degree(), ratio);
}

} // namespace genusgate
