#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "genusgate/interval.hpp"

namespace genusgate {

/// Takeuchi's constants in C(d) = a exp(-b/d).
inline const mpq_class odlyzko_a(29099, 1000);
inline const mpq_class odlyzko_b(83185, 10000);

/// Enclosure of the root-discriminant lower bound C(d) = a exp(-b/d).
inline Interval odlyzko_C(unsigned d, mpfr_prec_t prec = 128) {
    if (d < 1) throw error(errc::invalid_argument, "degree must be positive");
    mpq_class exponent = -odlyzko_b / d;
    exponent.canonicalize();
    return Interval::exact(odlyzko_a, prec) * Interval::exact(exponent, prec).exp();
}

/// Enclosure of D(d, g) = (4 pi^2 ((g - 1)/2)^(1/d))^(2/3).
inline Interval rootdisc_D(unsigned d, long g, mpfr_prec_t prec = 128) {
    if (d < 1) throw error(errc::invalid_argument, "degree must be positive");
    if (g < 2) throw error(errc::invalid_argument, "genus must be at least 2");
    mpq_class half(g - 1, 2);
    half.canonicalize();
    const Interval four_pi2 = Interval::exact(4, prec) * Interval::pi(prec).pow(2);
    return (four_pi2 * Interval::exact(half, prec).root(d)).pow(2).root(3);
}

/// Certain answer to C(d) <= D(d, g).
inline bool odlyzko_admits(unsigned d, long g) {
    return decide_with_escalation(
        [&](mpfr_prec_t prec) { return odlyzko_C(d, prec).certainly_le(rootdisc_D(d, g, prec)); },
        "C(" + std::to_string(d) + ") <= D(" + std::to_string(d) + ", " + std::to_string(g) + ")");
}

/// Certain answer to disc^(1/d) <= D(d, g).
inline bool within_rootdisc(const mpz_class& disc, unsigned d, long g) {
    return decide_with_escalation(
        [&](mpfr_prec_t prec) { return Interval::exact(disc, prec).root(d).certainly_le(rootdisc_D(d, g, prec)); },
        "root discriminant of " + disc.get_str() + " against D(" + std::to_string(d) + ")");
}

/// What a field database asserts about itself, as seen by the degree cap.
struct DatabaseCoverage {
    /// Degrees for which the database claims to list every totally real field
    /// below the root-discriminant bound.
    std::set<unsigned> complete_degrees;
    /// (degree, disc) of every field present.
    std::vector<std::pair<unsigned, mpz_class>> fields;
};

struct DegreeCap {
    unsigned inequality_cap = 0;
    std::optional<unsigned> refined_cap;
    long genus = 0;

    unsigned effective() const { return refined_cap.value_or(inequality_cap); }
};

inline bool has_qualifying_field(const DatabaseCoverage& db, unsigned d, long g) {
    for (const auto& [deg, disc] : db.fields)
        if (deg == d && within_rootdisc(disc, d, g)) return true;
    return false;
}

/// Largest d with C(d) <= D(d, g); scanning stops after three consecutive failures.
/// With database coverage, walks down from that cap through degrees the database
/// asserts complete and in which it holds no qualifying field.
inline DegreeCap max_degree(long g, const std::optional<DatabaseCoverage>& db = std::nullopt) {
    if (g < 2) throw error(errc::invalid_argument, "genus must be at least 2");
    constexpr unsigned scan_limit = 100000;
    DegreeCap cap;
    cap.genus = g;
    unsigned failures = 0;
    for (unsigned d = 1; failures < 3; ++d) {
        if (d > scan_limit) throw error(errc::out_of_range, "degree scan did not terminate");
        if (odlyzko_admits(d, g)) {
            cap.inequality_cap = d;
            failures = 0;
        } else {
            ++failures;
        }
    }
    if (db && db->complete_degrees.count(cap.inequality_cap)) {
        unsigned d = cap.inequality_cap;
        while (d > 1 && db->complete_degrees.count(d) && !has_qualifying_field(*db, d, g)) --d;
        cap.refined_cap = d;
    }
    return cap;
}

} // namespace genusgate
