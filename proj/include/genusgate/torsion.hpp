#pragma once

#include <optional>
#include <vector>

#include "genusgate/numberfield.hpp"

namespace genusgate {

/// Necessary condition for s to split in K(i)/K.
inline bool elim2_candidate(const PrimeShape& s) {
    if (s.p == 2) return s.e % 2 == 0;
    return s.norm_mod(4) == 1;
}

/// Necessary condition for s to split in K(sqrt(-3))/K.
inline bool elim3_candidate(const PrimeShape& s) {
    if (s.p == 3) return s.e % 2 == 0;
    return s.norm_mod(3) == 1;
}

enum class SieveOutcome { FailsTwo, FailsThree, Passes };

inline const char* outcome_name(SieveOutcome o) {
    switch (o) {
    case SieveOutcome::FailsTwo: return "FailsTwo";
    case SieveOutcome::FailsThree: return "FailsThree";
    case SieveOutcome::Passes: return "Passes";
    }
    return "?";
}

/// FailsTwo / FailsThree prove that torsion survives; Passes only means "not excluded".
/// Witnesses are set iff the outcome is Passes.
struct SieveVerdict {
    SieveOutcome outcome = SieveOutcome::FailsTwo;
    std::optional<PrimeShape> witness2;
    std::optional<PrimeShape> witness3;
};

inline SieveVerdict sieve(const std::vector<PrimeShape>& set) {
    if (set.empty()) throw error(errc::invalid_argument, "sieve needs a nonempty ramification set");
    SieveVerdict v;
    for (const auto& s : set)
        if (elim2_candidate(s)) {
            v.witness2 = s;
            break;
        }
    for (const auto& s : set)
        if (elim3_candidate(s)) {
            v.witness3 = s;
            break;
        }
    if (!v.witness2) {
        v = {SieveOutcome::FailsTwo, std::nullopt, std::nullopt};
    } else if (!v.witness3) {
        v = {SieveOutcome::FailsThree, std::nullopt, std::nullopt};
    } else {
        v.outcome = SieveOutcome::Passes;
    }
    return v;
}

} // namespace genusgate
