#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "genusgate/integers.hpp"
#include "genusgate/numberfield.hpp"
#include "genusgate/torsion.hpp"
#include "genusgate/zeta.hpp"

namespace genusgate {

inline constexpr u64 default_enumeration_cap = 1'000'000;

/// A candidate finite ramification set: distinct prime places of K.
struct RamCandidate {
    /// Sorted by norm descending, then e ascending.
    std::vector<PrimeShape> shapes;
    /// Product of (norm - 1) over shapes.
    mpz_class product = 1;

    /// "p^f:e" entries joined by commas; "{}" for the empty set.
    std::string to_string() const {
        if (shapes.empty()) return "{}";
        std::string out;
        for (const auto& s : shapes) {
            if (!out.empty()) out += ',';
            out += std::to_string(s.p) + "^" + std::to_string(s.f) + ":" + std::to_string(s.e);
        }
        return out;
    }
};

namespace detail {

inline void canonicalize(RamCandidate& c) {
    std::sort(c.shapes.begin(), c.shapes.end(), [](const PrimeShape& a, const PrimeShape& b) {
        const int cmp = ::cmp(a.norm(), b.norm());
        if (cmp != 0) return cmp > 0;
        return a.e < b.e;
    });
    c.product = 1;
    for (const auto& s : c.shapes) c.product *= s.norm() - 1;
}

inline void factor_descent(u64 rest, u64 max_q, std::vector<PrimePower>& current,
                           std::vector<std::vector<PrimePower>>& out) {
    if (rest == 1) {
        out.push_back(current);
        return;
    }
    auto divs = divisors(static_cast<i64>(rest));
    for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
        const u64 m = static_cast<u64>(*it);
        if (m < 2 || m + 1 > max_q) continue;
        const auto q = prime_power(m + 1);
        if (!q) continue;
        current.push_back(*q);
        factor_descent(rest / m, m + 1, current, out);
        current.pop_back();
    }
}

} // namespace detail

/// T = (g - 1) n / s for ratio s/n, present only when s divides g - 1.
inline std::optional<mpz_class> target_product(long g, const ZetaRatio& ratio) {
    if (g < 2) throw error(errc::invalid_argument, "genus must be at least 2");
    const mpz_class gm1(g - 1);
    const mpz_class s = ratio.num();
    if (!mpz_divisible_p(gm1.get_mpz_t(), s.get_mpz_t())) return std::nullopt;
    return mpz_class(gm1 / s * ratio.den());
}

/// Every multiset of prime powers q >= 3 with product of (q - 1) equal to T.
/// Each multiset is sorted descending; the list is in descending lexicographic order.
inline std::vector<std::vector<PrimePower>> candidate_factorizations(const mpz_class& T,
                                                                     u64 cap = default_enumeration_cap) {
    if (T < 1) throw error(errc::invalid_argument, "target product must be positive");
    if (T > mpz_class(static_cast<unsigned long>(cap)))
        throw error(errc::enumeration_cap, "target " + T.get_str() + " exceeds cap " + std::to_string(cap));
    std::vector<std::vector<PrimePower>> out;
    std::vector<PrimePower> current;
    detail::factor_descent(T.get_ui(), ~u64{0}, current, out);
    return out;
}

struct EnumerationStats {
    std::size_t factorizations = 0;
    /// Multisets needing more primes of some norm than K has.
    std::vector<std::string> norm_unavailable;
    /// Realizable sets dropped by the cardinality parity rule.
    std::size_t parity_excluded = 0;
};

inline std::string multiset_string(const std::vector<PrimePower>& m) {
    std::string out;
    for (const auto& q : m) {
        if (!out.empty()) out += '*';
        out += std::to_string(q.value);
    }
    return out.empty() ? "1" : out;
}

/// Realizable ramification sets for K with product T and |set| = d - 1 mod 2,
/// padded by every subset of the norm-2 primes. Duplicates (same shape multiset)
/// are collapsed.
inline std::vector<RamCandidate> enumerate_ram_sets(const NumberField& K, const mpz_class& T,
                                                    u64 cap = default_enumeration_cap,
                                                    EnumerationStats* stats = nullptr) {
    const auto multisets = candidate_factorizations(T, cap);
    EnumerationStats local;
    EnumerationStats& st = stats ? *stats : local;
    st.factorizations = multisets.size();

    std::vector<PrimeShape> pads;
    for (const auto& s : splitting_type(K, 2))
        if (s.f == 1) pads.push_back(s);

    const unsigned parity = (K.degree() - 1) % 2;
    std::vector<RamCandidate> out;
    std::set<std::vector<PrimeShape>> seen;

    for (const auto& multiset : multisets) {
        std::map<u64, unsigned> mult;
        std::map<u64, PrimePower> by_value;
        for (const auto& q : multiset) {
            ++mult[q.value];
            by_value[q.value] = q;
        }
        // for each distinct norm, every choice of mult distinct places of that norm
        std::vector<std::vector<std::vector<PrimeShape>>> choices;
        bool available = true;
        for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
            const PrimePower& q = by_value[it->first];
            std::vector<PrimeShape> places;
            for (const auto& s : splitting_type(K, q.base))
                if (s.f == q.exponent) places.push_back(s);
            const unsigned m = it->second;
            if (places.size() < m) {
                available = false;
                break;
            }
            std::vector<std::vector<PrimeShape>> picks;
            std::vector<bool> mask(places.size(), false);
            std::fill(mask.begin(), mask.begin() + m, true);
            do {
                std::vector<PrimeShape> pick;
                for (std::size_t i = 0; i < places.size(); ++i)
                    if (mask[i]) pick.push_back(places[i]);
                picks.push_back(std::move(pick));
            } while (std::prev_permutation(mask.begin(), mask.end()));
            choices.push_back(std::move(picks));
        }
        if (!available) {
            st.norm_unavailable.push_back(multiset_string(multiset));
            continue;
        }

        std::vector<std::size_t> idx(choices.size(), 0);
        while (true) {
            std::vector<PrimeShape> base;
            for (std::size_t g = 0; g < choices.size(); ++g)
                base.insert(base.end(), choices[g][idx[g]].begin(), choices[g][idx[g]].end());
            for (u64 subset = 0; subset < (u64{1} << pads.size()); ++subset) {
                RamCandidate c;
                c.shapes = base;
                for (std::size_t i = 0; i < pads.size(); ++i)
                    if (subset >> i & 1) c.shapes.push_back(pads[i]);
                if (c.shapes.size() % 2 != parity) {
                    ++st.parity_excluded;
                    continue;
                }
                detail::canonicalize(c);
                if (seen.insert(c.shapes).second) out.push_back(std::move(c));
            }
            std::size_t g = 0;
            while (g < idx.size() && ++idx[g] == choices[g].size()) idx[g++] = 0;
            if (g == idx.size()) break;
        }
    }
    return out;
}

enum class VerdictStatus { RuledOut, Inconclusive, Unprocessable };

inline const char* status_name(VerdictStatus s) {
    switch (s) {
    case VerdictStatus::RuledOut: return "RuledOut";
    case VerdictStatus::Inconclusive: return "Inconclusive";
    case VerdictStatus::Unprocessable: return "Unprocessable";
    }
    return "?";
}

enum class ReasonKind {
    NoFactorization,
    ParityExcluded,
    SieveFailsTwo,
    SieveFailsThree,
    NormUnavailable,
    NeedsOverride,
    IrreducibilityUnverified,
    EnumerationCap,
    Error,
};

inline const char* reason_name(ReasonKind k) {
    switch (k) {
    case ReasonKind::NoFactorization: return "NoFactorization";
    case ReasonKind::ParityExcluded: return "ParityExcluded";
    case ReasonKind::SieveFailsTwo: return "SieveFailsTwo";
    case ReasonKind::SieveFailsThree: return "SieveFailsThree";
    case ReasonKind::NormUnavailable: return "NormUnavailable";
    case ReasonKind::NeedsOverride: return "NeedsOverride";
    case ReasonKind::IrreducibilityUnverified: return "IrreducibilityUnverified";
    case ReasonKind::EnumerationCap: return "EnumerationCap";
    case ReasonKind::Error: return "Error";
    }
    return "?";
}

struct Reason {
    ReasonKind kind;
    std::string detail;
};

/// Inconclusive iff survivors is nonempty.
struct Verdict {
    VerdictStatus status = VerdictStatus::RuledOut;
    std::optional<mpz_class> target;
    std::vector<Reason> reasons;
    std::vector<RamCandidate> survivors;

    /// Distinct reason kinds in first-occurrence order, joined by '>'.
    std::string reason_chain() const {
        std::string out;
        std::set<ReasonKind> used;
        for (const auto& r : reasons) {
            if (!used.insert(r.kind).second) continue;
            if (!out.empty()) out += '>';
            out += reason_name(r.kind);
        }
        return out.empty() ? "-" : out;
    }
};

inline Verdict field_verdict(const NumberField& K, const ZetaRatio& ratio, long g, u64 cap = default_enumeration_cap) {
    Verdict v;
    if (!K.irreducibility_verified()) {
        v.status = VerdictStatus::Unprocessable;
        v.reasons.push_back({ReasonKind::IrreducibilityUnverified, K.minpoly().to_string()});
        return v;
    }
    v.target = target_product(g, ratio);
    if (!v.target) {
        v.reasons.push_back({ReasonKind::NoFactorization, ratio.num().get_str() + " does not divide " + std::to_string(g - 1)});
        return v;
    }
    std::vector<RamCandidate> candidates;
    EnumerationStats stats;
    try {
        candidates = enumerate_ram_sets(K, *v.target, cap, &stats);
    } catch (const needs_override& e) {
        v.status = VerdictStatus::Unprocessable;
        v.reasons.push_back({ReasonKind::NeedsOverride, "p=" + std::to_string(e.prime())});
        return v;
    } catch (const error& e) {
        if (e.code() != errc::enumeration_cap) throw;
        v.status = VerdictStatus::Unprocessable;
        v.reasons.push_back({ReasonKind::EnumerationCap, "T=" + v.target->get_str()});
        return v;
    }
    if (stats.factorizations == 0)
        v.reasons.push_back({ReasonKind::NoFactorization, "no prime-power factorization of T=" + v.target->get_str()});
    for (const auto& m : stats.norm_unavailable) v.reasons.push_back({ReasonKind::NormUnavailable, m});
    if (stats.parity_excluded)
        v.reasons.push_back({ReasonKind::ParityExcluded, std::to_string(stats.parity_excluded) + " sets"});

    for (auto& c : candidates) {
        // the empty set has no eliminator, so 2-torsion survives
        const SieveOutcome outcome = c.shapes.empty() ? SieveOutcome::FailsTwo : sieve(c.shapes).outcome;
        if (outcome == SieveOutcome::FailsTwo) {
            v.reasons.push_back({ReasonKind::SieveFailsTwo, c.to_string()});
        } else if (outcome == SieveOutcome::FailsThree) {
            v.reasons.push_back({ReasonKind::SieveFailsThree, c.to_string()});
        } else {
            v.survivors.push_back(std::move(c));
        }
    }
    if (!v.survivors.empty()) v.status = VerdictStatus::Inconclusive;
    return v;
}

/// g = 1 + ratio * product.
inline mpq_class genus_from_set(const ZetaRatio& ratio, const RamCandidate& c) {
    if (c.product < 1) throw error(errc::invalid_argument, "candidate product must be positive");
    return 1 + ratio.value() * mpq_class(c.product);
}

/// Hyperbolic area of a genus-g surface divided by pi, 4(g - 1).
inline mpq_class area_over_pi(const mpq_class& genus) { return 4 * (genus - 1); }

} // namespace genusgate
