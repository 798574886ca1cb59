#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "genusgate/integers.hpp"
#include "genusgate/modp.hpp"
#include "genusgate/polynomial.hpp"
#include "genusgate/sturm.hpp"

namespace genusgate {

/// One prime ideal above the rational prime p, with ramification index e and
/// inertial degree f. Its norm is p^f.
struct PrimeShape {
    u64 p = 0;
    unsigned e = 0;
    unsigned f = 0;

    mpz_class norm() const {
        mpz_class n;
        mpz_ui_pow_ui(n.get_mpz_t(), p, f);
        return n;
    }
    /// Norm modulo m without forming p^f.
    u64 norm_mod(u64 m) const { return powmod(p, f, m); }

    friend auto operator<=>(const PrimeShape&, const PrimeShape&) = default;

    std::string to_string() const {
        return "(p=" + std::to_string(p) + ",e=" + std::to_string(e) + ",f=" + std::to_string(f) + ")";
    }
};

/// Ramification data (e, f) for each prime ideal above one rational prime.
using SplitShape = std::vector<std::pair<unsigned, unsigned>>;
/// Externally supplied splitting for primes that divide [O_K : Z[theta]].
using OverrideMap = std::map<u64, SplitShape>;

struct FieldOptions {
    u64 seed = default_factor_seed;
    /// Primes searched for irreducibility evidence.
    u64 irreducibility_prime_limit = 1000;
};

namespace detail {

struct SplitCache {
    std::mutex mutex;
    std::map<u64, std::vector<PrimeShape>> entries;
};

inline void sort_shapes(std::vector<PrimeShape>& shapes) {
    std::sort(shapes.begin(), shapes.end(), [](const PrimeShape& a, const PrimeShape& b) {
        if (a.f != b.f) return a.f < b.f;
        return a.e < b.e;
    });
}

} // namespace detail

/// A validated totally real number field K = Q[x]/(minpoly). Immutable once built;
/// copies share one insert-only splitting cache.
class NumberField {
public:
    unsigned degree() const { return static_cast<unsigned>(minpoly_.degree()); }
    const Polynomial& minpoly() const { return minpoly_; }
    const mpz_class& disc() const { return disc_; }
    /// [O_K : Z[theta]], the square root of disc(minpoly) / disc.
    const mpz_class& index() const { return index_; }
    const OverrideMap& overrides() const { return overrides_; }
    bool irreducibility_verified() const { return irreducible_; }
    u64 seed() const { return seed_; }

    std::string id() const { return std::to_string(degree()) + ":" + disc_.get_str(); }

private:
    friend NumberField make_field(Polynomial, const mpz_class&, OverrideMap, const FieldOptions&);
    friend std::vector<PrimeShape> splitting_type(const NumberField&, u64);

    Polynomial minpoly_;
    mpz_class disc_;
    mpz_class index_;
    OverrideMap overrides_;
    bool irreducible_ = false;
    u64 seed_ = default_factor_seed;
    std::shared_ptr<detail::SplitCache> cache_ = std::make_shared<detail::SplitCache>();
};

/// Dedekind criterion: true iff p does not divide [O_K : Z[theta]].
inline bool dedekind_test(const Polynomial& f, u64 p, u64 seed = default_factor_seed) {
    const ModFactorization fac = factor_mod_p(f, p, seed);
    ModPoly g = ModPoly::constant(p, 1), h = ModPoly::constant(p, 1);
    for (const auto& [factor, mult] : fac.factors) {
        g = g * factor;
        for (unsigned i = 1; i < mult; ++i) h = h * factor;
    }
    // F = (f - G*H)/p with G, H the lifts of g, h to Z, coefficients in [0, p)
    auto lift = [](const ModPoly& m) {
        std::vector<mpz_class> v;
        for (u64 c : m.coeffs()) v.emplace_back(static_cast<unsigned long>(c));
        return Polynomial(std::move(v));
    };
    const Polynomial diff = f - lift(g) * lift(h);
    std::vector<mpz_class> quotient;
    const mpz_class pm(static_cast<unsigned long>(p));
    for (const auto& c : diff.coeffs()) {
        if (!mpz_divisible_p(c.get_mpz_t(), pm.get_mpz_t()))
            throw error(errc::invalid_argument, "internal: f is not congruent to g*h mod p");
        quotient.push_back(c / pm);
    }
    const ModPoly F = ModPoly::from_integer(Polynomial(std::move(quotient)), p);
    return gcd(gcd(F, g), h).degree() == 0;
}

inline bool dedekind_test(const NumberField& K, u64 p) {
    if (!is_prime(p)) throw error(errc::invalid_argument, std::to_string(p) + " is not prime");
    return dedekind_test(K.minpoly(), p, K.seed());
}

/// Shapes read off the factorization of f mod p (e = multiplicity, f = degree).
inline std::vector<PrimeShape> shapes_mod_p(const Polynomial& f, u64 p, u64 seed = default_factor_seed) {
    std::vector<PrimeShape> shapes;
    for (const auto& [factor, mult] : factor_mod_p(f, p, seed).factors)
        shapes.push_back({p, mult, static_cast<unsigned>(factor.degree())});
    detail::sort_shapes(shapes);
    return shapes;
}

/// The splitting of p in O_K, sorted by (f, e). Throws needs_override when the
/// Dedekind criterion fails and no override entry exists.
inline std::vector<PrimeShape> splitting_type(const NumberField& K, u64 p) {
    if (!is_prime(p)) throw error(errc::invalid_argument, std::to_string(p) + " is not prime");
    {
        std::lock_guard lock(K.cache_->mutex);
        if (auto it = K.cache_->entries.find(p); it != K.cache_->entries.end()) return it->second;
    }
    std::vector<PrimeShape> shapes;
    if (dedekind_test(K.minpoly_, p, K.seed_)) {
        shapes = shapes_mod_p(K.minpoly_, p, K.seed_);
    } else if (auto it = K.overrides_.find(p); it != K.overrides_.end()) {
        for (const auto& [e, f] : it->second) shapes.push_back({p, e, f});
        detail::sort_shapes(shapes);
    } else {
        throw needs_override(p);
    }
    std::lock_guard lock(K.cache_->mutex);
    K.cache_->entries.emplace(p, shapes);
    return shapes;
}

/// Number of prime ideals of O_K with norm exactly q.
inline unsigned primes_with_norm(const NumberField& K, const PrimePower& q) {
    unsigned count = 0;
    for (const auto& s : splitting_type(K, q.base))
        if (s.f == q.exponent) ++count;
    return count;
}

namespace detail {

/// All subset sums of a multiset of degrees.
inline std::set<unsigned> subset_sums(const std::vector<unsigned>& degrees) {
    std::set<unsigned> sums{0};
    for (unsigned d : degrees) {
        std::set<unsigned> next = sums;
        for (unsigned s : sums) next.insert(s + d);
        sums = std::move(next);
    }
    return sums;
}

/// Irreducibility over Q from reductions mod small primes: either some reduction
/// is irreducible, or the degrees of any rational factor, which must be subset sums
/// of the factor degrees mod every p, are forced to {0, n}.
inline bool irreducibility_evidence(const Polynomial& f, u64 prime_limit, u64 seed) {
    const unsigned n = static_cast<unsigned>(f.degree());
    if (n <= 1) return true;
    const mpz_class disc = poly_discriminant(f);
    std::set<unsigned> possible;
    for (unsigned d = 0; d <= n; ++d) possible.insert(d);
    for (u64 p : primes_up_to(prime_limit)) {
        const mpz_class pm(static_cast<unsigned long>(p));
        if (mpz_divisible_p(disc.get_mpz_t(), pm.get_mpz_t())) continue;
        std::vector<unsigned> degs;
        for (const auto& [factor, mult] : factor_mod_p(f, p, seed).factors)
            for (unsigned i = 0; i < mult; ++i) degs.push_back(static_cast<unsigned>(factor.degree()));
        if (degs.size() == 1) return true;
        const auto sums = subset_sums(degs);
        std::set<unsigned> kept;
        std::set_intersection(possible.begin(), possible.end(), sums.begin(), sums.end(),
                              std::inserter(kept, kept.begin()));
        possible = std::move(kept);
        if (possible.size() == 2) return true;
    }
    return false;
}

} // namespace detail

/// Validates and builds a totally real number field.
/// Errors: NotMonic, NotTotallyReal, DiscMismatch, BadOverride (and NonSquarefree
/// from the real-root count).
inline NumberField make_field(Polynomial minpoly, const mpz_class& claimed_disc, OverrideMap overrides,
                              const FieldOptions& options = {}) {
    if (minpoly.degree() < 1) throw error(errc::invalid_argument, "defining polynomial must be non-constant");
    if (!minpoly.is_monic()) throw error(errc::not_monic, minpoly.to_string() + " is not monic");
    if (claimed_disc == 0) throw error(errc::disc_mismatch, "field discriminant must be nonzero");

    const unsigned n = static_cast<unsigned>(minpoly.degree());
    if (sturm_real_roots(minpoly) != static_cast<int>(n))
        throw error(errc::not_totally_real, minpoly.to_string() + " has non-real roots");

    const mpz_class pdisc = poly_discriminant(minpoly);
    if (!mpz_divisible_p(pdisc.get_mpz_t(), claimed_disc.get_mpz_t()))
        throw error(errc::disc_mismatch, "disc(" + minpoly.to_string() + ") = " + pdisc.get_str() +
                                             " is not divisible by " + claimed_disc.get_str());
    const mpz_class quotient = pdisc / claimed_disc;
    if (quotient <= 0 || !is_perfect_square(quotient))
        throw error(errc::disc_mismatch, "disc(" + minpoly.to_string() + ") / " + claimed_disc.get_str() + " = " +
                                             quotient.get_str() + " is not a positive square");

    NumberField K;
    K.minpoly_ = std::move(minpoly);
    K.disc_ = claimed_disc;
    mpz_sqrt(K.index_.get_mpz_t(), quotient.get_mpz_t());
    K.seed_ = options.seed;
    K.irreducible_ = detail::irreducibility_evidence(K.minpoly_, options.irreducibility_prime_limit, options.seed);

    for (const auto& [p, shape] : overrides) {
        if (!is_prime(p)) throw error(errc::bad_override, "override key " + std::to_string(p) + " is not prime");
        unsigned total = 0;
        for (const auto& [e, f] : shape) {
            if (e == 0 || f == 0) throw error(errc::bad_override, "override e and f must be positive");
            total += e * f;
        }
        if (total != n)
            throw error(errc::bad_override, "override for p = " + std::to_string(p) + " has sum e*f = " +
                                                std::to_string(total) + ", degree is " + std::to_string(n));
        if (dedekind_test(K.minpoly_, p, K.seed_)) {
            std::vector<PrimeShape> claimed;
            for (const auto& [e, f] : shape) claimed.push_back({p, e, f});
            detail::sort_shapes(claimed);
            if (claimed != shapes_mod_p(K.minpoly_, p, K.seed_))
                throw error(errc::bad_override,
                            "override for p = " + std::to_string(p) + " contradicts the Dedekind-clean factorization");
        }
    }
    K.overrides_ = std::move(overrides);
    return K;
}

} // namespace genusgate
