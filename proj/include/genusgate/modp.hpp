#pragma once

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "genusgate/integers.hpp"
#include "genusgate/polynomial.hpp"

namespace genusgate {

/// Default seed for the randomized equal-degree splitting step.
inline constexpr u64 default_factor_seed = 0;

/// Polynomial over F_p, ascending coefficients in [0, p), no trailing zeros.
class ModPoly {
public:
    ModPoly() = default;
    ModPoly(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {
        for (auto& x : c_) x %= p_;
        trim();
    }

    static ModPoly from_integer(const Polynomial& f, u64 p) {
        std::vector<u64> v;
        v.reserve(f.coeffs().size());
        const mpz_class pm(static_cast<unsigned long>(p));
        for (const auto& c : f.coeffs()) {
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), pm.get_mpz_t());
            v.push_back(r.get_ui());
        }
        return ModPoly(p, std::move(v));
    }

    static ModPoly x(u64 p) { return ModPoly(p, {0, 1}); }
    static ModPoly constant(u64 p, u64 c) { return ModPoly(p, {c}); }

    u64 prime() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<u64>& coeffs() const { return c_; }
    u64 leading() const { return c_.back(); }

    ModPoly monic() const {
        if (is_zero()) return *this;
        const u64 inv = powmod(leading(), p_ - 2, p_);
        std::vector<u64> v = c_;
        for (auto& x : v) x = mulmod(x, inv, p_);
        return ModPoly(p_, std::move(v));
    }

    ModPoly derivative() const {
        std::vector<u64> v;
        for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(mulmod(c_[i], i % p_, p_));
        return ModPoly(p_, std::move(v));
    }

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b) {
        const u64 p = a.p_ ? a.p_ : b.p_;
        std::vector<u64> v(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = (v[i] + b.c_[i]) % p;
        return ModPoly(p, std::move(v));
    }
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b) {
        const u64 p = a.p_ ? a.p_ : b.p_;
        std::vector<u64> v(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = (v[i] + p - b.c_[i]) % p;
        return ModPoly(p, std::move(v));
    }
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b) {
        if (a.is_zero() || b.is_zero()) return ModPoly(a.p_ ? a.p_ : b.p_, {});
        const u64 p = a.p_;
        std::vector<u64> v(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = (v[i + j] + mulmod(a.c_[i], b.c_[j], p)) % p;
        return ModPoly(p, std::move(v));
    }
    friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.c_ == b.c_; }

    /// Canonical order: by degree, then coefficients from the leading term down.
    friend bool operator<(const ModPoly& a, const ModPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (long i = degree(); i >= 0; --i) {
            const u64 c = c_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0 || c != 1) os << c << (i > 0 ? "*" : "");
            if (i > 0) os << "x";
            if (i > 1) os << "^" << i;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    u64 p_ = 0;
    std::vector<u64> c_;
};

inline std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
    if (b.is_zero()) throw error(errc::invalid_argument, "division by zero polynomial mod p");
    const u64 p = b.prime();
    if (a.degree() < b.degree()) return {ModPoly(p, {}), a};
    std::vector<u64> rem = a.coeffs();
    std::vector<u64> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
    const u64 inv = powmod(b.leading(), p - 2, p);
    const long db = b.degree();
    for (long i = a.degree(); i >= db; --i) {
        const u64 c = mulmod(rem[static_cast<std::size_t>(i)], inv, p);
        if (c == 0) continue;
        quo[static_cast<std::size_t>(i - db)] = c;
        for (long j = 0; j <= db; ++j) {
            auto& r = rem[static_cast<std::size_t>(i - db + j)];
            r = (r + p - mulmod(c, b.coeffs()[static_cast<std::size_t>(j)], p)) % p;
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {ModPoly(p, std::move(quo)), ModPoly(p, std::move(rem))};
}

inline ModPoly operator%(const ModPoly& a, const ModPoly& b) { return divmod(a, b).second; }
inline ModPoly operator/(const ModPoly& a, const ModPoly& b) { return divmod(a, b).first; }

/// Monic gcd.
inline ModPoly gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// base^exp mod m.
inline ModPoly powmod(ModPoly base, u64 exp, const ModPoly& m) {
    ModPoly result = ModPoly::constant(m.prime(), 1) % m;
    base = base % m;
    while (exp) {
        if (exp & 1) result = (result * base) % m;
        base = (base * base) % m;
        exp >>= 1;
    }
    return result;
}

struct ModFactor {
    ModPoly factor;
    unsigned multiplicity = 0;
};

/// Complete factorization of a polynomial over F_p into monic irreducibles.
struct ModFactorization {
    u64 prime = 0;
    std::vector<ModFactor> factors;
};

namespace detail {

/// p-th root of a polynomial whose derivative vanishes (all exponents divisible by p).
inline ModPoly pth_root(const ModPoly& f) {
    const u64 p = f.prime();
    std::vector<u64> v;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(f.coeffs()[i]);
    // a -> a^(1/p) is the identity on F_p
    return ModPoly(p, std::move(v));
}

/// Squarefree decomposition of a monic polynomial: pairs (squarefree g, multiplicity).
inline void squarefree_parts(const ModPoly& f, unsigned scale, std::vector<std::pair<ModPoly, unsigned>>& out) {
    const u64 p = f.prime();
    if (f.degree() < 1) return;
    const ModPoly df = f.derivative();
    if (df.is_zero()) {
        squarefree_parts(pth_root(f), scale * static_cast<unsigned>(p), out);
        return;
    }
    ModPoly c = gcd(f, df);
    ModPoly w = f / c;
    unsigned i = 1;
    while (w.degree() > 0) {
        ModPoly y = gcd(w, c);
        ModPoly z = w / y;
        if (z.degree() > 0) out.emplace_back(z.monic(), i * scale);
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) squarefree_parts(pth_root(c.monic()), scale * static_cast<unsigned>(p), out);
}

/// Splits a squarefree monic g into factors that all have degree d.
inline void equal_degree_split(const ModPoly& g, long d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    const u64 p = g.prime();
    std::uniform_int_distribution<u64> coeff(0, p - 1);
    while (true) {
        std::vector<u64> rv(static_cast<std::size_t>(g.degree()));
        for (auto& c : rv) c = coeff(rng);
        ModPoly a(p, std::move(rv));
        if (a.degree() < 1) continue;
        ModPoly h;
        if (p == 2) {
            // absolute trace F_{2^d} -> F_2
            ModPoly t = a % g;
            h = t;
            for (long k = 1; k < d; ++k) {
                t = (t * t) % g;
                h = h + t;
            }
        } else {
            // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
            ModPoly frob = a % g;
            ModPoly norm = frob;
            for (long k = 1; k < d; ++k) {
                frob = powmod(frob, p, g);
                norm = (norm * frob) % g;
            }
            h = powmod(norm, (p - 1) / 2, g) - ModPoly::constant(p, 1);
        }
        ModPoly split = gcd(h, g);
        if (split.degree() > 0 && split.degree() < g.degree()) {
            equal_degree_split(split, d, rng, out);
            equal_degree_split((g / split).monic(), d, rng, out);
            return;
        }
    }
}

} // namespace detail

/// Factors f mod p: squarefree, distinct-degree, then seeded equal-degree splitting.
/// Factors are returned in canonical order (see ModPoly::operator<).
inline ModFactorization factor_mod_p(const Polynomial& f, u64 p, u64 seed = default_factor_seed) {
    if (!is_prime(p)) throw error(errc::invalid_argument, std::to_string(p) + " is not prime");
    ModPoly fp = ModPoly::from_integer(f, p);
    if (fp.is_zero()) throw error(errc::invalid_argument, "polynomial vanishes mod " + std::to_string(p));
    if (fp.degree() != f.degree())
        throw error(errc::invalid_argument, "leading coefficient vanishes mod " + std::to_string(p));
    fp = fp.monic();

    ModFactorization result{p, {}};
    std::vector<std::pair<ModPoly, unsigned>> parts;
    detail::squarefree_parts(fp, 1, parts);
    std::mt19937_64 rng(seed);

    for (const auto& [part, mult] : parts) {
        ModPoly rest = part;
        ModPoly xpow = ModPoly::x(p);
        for (long d = 1; rest.degree() >= 2 * d; ++d) {
            xpow = powmod(xpow, p, rest);
            ModPoly g = gcd(rest, xpow - ModPoly::x(p));
            if (g.degree() > 0) {
                std::vector<ModPoly> pieces;
                detail::equal_degree_split(g, d, rng, pieces);
                for (auto& piece : pieces) result.factors.push_back({std::move(piece), mult});
                rest = (rest / g).monic();
                xpow = xpow % rest;
            }
        }
        if (rest.degree() > 0) result.factors.push_back({rest.monic(), mult});
    }

    std::sort(result.factors.begin(), result.factors.end(), [](const ModFactor& a, const ModFactor& b) {
        if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
        return a.factor < b.factor;
    });
    // squarefree parts of different multiplicity are coprime, so factors are distinct
    return result;
}

/// True iff f mod p is irreducible of full degree.
inline bool irreducible_mod_p(const Polynomial& f, u64 p) {
    const ModPoly fp = ModPoly::from_integer(f, p);
    if (fp.degree() != f.degree() || fp.degree() < 1) return false;
    const auto fac = factor_mod_p(f, p);
    return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

} // namespace genusgate
