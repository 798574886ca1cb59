#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "genusgate/error.hpp"

namespace genusgate {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// A rational prime power p^k. `value` is always base^exponent.
struct PrimePower {
    u64 base = 0;
    unsigned exponent = 0;
    u64 value = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// Deterministic Miller-Rabin. The first twelve prime bases are a proven
/// witness set for every n < 3.3e24, which covers all of u64.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    static constexpr std::array<u64, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : bases) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : bases) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    if (!n.fits_ulong_p()) throw error(errc::out_of_range, "primality beyond the 64-bit deterministic range");
    return is_prime(static_cast<u64>(n.get_ui()));
}

/// Sum of the positive divisors of n.
inline i64 sigma1(i64 n) {
    if (n <= 0) throw error(errc::invalid_argument, "sigma1 needs n >= 1");
    i64 total = 1;
    i64 m = n;
    for (i64 p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        i64 pk = 1, term = 1;
        while (m % p == 0) {
            m /= p;
            pk *= p;
            term += pk;
        }
        total *= term;
    }
    if (m > 1) total *= (m + 1);
    return total;
}

/// All positive divisors of n, increasing.
inline std::vector<i64> divisors(i64 n) {
    if (n <= 0) throw error(errc::invalid_argument, "divisors needs n >= 1");
    std::vector<i64> small, large;
    for (i64 d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Returns (p, k) with n = p^k, or nothing when n is not a prime power.
inline std::optional<PrimePower> prime_power(const mpz_class& n) {
    if (n < 2) throw error(errc::invalid_argument, "prime_power needs n >= 2");
    if (!n.fits_ulong_p()) throw error(errc::out_of_range, "prime_power beyond the 64-bit deterministic range");
    const u64 v = n.get_ui();
    for (unsigned k = 63; k >= 1; --k) {
        mpz_class root;
        if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) == 0) continue;
        const u64 r = root.get_ui();
        if (r >= 2 && is_prime(r)) return PrimePower{r, k, v};
    }
    return std::nullopt;
}

inline std::optional<PrimePower> prime_power(u64 n) { return prime_power(mpz_class(static_cast<unsigned long>(n))); }

/// Rational primes in [2, limit], increasing.
inline std::vector<u64> primes_up_to(u64 limit) {
    std::vector<u64> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

inline bool is_perfect_square(const mpz_class& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

inline bool is_squarefree(i64 n) {
    if (n == 0) return false;
    if (n < 0) n = -n;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
        if (n % p == 0) n /= p;
    }
    return true;
}

} // namespace genusgate
