#pragma once

#include <vector>

#include "genusgate/polynomial.hpp"

namespace genusgate {

namespace detail {

inline int sign(const mpq_class& q) { return sgn(q); }

inline int sign_changes(const std::vector<int>& signs) {
    int changes = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

} // namespace detail

/// Sturm chain f, f', -rem(f, f'), ... over Q.
inline std::vector<RationalPolynomial> sturm_chain(const Polynomial& f) {
    std::vector<RationalPolynomial> chain;
    chain.push_back(to_rational(f));
    chain.push_back(chain.back().derivative());
    while (!chain.back().is_zero()) {
        auto r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

/// Exact number of distinct real roots of a squarefree integer polynomial.
inline int sturm_real_roots(const Polynomial& f) {
    if (f.degree() < 1) throw error(errc::invalid_argument, "sturm_real_roots needs a non-constant polynomial");
    if (has_repeated_factor(f)) throw error(errc::non_squarefree, f.to_string() + " has a repeated factor");
    const auto chain = sturm_chain(f);
    std::vector<int> at_pos, at_neg;
    for (const auto& s : chain) {
        const int lc = detail::sign(s.leading());
        at_pos.push_back(lc);
        at_neg.push_back(s.degree() % 2 ? -lc : lc);
    }
    return detail::sign_changes(at_neg) - detail::sign_changes(at_pos);
}

} // namespace genusgate
