#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "genusgate/error.hpp"

namespace genusgate {

/// Dense univariate polynomial, coefficients in ascending degree order.
/// The coefficient list never ends in a zero; the empty list is the zero polynomial.
template <class Coeff>
class BasicPolynomial {
public:
    using coeff_type = Coeff;

    BasicPolynomial() = default;
    explicit BasicPolynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    BasicPolynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

    static BasicPolynomial monomial(const Coeff& c, std::size_t degree) {
        std::vector<Coeff> v(degree + 1, Coeff(0));
        v[degree] = c;
        return BasicPolynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Coeff>& coeffs() const { return coeffs_; }
    Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }
    const Coeff& leading() const {
        if (is_zero()) throw error(errc::invalid_argument, "zero polynomial has no leading coefficient");
        return coeffs_.back();
    }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    BasicPolynomial derivative() const {
        std::vector<Coeff> v;
        for (std::size_t i = 1; i < coeffs_.size(); ++i) v.push_back(coeffs_[i] * static_cast<long>(i));
        return BasicPolynomial(std::move(v));
    }

    /// Horner evaluation.
    template <class T>
    T operator()(const T& x) const {
        T acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + T(*it);
        return acc;
    }

    BasicPolynomial operator-() const {
        std::vector<Coeff> v = coeffs_;
        for (auto& c : v) c = -c;
        return BasicPolynomial(std::move(v));
    }

    friend BasicPolynomial operator+(const BasicPolynomial& a, const BasicPolynomial& b) {
        std::vector<Coeff> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Coeff(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
        return BasicPolynomial(std::move(v));
    }
    friend BasicPolynomial operator-(const BasicPolynomial& a, const BasicPolynomial& b) { return a + (-b); }
    friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Coeff> v(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return BasicPolynomial(std::move(v));
    }
    friend BasicPolynomial operator*(const Coeff& c, const BasicPolynomial& a) {
        std::vector<Coeff> v = a.coeffs_;
        for (auto& x : v) x *= c;
        return BasicPolynomial(std::move(v));
    }
    friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Human-readable form, highest degree first, e.g. "x^3 - x^2 - 25*x + 29".
    std::string to_string(const char* var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (long i = degree(); i >= 0; --i) {
            Coeff c = coeffs_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            const bool negative = c < 0;
            if (negative) c = -c;
            if (first) {
                if (negative) os << "-";
            } else {
                os << (negative ? " - " : " + ");
            }
            first = false;
            if (i == 0 || c != 1) {
                os << c;
                if (i > 0) os << "*";
            }
            if (i > 0) os << var;
            if (i > 1) os << "^" << i;
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Coeff> coeffs_;
};

using Polynomial = BasicPolynomial<mpz_class>;
using RationalPolynomial = BasicPolynomial<mpq_class>;

inline RationalPolynomial to_rational(const Polynomial& f) {
    std::vector<mpq_class> v;
    v.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) v.emplace_back(c);
    return RationalPolynomial(std::move(v));
}

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
inline std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                                const RationalPolynomial& b) {
    if (b.is_zero()) throw error(errc::invalid_argument, "division by the zero polynomial");
    std::vector<mpq_class> rem = a.coeffs();
    const long db = b.degree();
    if (a.degree() < db) return {RationalPolynomial{}, a};
    std::vector<mpq_class> quo(static_cast<std::size_t>(a.degree() - db + 1), mpq_class(0));
    const mpq_class lead = b.leading();
    for (long i = a.degree(); i >= db; --i) {
        const mpq_class c = rem[static_cast<std::size_t>(i)] / lead;
        if (c == 0) continue;
        quo[static_cast<std::size_t>(i - db)] = c;
        for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {RationalPolynomial(std::move(quo)), RationalPolynomial(std::move(rem))};
}

/// Monic gcd over Q (zero if both inputs are zero).
inline RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    const mpq_class lead = a.leading();
    return (mpq_class(1) / lead) * a;
}

/// Resultant over Q by the Euclidean recurrence
/// res(a, b) = (-1)^(deg a * deg b) * lc(b)^(deg a - deg r) * res(b, r), r = a mod b.
inline mpq_class resultant(RationalPolynomial a, RationalPolynomial b) {
    if (a.is_zero() || b.is_zero()) return 0;
    mpq_class acc = 1;
    while (true) {
        const long da = a.degree(), db = b.degree();
        if (db == 0) {
            const mpq_class lc = b.leading();
            mpq_class pw = 1;
            for (long i = 0; i < da; ++i) pw *= lc;
            return acc * pw;
        }
        if (da < db) {
            if ((da * db) % 2) acc = -acc;
            std::swap(a, b);
            continue;
        }
        auto r = divmod(a, b).second;
        if (r.is_zero()) return 0;
        if ((da * db) % 2) acc = -acc;
        mpq_class lc = b.leading();
        for (long i = 0; i < da - r.degree(); ++i) acc *= lc;
        a = std::move(b);
        b = std::move(r);
    }
}

/// Discriminant (-1)^(n(n-1)/2) res(f, f') / lc(f).
inline mpz_class poly_discriminant(const Polynomial& f) {
    if (f.degree() < 1) throw error(errc::invalid_argument, "discriminant needs a non-constant polynomial");
    const long n = f.degree();
    const auto fq = to_rational(f);
    mpq_class d = resultant(fq, fq.derivative()) / mpq_class(f.leading());
    if ((n * (n - 1) / 2) % 2) d = -d;
    d.canonicalize();
    if (d.get_den() != 1) throw error(errc::invalid_argument, "non-integral discriminant");
    return d.get_num();
}

/// True when f shares a nonconstant factor with f' over Q.
inline bool has_repeated_factor(const Polynomial& f) {
    const auto fq = to_rational(f);
    return gcd(fq, fq.derivative()).degree() > 0;
}

/// Parses "c0,c1,...,cn" (ascending coefficients).
inline Polynomial parse_coeffs(const std::string& text) {
    std::vector<mpz_class> v;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        if (item.empty()) throw error(errc::invalid_argument, "empty coefficient in '" + text + "'");
        const std::size_t start = (item[0] == '-' || item[0] == '+') ? 1 : 0;
        if (start == item.size() || item.find_first_not_of("0123456789", start) != std::string::npos)
            throw error(errc::invalid_argument, "bad coefficient '" + item + "'");
        v.emplace_back(item[0] == '+' ? item.substr(1) : item, 10);
    }
    if (!text.empty() && text.back() == ',') throw error(errc::invalid_argument, "trailing comma in '" + text + "'");
    return Polynomial(std::move(v));
}

inline std::string format_coeffs(const Polynomial& f) {
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) out += ',';
        out += f.coeffs()[i].get_str();
    }
    return out;
}

} // namespace genusgate
