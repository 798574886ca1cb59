#pragma once

#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "genusgate/bounds.hpp"
#include "genusgate/numberfield.hpp"
#include "genusgate/zeta.hpp"

namespace genusgate {

inline constexpr const char* flag_irreducibility_unverified = "irreducibility-unverified";

/// One database row: degree, disc, ascending coefficients, zeta ratio, overrides, flags.
struct FieldRecord {
    unsigned degree = 0;
    mpz_class disc;
    Polynomial poly;
    ZetaRatio zeta{mpq_class(1)};
    /// Overrides in file order (primes and pairs); see OverrideMap for lookup.
    std::vector<std::pair<u64, SplitShape>> overrides;
    std::vector<std::string> flags;
    std::size_t lineno = 0;

    std::string id() const { return std::to_string(degree) + ":" + disc.get_str(); }
    OverrideMap override_map() const { return OverrideMap(overrides.begin(), overrides.end()); }
    bool has_flag(const std::string& f) const { return std::find(flags.begin(), flags.end(), f) != flags.end(); }
};

/// A parsed table; comment lines are kept so the file serializes back unchanged.
struct FieldTable {
    /// Each line is a verbatim comment or an index into records.
    std::vector<std::variant<std::string, std::size_t>> lines;
    std::vector<FieldRecord> records;
    /// From "#@complete-degrees d1,d2,..." directives.
    std::set<unsigned> complete_degrees;
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, sep)) parts.push_back(item);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    if (s.empty()) parts.emplace_back();
    return parts;
}

inline bool is_digits(const std::string& s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
}

inline unsigned parse_small(const std::string& s, std::size_t lineno, const char* what) {
    if (!is_digits(s) || s.size() > 9) throw malformed_line(lineno, std::string("bad ") + what + " '" + s + "'");
    return static_cast<unsigned>(std::stoul(s));
}

inline std::pair<u64, SplitShape> parse_override(const std::string& text, std::size_t lineno) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw malformed_line(lineno, "override '" + text + "' lacks ':'");
    const std::string ps = text.substr(0, colon);
    if (!is_digits(ps) || ps.size() > 18) throw malformed_line(lineno, "bad override prime '" + ps + "'");
    const u64 p = std::stoull(ps);
    SplitShape shape;
    for (const auto& pair : split(text.substr(colon + 1), ',')) {
        const auto caret = pair.find('^');
        if (caret == std::string::npos) throw malformed_line(lineno, "override entry '" + pair + "' is not e^f");
        shape.emplace_back(parse_small(pair.substr(0, caret), lineno, "ramification index"),
                           parse_small(pair.substr(caret + 1), lineno, "inertial degree"));
    }
    return {p, shape};
}

inline std::set<unsigned> parse_degree_list(const std::string& text, std::size_t lineno) {
    std::set<unsigned> out;
    for (const auto& item : split(text, ',')) out.insert(parse_small(item, lineno, "degree"));
    return out;
}

} // namespace detail

inline FieldRecord parse_record(const std::string& line, std::size_t lineno) {
    if (line.find('\r') != std::string::npos) throw malformed_line(lineno, "carriage return in line");
    const auto cols = detail::split(line, '\t');
    if (cols.size() < 4 || cols.size() > 6)
        throw malformed_line(lineno, "expected 4 to 6 tab-separated columns, found " + std::to_string(cols.size()));

    FieldRecord r;
    r.lineno = lineno;
    r.degree = detail::parse_small(cols[0], lineno, "degree");
    if (r.degree == 0) throw malformed_line(lineno, "degree must be positive");
    if (!detail::is_digits(cols[1]) || cols[1] == std::string(cols[1].size(), '0'))
        throw malformed_line(lineno, "discriminant must be a positive integer");
    r.disc = mpz_class(cols[1], 10);

    try {
        r.poly = parse_coeffs(cols[2]);
    } catch (const error& e) {
        throw malformed_line(lineno, e.what());
    }
    if (r.poly.degree() != static_cast<long>(r.degree))
        throw malformed_line(lineno, "polynomial degree " + std::to_string(r.poly.degree()) + " does not match " +
                                         std::to_string(r.degree));
    if (!r.poly.is_monic()) throw malformed_line(lineno, "polynomial is not monic");

    const auto slash = cols[3].find('/');
    if (slash == std::string::npos) throw malformed_line(lineno, "zeta must be num/den");
    const std::string ns = cols[3].substr(0, slash), ds = cols[3].substr(slash + 1);
    if (!detail::is_digits(ns) || !detail::is_digits(ds)) throw malformed_line(lineno, "zeta must be num/den");
    const mpz_class num(ns, 10), den(ds, 10);
    if (num < 1) throw malformed_line(lineno, "zeta numerator must be at least 1");
    if (den < 1) throw malformed_line(lineno, "zeta denominator must be at least 1");
    if (gcd(num, den) != 1) throw malformed_line(lineno, "zeta " + cols[3] + " is not in lowest terms");
    r.zeta = ZetaRatio(num, den);

    if (cols.size() >= 5 && !cols[4].empty()) {
        std::set<u64> primes;
        for (const auto& item : detail::split(cols[4], ';')) {
            auto entry = detail::parse_override(item, lineno);
            if (!primes.insert(entry.first).second)
                throw malformed_line(lineno, "override prime " + std::to_string(entry.first) + " repeated");
            r.overrides.push_back(std::move(entry));
        }
    }
    if (cols.size() == 6) {
        if (cols[5].empty()) throw malformed_line(lineno, "empty flags column");
        for (const auto& f : detail::split(cols[5], ',')) {
            if (f.empty()) throw malformed_line(lineno, "empty flag");
            r.flags.push_back(f);
        }
    }
    return r;
}

inline std::string serialize_record(const FieldRecord& r) {
    std::string out = std::to_string(r.degree) + "\t" + r.disc.get_str() + "\t" + format_coeffs(r.poly) + "\t" +
                      r.zeta.to_string() + "\t";
    for (std::size_t i = 0; i < r.overrides.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(r.overrides[i].first) + ":";
        for (std::size_t j = 0; j < r.overrides[i].second.size(); ++j) {
            if (j) out += ',';
            out += std::to_string(r.overrides[i].second[j].first) + "^" + std::to_string(r.overrides[i].second[j].second);
        }
    }
    if (!r.flags.empty()) {
        out += '\t';
        for (std::size_t i = 0; i < r.flags.size(); ++i) {
            if (i) out += ',';
            out += r.flags[i];
        }
    }
    return out;
}

/// Parses the TSV field table. Lines starting with '#' are comments; blank lines
/// and CR characters are malformed.
inline FieldTable parse_table(std::istream& in) {
    FieldTable table;
    std::set<std::tuple<unsigned, std::string, std::string>> keys;
    std::string line;
    std::size_t lineno = 0;
    static const std::string directive = "#@complete-degrees ";
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') {
            if (line.rfind(directive, 0) == 0) {
                const auto degs = detail::parse_degree_list(line.substr(directive.size()), lineno);
                table.complete_degrees.insert(degs.begin(), degs.end());
            }
            table.lines.emplace_back(line);
            continue;
        }
        if (line.empty()) throw malformed_line(lineno, "blank line");
        FieldRecord r = parse_record(line, lineno);
        if (!keys.emplace(r.degree, r.disc.get_str(), format_coeffs(r.poly)).second)
            throw error(errc::duplicate_field, "line " + std::to_string(lineno) + ": duplicate field " + r.id());
        table.lines.emplace_back(table.records.size());
        table.records.push_back(std::move(r));
    }
    return table;
}

inline FieldTable parse_table(const std::string& text) {
    std::istringstream is(text);
    return parse_table(is);
}

inline std::string serialize(const FieldTable& table) {
    std::string out;
    for (const auto& line : table.lines) {
        if (const auto* comment = std::get_if<std::string>(&line)) {
            out += *comment;
        } else {
            out += serialize_record(table.records[std::get<std::size_t>(line)]);
        }
        out += '\n';
    }
    return out;
}

/// make_field followed by zeta validation (Zagier equality for quadratics, the
/// analytic interval otherwise).
inline NumberField validate_record(const FieldRecord& r, const FieldOptions& options = {}) {
    NumberField K = make_field(r.poly, r.disc, r.override_map(), options);
    if (!detail::below_upper_bound(r.zeta.value(), r.disc, r.degree) ||
        !detail::above_lower_bound(r.zeta.value(), r.disc, r.degree))
        throw error(errc::zeta_out_of_bounds, r.id() + ": zeta ratio " + r.zeta.to_string() + " outside the analytic bounds");
    if (r.degree == 2 && !validate_zeta(K, r.zeta))
        throw error(errc::zagier_mismatch, r.id() + ": zeta ratio " + r.zeta.to_string() + " differs from the Zagier value");
    return K;
}

/// A parsed and fully validated database.
struct FieldDatabase {
    FieldTable table;
    std::vector<NumberField> fields;

    DatabaseCoverage coverage() const {
        DatabaseCoverage c;
        c.complete_degrees = table.complete_degrees;
        for (const auto& r : table.records) c.fields.emplace_back(r.degree, r.disc);
        return c;
    }
};

inline FieldDatabase load_database(std::istream& in, const FieldOptions& options = {}) {
    FieldDatabase db;
    db.table = parse_table(in);
    for (const auto& r : db.table.records) {
        try {
            db.fields.push_back(validate_record(r, options));
        } catch (const malformed_line&) {
            throw;
        } catch (const error& e) {
            const std::string msg = e.what();
            const auto colon = msg.find(": ");
            throw error(e.code(), "line " + std::to_string(r.lineno) + ": " +
                                      (colon == std::string::npos ? msg : msg.substr(colon + 2)));
        }
    }
    return db;
}

inline FieldDatabase load_database_file(const std::string& path, const FieldOptions& options = {}) {
    std::ifstream in(path);
    if (!in) throw error(errc::io, "cannot open " + path);
    return load_database(in, options);
}

} // namespace genusgate
