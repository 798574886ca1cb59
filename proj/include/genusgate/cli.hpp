#pragma once

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "genusgate/bounds.hpp"
#include "genusgate/fielddb.hpp"
#include "genusgate/prover.hpp"
#include "genusgate/ramsearch.hpp"
#include "genusgate/version.hpp"
#include "genusgate/zeta.hpp"

#ifndef GENUSGATE_DEFAULT_DB
#define GENUSGATE_DEFAULT_DB "data/fields.tsv"
#endif

namespace genusgate {

namespace detail {

/// GENUSGATE_DB, else the compiled-in path.
inline std::string default_db_path() {
    if (const char* env = std::getenv("GENUSGATE_DB"); env && *env) return env;
    return GENUSGATE_DEFAULT_DB;
}

/// GENUSGATE_SEED, else the library default.
inline u64 seed_from_env() {
    const char* env = std::getenv("GENUSGATE_SEED");
    if (!env || !*env) return default_factor_seed;
    const std::string s(env);
    if (s.find_first_not_of("0123456789") != std::string::npos)
        throw error(errc::invalid_argument, "GENUSGATE_SEED must be a nonnegative integer");
    return std::stoull(s);
}

inline mpz_class parse_integer(const std::string& s, const char* what) {
    mpz_class z;
    if (s.empty() || z.set_str(s, 10) != 0) throw error(errc::invalid_argument, std::string("bad ") + what + " '" + s + "'");
    return z;
}

inline ZetaRatio parse_ratio(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return ZetaRatio(parse_integer(s, "zeta"), 1);
    return ZetaRatio(parse_integer(s.substr(0, slash), "zeta numerator"),
                     parse_integer(s.substr(slash + 1), "zeta denominator"));
}

inline std::string fixed(double x, int digits = 4) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << x;
    return os.str();
}

/// The first database row with generator f (and disc, when given), if the table exists.
inline std::optional<FieldRecord> lookup_row(const Polynomial& f, const std::string& disc_text, const std::string& db_path,
                                             bool db_required) {
    if (db_path.empty()) return std::nullopt;
    std::ifstream in(db_path);
    if (!in) {
        if (db_required) throw error(errc::io, "cannot open " + db_path);
        return std::nullopt;
    }
    const std::optional<mpz_class> disc =
        disc_text.empty() ? std::nullopt : std::optional<mpz_class>(parse_integer(disc_text, "discriminant"));
    for (auto& r : parse_table(in).records)
        if (r.poly == f && (!disc || r.disc == *disc)) return std::move(r);
    return std::nullopt;
}

inline int run_prove(long genus, const std::string& db_path, const std::string& report_path, unsigned workers,
                     u64 cap, std::ostream& out) {
    FieldOptions fo;
    fo.seed = seed_from_env();
    const FieldDatabase db = load_database_file(db_path, fo);
    ProveOptions po;
    po.workers = workers;
    po.enumeration_cap = cap;
    const GlobalVerdict gv = prove_genus(genus, db, po);
    const std::string report = render_report(gv, db);
    if (report_path.empty()) {
        out << report;
    } else {
        std::ofstream f(report_path, std::ios::binary);
        if (!f) throw error(errc::io, "cannot write " + report_path);
        f << report;
        out << global_status_name(gv.status) << "\tgenus=" << genus << "\tfields=" << gv.per_field.size()
            << "\treport=" << report_path << "\n";
    }
    return exit_code(gv.status);
}

inline int run_field_verdict(const Polynomial& f, const std::string& zeta, const std::string& disc, long genus,
                             u64 cap, const std::string& db_path, bool db_required, std::ostream& out) {
    FieldRecord r;
    r.poly = f;
    r.degree = static_cast<unsigned>(std::max(0L, r.poly.degree()));
    r.disc = parse_integer(disc, "discriminant");
    r.zeta = parse_ratio(zeta);
    // overrides for index-divisible primes come from a matching database row
    if (const auto row = lookup_row(f, disc, db_path, db_required)) r.overrides = row->overrides;
    FieldOptions fo;
    fo.seed = seed_from_env();
    const NumberField K = validate_record(r, fo);
    const Verdict v = field_verdict(K, r.zeta, genus, cap);
    out << "field\tzeta\tT\tverdict\treasons\tsurvivors\n";
    out << r.id() << '\t' << r.zeta.to_string() << '\t' << (v.target ? v.target->get_str() : std::string("-")) << '\t'
        << status_name(v.status) << '\t' << v.reason_chain() << '\t';
    if (v.survivors.empty()) out << '-';
    for (std::size_t i = 0; i < v.survivors.size(); ++i) out << (i ? ";" : "") << v.survivors[i].to_string();
    out << '\n';
    for (const auto& reason : v.reasons) out << "# " << reason_name(reason.kind) << ": " << reason.detail << '\n';
    switch (v.status) {
    case VerdictStatus::RuledOut: return 0;
    case VerdictStatus::Inconclusive: return 1;
    case VerdictStatus::Unprocessable: return 2;
    }
    return 2;
}

inline int run_zeta_quad(long d, long disc_max, std::ostream& out) {
    if (disc_max > 0) {
        for (long k = 2; k < disc_max; ++k) {
            if (!is_squarefree(k)) continue;
            const mpq_class z = zagier_quadratic(k);
            out << k << '\t' << z.get_num() << '/' << z.get_den() << '\n';
        }
        return 0;
    }
    const mpq_class z = zagier_quadratic(d);
    out << z.get_num() << '/' << z.get_den() << '\n';
    return 0;
}

inline int run_bounds(long genus, const std::string& db_path, std::ostream& out) {
    std::optional<DatabaseCoverage> coverage;
    if (!db_path.empty()) coverage = load_database_file(db_path).coverage();
    const DegreeCap cap = max_degree(genus, coverage);
    out << "d\tC(d)\tD(d)\tC<=D\n";
    for (unsigned d = 1; d <= cap.inequality_cap + 3; ++d) {
        out << d << '\t' << fixed(odlyzko_C(d).lo_double()) << '\t' << fixed(rootdisc_D(d, genus).hi_double()) << '\t'
            << (odlyzko_admits(d, genus) ? "yes" : "no") << '\n';
    }
    out << "inequality_cap\t" << cap.inequality_cap << '\n';
    out << "refined_cap\t" << (cap.refined_cap ? std::to_string(*cap.refined_cap) : std::string("-")) << '\n';
    return 0;
}

inline int run_factor(const Polynomial& f, u64 p, const std::string& disc_text, const std::string& db_path,
                      bool db_required, std::ostream& out) {
    mpz_class disc;
    OverrideMap overrides;
    std::string source;
    // a database row with the same generator supplies disc and overrides
    if (const auto row = lookup_row(f, disc_text, db_path, db_required)) {
        disc = row->disc;
        overrides = row->override_map();
        source = "database";
    } else if (!disc_text.empty()) {
        disc = parse_integer(disc_text, "discriminant");
        source = "argument";
    } else {
        disc = poly_discriminant(f);
        source = "polynomial";
    }
    FieldOptions fo;
    fo.seed = seed_from_env();
    const NumberField K = make_field(f, disc, overrides, fo);
    const bool clean = dedekind_test(K, p);
    const auto shapes = splitting_type(K, p);
    out << "# field " << K.id() << " disc-from=" << source << " index=" << K.index().get_str() << " p=" << p
        << " splitting-from=" << (clean ? "dedekind" : "override") << '\n';
    for (const auto& s : shapes) out << "e=" << s.e << " f=" << s.f << " norm=" << s.norm().get_str() << '\n';
    return 0;
}

inline int run_validate_db(const std::string& path, std::ostream& out) {
    const FieldDatabase db = load_database_file(path, FieldOptions{seed_from_env()});
    std::size_t unverified = 0;
    for (const auto& K : db.fields) unverified += !K.irreducibility_verified();
    out << "ok\trecords=" << db.fields.size() << "\tirreducibility-unverified=" << unverified << '\n';
    return 0;
}

} // namespace detail

/// Entry point for the command-line tool. args excludes the program name.
/// Exit codes: 0 AllRuledOut / success, 1 HasInconclusive, 2 HasUnprocessable or error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"genusgate: genus obstructions for arithmetic congruence surfaces", "genusgate"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version);

    long genus = 0;
    std::string db_path = detail::default_db_path(), report_path;
    unsigned workers = 0;
    u64 cap = default_enumeration_cap;
    auto* prove = app.add_subcommand("prove", "decide a genus against the field database");
    prove->add_option("genus", genus, "target genus")->required()->check(CLI::Range(2L, 1L << 40));
    prove->add_option("--db", db_path, "field table (TSV)");
    prove->add_option("--report", report_path, "write the report here instead of stdout");
    prove->add_option("--workers", workers, "worker threads (0 = hardware)");
    prove->add_option("--cap", cap, "enumeration cap on target products");

    std::string poly, zeta, disc;
    auto* fv = app.add_subcommand("field-verdict", "verdict for a single field");
    fv->add_option("--poly", poly, "ascending coefficients c0,c1,...")->required();
    fv->add_option("--zeta", zeta, "|zeta_K(-1)| / 2^(d-1) as num/den")->required();
    fv->add_option("--disc", disc, "field discriminant")->required();
    fv->add_option("--genus", genus, "target genus")->required()->check(CLI::Range(2L, 1L << 40));
    fv->add_option("--cap", cap, "enumeration cap on target products");
    std::string verdict_db = detail::default_db_path();
    auto* fv_db = fv->add_option("--db", verdict_db, "field table supplying overrides");

    long quad_d = 0, disc_max = 0;
    auto* zq = app.add_subcommand("zeta-quad", "Zagier values zeta_K(-1)/2 for real quadratic fields");
    auto* zq_d = zq->add_option("d", quad_d, "squarefree d >= 2");
    auto* zq_max = zq->add_option("--disc-max", disc_max, "list every squarefree 2 <= d < N");
    zq_d->excludes(zq_max);
    zq_max->excludes(zq_d);

    std::string bounds_db;
    auto* bd = app.add_subcommand("bounds", "Odlyzko and root-discriminant bounds, degree caps");
    bd->add_option("genus", genus, "target genus")->required()->check(CLI::Range(2L, 1L << 40));
    bd->add_option("--db", bounds_db, "field table for the refined cap");

    u64 prime = 0;
    std::string factor_db = detail::default_db_path();
    auto* fc = app.add_subcommand("factor", "splitting of a rational prime");
    CLI::Option* fc_db = nullptr;
    fc->add_option("--poly", poly, "ascending coefficients c0,c1,...")->required();
    fc->add_option("--prime", prime, "rational prime")->required();
    fc->add_option("--disc", disc, "field discriminant (default: database row, else the polynomial's)");
    fc_db = fc->add_option("--db", factor_db, "field table supplying overrides");

    std::string validate_path;
    auto* vd = app.add_subcommand("validate-db", "parse and validate a field table");
    vd->add_option("path", validate_path, "field table (TSV)")->required();

    std::vector<const char*> argv{"genusgate"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (prove->parsed()) return detail::run_prove(genus, db_path, report_path, workers, cap, out);
        if (fv->parsed()) return detail::run_field_verdict(parse_coeffs(poly), zeta, disc, genus, cap, verdict_db, fv_db->count() > 0, out);
        if (zq->parsed()) {
            if (!zq_d->count() && !zq_max->count()) {
                err << "zeta-quad needs d or --disc-max N\n" << zq->help();
                return 2;
            }
            return detail::run_zeta_quad(quad_d, disc_max, out);
        }
        if (bd->parsed()) return detail::run_bounds(genus, bounds_db, out);
        if (fc->parsed()) return detail::run_factor(parse_coeffs(poly), prime, disc, factor_db, fc_db->count() > 0, out);
        if (vd->parsed()) return detail::run_validate_db(validate_path, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace genusgate
