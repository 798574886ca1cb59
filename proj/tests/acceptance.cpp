// Acceptance runner: one PASS/FAIL line per criterion. `--only N` runs a single one.

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "genusgate/cli.hpp"
#include "property_checks.hpp"
#include "reference_quadratic.hpp"

using namespace genusgate;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

struct Clock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

struct CliRun {
    int code;
    std::string out, err;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string l; std::getline(is, l);) out.push_back(l);
    return out;
}

std::string join(const std::vector<std::string>& items, std::size_t limit = 6) {
    std::string out;
    for (std::size_t i = 0; i < items.size() && i < limit; ++i) out += (i ? "; " : "") + items[i];
    if (items.size() > limit) out += "; ... (" + std::to_string(items.size()) + " total)";
    return out;
}

const std::string db_path = GENUSGATE_TEST_DATA;

Outcome zagier_table() {
    const Clock clock;
    const CliRun r = cli({"zeta-quad", "--disc-max", "574"});
    const double t = clock.seconds();
    std::map<long, std::string> got;
    for (const auto& l : lines_of(r.out)) {
        const auto tab = l.find('\t');
        if (tab != std::string::npos) got[std::stol(l.substr(0, tab))] = l.substr(tab + 1);
    }
    std::vector<std::string> bad;
    for (const auto& row : reference::quadratic_table) {
        const auto it = got.find(row.d);
        // compared as rationals: the printed table writes integers without a denominator
        if (it == got.end() || mpq_class(it->second) != mpq_class(std::string(row.value)))
            bad.push_back("d=" + std::to_string(row.d) + " got " + (it == got.end() ? "nothing" : it->second));
    }
    const bool ok = r.code == 0 && bad.empty() && t < 1.0;
    return {ok, std::to_string(reference::quadratic_table.size()) + " rows checked, " + std::to_string(bad.size()) +
                    " mismatches, " + detail::fixed(t, 3) + " s" + (bad.empty() ? "" : ": " + join(bad))};
}

Outcome bound_table() {
    struct Row {
        unsigned d;
        double C, D;
    };
    // printed values for d = 6..13; the d = 5 row for C disagrees with its own formula
    const Row rows[] = {{6, 7.27, 19.45},  {7, 8.86, 18.06},  {8, 10.28, 17.09}, {9, 11.54, 16.37},
                        {10, 12.66, 15.81}, {11, 13.66, 15.37}, {12, 14.54, 15.01}, {13, 15.34, 14.72}};
    const Clock clock;
    std::vector<std::string> bad;
    for (const auto& row : rows) {
        const double c = odlyzko_C(row.d).mid_double(), d = rootdisc_D(row.d, 212).mid_double();
        if (std::abs(c - row.C) > 0.01 + 1e-9) bad.push_back("C(" + std::to_string(row.d) + ")=" + detail::fixed(c));
        if (std::abs(d - row.D) > 0.01 + 1e-9) bad.push_back("D(" + std::to_string(row.d) + ")=" + detail::fixed(d));
    }
    const double t = clock.seconds();
    return {bad.empty() && t < 1.0, "16 cells within 0.01, " + detail::fixed(t, 3) + " s" + (bad.empty() ? "" : ": " + join(bad))};
}

Outcome degree_cap() {
    const DegreeCap plain = max_degree(212);
    const DegreeCap refined = max_degree(212, oracle::shipped_db().coverage());
    const bool ok = plain.inequality_cap == 12 && refined.inequality_cap == 12 && refined.refined_cap == 10u;
    return {ok, "inequality_cap=" + std::to_string(plain.inequality_cap) + " refined_cap=" +
                    (refined.refined_cap ? std::to_string(*refined.refined_cap) : std::string("-"))};
}

Outcome splitting_tables() {
    struct Row {
        long disc;
        const char* poly;
        u64 p;
        /// printed (e, norm) pairs
        std::vector<std::pair<unsigned, long>> printed;
    };
    const std::vector<Row> rows = {
        {13396, "29,-25,-1,1", 2, {{3, 2}}},
        {1471216, "-4,8,6,-7,-2,1", 2, {{1, 4}, {3, 2}}},
        {1630076, "-12,4,17,-9,-2,1", 2, {{1, 8}, {2, 2}}},
        {1723364, "-11,8,13,-7,-2,1", 2, {{1, 4}, {3, 2}}},
        {17386832, "-2,-4,6,10,-4,-3,1", 2, {{1, 2}, {5, 2}}},
        {22340432, "-1,-5,16,5,-8,-1,1", 2, {{3, 4}}},
        {23556176, "-7,-7,16,5,-8,-1,1", 2, {{3, 4}}},
        {1060708, "-17,10,13,-7,-2,1", 2, {{1, 4}, {3, 2}}},
        {12694016, "-1,8,16,-2,-8,0,1", 2, {{2, 4}, {2, 2}}},
        {15004240, "-17,-26,35,16,-11,-2,1", 2, {{3, 4}}},
        {15378496, "-1,-6,6,8,-5,-2,1", 2, {{2, 8}}},
        {154050496, "1,-1,-9,13,6,-8,-1,1", 2, {{1, 2}, {2, 8}}},
        {1060708, "-17,10,13,-7,-2,1", 3, {{1, 729}}},
        {12694016, "-1,8,16,-2,-8,0,1", 3, {{1, 729}}},
        {15004240, "-17,-26,35,16,-11,-2,1", 3, {{1, 27}, {1, 27}}},
        {15378496, "-1,-6,6,8,-5,-2,1", 3, {{1, 27}, {1, 27}}},
        {154050496, "1,-1,-9,13,6,-8,-1,1", 3, {{1, 27}, {1, 27}}},
        {38000, "95,0,-20,0,1", 2, {{2, 4}}},
    };
    const Clock clock;
    std::vector<std::string> bad;
    for (const auto& row : rows) {
        const CliRun r = cli({"factor", "--poly", row.poly, "--prime", std::to_string(row.p), "--disc",
                              std::to_string(row.disc), "--db", db_path});
        std::multiset<std::pair<unsigned, long>> got, want(row.printed.begin(), row.printed.end());
        std::string shown;
        for (const auto& l : lines_of(r.out)) {
            unsigned e = 0, f = 0;
            long norm = 0;
            if (std::sscanf(l.c_str(), "e=%u f=%u norm=%ld", &e, &f, &norm) == 3) {
                got.insert({e, norm});
                shown += (shown.empty() ? "" : ",") + std::to_string(e) + "^" + std::to_string(norm);
            }
        }
        if (r.code != 0 || got != want)
            bad.push_back(std::to_string(row.disc) + " p=" + std::to_string(row.p) + " computed {" + shown + "}" +
                          (r.code ? " " + r.err : ""));
    }
    const double t = clock.seconds();
    const bool ok = bad.empty() && t < 5.0;
    return {ok, std::to_string(rows.size() - bad.size()) + "/" + std::to_string(rows.size()) + " rows reproduced, " +
                    detail::fixed(t, 3) + " s" + (bad.empty() ? "" : "; differing (e^norm): " + join(bad))};
}

/// Report rows keyed by field id.
std::map<std::string, std::vector<std::string>> report_rows(const std::string& report) {
    std::map<std::string, std::vector<std::string>> rows;
    for (const auto& l : lines_of(report)) {
        if (l.empty() || l[0] == '#' || l.rfind("field\t", 0) == 0) continue;
        rows[l.substr(0, l.find('\t'))] = detail::split(l, '\t');
    }
    return rows;
}

Outcome end_to_end() {
    // higher-degree fields of the published list, with their ratios
    const std::vector<std::pair<std::string, std::string>> listed = {
        {"3:49", "1/84"},          {"3:7825", "211/6"},       {"3:9812", "211/4"},       {"3:13396", "211/3"},
        {"4:725", "1/60"},         {"4:1125", "1/30"},        {"4:2225", "1/10"},        {"4:38000", "211/30"},
        {"4:148889", "211/3"},     {"4:150057", "211/3"},     {"5:1060708", "211/6"},    {"5:1459417", "211/3"},
        {"5:1471216", "211/3"},    {"5:1630076", "211/3"},    {"5:1723364", "211/3"},    {"6:12694016", "211/6"},
        {"6:15004240", "211/6"},   {"6:15378496", "211/6"},   {"6:15700473", "211/6"},   {"6:17386832", "211/3"},
        {"6:17801408", "211/4"},   {"6:18967381", "211/4"},   {"6:22340432", "211/3"},   {"6:23556176", "211/3"},
        {"6:26768537", "211/2"},   {"7:154050496", "211/6"},  {"7:225111553", "211/4"},  {"7:236583241", "211/3"},
        {"7:343318749", "211/2"},
    };
    const Clock clock;
    const CliRun r = cli({"prove", "212", "--db", db_path});
    const double t = clock.seconds();
    const auto rows = report_rows(r.out);
    std::vector<std::string> bad;
    if (r.code != 0) bad.push_back("exit " + std::to_string(r.code));
    if (r.out.find("# status=AllRuledOut") == std::string::npos) bad.push_back("status line");
    const std::set<std::string> sieve_or_parity = {"SieveFailsTwo", "SieveFailsThree", "ParityExcluded", "NormUnavailable",
                                                   "NoFactorization"};
    for (const auto& [id, cols] : rows) {
        if (cols.size() != 6 || cols[3] != "RuledOut") {
            bad.push_back(id + " not ruled out");
            continue;
        }
        for (const auto& kind : detail::split(cols[4], '>'))
            if (!sieve_or_parity.count(kind)) bad.push_back(id + " reason " + kind);
    }
    const auto q = rows.find("1:1");
    if (q == rows.end() || q->second[4] != "NoFactorization") bad.push_back("Q reason");
    for (const auto& [id, ratio] : listed) {
        const auto it = rows.find(id);
        if (it == rows.end()) bad.push_back(id + " missing");
        else if (it->second[1] != ratio) bad.push_back(id + " ratio " + it->second[1]);
    }
    // fields needing the splitting of 2 end on missing norms, parity or 2-torsion
    for (const char* id : {"3:13396", "4:38000", "5:1060708", "5:1471216", "6:12694016", "7:154050496"}) {
        const auto it = rows.find(id);
        if (it != rows.end() && it->second[4].find("NormUnavailable") == std::string::npos &&
            it->second[4].find("ParityExcluded") == std::string::npos)
            bad.push_back(std::string(id) + " reasons " + it->second[4]);
    }
    if (t >= 60) bad.push_back("runtime");
    return {bad.empty(), std::to_string(rows.size()) + " fields ruled out, exit " + std::to_string(r.code) + ", " +
                             detail::fixed(t, 3) + " s" + (bad.empty() ? "" : ": " + join(bad))};
}

Outcome positive_control() {
    const CliRun r = cli({"prove", "2", "--db", db_path});
    const auto rows = report_rows(r.out);
    const auto q = rows.find("1:1");
    bool norm13 = false;
    if (q != rows.end() && q->second.size() == 6) {
        for (const auto& set : detail::split(q->second[5], ';'))
            for (const auto& place : detail::split(set, ','))
                norm13 |= place.rfind("13^1:", 0) == 0;
    }
    const bool ok = r.code == 1 && r.out.find("# status=HasInconclusive") != std::string::npos && norm13;
    return {ok, "exit " + std::to_string(r.code) + ", Q survivors " + (q == rows.end() ? "-" : q->second[5])};
}

Outcome properties() {
    std::vector<std::string> bad;
    auto check = [&](const char* name, const std::vector<std::string>& v) {
        if (!v.empty()) bad.push_back(std::string(name) + ": " + join(v, 3));
    };
    check("(a)", props::degree_sum());
    check("(b)", props::ramified_iff_divides());
    check("(c)", props::tame_divisibility());
    std::size_t compared = 0;
    check("(d)", props::enumeration_matches_oracle(&compared));
    check("(e)", props::e1_divisible_by_ten());
    // (f) the published ratio list against the analytic interval
    struct Z {
        long disc;
        unsigned d;
        long num, den;
    };
    const Z zs[] = {{5, 2, 1, 60},          {49, 3, 1, 84},          {7825, 3, 211, 6},       {9812, 3, 211, 4},
                    {13396, 3, 211, 3},     {725, 4, 1, 60},         {1125, 4, 1, 30},        {2225, 4, 1, 10},
                    {38000, 4, 211, 30},    {148889, 4, 211, 3},     {150057, 4, 211, 3},     {1060708, 5, 211, 6},
                    {1459417, 5, 211, 3},   {1471216, 5, 211, 3},    {1630076, 5, 211, 3},    {1723364, 5, 211, 3},
                    {12694016, 6, 211, 6},  {15004240, 6, 211, 6},   {15378496, 6, 211, 6},   {15700473, 6, 211, 6},
                    {17386832, 6, 211, 3},  {17801408, 6, 211, 4},   {18967381, 6, 211, 4},   {22340432, 6, 211, 3},
                    {23556176, 6, 211, 3},  {26768537, 6, 211, 2},   {154050496, 7, 211, 6},  {225111553, 7, 211, 4},
                    {236583241, 7, 211, 3}, {343318749, 7, 211, 2}};
    std::vector<std::string> zbad;
    for (const auto& z : zs)
        if (!validate_zeta(mpz_class(z.disc), z.d, ZetaRatio(mpq_class(z.num, z.den)))) zbad.push_back(std::to_string(z.disc));
    check("(f)", zbad);
    return {bad.empty(), "(a)-(f) over " + std::to_string(oracle::shipped_db().fields.size()) + " fields, " +
                             std::to_string(compared) + " enumeration comparisons" + (bad.empty() ? "" : ": " + join(bad))};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    int only = 0;
    app.add_option("--only", only, "run a single criterion")->check(CLI::Range(1, 7));
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
        {"quadratic zeta table reproduced exactly", zagier_table},
        {"bound table for d = 6..13 within 0.01", bound_table},
        {"degree cap for genus 212", degree_cap},
        {"splitting tables of 2 and 3", splitting_tables},
        {"genus 212 ruled out over the shipped database", end_to_end},
        {"genus 2 positive control", positive_control},
        {"property suites", properties},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only && static_cast<std::size_t>(only) != i + 1) continue;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all &= o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " | "
                  << o.detail << std::endl;
    }
    return all ? 0 : 1;
}
