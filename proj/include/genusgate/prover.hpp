#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "genusgate/bounds.hpp"
#include "genusgate/fielddb.hpp"
#include "genusgate/ramsearch.hpp"
#include "genusgate/version.hpp"

namespace genusgate {

enum class GlobalStatus { AllRuledOut, HasInconclusive, HasUnprocessable };

inline const char* global_status_name(GlobalStatus s) {
    switch (s) {
    case GlobalStatus::AllRuledOut: return "AllRuledOut";
    case GlobalStatus::HasInconclusive: return "HasInconclusive";
    case GlobalStatus::HasUnprocessable: return "HasUnprocessable";
    }
    return "?";
}

/// 0, 1, 2 for AllRuledOut, HasInconclusive, HasUnprocessable.
inline int exit_code(GlobalStatus s) { return static_cast<int>(s); }

struct FieldOutcome {
    std::size_t record;
    Verdict verdict;
};

struct GlobalVerdict {
    long genus = 0;
    DegreeCap cap;
    /// Indices into the database, in database order.
    std::vector<FieldOutcome> per_field;
    std::size_t excluded = 0;
    GlobalStatus status = GlobalStatus::AllRuledOut;
    bool completeness_assumed = false;
    std::set<unsigned> complete_degrees;
};

struct ProveOptions {
    unsigned workers = 0;
    u64 enumeration_cap = default_enumeration_cap;
};

/// Per-field verdicts for every database field within the degree cap and the
/// root-discriminant bound; results are merged in database order.
inline GlobalVerdict prove_genus(long g, const FieldDatabase& db, const ProveOptions& options = {}) {
    if (g < 2) throw error(errc::invalid_argument, "genus must be at least 2");
    GlobalVerdict gv;
    gv.genus = g;
    gv.cap = max_degree(g, db.coverage());
    gv.complete_degrees = db.table.complete_degrees;
    gv.completeness_assumed = !db.table.complete_degrees.empty();

    const unsigned cap = gv.cap.effective();
    std::vector<std::size_t> work;
    for (std::size_t i = 0; i < db.fields.size(); ++i) {
        const NumberField& K = db.fields[i];
        if (K.degree() <= cap && within_rootdisc(K.disc(), K.degree(), g)) {
            work.push_back(i);
        } else {
            ++gv.excluded;
        }
    }

    std::vector<Verdict> results(work.size());
    std::vector<std::exception_ptr> failures(work.size());
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < work.size();) {
            const std::size_t i = work[k];
            try {
                results[k] = field_verdict(db.fields[i], db.table.records[i].zeta, g, options.enumeration_cap);
            } catch (...) {
                failures[k] = std::current_exception();
            }
        }
    };
    unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, work.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();

    bool inconclusive = false, unprocessable = false;
    for (std::size_t k = 0; k < work.size(); ++k) {
        if (failures[k]) {
            // an unexpected error never becomes a verdict of nonexistence
            Verdict v;
            v.status = VerdictStatus::Unprocessable;
            try {
                std::rethrow_exception(failures[k]);
            } catch (const std::exception& e) {
                v.reasons.push_back({ReasonKind::Error, e.what()});
            }
            results[k] = std::move(v);
        }
        inconclusive |= results[k].status == VerdictStatus::Inconclusive;
        unprocessable |= results[k].status == VerdictStatus::Unprocessable;
        gv.per_field.push_back({work[k], std::move(results[k])});
    }
    gv.status = unprocessable  ? GlobalStatus::HasUnprocessable
                : inconclusive ? GlobalStatus::HasInconclusive
                               : GlobalStatus::AllRuledOut;
    return gv;
}

/// TSV report: '#' header lines, then one row per considered field.
inline std::string render_report(const GlobalVerdict& gv, const FieldDatabase& db) {
    std::ostringstream os;
    os << "# genusgate " << version << "\tgenus=" << gv.genus << "\tinequality_cap=" << gv.cap.inequality_cap
       << "\trefined_cap=" << (gv.cap.refined_cap ? std::to_string(*gv.cap.refined_cap) : std::string("-"))
       << "\tcompleteness=";
    if (gv.completeness_assumed) {
        os << "assumed(degrees ";
        bool first = true;
        for (unsigned d : gv.complete_degrees) {
            os << (first ? "" : ",") << d;
            first = false;
        }
        os << ")";
    } else {
        os << "not-asserted";
    }
    os << "\tfields=" << gv.per_field.size() << "\texcluded=" << gv.excluded << "\n";
    os << "# status=" << global_status_name(gv.status)
       << "\tconditional on the ingested zeta values for degree >= 3";
    if (gv.status == GlobalStatus::AllRuledOut)
        os << (gv.completeness_assumed ? "\tconclusion: no field in scope admits genus " + std::to_string(gv.genus) +
                                             ", given database completeness"
                                       : "\tconclusion: listed fields only; completeness not asserted");
    os << "\n";
    os << "field\tzeta\tT\tverdict\treasons\tsurvivors\n";
    for (const auto& [index, v] : gv.per_field) {
        const FieldRecord& r = db.table.records[index];
        os << r.id() << '\t' << r.zeta.to_string() << '\t' << (v.target ? v.target->get_str() : std::string("-"))
           << '\t' << status_name(v.status) << '\t' << v.reason_chain() << '\t';
        if (v.survivors.empty()) {
            os << '-';
        } else {
            for (std::size_t i = 0; i < v.survivors.size(); ++i) os << (i ? ";" : "") << v.survivors[i].to_string();
        }
        os << '\n';
    }
    return os.str();
}

} // namespace genusgate
