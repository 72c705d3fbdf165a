#include "critline/verification.hpp"

#include <algorithm>
#include <cmath>

#include "critline/format.hpp"
#include "critline/parallel.hpp"

namespace critline {

namespace {

constexpr double kCorollaryMinZ = 1e-8;

int predicted_sign_for(long n) {
    // (-1)^(N+1): even N predicts a negative Z, odd N a positive one.
    return (n % 2 == 0) ? -1 : +1;
}

std::string record_json(const SignCheckRecord& r) {
    std::string out = "{\"t\": " + format_real(r.t);
    out += ", \"z_sign\": " + std::to_string(r.z_sign);
    out += ", \"n_parity\": " + std::to_string(r.n_parity);
    out += ", \"predicted_sign\": " + std::to_string(r.predicted_sign);
    out += std::string(", \"agrees\": ") + (r.agrees ? "true" : "false");
    out += ", \"dist_to_nearest_gamma\": " + format_real(r.dist_to_nearest_gamma);
    out += "}";
    return out;
}

}  // namespace

std::vector<SignCheckRecord> verify_sign_relation(const ZeroCatalog& catalog,
                                                  double t_lo, double t_hi,
                                                  long samples, double exclusion,
                                                  const EvalConfig& cfg) {
    if (!(exclusion >= 1e-4))
        throw DomainError("verify_sign_relation: exclusion radius must be >= 1e-4");
    if (samples < 1) throw DomainError("verify_sign_relation: samples must be >= 1");
    if (!(t_lo >= 0.0) || !(t_hi > t_lo))
        throw DomainError("verify_sign_relation: requires 0 <= t_lo < t_hi");
    if (!catalog.covers(0.0, t_hi))
        throw CatalogGapError("verify_sign_relation: catalog does not cover (0, " +
                              format_real(t_hi) + "]");

    struct Sample {
        double t;
        double dist;
    };
    std::vector<Sample> kept;
    kept.reserve(samples);
    for (long k = 1; k <= samples; ++k) {
        const double t = t_lo + (t_hi - t_lo) * double(k) / double(samples);
        const double dist = catalog.nearest_distance(t);
        if (dist >= exclusion) kept.push_back({t, dist});
    }

    std::vector<SignCheckRecord> records(kept.size());
    parallel_for(kept.size(), [&](std::size_t i) {
        const double t = kept[i].t;
        const ZEvaluation ze = hardy_z(t, cfg);
        const CountReport cr = n_riemann_von_mangoldt(t, Definition::Titchmarsh, cfg);
        SignCheckRecord& r = records[i];
        r.t = t;
        r.z_sign = ze.z_value >= 0.0 ? +1 : -1;
        r.n_parity = (int)(cr.n_int % 2);
        r.predicted_sign = predicted_sign_for(cr.n_int);
        r.agrees = (r.z_sign == r.predicted_sign);
        r.dist_to_nearest_gamma = kept[i].dist;
    });

    // Chunked workers fill disjoint slots of an index-ordered vector, so the
    // result is already sorted by t; keep the sort as a cheap guarantee.
    std::sort(records.begin(), records.end(),
              [](const SignCheckRecord& a, const SignCheckRecord& b) { return a.t < b.t; });
    return records;
}

bool corollary_parity_check(double t1, double t2, const EvalConfig& cfg) {
    const ZEvaluation z1 = hardy_z(t1, cfg);
    const ZEvaluation z2 = hardy_z(t2, cfg);
    if (std::abs(z1.z_value) <= kCorollaryMinZ || std::abs(z2.z_value) <= kCorollaryMinZ)
        throw NearZeroError("corollary_parity_check: |Z| <= 1e-8 at an input point");

    const long n1 = n_riemann_von_mangoldt(t1, Definition::Titchmarsh, cfg).n_int;
    const long n2 = n_riemann_von_mangoldt(t2, Definition::Titchmarsh, cfg).n_int;
    const bool same_sign = (z1.z_value > 0.0) == (z2.z_value > 0.0);
    const bool same_parity = (n1 % 2) == (n2 % 2);
    return same_sign == same_parity;
}

ParityStats parity_statistics(const ZeroCatalog& catalog, double T, const EvalConfig& cfg) {
    if (!(T > 0.0)) throw DomainError("parity_statistics: requires T > 0");
    if (!catalog.covers(0.0, T))
        throw CatalogGapError("parity_statistics: catalog does not cover (0, " +
                              format_real(T) + "]");

    const long total = catalog.count_upto(T);
    std::vector<long> counts(total);
    parallel_for((std::size_t)total, [&](std::size_t i) {
        // Exactly at an ordinate the counting module falls back to the
        // right-sided limit, which is what "count gamma <= T" needs.
        counts[i] = n_riemann_von_mangoldt(catalog.records[i].gamma,
                                           Definition::Titchmarsh, cfg)
                        .n_int;
    });

    ParityStats st;
    st.T = T;
    st.total = total;
    st.even_count = std::count_if(counts.begin(), counts.end(),
                                  [](long n) { return n % 2 == 0; });
    if (total > 0) st.ratio = double(st.even_count) / double(total);
    return st;
}

bool all_agree(const std::vector<SignCheckRecord>& records) {
    return std::all_of(records.begin(), records.end(),
                       [](const SignCheckRecord& r) { return r.agrees; });
}

std::string sign_records_csv(const std::vector<SignCheckRecord>& records) {
    std::string out = "t,z_sign,n_parity,predicted_sign,agrees,dist_to_nearest_gamma\n";
    for (const auto& r : records) {
        out += format_real(r.t);
        out += ',';
        out += std::to_string(r.z_sign);
        out += ',';
        out += std::to_string(r.n_parity);
        out += ',';
        out += std::to_string(r.predicted_sign);
        out += ',';
        out += r.agrees ? "true" : "false";
        out += ',';
        out += format_real(r.dist_to_nearest_gamma);
        out += '\n';
    }
    return out;
}

std::string verify_report_json(const VerifyParams& params,
                               const std::vector<SignCheckRecord>& records,
                               long skipped) {
    std::string out = "{\n";
    out += "  \"schema_version\": 1,\n";
    out += "  \"range\": {\"from\": " + format_real(params.t_lo) +
           ", \"to\": " + format_real(params.t_hi) + "},\n";
    out += "  \"samples\": " + std::to_string(params.samples) + ",\n";
    out += "  \"exclusion\": " + format_real(params.exclusion) + ",\n";
    out += "  \"checked\": " + std::to_string(records.size()) + ",\n";
    out += "  \"skipped\": " + std::to_string(skipped) + ",\n";
    out += "  \"failures\": [";
    bool first = true;
    for (const auto& r : records) {
        if (r.agrees) continue;
        out += first ? "\n    " : ",\n    ";
        first = false;
        out += record_json(r);
    }
    out += first ? "],\n" : "\n  ],\n";
    out += std::string("  \"pass\": ") + (all_agree(records) ? "true" : "false") + "\n";
    out += "}\n";
    return out;
}

}  // namespace critline
