#include "critline/zero_finder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <utility>

#include <json.hpp>

#include "critline/format.hpp"
#include "critline/parallel.hpp"

namespace critline {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBracketWidth = 1e-9;

// How far a counting checkpoint must stay from every located zero, and the
// inward offsets tried when the natural endpoint is too close to one.
constexpr double kCheckpointClearance = 5e-3;
constexpr double kCheckpointOffsets[] = {0.0, 0.011, 0.023, 0.037};

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

double distance_to_records(double t, const std::vector<ZeroRecord>& recs) {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& r : recs) d = std::min(d, std::abs(t - r.gamma));
    return d;
}

// N(t) evaluated at t or, when t is unusable (too near a zero, found or not),
// at the closest of a few fixed offsets moved into the scanned range.
std::optional<std::pair<double, long>> count_checkpoint(
    double t, double inward, const std::vector<ZeroRecord>& recs, const EvalConfig& cfg) {
    for (const double off : kCheckpointOffsets) {
        const double cand = t + inward * off;
        if (!(cand > 0.0)) continue;
        if (distance_to_records(cand, recs) < kCheckpointClearance) continue;
        try {
            const CountReport cr = n_riemann_von_mangoldt(cand, Definition::Titchmarsh, cfg);
            return std::make_pair(cand, cr.n_int);
        } catch (const NearZeroError&) {
            continue;  // an unfound zero happens to sit here; try the next offset
        }
    }
    return std::nullopt;
}

std::vector<ZeroRecord> scan_pass(double t_lo, double t_hi, double step,
                                  const EvalConfig& cfg) {
    const long cells = std::max<long>(1, (long)std::ceil((t_hi - t_lo) / step));
    std::vector<double> z(cells + 1);
    parallel_for(z.size(), [&](std::size_t i) {
        const double t = t_lo + (t_hi - t_lo) * double(i) / double(cells);
        z[i] = hardy_z(t, cfg).z_value;
    });

    std::vector<std::pair<double, double>> brackets;
    for (long i = 0; i < cells; ++i) {
        if (sign_of(z[i]) * sign_of(z[i + 1]) < 0) {
            brackets.emplace_back(t_lo + (t_hi - t_lo) * double(i) / double(cells),
                                  t_lo + (t_hi - t_lo) * double(i + 1) / double(cells));
        }
    }

    std::vector<ZeroRecord> recs(brackets.size());
    parallel_for(recs.size(), [&](std::size_t i) {
        recs[i] = refine_zero(brackets[i].first, brackets[i].second, cfg);
    });
    return recs;
}

struct ScanOutcome {
    std::vector<ZeroRecord> records;
    long base = 0;  // N(t_lo), so records get global indices base+1, base+2, ...
};

ScanOutcome scan_validated(double t_lo, double t_hi, double step, const EvalConfig& cfg) {
    if (!(t_lo > 0.0) || !(t_hi > t_lo))
        throw DomainError("scan_zeros: requires 0 < t_lo < t_hi");
    if (!(step > 0.0)) throw DomainError("scan_zeros: requires step > 0");

    std::string last_failure = "no usable counting checkpoints";
    for (int attempt = 0; attempt <= 3; ++attempt, step *= 0.25) {
        auto recs = scan_pass(t_lo, t_hi, step, cfg);

        const auto lo_cp = count_checkpoint(t_lo, +1.0, recs, cfg);
        const auto hi_cp = count_checkpoint(t_hi, -1.0, recs, cfg);
        if (!lo_cp || !hi_cp || !(lo_cp->first < hi_cp->first)) continue;

        const auto in_window = [&](const ZeroRecord& r) {
            return r.gamma > lo_cp->first && r.gamma <= hi_cp->first;
        };
        const long found = (long)std::count_if(recs.begin(), recs.end(), in_window);
        const long expected = hi_cp->second - lo_cp->second;
        if (found != expected) {
            last_failure = "found " + std::to_string(found) + " zeros in (" +
                           format_real(lo_cp->first) + ", " + format_real(hi_cp->first) +
                           "] where the counting formula gives " + std::to_string(expected);
            continue;
        }

        ScanOutcome out;
        long skipped_below = 0;
        for (const auto& r : recs)
            if (r.gamma <= lo_cp->first) ++skipped_below;
        out.base = lo_cp->second - skipped_below;
        out.records = std::move(recs);
        std::sort(out.records.begin(), out.records.end(),
                  [](const ZeroRecord& a, const ZeroRecord& b) { return a.gamma < b.gamma; });
        for (std::size_t i = 0; i < out.records.size(); ++i)
            out.records[i].index = out.base + (long)i + 1;
        return out;
    }
    throw MissedZeroError("scan_zeros: " + last_failure + " after step/4 retries");
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

bool ZeroCatalog::covers(double lo, double hi) const {
    const double effective_lo = from_origin ? 0.0 : t_lo;
    return lo >= effective_lo && hi <= t_hi && lo <= hi;
}

long ZeroCatalog::count_upto(double t) const {
    const auto it = std::upper_bound(
        records.begin(), records.end(), t,
        [](double value, const ZeroRecord& r) { return value < r.gamma; });
    return (long)(it - records.begin());
}

double ZeroCatalog::nearest_distance(double t) const {
    double d = std::numeric_limits<double>::infinity();
    const auto it = std::lower_bound(
        records.begin(), records.end(), t,
        [](const ZeroRecord& r, double value) { return r.gamma < value; });
    if (it != records.end()) d = std::min(d, std::abs(it->gamma - t));
    if (it != records.begin()) d = std::min(d, std::abs(std::prev(it)->gamma - t));
    return d;
}

std::vector<ZeroRecord> scan_zeros(double t_lo, double t_hi, double step,
                                   const EvalConfig& cfg) {
    return scan_validated(t_lo, t_hi, step, cfg).records;
}

ZeroCatalog build_catalog(double t_hi, double step, const EvalConfig& cfg) {
    // gamma_1 > 14, so starting the scan at 0.01 loses nothing; the base
    // count check below turns "scanned from 0.01" into "covers (0, t_hi]".
    const double t_lo = 0.01;
    if (!(t_hi > t_lo)) throw DomainError("build_catalog: requires t_hi > 0.01");
    ScanOutcome out = scan_validated(t_lo, t_hi, step, cfg);

    ZeroCatalog cat;
    cat.t_lo = t_lo;
    cat.t_hi = t_hi;
    cat.from_origin = (out.base == 0);
    cat.records = std::move(out.records);
    return cat;
}

ZeroRecord refine_zero(double lo, double hi, const EvalConfig& cfg) {
    if (!(lo < hi)) throw DomainError("refine_zero: requires lo < hi");
    double z_lo = hardy_z(lo, cfg).z_value;
    const double z_hi = hardy_z(hi, cfg).z_value;
    if (sign_of(z_lo) * sign_of(z_hi) >= 0)
        throw BracketError("refine_zero: Z does not change sign on [" +
                           format_real(lo) + ", " + format_real(hi) + "]");

    while (hi - lo > kBracketWidth) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // double resolution reached
        const double z_mid = hardy_z(mid, cfg).z_value;
        if (sign_of(z_mid) == sign_of(z_lo)) {
            lo = mid;
            z_lo = z_mid;
        } else {
            hi = mid;
        }
    }

    ZeroRecord r;
    r.gamma = 0.5 * (lo + hi);
    r.bracket_lo = lo;
    r.bracket_hi = hi;
    r.z_residual = std::abs(hardy_z(r.gamma, cfg).z_value);
    return r;
}

double gram_point(long n) {
    if (n < -1) throw DomainError("gram_point: defined for n >= -1");
    const double target = double(n) * kPi;

    // theta(7) < -pi <= target and theta increases beyond t = 2 pi, so a
    // doubling search upward always brackets the unique solution.
    double lo = 7.0;
    double hi = 16.0;
    while (theta_exact(hi) < target) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e12) throw ConvergenceError("gram_point: upward bracket search failed");
    }
    while (true) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (theta_exact(mid) < target ? lo : hi) = mid;
    }
    const double g = 0.5 * (lo + hi);
    if (std::abs(theta_exact(g) - target) > 1e-10)
        throw AccuracyError("gram_point: |theta(g) - n pi| > 1e-10 at n = " + std::to_string(n));
    return g;
}

std::string catalog_to_csv(const std::vector<ZeroRecord>& records) {
    std::string out = "index,gamma,z_residual\n";
    for (const auto& r : records) {
        out += std::to_string(r.index);
        out += ',';
        out += format_real(r.gamma);
        out += ',';
        out += format_real(r.z_residual);
        out += '\n';
    }
    return out;
}

std::string catalog_to_json(const std::vector<ZeroRecord>& records) {
    std::string out = "[";
    bool first = true;
    for (const auto& r : records) {
        out += first ? "\n" : ",\n";
        first = false;
        out += "  {\"index\": " + std::to_string(r.index);
        out += ", \"gamma\": " + format_real(r.gamma);
        out += ", \"bracket_lo\": " + format_real(r.bracket_lo);
        out += ", \"bracket_hi\": " + format_real(r.bracket_hi);
        out += ", \"z_residual\": " + format_real(r.z_residual);
        out += ", \"assumed_multiplicity\": " + std::to_string(r.assumed_multiplicity);
        out += "}";
    }
    out += first ? "]\n" : "\n]\n";
    return out;
}

std::vector<ZeroRecord> catalog_from_csv(const std::string& text) {
    const auto lines = split(text, '\n');
    if (lines.empty() || lines[0] != "index,gamma,z_residual")
        throw DomainError("catalog_from_csv: missing or wrong header");
    std::vector<ZeroRecord> records;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        const auto fields = split(lines[i], ',');
        if (fields.size() != 3)
            throw DomainError("catalog_from_csv: bad row '" + lines[i] + "'");
        ZeroRecord r;
        r.index = parse_long(fields[0]);
        r.gamma = parse_real(fields[1]);
        r.z_residual = parse_real(fields[2]);
        r.bracket_lo = r.gamma;  // CSV does not carry brackets
        r.bracket_hi = r.gamma;
        records.push_back(r);
    }
    return records;
}

std::vector<ZeroRecord> catalog_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("catalog_from_json: ") + e.what());
    }
    if (doc.is_object() && doc.contains("zeros")) doc = doc["zeros"];
    if (!doc.is_array()) throw DomainError("catalog_from_json: expected an array of records");

    std::vector<ZeroRecord> records;
    for (const auto& item : doc) {
        ZeroRecord r;
        r.index = item.at("index").get<long>();
        r.gamma = item.at("gamma").get<double>();
        r.bracket_lo = item.value("bracket_lo", r.gamma);
        r.bracket_hi = item.value("bracket_hi", r.gamma);
        r.z_residual = item.at("z_residual").get<double>();
        r.assumed_multiplicity = item.value("assumed_multiplicity", 1);
        records.push_back(r);
    }
    return records;
}

}  // namespace critline
