#pragma once

// Sign-change localization of the zeros of Z(t), bisection refinement to a
// ~1e-9 bracket, Gram points, and an ordered catalog that is validated
// against the exact counting formula before it is handed to anyone.

#include <string>
#include <vector>

#include "critline/counting.hpp"

namespace critline {

struct ZeroRecord {
    long index = 0;       // 1-based position among all ordinates gamma_1 <= gamma_2 <= ...
    double gamma = 0.0;   // midpoint of the final bracket
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double z_residual = 0.0;       // |Z(gamma)|
    int assumed_multiplicity = 1;  // every zero at these heights is simple
};

struct ZeroCatalog {
    double t_lo = 0.0;  // the scanned interval (t_lo, t_hi]
    double t_hi = 0.0;
    bool from_origin = false;  // true when N(t_lo) = 0 was verified, so the
                               // catalog effectively covers (0, t_hi]
    std::vector<ZeroRecord> records;

    bool covers(double lo, double hi) const;
    long count_upto(double t) const;          // #{gamma <= t} within the catalog
    double nearest_distance(double t) const;  // +inf when the catalog is empty
};

// Grid scan of Z over (t_lo, t_hi] at the given step, each sign change
// refined by bisection. The zero count found is checked against
// N(t_hi) - N(t_lo); on a mismatch the scan reruns with step/4, at most
// three times, then throws MissedZeroError. Indices are global.
std::vector<ZeroRecord> scan_zeros(double t_lo, double t_hi, double step,
                                   const EvalConfig& cfg = {});

// scan_zeros from just above the origin, wrapped in a coverage-checked catalog.
ZeroCatalog build_catalog(double t_hi, double step = 0.05, const EvalConfig& cfg = {});

// Bisection on [lo, hi] with Z(lo) Z(hi) < 0 (else BracketError) down to a
// bracket of width 1e-9. The returned record has index 0; scanning fills it.
ZeroRecord refine_zero(double lo, double hi, const EvalConfig& cfg = {});

// The unique g >= 7 with theta(g) = n pi, for n >= -1.
double gram_point(long n);

std::string catalog_to_csv(const std::vector<ZeroRecord>& records);
std::string catalog_to_json(const std::vector<ZeroRecord>& records);
std::vector<ZeroRecord> catalog_from_csv(const std::string& text);
std::vector<ZeroRecord> catalog_from_json(const std::string& text);

}  // namespace critline
