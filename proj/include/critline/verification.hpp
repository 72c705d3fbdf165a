#pragma once

// Empirical checks of the sign relation Z(t) = (-1)^(N(t)+1) |zeta(1/2+it)|:
// pointwise sampling against a zero catalog, the two-point corollary
// (equal signs iff equal parity of N), and the parity census of N over the
// ordinates themselves.

#include <optional>
#include <string>
#include <vector>

#include "critline/zero_finder.hpp"

namespace critline {

struct SignCheckRecord {
    double t = 0.0;
    int z_sign = 0;           // sign of Z(t), -1 or +1
    int n_parity = 0;         // N(t) mod 2
    int predicted_sign = 0;   // (-1)^(N(t)+1)
    bool agrees = false;
    double dist_to_nearest_gamma = 0.0;
};

struct ParityStats {
    double T = 0.0;
    long total = 0;       // N(T) = number of catalog zeros up to T
    long even_count = 0;  // #{n <= total : N(gamma_n) even}
    std::optional<double> ratio;  // even_count / total; absent when total = 0
};

// Evaluates equally spaced samples t_k = t_lo + k (t_hi - t_lo)/samples,
// k = 1..samples, skipping any sample within `exclusion` of a catalog zero
// (the sign of Z is meaningless there). The catalog must cover (0, t_hi].
// N(t) is recomputed through the counting formula at every kept sample, not
// read off the catalog, so the two routes stay independently checkable.
std::vector<SignCheckRecord> verify_sign_relation(const ZeroCatalog& catalog,
                                                  double t_lo, double t_hi,
                                                  long samples, double exclusion,
                                                  const EvalConfig& cfg = {});

// True when sign Z(t1) = sign Z(t2) exactly matches parity N(t1) = parity
// N(t2). Throws NearZeroError if either |Z| <= 1e-8.
bool corollary_parity_check(double t1, double t2, const EvalConfig& cfg = {});

// N(gamma_n) parity tally over all catalog zeros up to T. Since
// N(gamma_n) = n here, even_count = floor(total / 2) whenever counting and
// catalog agree; any deviation is a bug in one of them.
ParityStats parity_statistics(const ZeroCatalog& catalog, double T,
                              const EvalConfig& cfg = {});

bool all_agree(const std::vector<SignCheckRecord>& records);

std::string sign_records_csv(const std::vector<SignCheckRecord>& records);

struct VerifyParams {
    double t_lo = 0.0;
    double t_hi = 0.0;
    long samples = 0;
    double exclusion = 0.0;
};

// {"schema_version": 1, "range": ..., "samples": ..., "exclusion": ...,
//  "checked": ..., "skipped": ..., "failures": [...], "pass": ...}
std::string verify_report_json(const VerifyParams& params,
                               const std::vector<SignCheckRecord>& records,
                               long skipped);

}  // namespace critline
