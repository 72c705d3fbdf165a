#pragma once

// Complex special functions on the right half plane: principal-branch
// log Gamma, the zeta function by Euler-Maclaurin continuation, and the
// functional-equation factor chi(s) = Gamma((1-s)/2) / Gamma(s/2) * pi^(s-1/2).

#include <complex>

#include "critline/errors.hpp"

namespace critline {

using Cplx = std::complex<double>;

// Tunables for the zeta evaluator. The defaults reach ~1e-13 absolute error
// for Re s >= 0 at the heights this toolkit works at.
struct EvalConfig {
    double target_abs_tol = 1e-12;
    int euler_maclaurin_terms = 8;   // Bernoulli correction terms, in [2, 15]
    double series_cut_factor = 1.0;  // truncation index ~ cut * |Im s|

    void validate() const;  // throws DomainError if a field is out of range
};

// B_2, B_4, ..., B_32 as exact rationals rounded once to double. The Stirling
// series uses the first eight; the zeta remainder bound can reach the last.
extern const double kBernoulli2k[16];

// Principal branch of log Gamma, continuous off the negative real axis.
// Computed by shifting z up to Re z >= 10 and applying the Stirling series.
Cplx log_gamma(Cplx z);

// zeta(s) for Re s >= 0, s != 1, with a rigorous truncation bound that is
// checked against cfg.target_abs_tol before the value is returned.
Cplx zeta(Cplx s, const EvalConfig& cfg = {});

// The factor in zeta(s) = chi(s) zeta(1-s), evaluated in log form so the
// branch is continuous where the toolkit uses it. |chi| = 1 on Re s = 1/2.
Cplx chi(Cplx s);

}  // namespace critline
