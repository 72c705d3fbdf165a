#pragma once

// The phase theta(t) from the critical-line functional equation
// zeta(1/2+it) = e^{-2i theta(t)} zeta(1/2-it), computed three ways: exactly
// through log Gamma, as main terms plus a sawtooth-integral correction, and
// by the short Stirling asymptotic. theta is odd and real analytic.

#include "critline/errors.hpp"

namespace critline {

enum class ThetaMethod { Exact, MainPlusDelta, Asymptotic };

struct ThetaBreakdown {
    double t = 0.0;
    double main_terms = 0.0;  // (t/2) log(t/(2 pi)) - t/2 - pi/8
    double delta = 0.0;       // whatever the chosen method adds to the main terms
    double theta_total = 0.0;
    ThetaMethod method = ThetaMethod::Exact;
};

// Im log Gamma(1/4 + it/2) - (t/2) log pi. Valid for all real t.
double theta_exact(double t);

// (t/2) log(t/(2 pi)) - t/2 - pi/8, for t > 0.
double theta_main_terms(double t);

// x - floor(x) - 1/2; equals -1/2 at integers.
double psi_sawtooth(double x);

// The exact correction Delta(t) = theta(t) - main terms, for t > 0, from the
// closed form (t/4) log(1 + 1/(4t^2)) + (1/4) arctan(1/(2t)) plus the
// integral of the sawtooth against a rational kernel. Absolute error <= 1e-10.
double delta_correction(double t);

// Main terms + 1/(48 t) + 7/(5760 t^3); O(t^-5) error, requires t >= 1.
double theta_asymptotic(double t);

ThetaBreakdown theta_breakdown(double t, ThetaMethod method);

}  // namespace critline
