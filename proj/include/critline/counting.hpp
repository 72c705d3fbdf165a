#pragma once

// S(T) = (1/pi) arg zeta(1/2 + iT) by continuous variation along the path
// 2 -> 2 + iT -> 1/2 + iT (arg zeta(2) = 0), and the zero count through
// N(T) = theta(T)/pi + 1 + S(T). Two conventions are supported at ordinates:
// counting gamma <= T (right-continuous) and averaging the jump (half-integer
// values exactly at ordinates).

#include "critline/hardy_z.hpp"

namespace critline {

enum class Definition { Titchmarsh, Selberg };
enum class Side { Left, Right };

struct CountReport {
    double T = 0.0;
    double theta_over_pi = 0.0;
    double s_value = 0.0;  // the S used: S(T), a one-sided limit, or their mean
    double n_raw = 0.0;    // theta/pi + 1 + S before rounding
    long n_int = 0;
    double residual = 0.0; // |n_raw - nearest (half-)integer|
    Definition definition = Definition::Titchmarsh;
    bool near_ordinate = false;
};

struct SelbergValue {
    double value = 0.0;  // (left + right)/2; half-integer exactly at ordinates
    long left = 0;
    long right = 0;
};

double s_of_T(double T, const EvalConfig& cfg = {});

// lim S(T +/- eps): eps starts at 1e-4 and halves until two successive
// values agree to 1e-6; the returned value is linearly extrapolated to
// eps -> 0. ConvergenceError if still unstable at eps = 1e-10.
double s_one_sided(double T, Side side, const EvalConfig& cfg = {});

CountReport n_riemann_von_mangoldt(double T, Definition def = Definition::Titchmarsh,
                                   const EvalConfig& cfg = {});

// The classical smooth count (T/2pi) log(T/2pi) - T/2pi + 7/8 + S(T); its gap
// to n_raw is O(1/T) and useful as a cross-check, not for exact counting.
double n_asymptotic_diagnostic(double T, const EvalConfig& cfg = {});

// Both one-sided counts and their mean, usable at and off ordinates.
SelbergValue selberg_count_at(double T, const EvalConfig& cfg = {});

}  // namespace critline
