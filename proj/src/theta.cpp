#include "critline/theta.hpp"

#include <cmath>
#include <numbers>

#include "critline/special_functions.hpp"

namespace critline {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogPi = 1.14472988584940017414;
constexpr double kTailTol = 1e-10;
constexpr double kMaxAbsB3 = 0.04811252243246881;  // max |B3({x})| = sqrt(3)/36
constexpr double kMaxCutoff = 2e7;

// Antiderivatives of the sawtooth used for the tail of the Delta integral:
// Psi1 = B2({x})/2 with Psi1' = psi, Psi2 = B3({x})/6 with Psi2' = Psi1.
double psi_antider1(double x) {
    const double f = x - std::floor(x);
    return (f * f - f + 1.0 / 6.0) / 2.0;
}

double psi_antider2(double x) {
    const double f = x - std::floor(x);
    return ((f - 1.5) * f + 0.5) * f / 6.0;
}

}  // namespace

double theta_exact(double t) {
    if (!std::isfinite(t)) throw DomainError("theta_exact: non-finite t");
    const Cplx lg = log_gamma(Cplx{0.25, 0.5 * t});
    return lg.imag() - 0.5 * t * kLogPi;
}

double theta_main_terms(double t) {
    if (!(t > 0.0)) throw DomainError("theta_main_terms: requires t > 0");
    return 0.5 * t * std::log(0.5 * t / kPi) - 0.5 * t - kPi / 8.0;
}

double psi_sawtooth(double x) {
    if (!std::isfinite(x)) throw DomainError("psi_sawtooth: non-finite x");
    return x - std::floor(x) - 0.5;
}

double delta_correction(double t) {
    if (!(t > 0.0)) throw DomainError("delta_correction: requires t > 0");
    const double a = 0.5 * t;

    // The tail beyond u = U is two integrations by parts:
    //   integral_U^inf psi(u) g(u) du = -Psi1(U) g(U) + Psi2(U) g'(U) + R,
    // with g(u) = 1/((u+1/4)^2 + a^2) and |R| <= max|Psi2| * |g'(U)|, valid
    // because g' is monotone on [U, inf) once U exceeds a. The bound is known
    // before any summation, so the cutoff can be fixed up front.
    double cutoff = std::max(10.0 * t, 1e4);
    auto tail_bound = [&](double U) {
        const double vU = U + 0.25;
        const double g = 1.0 / (vU * vU + a * a);
        return kMaxAbsB3 / 6.0 * (2.0 * vU * g * g) * (0.5 * t);
    };
    while (tail_bound(cutoff) > kTailTol) {
        cutoff *= 2.0;
        if (cutoff > kMaxCutoff)
            throw ConvergenceError("delta_correction: tail bound stuck above 1e-10 at maximum cutoff");
    }
    const long U = (long)cutoff;

    // On [n, n+1) the integrand has the closed antiderivative
    //   (1/2) log(v^2 + a^2) - (m/a) arctan(v/a),  v = u + 1/4, m = n + 3/4,
    // and the arctan difference collapses via the addition formula. Kahan
    // compensation keeps the 1e4..1e7 term sum from drifting.
    double total = 0.0;
    double comp = 0.0;
    for (long n = 0; n < U; ++n) {
        const double v0 = n + 0.25;
        const double v1 = n + 1.25;
        const double m = n + 0.75;
        const double part =
            0.5 * std::log1p((v0 + v1) / (v0 * v0 + a * a)) -
            (m / a) * std::atan(a / (a * a + v0 * v1));
        const double y = part - comp;
        const double s = total + y;
        comp = (s - total) - y;
        total = s;
    }

    const double vU = double(U) + 0.25;
    const double g = 1.0 / (vU * vU + a * a);
    const double gp = -2.0 * vU * g * g;
    total += -psi_antider1(double(U)) * g + psi_antider2(double(U)) * gp;

    const double closed =
        0.25 * t * std::log1p(1.0 / (4.0 * t * t)) + 0.25 * std::atan(1.0 / (2.0 * t));
    return closed + 0.5 * t * total;
}

double theta_asymptotic(double t) {
    if (!(t >= 1.0)) throw DomainError("theta_asymptotic: requires t >= 1");
    return theta_main_terms(t) + 1.0 / (48.0 * t) + 7.0 / (5760.0 * t * t * t);
}

ThetaBreakdown theta_breakdown(double t, ThetaMethod method) {
    if (!(t > 0.0)) throw DomainError("theta_breakdown: requires t > 0");
    ThetaBreakdown b;
    b.t = t;
    b.method = method;
    b.main_terms = theta_main_terms(t);
    switch (method) {
        case ThetaMethod::Exact:
            b.theta_total = theta_exact(t);
            b.delta = b.theta_total - b.main_terms;
            break;
        case ThetaMethod::MainPlusDelta:
            b.delta = delta_correction(t);
            b.theta_total = b.main_terms + b.delta;
            break;
        case ThetaMethod::Asymptotic:
            b.theta_total = theta_asymptotic(t);
            b.delta = b.theta_total - b.main_terms;
            break;
    }
    if (!std::isfinite(b.theta_total))
        throw AccuracyError("theta_breakdown: non-finite total");
    return b;
}

}  // namespace critline
