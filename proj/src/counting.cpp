#include "critline/counting.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace critline {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInitialStep = 0.25;
constexpr int kMaxHalvings = 40;
constexpr double kNearZeroAbs = 1e-12;
constexpr double kIntegralityHard = 1e-3;

// |Z(T)| below this is treated as "T sits on an ordinate" for the purpose of
// definition handling. A false positive is harmless: off an ordinate the
// one-sided limits coincide with S(T) and produce the same integer.
constexpr double kOrdinateZ = 1e-6;

// Continuous change of arg zeta along the straight segment [s0, s1], given
// the endpoint values. Halves the segment whenever the principal increment
// reaches pi/2, which is only possible if the true variation is ambiguous.
double arg_change(Cplx s0, Cplx f0, Cplx s1, Cplx f1, int depth, const EvalConfig& cfg) {
    if (std::abs(f1) < kNearZeroAbs)
        throw NearZeroError("s_of_T: |zeta| < 1e-12 on the integration path");
    const double d = std::arg(f1 / f0);
    if (std::abs(d) < kPi / 2.0) return d;
    if (depth >= kMaxHalvings)
        throw StepLimitError("s_of_T: adaptive halving exceeded depth 40");
    const Cplx mid = 0.5 * (s0 + s1);
    const Cplx fm = zeta(mid, cfg);
    return arg_change(s0, f0, mid, fm, depth + 1, cfg) +
           arg_change(mid, fm, s1, f1, depth + 1, cfg);
}

// Walks from `from` to `to` in pieces no longer than kInitialStep, reusing
// each node value as the start of the next piece.
double arg_along(Cplx from, Cplx f_from, Cplx to, const EvalConfig& cfg) {
    const long pieces = std::max<long>(1, (long)std::ceil(std::abs(to - from) / kInitialStep));
    double total = 0.0;
    Cplx prev = from;
    Cplx f_prev = f_from;
    for (long i = 1; i <= pieces; ++i) {
        const double w = double(i) / double(pieces);
        const Cplx cur = from + w * (to - from);
        const Cplx f_cur = zeta(cur, cfg);
        total += arg_change(prev, f_prev, cur, f_cur, 0, cfg);
        prev = cur;
        f_prev = f_cur;
    }
    return total;
}

long round_checked(double n_raw, double* residual) {
    const long n = std::lround(n_raw);
    *residual = std::abs(n_raw - double(n));
    if (*residual > kIntegralityHard)
        throw IntegralityError("count " + std::to_string(n_raw) +
                               " is not within 1e-3 of an integer");
    return n;
}

}  // namespace

double s_of_T(double T, const EvalConfig& cfg) {
    if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("s_of_T: requires finite T > 0");
    cfg.validate();

    const Cplx anchor{2.0, 0.0};
    const Cplx f_anchor = zeta(anchor, cfg);  // real and positive: arg = 0
    double total = arg_along(anchor, f_anchor, Cplx{2.0, T}, cfg);
    total += arg_along(Cplx{2.0, T}, zeta(Cplx{2.0, T}, cfg), Cplx{0.5, T}, cfg);
    return total / kPi;
}

double s_one_sided(double T, Side side, const EvalConfig& cfg) {
    if (!(T > 0.0)) throw DomainError("s_one_sided: requires T > 0");
    const double sgn = (side == Side::Right) ? 1.0 : -1.0;
    double eps = 1e-4;
    double prev = s_of_T(T + sgn * eps, cfg);
    while (true) {
        eps *= 0.5;
        if (eps < 1e-10)
            throw ConvergenceError("s_one_sided: no stabilization down to eps = 1e-10");
        const double cur = s_of_T(T + sgn * eps, cfg);
        if (std::abs(cur - prev) <= 1e-6) {
            // S is linear in eps to first order on either side, so one
            // Richardson step removes the O(eps) offset.
            return 2.0 * cur - prev;
        }
        prev = cur;
    }
}

CountReport n_riemann_von_mangoldt(double T, Definition def, const EvalConfig& cfg) {
    if (!(T > 0.0)) throw DomainError("n_riemann_von_mangoldt: requires T > 0");

    CountReport r;
    r.T = T;
    r.definition = def;
    r.theta_over_pi = theta_exact(T) / kPi;
    r.near_ordinate = std::abs(hardy_z(T, cfg).z_value) < kOrdinateZ;

    if (!r.near_ordinate) {
        r.s_value = s_of_T(T, cfg);
        r.n_raw = r.theta_over_pi + 1.0 + r.s_value;
        r.n_int = round_checked(r.n_raw, &r.residual);
    } else if (def == Definition::Titchmarsh) {
        // N counts gamma <= T, i.e. the right-continuous choice S(T + 0).
        r.s_value = s_one_sided(T, Side::Right, cfg);
        r.n_raw = r.theta_over_pi + 1.0 + r.s_value;
        r.n_int = round_checked(r.n_raw, &r.residual);
    } else {
        double res_l = 0.0, res_r = 0.0;
        const double s_l = s_one_sided(T, Side::Left, cfg);
        const double s_r = s_one_sided(T, Side::Right, cfg);
        const long n_l = round_checked(r.theta_over_pi + 1.0 + s_l, &res_l);
        const long n_r = round_checked(r.theta_over_pi + 1.0 + s_r, &res_r);
        r.s_value = 0.5 * (s_l + s_r);
        r.n_raw = 0.5 * double(n_l + n_r);
        r.n_int = std::lround(r.n_raw);  // ties round away from zero
        r.residual = std::abs(r.n_raw - double(r.n_int));
    }
    return r;
}

double n_asymptotic_diagnostic(double T, const EvalConfig& cfg) {
    if (!(T >= 2.0)) throw DomainError("n_asymptotic_diagnostic: requires T >= 2");
    const double x = T / (2.0 * kPi);
    return x * std::log(x) - x + 7.0 / 8.0 + s_of_T(T, cfg);
}

SelbergValue selberg_count_at(double T, const EvalConfig& cfg) {
    if (!(T > 0.0)) throw DomainError("selberg_count_at: requires T > 0");
    const double th_pi = theta_exact(T) / kPi;
    double res = 0.0;
    SelbergValue v;
    v.left = round_checked(th_pi + 1.0 + s_one_sided(T, Side::Left, cfg), &res);
    v.right = round_checked(th_pi + 1.0 + s_one_sided(T, Side::Right, cfg), &res);
    v.value = 0.5 * double(v.left + v.right);
    return v;
}

}  // namespace critline
