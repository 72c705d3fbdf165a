#include "critline/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace critline {

// Numerators and denominators are exact (von Staudt-Clausen denominators);
// each entry carries one rounding. B_32 exists only to bound the remainder
// when all fifteen correction terms are in use.
const double kBernoulli2k[16] = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
};

void EvalConfig::validate() const {
    if (!(target_abs_tol > 0.0))
        throw DomainError("EvalConfig: target_abs_tol must be positive");
    if (euler_maclaurin_terms < 2 || euler_maclaurin_terms > 15)
        throw DomainError("EvalConfig: euler_maclaurin_terms must lie in [2, 15]");
    if (!(series_cut_factor > 0.0))
        throw DomainError("EvalConfig: series_cut_factor must be positive");
}

namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // log(2 pi) / 2
constexpr double kLogPi = 1.14472988584940017414;

bool near_nonpositive_integer(Cplx z) {
    if (std::abs(z.imag()) > 1e-14) return false;
    const double r = std::nearbyint(z.real());
    return r <= 0.0 && std::abs(z.real() - r) <= 1e-14;
}

// log n for n < kLogTableSize, filled on first use. The table keeps the
// partial sum in zeta() off the libm log path, which dominates otherwise.
constexpr long kLogTableSize = 1 << 16;

const std::vector<double>& log_table() {
    static const std::vector<double> table = [] {
        std::vector<double> t(kLogTableSize);
        for (long n = 1; n < kLogTableSize; ++n) t[n] = std::log(double(n));
        return t;
    }();
    return table;
}

double log_of(long n) {
    if (n < kLogTableSize) return log_table()[n];
    return std::log(double(n));
}

const std::array<double, 33>& factorials() {
    static const std::array<double, 33> f = [] {
        std::array<double, 33> a{};
        a[0] = 1.0;
        for (int i = 1; i < 33; ++i) a[i] = a[i - 1] * i;
        return a;
    }();
    return f;
}

}  // namespace

Cplx log_gamma(Cplx z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("log_gamma: non-finite argument");
    if (near_nonpositive_integer(z))
        throw PoleError("log_gamma: pole at a non-positive integer");

    // Recurrence log Gamma(z) = log Gamma(z+1) - log z, applied upward until
    // the Stirling series converges fast. Each log is principal, and since
    // every z + j stays in the same (upper/lower/right) half plane as z, the
    // accumulated sum keeps the principal branch of the result.
    Cplx shift{0.0, 0.0};
    while (z.real() < 10.0) {
        shift += std::log(z);
        z += 1.0;
    }

    const Cplx zi = 1.0 / z;
    const Cplx zi2 = zi * zi;
    Cplx series{0.0, 0.0};
    Cplx p = zi;
    for (int k = 1; k <= 8; ++k) {
        // B_{2k} / (2k (2k-1) z^{2k-1})
        series += kBernoulli2k[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * p;
        p *= zi2;
    }
    // With Re z >= 10 the ninth term is below 1e-18 in absolute value, so the
    // series needs no runtime error estimate.
    const Cplx out = (z - 0.5) * std::log(z) - z + kHalfLog2Pi + series - shift;
    if (!std::isfinite(out.real()) || !std::isfinite(out.imag()))
        throw AccuracyError("log_gamma: non-finite result");
    return out;
}

Cplx zeta(Cplx s, const EvalConfig& cfg) {
    cfg.validate();
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
        throw DomainError("zeta: non-finite argument");
    if (std::abs(s - Cplx{1.0, 0.0}) < 1e-14)
        throw PoleError("zeta: pole at s = 1");
    if (s.real() < 0.0)
        throw DomainError("zeta: implemented for Re s >= 0 only");

    const long N = std::max<long>(
        10, (long)std::ceil(cfg.series_cut_factor * std::abs(s.imag())));

    // Kahan-compensated partial sum of n^-s for n < N. The compensation
    // keeps rounding growth negligible even at N ~ 1e5.
    Cplx acc{0.0, 0.0};
    Cplx comp{0.0, 0.0};
    for (long n = 1; n < N; ++n) {
        const Cplx term = std::exp(-s * log_of(n));
        const Cplx y = term - comp;
        const Cplx t = acc + y;
        comp = (t - acc) - y;
        acc = t;
    }

    const auto& fact = factorials();
    const Cplx Npow_s = std::exp(-s * log_of(N));  // N^-s
    Cplx res = acc + Npow_s * double(N) / (s - 1.0) + 0.5 * Npow_s;

    // Euler-Maclaurin corrections: B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}.
    const int K = cfg.euler_maclaurin_terms;
    const double NN = double(N) * double(N);
    Cplx poch = s;               // rising factorial (s)_{2k-1}
    Cplx npow = Npow_s * double(N);  // N^{1-s}, then N^{-s-2k+1}
    for (int k = 1; k <= K; ++k) {
        npow /= NN;
        res += kBernoulli2k[k - 1] / fact[2 * k] * poch * npow;
        poch *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    }

    // The truncation error is at most the first omitted term scaled by
    // |s + 2K + 1| / (sigma + 2K + 1); see Edwards 6.4 for the derivation.
    const double bound =
        std::abs(kBernoulli2k[K] / fact[2 * K + 2] * poch * npow / NN) *
        std::abs(s + (2.0 * K + 1.0)) / (s.real() + 2.0 * K + 1.0);
    if (!(bound <= cfg.target_abs_tol))
        throw AccuracyError("zeta: truncation bound " + std::to_string(bound) +
                            " exceeds target tolerance");
    if (!std::isfinite(res.real()) || !std::isfinite(res.imag()))
        throw AccuracyError("zeta: non-finite result");
    return res;
}

Cplx chi(Cplx s) {
    // Poles of Gamma((1-s)/2) sit at s = 1, 3, 5, ...; of 1/Gamma(s/2)
    // nowhere. log_gamma reports the former.
    const Cplx lg_top = log_gamma(0.5 * (1.0 - s));
    const Cplx lg_bot = log_gamma(0.5 * s);
    const Cplx out = std::exp(lg_top - lg_bot + (s - 0.5) * kLogPi);
    if (!std::isfinite(out.real()) || !std::isfinite(out.imag()))
        throw AccuracyError("chi: non-finite result");
    return out;
}

}  // namespace critline
