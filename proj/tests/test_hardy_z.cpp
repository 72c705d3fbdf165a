#include <cmath>
#include <vector>

#include <doctest.h>

#include "critline/hardy_z.hpp"
#include "oracle_values.hpp"

using critline::hardy_z;

TEST_SUITE("hardy_z") {

TEST_CASE("matches reference values") {
    CHECK_LE(std::abs(hardy_z(5.0).z_value - oracle::kZ5), 1e-12);
    CHECK_LE(std::abs(hardy_z(10.0).z_value - oracle::kZ10), 1e-12);
    CHECK_LE(std::abs(hardy_z(15.0).z_value - oracle::kZ15), 1e-12);
    CHECK_GT(hardy_z(15.0).z_value, 0.0);
}

TEST_CASE("Z(0) = zeta(1/2) < 0") {
    const auto e = hardy_z(0.0);
    CHECK_LE(std::abs(e.z_value - oracle::kZetaHalf), 1e-13);
    CHECK_LT(e.z_value, 0.0);
}

TEST_CASE("Z is tiny at the first ordinate") {
    const auto e = hardy_z(14.134725);
    CHECK_LT(std::abs(e.z_value), 1e-5);
    CHECK_LE(std::abs(e.zeta_modulus - oracle::kZetaAbsAtGamma1), 1e-12);
}

TEST_CASE("evenness") {
    for (const double t : {0.3, 1.0, 5.0, 14.0, 50.0}) {
        CHECK_LE(std::abs(hardy_z(t).z_value - hardy_z(-t).z_value), 1e-10);
    }
}

TEST_CASE("modulus identity and reality on a 10^3 sample of (0, 500]") {
    for (int k = 1; k <= 1000; ++k) {
        const double t = 500.0 * double(k) / 1000.0;
        const auto e = hardy_z(t);
        CHECK_LE(std::abs(std::abs(e.z_value) - e.zeta_modulus), 1e-9);
        CHECK_LE(e.imag_residual, 1e-9);
    }
}

TEST_CASE("no spurious discontinuities: second differences on [0, 100]") {
    const double h = 1e-3;
    const int n = 100000;
    std::vector<double> z(n + 1);
    for (int i = 0; i <= n; ++i) z[i] = hardy_z(h * i).z_value;
    double worst = 0.0;
    for (int i = 1; i < n; ++i) {
        const double dd = (z[i - 1] - 2.0 * z[i] + z[i + 1]) / (h * h);
        worst = std::max(worst, std::abs(dd));
    }
    CHECK_LE(worst, 1e3);
}

}  // TEST_SUITE
