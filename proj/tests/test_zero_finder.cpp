#include <cmath>
#include <cstdlib>

#include <doctest.h>

#include "critline/hardy_z.hpp"
#include "critline/theta.hpp"
#include "critline/zero_finder.hpp"
#include "oracle_values.hpp"

using critline::build_catalog;
using critline::gram_point;
using critline::refine_zero;
using critline::scan_zeros;

namespace {
constexpr double kPi = 3.14159265358979323846;

const critline::ZeroCatalog& catalog120() {
    static const critline::ZeroCatalog cat = build_catalog(120.0);
    return cat;
}
}

TEST_SUITE("zero_finder") {

TEST_CASE("scan finds the first three ordinates") {
    const auto recs = scan_zeros(1.0, 30.0, 0.05);
    REQUIRE(recs.size() == 3);
    CHECK_LE(std::abs(recs[0].gamma - oracle::kGamma1), 1e-6);
    CHECK_LE(std::abs(recs[1].gamma - oracle::kGamma2), 1e-6);
    CHECK_LE(std::abs(recs[2].gamma - oracle::kGamma3), 1e-6);
    CHECK(recs[0].index == 1);
    CHECK(recs[1].index == 2);
    CHECK(recs[2].index == 3);
}

TEST_CASE("scan of a zero-free range is empty") {
    CHECK(scan_zeros(1.0, 14.0, 0.05).empty());
}

TEST_CASE("scan indices are global even when the range starts high") {
    const auto recs = scan_zeros(20.0, 30.0, 0.05);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].index == 2);  // gamma_2 = 21.02..., gamma_1 lies below the range
    CHECK(recs[1].index == 3);
    CHECK_LE(std::abs(recs[0].gamma - oracle::kGamma2), 1e-6);
}

TEST_CASE("scan argument validation") {
    CHECK_THROWS_AS(scan_zeros(0.0, 30.0, 0.05), critline::DomainError);
    CHECK_THROWS_AS(scan_zeros(5.0, 5.0, 0.05), critline::DomainError);
    CHECK_THROWS_AS(scan_zeros(1.0, 30.0, 0.0), critline::DomainError);
}

TEST_CASE("refinement lands on the reference digits") {
    CHECK_LE(std::abs(refine_zero(14.1, 14.2).gamma - oracle::kGamma1), 1e-8);
    CHECK_LE(std::abs(refine_zero(21.0, 21.1).gamma - oracle::kGamma2), 1e-8);
    CHECK_LE(std::abs(refine_zero(25.0, 25.1).gamma - oracle::kGamma3), 1e-8);
}

TEST_CASE("refinement rejects a non-straddling bracket") {
    CHECK_THROWS_AS(refine_zero(15.0, 16.0), critline::BracketError);
    CHECK_THROWS_AS(refine_zero(16.0, 15.0), critline::DomainError);
}

TEST_CASE("record invariants over the catalog") {
    const auto& cat = catalog120();
    REQUIRE_FALSE(cat.records.empty());
    double prev_gamma = 0.0;
    long expected_index = 1;
    for (const auto& r : cat.records) {
        CHECK(r.index == expected_index++);
        CHECK_GT(r.gamma, prev_gamma);
        prev_gamma = r.gamma;
        CHECK_LE(r.bracket_hi - r.bracket_lo, 1e-9);
        CHECK_LT(critline::hardy_z(r.bracket_lo).z_value *
                     critline::hardy_z(r.bracket_hi).z_value,
                 0.0);
        CHECK_LE(r.z_residual, 1e-7);
        CHECK(r.assumed_multiplicity == 1);
    }
}

TEST_CASE("catalog agrees with the counting formula") {
    const auto& cat = catalog120();
    CHECK((long)cat.records.size() ==
          critline::n_riemann_von_mangoldt(120.0).n_int);
    CHECK(cat.from_origin);
    CHECK(cat.covers(0.0, 120.0));
    CHECK_FALSE(cat.covers(0.0, 121.0));
}

TEST_CASE("signs of Z alternate between consecutive zeros") {
    // On (gamma_n, gamma_n+1) the count is N = n, so the sign relation gives
    // sign (-1)^(n+1) there; n = 0 covers the leading segment (0, gamma_1).
    const auto& recs = catalog120().records;
    CHECK_LT(critline::hardy_z(0.5 * recs.front().gamma).z_value, 0.0);
    for (std::size_t i = 0; i + 1 < recs.size(); ++i) {
        const double mid = 0.5 * (recs[i].gamma + recs[i + 1].gamma);
        const double expected = (recs[i].index % 2 == 0) ? -1.0 : 1.0;
        CHECK_GT(expected * critline::hardy_z(mid).z_value, 0.0);
    }
}

TEST_CASE("scans are deterministic, independent of thread count") {
    const auto a = scan_zeros(1.0, 60.0, 0.05);
    setenv("HARDY_SIGN_THREADS", "3", 1);
    const auto b = scan_zeros(1.0, 60.0, 0.05);
    setenv("HARDY_SIGN_THREADS", "1", 1);
    const auto c = scan_zeros(1.0, 60.0, 0.05);
    unsetenv("HARDY_SIGN_THREADS");
    REQUIRE(a.size() == b.size());
    REQUIRE(a.size() == c.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].gamma == b[i].gamma);  // bitwise, not approximate
        CHECK(a[i].gamma == c[i].gamma);
        CHECK(a[i].z_residual == b[i].z_residual);
    }
}

TEST_CASE("gram points match references and the defining equation") {
    CHECK_LE(std::abs(gram_point(0) - oracle::kGram0), 1e-9);
    CHECK_LE(std::abs(gram_point(-1) - oracle::kGramMinus1), 1e-9);
    CHECK_LE(std::abs(gram_point(10) - oracle::kGram10), 1e-9);
    for (const long n : {-1L, 0L, 7L, 50L, 100L}) {
        CHECK_LE(std::abs(critline::theta_exact(gram_point(n)) - double(n) * kPi), 1e-10);
    }
    CHECK_THROWS_AS(gram_point(-2), critline::DomainError);
}

TEST_CASE("gram points are strictly increasing") {
    double prev = gram_point(0);
    for (long n = 1; n <= 100; ++n) {
        const double cur = gram_point(n);
        CHECK_GT(cur, prev);
        prev = cur;
    }
}

TEST_CASE("CSV round-trip is a fixed point of write/read") {
    // 15 significant digits land within 1 ulp of the source double on the
    // first parse; from then on, text and values are exactly stable because
    // a <= 15-digit decimal survives the decimal -> double -> decimal cycle.
    const auto& recs = catalog120().records;
    const std::string text = critline::catalog_to_csv(recs);
    const auto parsed = critline::catalog_from_csv(text);
    REQUIRE(parsed.size() == recs.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(parsed[i].index == recs[i].index);
        CHECK_LE(std::abs(parsed[i].gamma - recs[i].gamma), 1e-12);
    }
    CHECK(critline::catalog_to_csv(parsed) == text);
    const auto reparsed = critline::catalog_from_csv(critline::catalog_to_csv(parsed));
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(reparsed[i].gamma == parsed[i].gamma);  // bitwise from here on
        CHECK(reparsed[i].z_residual == parsed[i].z_residual);
    }
}

TEST_CASE("JSON round-trip carries every field and stabilizes") {
    const auto& recs = catalog120().records;
    const std::string text = critline::catalog_to_json(recs);
    const auto parsed = critline::catalog_from_json(text);
    REQUIRE(parsed.size() == recs.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(parsed[i].index == recs[i].index);
        CHECK_LE(std::abs(parsed[i].gamma - recs[i].gamma), 1e-12);
        CHECK_LE(std::abs(parsed[i].bracket_lo - recs[i].bracket_lo), 1e-12);
        CHECK_LE(std::abs(parsed[i].bracket_hi - recs[i].bracket_hi), 1e-12);
        CHECK(parsed[i].assumed_multiplicity == recs[i].assumed_multiplicity);
    }
    CHECK(critline::catalog_to_json(parsed) == text);
    const auto reparsed = critline::catalog_from_json(critline::catalog_to_json(parsed));
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(reparsed[i].gamma == parsed[i].gamma);
        CHECK(reparsed[i].bracket_lo == parsed[i].bracket_lo);
    }
}

}  // TEST_SUITE
