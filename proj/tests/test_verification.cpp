#include <cmath>
#include <random>

#include <doctest.h>

#include "critline/verification.hpp"

using critline::corollary_parity_check;
using critline::parity_statistics;
using critline::verify_sign_relation;

namespace {
const critline::ZeroCatalog& catalog120() {
    static const critline::ZeroCatalog cat = critline::build_catalog(120.0);
    return cat;
}
}

TEST_SUITE("verification") {

TEST_CASE("below the first zero: N = 0 and Z < 0 throughout") {
    const auto recs = verify_sign_relation(catalog120(), 0.1, 14.0, 50, 1e-3);
    REQUIRE_FALSE(recs.empty());
    for (const auto& r : recs) {
        CHECK(r.n_parity == 0);
        CHECK(r.predicted_sign == -1);
        CHECK(r.z_sign == -1);
        CHECK(r.agrees);
    }
}

TEST_CASE("between the first two zeros: N = 1 and Z > 0") {
    const auto recs = verify_sign_relation(catalog120(), 14.2, 21.0, 50, 1e-3);
    REQUIRE_FALSE(recs.empty());
    for (const auto& r : recs) {
        CHECK(r.n_parity == 1);
        CHECK(r.predicted_sign == 1);
        CHECK(r.agrees);
    }
}

TEST_CASE("sign relation and catalog parity agree across (0, 120]") {
    const auto recs = verify_sign_relation(catalog120(), 0.0, 120.0, 300, 1e-3);
    for (const auto& r : recs) {
        CHECK(r.agrees);
        CHECK(r.agrees == (r.z_sign == r.predicted_sign));
        CHECK_GE(r.dist_to_nearest_gamma, 1e-3);
        // N recomputed through the counting path must match the catalog.
        CHECK(r.n_parity == (int)(catalog120().count_upto(r.t) % 2));
    }
}

TEST_CASE("samples inside the exclusion radius are skipped, not emitted") {
    const double g1 = catalog120().records.at(0).gamma;
    const auto recs = verify_sign_relation(catalog120(), g1 - 0.01, g1 + 0.01, 20, 1e-3);
    CHECK_LT(recs.size(), 20u);
    for (const auto& r : recs) CHECK_GE(r.dist_to_nearest_gamma, 1e-3);
}

TEST_CASE("argument and coverage guards") {
    CHECK_THROWS_AS(verify_sign_relation(catalog120(), 0.1, 200.0, 10, 1e-3),
                    critline::CatalogGapError);
    CHECK_THROWS_AS(verify_sign_relation(catalog120(), 0.1, 100.0, 10, 1e-5),
                    critline::DomainError);
    CHECK_THROWS_AS(verify_sign_relation(catalog120(), 0.1, 100.0, 0, 1e-3),
                    critline::DomainError);

    critline::ZeroCatalog headless;  // covers (15, 30] only: no origin anchor
    headless.t_lo = 15.0;
    headless.t_hi = 30.0;
    headless.from_origin = false;
    CHECK_THROWS_AS(verify_sign_relation(headless, 16.0, 29.0, 10, 1e-3),
                    critline::CatalogGapError);
}

TEST_CASE("two-point corollary on reference pairs") {
    CHECK(corollary_parity_check(5.0, 10.0));   // both N = 0, both Z < 0
    CHECK(corollary_parity_check(5.0, 15.0));   // parities 0/1, opposite signs
    CHECK(corollary_parity_check(7.3, 7.3));    // reflexive
    CHECK_THROWS_AS(corollary_parity_check(catalog120().records.at(0).gamma, 5.0),
                    critline::NearZeroError);
}

TEST_CASE("corollary is exactly what the pointwise theorem predicts") {
    std::mt19937_64 rng(314159ull);
    std::uniform_real_distribution<double> height(1.0, 120.0);
    int used = 0;
    while (used < 20) {
        const double t1 = height(rng);
        const double t2 = height(rng);
        if (catalog120().nearest_distance(t1) < 1e-3) continue;
        if (catalog120().nearest_distance(t2) < 1e-3) continue;
        ++used;

        const int s1 = critline::hardy_z(t1).z_value > 0 ? 1 : -1;
        const int s2 = critline::hardy_z(t2).z_value > 0 ? 1 : -1;
        const long n1 = critline::n_riemann_von_mangoldt(t1).n_int;
        const long n2 = critline::n_riemann_von_mangoldt(t2).n_int;
        const bool expected = ((s1 == s2) == ((n1 % 2) == (n2 % 2)));
        CHECK(corollary_parity_check(t1, t2) == expected);
        CHECK(expected);  // the sign relation holds pointwise, so this never fails
    }
}

TEST_CASE("parity statistics at reference heights") {
    const auto st30 = parity_statistics(catalog120(), 30.0);
    CHECK(st30.total == 3);
    CHECK(st30.even_count == 1);  // N values 1, 2, 3
    REQUIRE(st30.ratio.has_value());
    CHECK_LE(std::abs(*st30.ratio - 1.0 / 3.0), 1e-15);

    const auto st100 = parity_statistics(catalog120(), 100.0);
    CHECK(st100.total == 29);
    CHECK(st100.even_count == 14);
    CHECK_LE(std::abs(*st100.ratio - 14.0 / 29.0), 1e-15);
}

TEST_CASE("empty prefix reports no ratio") {
    const auto st = parity_statistics(catalog120(), 10.0);
    CHECK(st.total == 0);
    CHECK(st.even_count == 0);
    CHECK_FALSE(st.ratio.has_value());
}

TEST_CASE("simple zeros force even_count = floor(total/2)") {
    for (const double T : {30.0, 50.0, 100.0}) {
        const auto st = parity_statistics(catalog120(), T);
        CHECK(st.even_count == st.total / 2);
    }
    CHECK_THROWS_AS(parity_statistics(catalog120(), 130.0), critline::CatalogGapError);
}

TEST_CASE("report serialization carries failures and pass verdict") {
    const auto recs = verify_sign_relation(catalog120(), 0.1, 14.0, 10, 1e-3);
    CHECK(critline::all_agree(recs));

    const std::string csv = critline::sign_records_csv(recs);
    CHECK(csv.find("t,z_sign,n_parity,predicted_sign,agrees,dist_to_nearest_gamma\n") == 0);

    const std::string json = critline::verify_report_json({0.1, 14.0, 10, 0.001}, recs, 0);
    CHECK(json.find("\"pass\": true") != std::string::npos);
    CHECK(json.find("\"failures\": []") != std::string::npos);

    // A doctored record must show up as a failure and flip the verdict.
    auto broken = recs;
    broken.at(0).agrees = false;
    const std::string bad = critline::verify_report_json({0.1, 14.0, 10, 0.001}, broken, 0);
    CHECK(bad.find("\"pass\": false") != std::string::npos);
    CHECK(bad.find("\"agrees\": false") != std::string::npos);
}

}  // TEST_SUITE
