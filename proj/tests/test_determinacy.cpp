#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "glnmom/determinacy.hpp"
#include "glnmom/moments.hpp"
#include "glnmom/numerics.hpp"
#include "json.hpp"

using namespace glnmom;

TEST_CASE("dual-method agreement on the logarithmic tail integral") {
    GlnParams p{0.0, 1.0, 2.0};
    KreinResult a = krein_integral(p, 1.0, 1e-8, KreinMethod::log_substitution);
    KreinResult b = krein_integral(p, 1.0, 1e-8, KreinMethod::direct);
    REQUIRE(a.converged);
    REQUIRE(b.converged);
    CHECK(a.value ==
          doctest::Approx(b.value).epsilon(1e-6));
}

TEST_CASE("value grows monotonically with the cutoff once positive") {
    GlnParams p{0.0, 1.0, 2.0};
    double T = 50.0;
    KreinResult at_t = krein_integral(p, 1.0, 1e-6,
                                      KreinMethod::log_substitution, T);
    KreinResult at_2t = krein_integral(p, 1.0, 1e-6,
                                       KreinMethod::log_substitution, 2.0 * T);
    CHECK(at_2t.value >= at_t.value);
    // and stable under doubling within the certified tail bound
    KreinResult full = krein_integral(p, 1.0, 1e-8);
    CHECK(std::fabs(full.value - at_2t.value) <= at_2t.tail_bound + 1e-9);
}

TEST_CASE("finiteness is certified across the indeterminate range") {
    for (double r : {1.1, 1.5, 2.0, 15.0}) {
        GlnParams p{0.0, 1.0, r};
        KreinResult k = krein_integral(p, 1.0, 1e-8);
        CHECK(k.converged);
        CHECK(k.tail_bound < 1e-6);
        CHECK(std::isfinite(k.value));
        CHECK(k.lower_cutoff == 1.0);
        CHECK(k.upper_cutoff > 1.0);
    }
}

TEST_CASE("classifier truth table") {
    DeterminacyVerdict v1 = classify(GlnParams{0.0, 1.0, 0.5});
    CHECK(v1.kind == DeterminacyKind::no_moments);
    CHECK_FALSE(v1.mgf_exists);

    DeterminacyVerdict v2 = classify(GlnParams{0.0, 0.5, 1.0});
    CHECK(v2.kind == DeterminacyKind::partial_moments);
    REQUIRE(v2.moment_range.has_value());
    CHECK(v2.moment_range->first == doctest::Approx(-2.0));
    CHECK(v2.moment_range->second == doctest::Approx(2.0));

    // an honest range even when the first moment is out of it
    DeterminacyVerdict v2b = classify(GlnParams{0.0, 2.0, 1.0});
    CHECK(v2b.kind == DeterminacyKind::partial_moments);
    CHECK(v2b.moment_range->second == doctest::Approx(0.5));

    for (double r : {1.45, 1.56, 15.0}) {
        DeterminacyVerdict v = classify(GlnParams{0.0, 1.0, r});
        CHECK(v.kind == DeterminacyKind::indeterminate_all_moments_finite);
        CHECK_FALSE(v.mgf_exists);
        CHECK(v.witnessed());
    }

    DeterminacyVerdict vl = classify_limit(PrizeCompetitionParams{});
    CHECK(vl.kind == DeterminacyKind::determinate_compact_support);
    CHECK(vl.mgf_exists);
    CHECK_FALSE(vl.krein.has_value());
}

TEST_CASE("classification never depends on location, nor scale away from r=1") {
    for (double r : {0.5, 1.45, 2.0, 15.0}) {
        DeterminacyKind base = classify(GlnParams{0.0, 1.0, r}).kind;
        CHECK(classify(GlnParams{3.0, 0.25, r}).kind == base);
        CHECK(classify(GlnParams{-2.0, 4.0, r}).kind == base);
    }
}

TEST_CASE("tail integral stays finite under a location shift") {
    KreinResult a = krein_integral(GlnParams{0.0, 1.0, 2.0}, 1.0, 1e-8);
    KreinResult b = krein_integral(GlnParams{0.7, 1.0, 2.0}, 1.0, 1e-8);
    CHECK(a.converged);
    CHECK(b.converged);
    CHECK(std::isfinite(a.value));
    CHECK(std::isfinite(b.value));
    CHECK(a.value != b.value);  // the shift moves the value, continuously
}

TEST_CASE("indeterminate verdicts come with finite moments of every order") {
    for (double r : {1.45, 1.56, 15.0}) {
        GlnParams p{0.0, 1.0, r};
        for (int k = 1; k <= 8; ++k) {
            double m = moment_quadrature(p, static_cast<double>(k));
            CHECK(std::isfinite(m));
            CHECK(m > 0.0);
        }
    }
}

TEST_CASE("no-moments regime shows a non-integrable moment integrand") {
    // exp(k z - |z|^r/(r sigma^r)) with r=0.5: the linear term wins, so
    // partial integrals explode on a doubling grid
    GlnParams p{0.0, 1.0, 0.5};
    auto integrand = [&](double z) {
        return std::exp(z - 2.0 * std::sqrt(z));
    };
    double prev = 0.0;
    for (double T : {50.0, 100.0, 200.0, 400.0}) {
        double v = integrate_adaptive(integrand, 0.0, T, 1e-6).value;
        CHECK(v > 2.0 * prev);
        prev = v;
    }
    CHECK(prev > 1e100);
    CHECK_FALSE(moment_exists(p, 1.0).exists);
}

TEST_CASE("verdicts serialize to a stable JSON shape") {
    DeterminacyVerdict v = classify(GlnParams{0.0, 1.0, 2.0});
    nlohmann::json j = nlohmann::json::parse(verdict_to_json(v));
    CHECK(j["kind"] == "indeterminate-all-moments-finite");
    CHECK(j["mgf_exists"] == false);
    REQUIRE(j.contains("krein"));
    CHECK(j["krein"]["converged"] == true);
    CHECK(j["krein"]["tail_bound"].get<double>() < 1e-6);

    nlohmann::json j2 =
        nlohmann::json::parse(verdict_to_json(classify(GlnParams{0.0, 0.5, 1.0})));
    CHECK(j2["kind"] == "partial-moments");
    CHECK(j2["moment_range"]["lower"].get<double>() == doctest::Approx(-2.0));
    CHECK(j2["moment_range"]["upper"].get<double>() == doctest::Approx(2.0));
}
