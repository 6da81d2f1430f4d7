#include "doctest.h"

#include <cmath>

#include "eccforge/fitness.hpp"
#include "eccforge/simnet/params_file.hpp"
#include "fixtures.hpp"

using namespace eccforge;
using namespace eccforge::fitness;

namespace {

CurveParams curve(long a, long b, long p, ECPoint G, long n, long h)
{
    CurveParams c;
    c.a = a;
    c.b = b;
    c.p = p;
    c.G = G;
    c.n = n;
    c.h = h;
    return c;
}

ECPoint first_point(long a, long b, long p)
{
    return fixtures::to_point(oracle::ToyGroup(a, b, p).points().at(1));
}

} // namespace

TEST_SUITE("fitness")
{
    TEST_CASE("hasse score on the toy curve is 9/8")
    {
        // expected = 18 - 2·4 = 10, window [10, 18], n = 19 sits 9 away: (18 - 9) / 8.
        CHECK(expected_order(17) == 10);
        CHECK(hasse_score(17, 19) == doctest::Approx(1.125).epsilon(1e-15));
        CHECK(hasse_score(17, 10) == doctest::Approx(18.0 / 8.0));
        CHECK(hasse_score(17, 100) == 0.0);
        CHECK_THROWS_AS(hasse_score(0, 1), DegenerateBounds);
    }

    TEST_CASE("toy curve validates")
    {
        CHECK(validate_curve(fixtures::toy_curve()).valid());
        CHECK(validate_curve(fixtures::toy_curve()).reason().empty());
    }

    TEST_CASE("rejection fixtures report their documented reason")
    {
        const auto toy = fixtures::toy_curve();
        auto h0 = toy;
        h0.h = 0;
        CHECK(validate_curve(h0).rejection == Rejection::CofactorBelowOne);
        CHECK(validate_curve(h0).reason() == "The cofactor h is less than 1, which makes it invalid.");

        auto p0 = toy;
        p0.p = 0;
        CHECK(validate_curve(p0).rejection == Rejection::ZeroPrime);

        auto ginf = toy;
        ginf.G = ECPoint::at_infinity();
        CHECK(validate_curve(ginf).rejection == Rejection::MalformedGenerator);

        auto off = toy;
        off.G = ECPoint{5, 2, false};
        CHECK(validate_curve(off).rejection == Rejection::GeneratorOffCurve);
        CHECK(validate_curve(off).reason() == "The point G is not on the curve!");

        auto n0 = toy;
        n0.n = 0;
        CHECK(validate_curve(n0).rejection == Rejection::NoSubgroup);

        auto bad_h = toy;
        bad_h.h = 4;
        CHECK(validate_curve(bad_h).rejection == Rejection::CofactorMismatch);

        const auto singular = curve(1, 1, 31, first_point(1, 1, 31), 32, 1);
        CHECK(validate_curve(singular).rejection == Rejection::Singular);
        CHECK(validate_curve(singular).reason() == "The curve is singular!");

        const auto anomalous = curve(2, 2, 17, ECPoint{5, 1, false}, 17, 1);
        CHECK(validate_curve(anomalous).rejection == Rejection::Anomalous);

        const auto supersingular = curve(1, 6, 11, find_generator_point(1, 6, 11), 12, 1);
        CHECK(validate_curve(supersingular).rejection == Rejection::Supersingular);
    }

    TEST_CASE("checks run in order: the earliest failure wins")
    {
        auto c = curve(1, 1, 31, ECPoint{0, 0, false}, 0, 0);
        CHECK(validate_curve(c).rejection == Rejection::CofactorBelowOne);
        c.h = 1;
        CHECK(validate_curve(c).rejection == Rejection::GeneratorOffCurve);
        c.G = first_point(1, 1, 31);
        CHECK(validate_curve(c).rejection == Rejection::NoSubgroup);
        c.n = 32;
        CHECK(validate_curve(c).rejection == Rejection::Singular);
    }

    TEST_CASE("large field cofactor must be one")
    {
        auto c = simnet::load_params("secp256k1", {fixtures::data_dir()});
        CHECK(validate_curve(c).valid());
        c.h = 2;
        CHECK(validate_curve(c).rejection == Rejection::CofactorMismatch);
    }

    TEST_CASE("property predicates")
    {
        CHECK(is_singular(0, 0, 7));
        CHECK(is_singular(1, 1, 31));
        CHECK_FALSE(is_singular(2, 2, 17));
        CHECK(is_anomalous(17, 17));
        CHECK(is_supersingular(11, 12));
        CHECK(is_supersingular(11, 1));
        CHECK_FALSE(is_supersingular(3, 4));
        CHECK_FALSE(is_supersingular(15, 16));
    }

    TEST_CASE("worked example: probe absent")
    {
        ProbeConfig cfg;
        cfg.max_iterations = 0;
        cfg.deterministic_timing = true;
        const FitnessReport r = evaluate(fixtures::toy_curve(), cfg);
        const double ln19 = std::log(19.0);
        CHECK(r.valid);
        CHECK(r.attack_resistance_score == 1);
        CHECK(r.execution_score == 0.0);
        CHECK(r.fitness == doctest::Approx(0.4 * ln19 + 0.2 * 1.125 * ln19 + 0.2).epsilon(1e-12));
    }

    TEST_CASE("invalid candidates score zero and carry the reason")
    {
        auto c = fixtures::toy_curve();
        c.h = 0;
        const FitnessReport r = evaluate(c, ProbeConfig{});
        CHECK_FALSE(r.valid);
        CHECK(r.fitness == 0.0);
        REQUIRE(r.rejection_reason);
        CHECK(*r.rejection_reason == "The cofactor h is less than 1, which makes it invalid.");
    }

    TEST_CASE("probe: zero distinguished bits hit on the first step")
    {
        ProbeConfig cfg;
        cfg.distinguished_bits = 0;
        const auto c = fixtures::toy_curve();
        const ProbeResult r = rho_probe(c.G, c.a, c.b, c.p, expected_order(c.p), cfg);
        REQUIRE(r.hit);
        CHECK(r.iterations == 1);
        CHECK(is_on_curve(r.hit->point, c));
    }

    TEST_CASE("probe: hits are distinguished and replay deterministically")
    {
        Rng rng(4);
        for (int i = 0; i < 10; ++i) {
            const BigInt p = get_prime_for_p(40, rng);
            const BigInt a = rng.below(p), b = rng.below(p);
            const ECPoint G = find_generator_point(a, b, p);
            ProbeConfig cfg;
            cfg.distinguished_bits = 4;
            const ProbeResult r1 = rho_probe(G, a, b, p, expected_order(p), cfg);
            const ProbeResult r2 = rho_probe(G, a, b, p, expected_order(p), cfg);
            CHECK(r1.iterations == r2.iterations);
            REQUIRE(r1.hit.has_value() == r2.hit.has_value());
            if (r1.hit) {
                CHECK(r1.hit->point == r2.hit->point);
                CHECK(mpz_scan1(r1.hit->point.x.get_mpz_t(), 0) >= 4);
                CHECK(is_on_curve(r1.hit->point, a, b, p));
            } else {
                CHECK(r1.iterations == cfg.trials * cfg.max_iterations);
            }
        }
    }

    TEST_CASE("execution score clamps to [0, 1]")
    {
        ProbeConfig cfg;
        CHECK(execution_score(0.0, cfg) == 0.0);
        CHECK(execution_score(100.0, cfg) == 1.0);
        CHECK(execution_score(5.05, cfg) == doctest::Approx(0.5));
        cfg.max_time = cfg.min_time;
        CHECK_THROWS_AS(cfg.check(), std::invalid_argument);
    }

    TEST_CASE("deterministic timing makes evaluation pure")
    {
        ProbeConfig cfg;
        cfg.deterministic_timing = true;
        Rng rng(9);
        const BigInt p = get_prime_for_p(64, rng);
        CurveParams c;
        c.p = p;
        c.a = 3;
        c.b = 7;
        c.G = find_generator_point(c.a, c.b, p);
        c.n = p - 1;
        c.h = 1;
        const FitnessReport r1 = evaluate(c, cfg);
        const FitnessReport r2 = evaluate(c, cfg);
        CHECK(r1 == r2);
        CHECK(r1.valid);
        CHECK(r1.probe_elapsed <= cfg.max_time);
    }
}
