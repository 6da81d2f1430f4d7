#include "doctest.h"

#include <cmath>

#include "eccforge/pso.hpp"

using namespace eccforge;
using namespace eccforge::pso;

namespace {

PsoConfig small_config(std::uint64_t seed)
{
    PsoConfig cfg;
    cfg.bits = 16;
    cfg.swarm_size = 20;
    cfg.max_iterations = 10;
    cfg.seed = seed;
    cfg.workers = 1;
    return cfg;
}

fitness::ProbeConfig quick_probe()
{
    fitness::ProbeConfig probe;
    probe.deterministic_timing = true;
    return probe;
}

} // namespace

TEST_SUITE("pso")
{
    TEST_CASE("inertia decays linearly from w_max towards w_min")
    {
        CHECK(inertia_weight(0, 40) == doctest::Approx(0.9));
        CHECK(inertia_weight(20, 40) == doctest::Approx(0.65));
        CHECK(inertia_weight(40, 40) == doctest::Approx(0.4));
        for (std::size_t i = 1; i < 40; ++i)
            CHECK(inertia_weight(i, 40) < inertia_weight(i - 1, 40));
    }

    TEST_CASE("velocity component with forced r1 = r2")
    {
        // 0.5·2 + 1.0·0.5·(10 - 4) + 2.5·0.5·(20 - 4) = 1 + 3 + 20
        CHECK(velocity_component(0.5, 2.0, 4.0, 10.0, 20.0, 0.5, 0.5, 1.0, 2.5) == doctest::Approx(24.0));
        CHECK(velocity_component(0.9, 0.0, 7.0, 7.0, 7.0, 0.3, 0.8, 1.0, 2.5) == 0.0);
    }

    TEST_CASE("scalar velocities are non-negative, the G pair may be negative")
    {
        Rng rng(1);
        CurveParams particle, best, global;
        particle.a = 100;
        best.a = 0;
        global.a = 0;
        particle.G = ECPoint{100, 100, false};
        best.G = ECPoint{0, 0, false};
        global.G = ECPoint{0, 0, false};
        const PsoConfig cfg;
        bool negative_g = false;
        for (int i = 0; i < 50; ++i) {
            const Velocity v = update_velocity(particle, Velocity{}, best, global, 0, 40, cfg, rng);
            for (std::size_t g = 0; g < kGeneCount; ++g)
                CHECK(v.scalar[g] >= 0.0);
            negative_g |= v.g[0] < 0.0;
        }
        CHECK(negative_g);
    }

    TEST_CASE("positions move by rounded velocity, exactly and in absolute value")
    {
        CurveParams x;
        x.a = parse_decimal("115792089237316195423570985008687907853269984665640564039457584007908834671663");
        x.b = 5;
        x.p = 11;
        x.G = ECPoint{3, 4, false};
        x.n = 10;
        x.h = 1;
        Velocity v;
        v.scalar = {1.4, -7.6, 0.0, 0.0, 2.5, 0.0};
        v.g = {-10.0, 0.49};
        const CurveParams y = advance_position(x, v);
        CHECK(y.a == x.a + 1);
        CHECK(y.b == 3); // |5 - 8|
        CHECK(y.n == 13); // round half away from zero
        CHECK(y.h == 1);
        CHECK(y.G.x == 7);
        CHECK(y.G.y == 4);
    }

    TEST_CASE("update_position repairs p and G")
    {
        Rng rng(2);
        const PsoConfig cfg = small_config(2);
        CurveParams x = generate_curve(16, rng);
        Velocity v;
        v.scalar = {3.0, 2.0, 0.0, 0.0, 1.0, 0.0};
        const CurveParams y = update_position(x, v, cfg, rng);
        CHECK(bit_length(y.p) == 16);
        CHECK(is_probable_prime(y.p));
        CHECK(is_on_curve(y.G, y));
    }

    TEST_CASE("gbest never decreases")
    {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            Rng rng(seed);
            const PsoResult r = run_pso(small_config(seed), quick_probe(), rng);
            for (std::size_t i = 1; i < r.history.size(); ++i)
                CHECK(r.history[i].best_fitness >= r.history[i - 1].best_fitness);
            CHECK(r.history.size() == r.iterations_run + 1);
            CHECK(r.final_positions.size() == 20);
        }
    }

    TEST_CASE("a frozen gbest stops after exactly stall_limit iterations")
    {
        PsoConfig cfg = small_config(3);
        cfg.max_iterations = 40;
        cfg.stall_limit = 5;
        const ga::Evaluator constant = [](const CurveParams&) {
            fitness::FitnessReport r;
            r.valid = true;
            r.fitness = 1.0;
            return r;
        };
        Rng rng(3);
        const PsoResult r = run_pso(cfg, constant, rng);
        CHECK(r.iterations_run == 5);
        CHECK(r.stopped_early);
    }

    TEST_CASE("same seed, same swarm")
    {
        Rng r1(7), r2(7);
        const PsoResult a = run_pso(small_config(7), quick_probe(), r1);
        const PsoResult b = run_pso(small_config(7), quick_probe(), r2);
        CHECK(a.best.genome == b.best.genome);
        REQUIRE(a.history.size() == b.history.size());
        for (std::size_t i = 0; i < a.history.size(); ++i)
            CHECK(a.history[i].avg == b.history[i].avg);
    }

    TEST_CASE("config validation")
    {
        PsoConfig cfg;
        CHECK_NOTHROW(cfg.check());
        CHECK(cfg.swarm_size == 500);
        CHECK(cfg.max_iterations == 40);
        CHECK(cfg.c1 == 1.0);
        CHECK(cfg.c2 == 2.5);
        CHECK(cfg.stall_limit == 20);
        cfg.w_min = 1.0;
        CHECK_THROWS_AS(cfg.check(), std::invalid_argument);
    }
}
