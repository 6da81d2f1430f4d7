#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "eccforge/ga.hpp"
#include "fixtures.hpp"

using namespace eccforge;
using namespace eccforge::ga;

namespace {

// Genes tagged by parent so crossover results can be read off directly.
Candidate tagged(long tag)
{
    Candidate c;
    c.genome.a = tag * 10 + 0;
    c.genome.b = tag * 10 + 1;
    c.genome.p = tag * 10 + 2;
    c.genome.G = ECPoint{tag * 10 + 3, tag * 10 + 3, false};
    c.genome.n = tag * 10 + 4;
    c.genome.h = tag * 10 + 5;
    c.report = fitness::FitnessReport{true, std::nullopt, 0, 0, 0, static_cast<double>(tag), 0};
    return c;
}

long tag_of(const CurveParams& g, std::size_t gene)
{
    const BigInt& v = gene == kGeneG ? g.G.x : scalar_gene(g, gene);
    return v.get_si() / 10;
}

GaConfig small_config(std::uint64_t seed)
{
    GaConfig cfg;
    cfg.bits = 16;
    cfg.pop_size = 20;
    cfg.ngen = 10;
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

TEST_SUITE("ga")
{
    TEST_CASE("cut points cover the ten pairs uniformly")
    {
        Rng rng(1);
        std::map<std::pair<std::size_t, std::size_t>, int> seen;
        for (int i = 0; i < 10000; ++i) {
            const CutPoints c = draw_cut_points(rng);
            REQUIRE(1 <= c.first);
            REQUIRE(c.first < c.second);
            REQUIRE(c.second <= 5);
            ++seen[{c.first, c.second}];
        }
        CHECK(seen.size() == 10);
        for (const auto& [pair, count] : seen)
            CHECK(count > 850);
    }

    TEST_CASE("two-point crossover swaps exactly the cut segment")
    {
        const Candidate x = tagged(1), y = tagged(2);
        for (std::size_t c1 = 1; c1 <= 4; ++c1)
            for (std::size_t c2 = c1 + 1; c2 <= 5; ++c2) {
                const auto [cx, cy] = two_point_crossover_at(x, y, {c1, c2});
                for (std::size_t g = 0; g < kGeneCount; ++g) {
                    const bool inside = g >= c1 && g < c2;
                    CHECK(tag_of(cx.genome, g) == (inside ? 2 : 1));
                    CHECK(tag_of(cy.genome, g) == (inside ? 1 : 2));
                }
                CHECK_FALSE(cx.evaluated());
                CHECK_FALSE(cy.evaluated());
            }
        CHECK_THROWS_AS(two_point_crossover_at(x, y, {0, 2}), std::invalid_argument);
        CHECK_THROWS_AS(two_point_crossover_at(x, y, {3, 3}), std::invalid_argument);
    }

    TEST_CASE("crossover of identical parents keeps cached fitness")
    {
        const Candidate x = tagged(1);
        const auto [cx, cy] = two_point_crossover_at(x, x, {1, 3});
        CHECK(cx.evaluated());
        CHECK(cy.evaluated());
    }

    TEST_CASE("three-parent crossover rotates the parents")
    {
        const Candidate p1 = tagged(1), p2 = tagged(2), p3 = tagged(3);
        const auto kids = three_parent_crossover_at(p1, p2, p3, {2, 4});
        // child k: parent k on [0,2), parent k+1 on [2,4), parent k+2 on [4,6)
        const long expected[3][6] = {{1, 1, 2, 2, 3, 3}, {2, 2, 3, 3, 1, 1}, {3, 3, 1, 1, 2, 2}};
        for (std::size_t k = 0; k < 3; ++k)
            for (std::size_t g = 0; g < kGeneCount; ++g)
                CHECK(tag_of(kids[k].genome, g) == expected[k][g]);
    }

    TEST_CASE("mutation gate and gene bounds")
    {
        Rng rng(2);
        const Candidate original = tagged(4);
        const Candidate untouched = custom_mutation(original, 1.0, 0.0, 16, rng);
        CHECK(untouched.genome == original.genome);
        CHECK(untouched.evaluated());

        Candidate c;
        c.genome = generate_curve(16, rng);
        for (int i = 0; i < 200; ++i) {
            c = custom_mutation(c, 1.0, 1.0, 16, rng);
            CHECK(c.genome.a >= 0);
            CHECK(c.genome.b >= 0);
            CHECK(c.genome.n >= 0);
            CHECK(c.genome.h >= 0);
            CHECK(bit_length(c.genome.p) == 16);
            CHECK(is_probable_prime(c.genome.p));
        }
    }

    TEST_CASE("tournament of one is a uniform draw, a large tournament finds the best")
    {
        std::vector<Candidate> pop;
        for (long t = 1; t <= 5; ++t)
            pop.push_back(tagged(t));
        Rng rng(3);
        std::set<long> seen;
        for (const auto& c : tournament_select(pop, 200, 1, rng))
            seen.insert(tag_of(c.genome, 0));
        CHECK(seen.size() == 5);
        std::size_t best = 0;
        for (const auto& c : tournament_select(pop, 200, 40, rng))
            best += tag_of(c.genome, 0) == 5;
        CHECK(best > 190);
    }

    TEST_CASE("initial population is made of valid-looking curves")
    {
        Rng rng(4);
        const auto pop = init_population(small_config(4), rng);
        CHECK(pop.size() == 20);
        for (const auto& c : pop) {
            CHECK(is_on_curve(c.genome.G, c.genome));
            CHECK_FALSE(fitness::is_singular(c.genome.a, c.genome.b, c.genome.p));
            CHECK(c.genome.n == c.genome.p - 1);
        }
    }

    TEST_CASE("elitism keeps the best fitness non-decreasing")
    {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const GaConfig cfg = small_config(seed);
            Rng rng(seed);
            const GaResult r = run_ga(cfg, quick_probe(), rng);
            REQUIRE(r.history.size() == cfg.ngen + 1);
            for (std::size_t i = 1; i < r.history.size(); ++i) {
                CHECK(r.history[i].max >= r.history[i - 1].max);
                CHECK(r.history[i].best_fitness >= r.history[i - 1].best_fitness);
            }
            for (std::size_t size : r.merged_sizes)
                CHECK(size == cfg.pop_size + cfg.elite_count());
            CHECK(r.best.fitness() == r.history.back().best_fitness);
            CHECK(r.final_population.size() == cfg.pop_size);
        }
    }

    TEST_CASE("same seed, same run")
    {
        const GaConfig cfg = small_config(11);
        Rng r1(11), r2(11);
        const GaResult a = run_ga(cfg, quick_probe(), r1);
        const GaResult b = run_ga(cfg, quick_probe(), r2);
        REQUIRE(a.history.size() == b.history.size());
        for (std::size_t i = 0; i < a.history.size(); ++i) {
            CHECK(a.history[i].max == b.history[i].max);
            CHECK(a.history[i].avg == b.history[i].avg);
        }
        CHECK(a.best.genome == b.best.genome);
    }

    TEST_CASE("parallel evaluation matches serial evaluation")
    {
        GaConfig cfg = small_config(12);
        Rng r1(12), r2(12);
        const GaResult serial = run_ga(cfg, quick_probe(), r1);
        cfg.workers = 4;
        const GaResult parallel = run_ga(cfg, quick_probe(), r2);
        CHECK(serial.best.genome == parallel.best.genome);
        CHECK(serial.history.back().avg == parallel.history.back().avg);
    }

    TEST_CASE("config validation")
    {
        GaConfig cfg;
        CHECK_NOTHROW(cfg.check());
        CHECK(cfg.elite_count() == 50);
        cfg.cxpb = 1.5;
        CHECK_THROWS_AS(cfg.check(), std::invalid_argument);
        cfg = GaConfig{};
        cfg.pop_size = 2;
        CHECK_THROWS_AS(cfg.check(), std::invalid_argument);
        cfg = GaConfig{};
        cfg.elitism_rate = 1.0;
        CHECK_THROWS_AS(cfg.check(), std::invalid_argument);
    }

    TEST_CASE("history CSV layout")
    {
        fixtures::TempDir dir("ga-csv");
        Rng rng(5);
        GaConfig cfg = small_config(5);
        cfg.ngen = 2;
        const GaResult r = run_ga(cfg, quick_probe(), rng);
        write_history_csv(dir / "h.csv", "generation", r.history);
        const std::string text = fixtures::read_file(dir / "h.csv");
        CHECK(text.rfind("generation,min,max,avg,std\n", 0) == 0);
        CHECK(std::count(text.begin(), text.end(), '\n') == 4);
        CHECK(text.find('\r') == std::string::npos);
    }
}
