#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <utility>
#include <vector>

#include "eccforge/fitness.hpp"
#include "eccforge/genome.hpp"
#include "eccforge/parallel.hpp"
#include "eccforge/rng.hpp"
#include "eccforge/stats.hpp"

namespace eccforge::ga {

struct GaConfig {
    std::size_t pop_size = 500;
    double cxpb = 0.5;
    double mutpb = 0.2;
    std::size_t ngen = 40;
    double multiparent_cxpb = 0.1;
    double elitism_rate = 0.1;
    double indpb = 0.2;
    std::size_t tournament_size = 3;
    unsigned bits = 256;
    std::uint64_t seed = 0;
    unsigned workers = default_workers();
    GeneratorSearch generator_search{};

    std::size_t elite_count() const;
    void check() const;
};

using Evaluator = std::function<fitness::FitnessReport(const CurveParams&)>;

/// Evaluator backed by fitness::evaluate with the given probe settings.
Evaluator standard_evaluator(const fitness::ProbeConfig& probe);

struct CutPoints {
    std::size_t first;
    std::size_t second;
};

/// Uniform cut pair with 1 <= first < second <= 5.
CutPoints draw_cut_points(Rng& rng);

std::vector<Candidate> init_population(const GaConfig& cfg, Rng& rng);

/// Gated per-gene mutation: with probability mutation_rate every gene gets an
/// indpb chance to change. p is redrawn as a fresh prime, G is recomputed from
/// the current (a, b, p) and the other genes receive rounded Gaussian noise
/// (stdev 10 when mutation_rate > 0.5, else 2) floored at zero. A failed
/// generator search keeps the old G. The cached fitness is dropped whenever
/// the genome changes.
Candidate custom_mutation(Candidate individual, double indpb, double mutation_rate, unsigned bits, Rng& rng,
                          const GeneratorSearch& search = {});

std::pair<Candidate, Candidate> two_point_crossover(const Candidate& first, const Candidate& second, Rng& rng);
std::pair<Candidate, Candidate> two_point_crossover_at(const Candidate& first, const Candidate& second,
                                                       CutPoints cuts);

/// child_k = parent_k[0:c1] ++ parent_{k+1}[c1:c2] ++ parent_{k+2}[c2:6], indices mod 3.
std::array<Candidate, 3> three_parent_crossover(const Candidate& p1, const Candidate& p2, const Candidate& p3,
                                                Rng& rng);
std::array<Candidate, 3> three_parent_crossover_at(const Candidate& p1, const Candidate& p2,
                                                   const Candidate& p3, CutPoints cuts);

std::vector<Candidate> tournament_select(const std::vector<Candidate>& population, std::size_t count,
                                         std::size_t tournament_size, Rng& rng);

/// Evaluates every candidate whose fitness is invalidated.
void evaluate_population(std::vector<Candidate>& population, const Evaluator& evaluate, unsigned workers);

struct GaResult {
    Candidate best;                          // best ever evaluated
    std::vector<GenerationStats> history;    // entry 0 is the initial population
    std::vector<std::size_t> merged_sizes;   // population size after appending elites, per generation
    std::vector<Candidate> final_population;
};

using GenerationCallback = std::function<void(const GenerationStats&)>;

GaResult run_ga(const GaConfig& cfg, const Evaluator& evaluate, Rng& rng, const GenerationCallback& on_generation = {});
GaResult run_ga(const GaConfig& cfg, const fitness::ProbeConfig& probe, Rng& rng,
                const GenerationCallback& on_generation = {});

/// Writes the best genome in the shared parameter-file format. Rejects a
/// generator at infinity.
void write_params_file(const Candidate& best, const std::filesystem::path& path);

} // namespace eccforge::ga
