#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "eccforge/ga.hpp"
#include "eccforge/genome.hpp"
#include "eccforge/parallel.hpp"
#include "eccforge/rng.hpp"
#include "eccforge/stats.hpp"

namespace eccforge::pso {

struct PsoConfig {
    std::size_t swarm_size = 500;
    std::size_t max_iterations = 40;
    double c1 = 1.0;
    double c2 = 2.5;
    double w_max = 0.9;
    double w_min = 0.4;
    std::size_t stall_limit = 20;
    unsigned bits = 256;
    std::uint64_t seed = 0;
    unsigned workers = default_workers();
    unsigned position_retries = 64;
    GeneratorSearch generator_search{};

    void check() const;
};

/// Per-gene velocity. scalar[3] is unused; the G gene moves with the pair `g`.
struct Velocity {
    std::array<double, kGeneCount> scalar{};
    std::array<double, 2> g{};

    friend bool operator==(const Velocity&, const Velocity&) = default;
};

struct ParticleState {
    Candidate position;
    Velocity velocity;
    Candidate best_position;
    double best_fitness = 0.0;
};

double inertia_weight(std::size_t iteration, std::size_t max_iterations, double w_max = 0.9, double w_min = 0.4);

/// w·v + c1·r1·(pbest - x) + c2·r2·(gbest - x), before any absolute value.
double velocity_component(double w, double v, double x, double pbest, double gbest, double r1, double r2,
                          double c1, double c2);

/// Fresh r1, r2 per gene. Scalar genes take the absolute value of the new
/// velocity; the G pair is updated component-wise without it.
Velocity update_velocity(const CurveParams& particle, const Velocity& velocity, const CurveParams& best,
                         const CurveParams& global_best, std::size_t iteration, std::size_t max_iterations,
                         const PsoConfig& cfg, Rng& rng);

/// The additive part of a move: |round(x + v)| per scalar gene and per G
/// coordinate, computed exactly.
CurveParams advance_position(const CurveParams& particle, const Velocity& velocity);

/// advance_position followed by the repair step: p becomes a fresh prime and G
/// is recomputed from the new (a, b, p), retrying with new primes on failure.
CurveParams update_position(const CurveParams& particle, const Velocity& velocity, const PsoConfig& cfg, Rng& rng);

struct PsoResult {
    Candidate best;                       // global best
    std::vector<GenerationStats> history; // entry 0 is the initial swarm
    std::size_t iterations_run = 0;
    bool stopped_early = false;
    std::vector<Candidate> final_positions;
};

PsoResult run_pso(const PsoConfig& cfg, const ga::Evaluator& evaluate, Rng& rng,
                  const ga::GenerationCallback& on_iteration = {});
PsoResult run_pso(const PsoConfig& cfg, const fitness::ProbeConfig& probe, Rng& rng,
                  const ga::GenerationCallback& on_iteration = {});

} // namespace eccforge::pso
