#include "eccforge/pso.hpp"

#include <cmath>
#include <stdexcept>

namespace eccforge::pso {

namespace {

double gap(const BigInt& target, const BigInt& current) { return to_double(BigInt(target - current)); }

BigInt step(const BigInt& x, double v) { return abs(BigInt(x + BigInt(std::round(v)))); }

} // namespace

void PsoConfig::check() const
{
    if (swarm_size < 1)
        throw std::invalid_argument("swarm size must be positive");
    if (max_iterations < 1)
        throw std::invalid_argument("max iterations must be positive");
    if (!(w_max > w_min))
        throw std::invalid_argument("w_max must exceed w_min");
    if (stall_limit < 1)
        throw std::invalid_argument("stall limit must be at least 1");
    if (bits < 4)
        throw std::invalid_argument("prime size must be at least 4 bits");
}

double inertia_weight(std::size_t iteration, std::size_t max_iterations, double w_max, double w_min)
{
    return w_max - (w_max - w_min) * static_cast<double>(iteration) / static_cast<double>(max_iterations);
}

double velocity_component(double w, double v, double x, double pbest, double gbest, double r1, double r2,
                          double c1, double c2)
{
    return w * v + c1 * r1 * (pbest - x) + c2 * r2 * (gbest - x);
}

Velocity update_velocity(const CurveParams& particle, const Velocity& velocity, const CurveParams& best,
                         const CurveParams& global_best, std::size_t iteration, std::size_t max_iterations,
                         const PsoConfig& cfg, Rng& rng)
{
    const double w = inertia_weight(iteration, max_iterations, cfg.w_max, cfg.w_min);
    Velocity out;
    for (std::size_t i = 0; i < kGeneCount; ++i) {
        const double r1 = rng.uniform01();
        const double r2 = rng.uniform01();
        if (i == kGeneG) {
            out.g[0] = w * velocity.g[0] + cfg.c1 * r1 * gap(best.G.x, particle.G.x) +
                       cfg.c2 * r2 * gap(global_best.G.x, particle.G.x);
            out.g[1] = w * velocity.g[1] + cfg.c1 * r1 * gap(best.G.y, particle.G.y) +
                       cfg.c2 * r2 * gap(global_best.G.y, particle.G.y);
            continue;
        }
        const BigInt& x = scalar_gene(particle, i);
        const double cognitive = cfg.c1 * r1 * gap(scalar_gene(best, i), x);
        const double social = cfg.c2 * r2 * gap(scalar_gene(global_best, i), x);
        out.scalar[i] = std::abs(w * velocity.scalar[i] + cognitive + social);
    }
    return out;
}

CurveParams advance_position(const CurveParams& particle, const Velocity& velocity)
{
    CurveParams next = particle;
    for (std::size_t i = 0; i < kGeneCount; ++i) {
        if (i == kGeneG)
            continue;
        scalar_gene(next, i) = step(scalar_gene(particle, i), velocity.scalar[i]);
    }
    next.G = ECPoint{step(particle.G.x, velocity.g[0]), step(particle.G.y, velocity.g[1]), false};
    return next;
}

CurveParams update_position(const CurveParams& particle, const Velocity& velocity, const PsoConfig& cfg, Rng& rng)
{
    CurveParams next = advance_position(particle, velocity);
    for (unsigned attempt = 0; attempt < cfg.position_retries; ++attempt) {
        next.p = get_prime_for_p(cfg.bits, rng);
        try {
            next.G = find_generator_point(next.a, next.b, next.p, cfg.generator_search);
            return next;
        } catch (const NoGeneratorPoint&) {
        } catch (const GeneratorTimeout&) {
        }
    }
    throw std::runtime_error("no generator point found after repeated prime resampling");
}

PsoResult run_pso(const PsoConfig& cfg, const ga::Evaluator& evaluate, Rng& rng,
                  const ga::GenerationCallback& on_iteration)
{
    cfg.check();
    PsoResult result;

    std::vector<ParticleState> swarm(cfg.swarm_size);
    std::vector<Candidate> positions;
    positions.reserve(cfg.swarm_size);
    for (std::size_t i = 0; i < cfg.swarm_size; ++i)
        positions.push_back(Candidate{generate_curve(cfg.bits, rng, cfg.generator_search), std::nullopt});
    ga::evaluate_population(positions, evaluate, cfg.workers);

    std::size_t global = 0;
    for (std::size_t i = 0; i < cfg.swarm_size; ++i) {
        swarm[i].position = positions[i];
        swarm[i].best_position = positions[i];
        swarm[i].best_fitness = positions[i].fitness();
        if (positions[i].fitness() > positions[global].fitness())
            global = i;
    }
    result.best = positions[global];

    auto record = [&](std::size_t index) {
        std::vector<double> values;
        values.reserve(swarm.size());
        for (const auto& particle : swarm)
            values.push_back(particle.position.fitness());
        GenerationStats s = summarize(index, values);
        s.best = result.best;
        s.best_fitness = result.best.fitness();
        result.history.push_back(std::move(s));
        if (on_iteration)
            on_iteration(result.history.back());
    };
    record(0);

    std::size_t stalled = 0;
    for (std::size_t iteration = 0; iteration < cfg.max_iterations; ++iteration) {
        for (auto& particle : swarm) {
            particle.velocity = update_velocity(particle.position.genome, particle.velocity,
                                                particle.best_position.genome, result.best.genome, iteration,
                                                cfg.max_iterations, cfg, rng);
            particle.position = Candidate{update_position(particle.position.genome, particle.velocity, cfg, rng),
                                          std::nullopt};
        }

        std::vector<Candidate> moved;
        moved.reserve(swarm.size());
        for (auto& particle : swarm)
            moved.push_back(std::move(particle.position));
        ga::evaluate_population(moved, evaluate, cfg.workers);

        bool improved = false;
        for (std::size_t i = 0; i < swarm.size(); ++i) {
            ParticleState& particle = swarm[i];
            particle.position = std::move(moved[i]);
            const double f = particle.position.fitness();
            if (f > particle.best_fitness) {
                particle.best_fitness = f;
                particle.best_position = particle.position;
            }
            if (f > result.best.fitness()) {
                result.best = particle.position;
                improved = true;
            }
        }
        result.iterations_run = iteration + 1;
        record(iteration + 1);

        stalled = improved ? 0 : stalled + 1;
        if (stalled >= cfg.stall_limit) {
            result.stopped_early = iteration + 1 < cfg.max_iterations;
            break;
        }
    }
    for (auto& particle : swarm)
        result.final_positions.push_back(std::move(particle.position));
    return result;
}

PsoResult run_pso(const PsoConfig& cfg, const fitness::ProbeConfig& probe, Rng& rng,
                  const ga::GenerationCallback& on_iteration)
{
    return run_pso(cfg, ga::standard_evaluator(probe), rng, on_iteration);
}

} // namespace eccforge::pso
