#include "eccforge/ga.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "eccforge/simnet/params_file.hpp"

namespace eccforge::ga {

namespace {

bool is_probability(double v) { return v >= 0.0 && v <= 1.0; }

void invalidate_if_changed(Candidate& c, const CurveParams& before)
{
    if (!(c.genome == before))
        c.report.reset();
}

// Indices sorted by descending fitness; ties keep their original order.
std::vector<std::size_t> ranking(const std::vector<Candidate>& population)
{
    std::vector<std::size_t> order(population.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        return population[l].fitness() > population[r].fitness();
    });
    return order;
}

GenerationStats snapshot(std::size_t index, const std::vector<Candidate>& population, const Candidate& best)
{
    std::vector<double> values;
    values.reserve(population.size());
    for (const auto& c : population)
        values.push_back(c.fitness());
    GenerationStats s = summarize(index, values);
    s.best = best;
    s.best_fitness = best.fitness();
    return s;
}

void track_best(Candidate& best, const std::vector<Candidate>& population)
{
    for (const auto& c : population)
        if (!best.evaluated() || c.fitness() > best.fitness())
            best = c;
}

} // namespace

std::size_t GaConfig::elite_count() const
{
    return static_cast<std::size_t>(std::llround(static_cast<double>(pop_size) * elitism_rate));
}

void GaConfig::check() const
{
    if (pop_size < 3)
        throw std::invalid_argument("population size must be at least 3");
    for (double prob : {cxpb, mutpb, multiparent_cxpb, elitism_rate, indpb})
        if (!is_probability(prob))
            throw std::invalid_argument("GA probabilities and rates must lie in [0, 1]");
    if (elite_count() >= pop_size)
        throw std::invalid_argument("elite count must be smaller than the population");
    if (tournament_size < 1)
        throw std::invalid_argument("tournament size must be positive");
    if (bits < 4)
        throw std::invalid_argument("prime size must be at least 4 bits");
}

Evaluator standard_evaluator(const fitness::ProbeConfig& probe)
{
    probe.check();
    return [probe](const CurveParams& genome) { return fitness::evaluate(genome, probe); };
}

CutPoints draw_cut_points(Rng& rng)
{
    // 10 ordered pairs in [1, 5]; draw one uniformly.
    std::size_t pick = rng.below(10);
    for (std::size_t first = 1; first <= 4; ++first)
        for (std::size_t second = first + 1; second <= 5; ++second)
            if (pick-- == 0)
                return {first, second};
    return {1, 5};
}

std::vector<Candidate> init_population(const GaConfig& cfg, Rng& rng)
{
    std::vector<Candidate> population;
    population.reserve(cfg.pop_size);
    for (std::size_t i = 0; i < cfg.pop_size; ++i)
        population.push_back(Candidate{generate_curve(cfg.bits, rng, cfg.generator_search), std::nullopt});
    return population;
}

Candidate custom_mutation(Candidate individual, double indpb, double mutation_rate, unsigned bits, Rng& rng,
                          const GeneratorSearch& search)
{
    const double degree_of_mutation = mutation_rate > 0.5 ? 10.0 : 2.0;
    if (!(rng.uniform01() < mutation_rate))
        return individual;

    const CurveParams before = individual.genome;
    CurveParams& g = individual.genome;
    for (std::size_t i = 0; i < kGeneCount; ++i) {
        if (!(rng.uniform01() < indpb))
            continue;
        if (i == kGeneP) {
            g.p = get_prime_for_p(bits, rng);
        } else if (i == kGeneG) {
            try {
                g.G = find_generator_point(g.a, g.b, g.p, search);
            } catch (const EcMathError&) {
                // keep the previous G; fitness sorts out any inconsistency
            }
        } else {
            BigInt& gene = scalar_gene(g, i);
            const double noise = std::round(rng.gaussian(0.0, degree_of_mutation));
            gene += BigInt(noise);
            if (gene < 0)
                gene = 0;
        }
    }
    invalidate_if_changed(individual, before);
    return individual;
}

std::pair<Candidate, Candidate> two_point_crossover_at(const Candidate& first, const Candidate& second,
                                                       CutPoints cuts)
{
    if (!(1 <= cuts.first && cuts.first < cuts.second && cuts.second <= kGeneCount))
        throw std::invalid_argument("invalid crossover cut points");
    Candidate x = first, y = second;
    for (std::size_t i = cuts.first; i < cuts.second; ++i)
        swap_gene(x.genome, y.genome, i);
    invalidate_if_changed(x, first.genome);
    invalidate_if_changed(y, second.genome);
    return {std::move(x), std::move(y)};
}

std::pair<Candidate, Candidate> two_point_crossover(const Candidate& first, const Candidate& second, Rng& rng)
{
    return two_point_crossover_at(first, second, draw_cut_points(rng));
}

std::array<Candidate, 3> three_parent_crossover_at(const Candidate& p1, const Candidate& p2, const Candidate& p3,
                                                   CutPoints cuts)
{
    if (!(1 <= cuts.first && cuts.first < cuts.second && cuts.second <= kGeneCount))
        throw std::invalid_argument("invalid crossover cut points");
    const std::array<const Candidate*, 3> parents{&p1, &p2, &p3};
    std::array<Candidate, 3> children{p1, p2, p3};
    for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t i = cuts.first; i < cuts.second; ++i)
            copy_gene(children[k].genome, parents[(k + 1) % 3]->genome, i);
        for (std::size_t i = cuts.second; i < kGeneCount; ++i)
            copy_gene(children[k].genome, parents[(k + 2) % 3]->genome, i);
        invalidate_if_changed(children[k], parents[k]->genome);
    }
    return children;
}

std::array<Candidate, 3> three_parent_crossover(const Candidate& p1, const Candidate& p2, const Candidate& p3,
                                                Rng& rng)
{
    return three_parent_crossover_at(p1, p2, p3, draw_cut_points(rng));
}

std::vector<Candidate> tournament_select(const std::vector<Candidate>& population, std::size_t count,
                                         std::size_t tournament_size, Rng& rng)
{
    if (population.empty())
        throw std::invalid_argument("tournament over an empty population");
    std::vector<Candidate> chosen;
    chosen.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        std::size_t winner = rng.below(population.size());
        for (std::size_t t = 1; t < tournament_size; ++t) {
            const std::size_t challenger = rng.below(population.size());
            if (population[challenger].fitness() > population[winner].fitness())
                winner = challenger;
        }
        chosen.push_back(population[winner]);
    }
    return chosen;
}

void evaluate_population(std::vector<Candidate>& population, const Evaluator& evaluate, unsigned workers)
{
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < population.size(); ++i)
        if (!population[i].evaluated())
            pending.push_back(i);
    parallel_for(pending.size(), workers, [&](std::size_t k) {
        Candidate& c = population[pending[k]];
        c.report = evaluate(c.genome);
    });
}

GaResult run_ga(const GaConfig& cfg, const Evaluator& evaluate, Rng& rng, const GenerationCallback& on_generation)
{
    cfg.check();
    GaResult result;

    std::vector<Candidate> population = init_population(cfg, rng);
    evaluate_population(population, evaluate, cfg.workers);
    track_best(result.best, population);
    result.history.push_back(snapshot(0, population, result.best));
    if (on_generation)
        on_generation(result.history.back());

    const std::size_t elite_count = cfg.elite_count();
    const double mutation_rate = cfg.mutpb;

    for (std::size_t gen = 0; gen < cfg.ngen; ++gen) {
        std::vector<Candidate> elites;
        const auto order = ranking(population);
        for (std::size_t i = 0; i < elite_count; ++i)
            elites.push_back(population[order[i]]);

        std::vector<Candidate> offspring = tournament_select(population, population.size(), cfg.tournament_size, rng);

        for (std::size_t i = 0; i + 2 < offspring.size(); i += 3) {
            if (rng.uniform01() < cfg.multiparent_cxpb) {
                auto children = three_parent_crossover(offspring[i], offspring[i + 1], offspring[i + 2], rng);
                for (std::size_t k = 0; k < 3; ++k)
                    offspring[i + k] = std::move(children[k]);
            }
        }
        for (std::size_t i = 0; i + 1 < offspring.size(); i += 2) {
            if (rng.uniform01() < cfg.cxpb) {
                auto [x, y] = two_point_crossover(offspring[i], offspring[i + 1], rng);
                offspring[i] = std::move(x);
                offspring[i + 1] = std::move(y);
            }
        }
        for (auto& mutant : offspring)
            mutant = custom_mutation(std::move(mutant), cfg.indpb, mutation_rate, cfg.bits, rng, cfg.generator_search);

        evaluate_population(offspring, evaluate, cfg.workers);
        track_best(result.best, offspring);

        offspring.insert(offspring.end(), elites.begin(), elites.end());
        result.merged_sizes.push_back(offspring.size());
        if (offspring.size() != cfg.pop_size + elite_count)
            throw std::logic_error("population size drifted after appending elites");

        const auto merged_order = ranking(offspring);
        std::vector<Candidate> next;
        next.reserve(cfg.pop_size);
        for (std::size_t i = 0; i < cfg.pop_size; ++i)
            next.push_back(std::move(offspring[merged_order[i]]));
        population = std::move(next);

        result.history.push_back(snapshot(gen + 1, population, result.best));
        if (on_generation)
            on_generation(result.history.back());
    }
    result.final_population = std::move(population);
    return result;
}

GaResult run_ga(const GaConfig& cfg, const fitness::ProbeConfig& probe, Rng& rng,
                const GenerationCallback& on_generation)
{
    return run_ga(cfg, standard_evaluator(probe), rng, on_generation);
}

void write_params_file(const Candidate& best, const std::filesystem::path& path)
{
    simnet::write_params_file(best.genome, path);
}

} // namespace eccforge::ga
