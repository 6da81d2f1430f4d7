#include "eccforge/rho_attack.hpp"

#include <chrono>
#include <mutex>

#include <fmt/format.h>

#include "eccforge/parallel.hpp"
#include "eccforge/simnet/entity_a.hpp"

namespace eccforge::rho {

namespace {

ECPoint combine(const BigInt& u, const BigInt& v, const ECPoint& G, const ECPoint& Q, const CurveParams& params)
{
    return ec_addition(ec_scalar_multiplication(G, u, params), ec_scalar_multiplication(Q, v, params), params);
}

} // namespace

WalkerState make_walker(const BigInt& u, const BigInt& v, const ECPoint& G, const ECPoint& Q,
                        const CurveParams& params)
{
    WalkerState s{ECPoint::at_infinity(), mod_floor(u, params.n), mod_floor(v, params.n)};
    s.point = combine(s.u, s.v, G, Q, params);
    return s;
}

WalkerState seed_walker(const ECPoint& G, const ECPoint& Q, const CurveParams& params, Rng& rng)
{
    for (;;) {
        WalkerState s = make_walker(rng.below(params.n), rng.below(params.n), G, Q, params);
        if (!s.point.infinity)
            return s;
    }
}

WalkerState rho_step(const WalkerState& state, const ECPoint& G, const ECPoint& Q, const CurveParams& params,
                     Rng& rng)
{
    WalkerState next;
    switch (mpz_fdiv_ui(state.point.x.get_mpz_t(), 3)) {
    case 0:
        next.point = ec_addition(state.point, Q, params);
        next.u = state.u;
        next.v = mod_floor(BigInt(state.v + 1), params.n);
        break;
    case 1:
        next.point = ec_addition(state.point, state.point, params);
        next.u = mod_floor(BigInt(2 * state.u), params.n);
        next.v = mod_floor(BigInt(2 * state.v), params.n);
        break;
    default:
        next.point = ec_addition(state.point, G, params);
        next.u = mod_floor(BigInt(state.u + 1), params.n);
        next.v = state.v;
        break;
    }
    if (next.point.infinity)
        return seed_walker(G, Q, params, rng);
    return next;
}

AttackOutcome pollards_rho_attack(const ECPoint& G, const ECPoint& Q, const CurveParams& params,
                                  const BigInt& init_value, std::uint64_t step_budget, std::atomic<bool>* stop,
                                  Rng& rng)
{
    if (params.n < 2)
        throw std::invalid_argument("group order must be at least 2");
    AttackOutcome out;

    BigInt ceiling = 2 * params.n + 1;
    std::uint64_t limit = step_budget;
    if (ceiling < BigInt(static_cast<unsigned long>(limit)))
        limit = ceiling.get_ui();

    WalkerState tortoise = make_walker(init_value, 1, G, Q, params);
    if (tortoise.point.infinity)
        tortoise = seed_walker(G, Q, params, rng);
    WalkerState hare = tortoise;

    while (out.loops < limit) {
        if (stop && stop->load(std::memory_order_relaxed))
            return out;
        ++out.loops;
        tortoise = rho_step(tortoise, G, Q, params, rng);
        hare = rho_step(rho_step(hare, G, Q, params, rng), G, Q, params, rng);
        if (!(tortoise.point == hare.point))
            continue;

        const BigInt dv = mod_floor(BigInt(hare.v - tortoise.v), params.n);
        BigInt key;
        bool found = false;
        if (dv != 0) {
            try {
                key = mod_floor(BigInt((tortoise.u - hare.u) * mod_inverse(dv, params.n)), params.n);
                found = ec_scalar_multiplication(G, key, params) == Q;
            } catch (const NonInvertible&) {
            }
        }
        if (found) {
            out.key = key;
            if (stop)
                stop->store(true);
            return out;
        }
        ++out.restarts;
        tortoise = seed_walker(G, Q, params, rng);
        hare = tortoise;
    }
    return out;
}

AttackReport attack_params(const CurveParams& params, const ECPoint& Q, unsigned workers, std::uint64_t step_budget,
                           std::uint64_t seed)
{
    if (workers == 0)
        throw std::invalid_argument("at least one worker is required");
    if (!is_on_curve(Q, params))
        throw std::invalid_argument("public key is not on the curve");

    AttackReport report;
    report.params = params;
    report.public_key = Q;
    report.loops_per_worker.assign(workers, 0);
    report.restarts_per_worker.assign(workers, 0);

    std::atomic<bool> stop{false};
    std::mutex result_mutex;
    const Rng root(seed);
    const auto start = std::chrono::steady_clock::now();
    parallel_for(workers, workers, [&](std::size_t w) {
        Rng rng = root.fork(w);
        const BigInt init = params.n > 2 ? rng.between(1, BigInt(params.n - 1)) : BigInt(1);
        const AttackOutcome outcome = pollards_rho_attack(params.G, Q, params, init, step_budget, &stop, rng);
        std::lock_guard lock(result_mutex);
        report.loops_per_worker[w] = outcome.loops;
        report.restarts_per_worker[w] = outcome.restarts;
        if (outcome.key && !report.key) {
            report.key = outcome.key;
            report.winner = static_cast<int>(w);
        }
    });
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

AttackReport attack_entity_b(const std::string& server_url, unsigned workers, std::uint64_t step_budget,
                             std::uint64_t seed)
{
    const simnet::ServerInfo info = simnet::fetch_server_info(server_url);
    return attack_params(info.params, info.public_key, workers, step_budget, seed);
}

std::string format_report(const AttackReport& report)
{
    std::string out;
    out += fmt::format("curve p = {}\n", to_decimal(report.params.p));
    out += fmt::format("order n = {}\n", to_decimal(report.params.n));
    out += fmt::format("public key Q = {}\n", to_string(report.public_key));
    for (std::size_t w = 0; w < report.loops_per_worker.size(); ++w)
        out += fmt::format("worker {}: loops={} restarts={}{}\n", w, report.loops_per_worker[w],
                           report.restarts_per_worker[w], static_cast<int>(w) == report.winner ? " (found)" : "");
    out += fmt::format("wall time: {:.3f} s\n", report.wall_seconds);
    if (report.key)
        out += fmt::format("recovered private key d = {}\n", to_decimal(*report.key));
    else
        out += "attack exhausted its budget without finding the key\n";
    return out;
}

} // namespace eccforge::rho
