#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eccforge/ecmath.hpp"
#include "eccforge/rng.hpp"

namespace eccforge::rho {

/// Walk position with its representation point = u·G + v·Q (coefficients mod n).
struct WalkerState {
    ECPoint point;
    BigInt u = 0;
    BigInt v = 0;
};

WalkerState make_walker(const BigInt& u, const BigInt& v, const ECPoint& G, const ECPoint& Q,
                        const CurveParams& params);
/// Random (u, v) in [0, n), redrawn while the point lands at infinity.
WalkerState seed_walker(const ECPoint& G, const ECPoint& Q, const CurveParams& params, Rng& rng);

/// x mod 3 == 0: add Q; == 1: double; == 2: add G. A step that reaches
/// infinity re-seeds the walker from fresh random coefficients.
WalkerState rho_step(const WalkerState& state, const ECPoint& G, const ECPoint& Q, const CurveParams& params,
                     Rng& rng);

struct AttackOutcome {
    std::optional<BigInt> key;
    std::uint64_t loops = 0;
    std::uint64_t restarts = 0;
};

/// Floyd tortoise/hare walk from u = init_value, v = 1. Runs at most
/// min(step_budget, 2n + 1) loops in total; a degenerate collision
/// (v_h ≡ v_t, non-invertible difference or a key failing d·G = Q) restarts
/// both walkers from a random seed. Every returned key satisfies d·G = Q.
/// Sets *stop on success and returns early once another walker set it.
AttackOutcome pollards_rho_attack(const ECPoint& G, const ECPoint& Q, const CurveParams& params,
                                  const BigInt& init_value, std::uint64_t step_budget, std::atomic<bool>* stop,
                                  Rng& rng);

struct AttackReport {
    std::optional<BigInt> key;
    int winner = -1;
    std::vector<std::uint64_t> loops_per_worker;
    std::vector<std::uint64_t> restarts_per_worker;
    double wall_seconds = 0.0;
    CurveParams params;
    ECPoint public_key;
};

/// Independent walkers, each with its own forked random stream and init value.
AttackReport attack_params(const CurveParams& params, const ECPoint& Q, unsigned workers, std::uint64_t step_budget,
                           std::uint64_t seed);

/// Fetches parameters and public key from Entity B first; network failures
/// surface as simnet::NetworkError before any walker starts.
AttackReport attack_entity_b(const std::string& server_url, unsigned workers, std::uint64_t step_budget,
                             std::uint64_t seed);

std::string format_report(const AttackReport& report);

} // namespace eccforge::rho
