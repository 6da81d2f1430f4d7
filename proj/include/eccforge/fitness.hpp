#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "eccforge/ecmath.hpp"

namespace eccforge::fitness {

/// Settings for the distinguished-point rho probe and the timing score.
struct ProbeConfig {
    unsigned trials = 20;
    std::uint64_t max_iterations = 100;
    unsigned distinguished_bits = 10;
    double max_time = 10.0;
    double min_time = 0.1;
    // Replace wall-clock probe time by consumed iterations so that evaluate()
    // is a pure function of its inputs.
    bool deterministic_timing = false;

    void check() const;
};

enum class Rejection {
    None,
    CofactorBelowOne,
    ZeroPrime,
    MalformedGenerator,
    GeneratorOffCurve,
    NoSubgroup,
    CofactorMismatch,
    Singular,
    Anomalous,
    Supersingular,
};

std::string_view describe(Rejection r);

struct Validation {
    Rejection rejection = Rejection::None;

    bool valid() const { return rejection == Rejection::None; }
    explicit operator bool() const { return valid(); }
    std::string_view reason() const { return describe(rejection); }
};

struct FitnessReport {
    bool valid = false;
    std::optional<std::string> rejection_reason;
    double hasse_score = 0.0;
    double execution_score = 0.0;
    int attack_resistance_score = 0;
    double fitness = 0.0;
    double probe_elapsed = 0.0;

    friend bool operator==(const FitnessReport&, const FitnessReport&) = default;
};

class DegenerateBounds : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

bool is_singular(const BigInt& a, const BigInt& b, const BigInt& p);
bool is_anomalous(const BigInt& p, const BigInt& n);
bool is_supersingular(const BigInt& p, const BigInt& n);

/// Runs the checks in a fixed order and reports the first one that fails.
Validation validate_curve(const CurveParams& params);

/// p + 1 - 2·isqrt(p): the Hasse-expected order used by the score and the probe.
BigInt expected_order(const BigInt& p);

/// max(0, (upper - |n - expected|) / (upper - lower)) with upper = p + 1 and
/// lower = expected. Values above 1 are possible when n is near expected.
double hasse_score(const BigInt& p, const BigInt& n);

struct ProbeHit {
    BigInt scalar;
    ECPoint point;
};

struct ProbeResult {
    std::optional<ProbeHit> hit;
    std::uint64_t iterations = 0; // summed over all trials that ran
};

/// Distinguished-point rho walk started from G. A point is distinguished when
/// its x-coordinate has at least cfg.distinguished_bits trailing zero bits.
/// `order` is only used to reduce the walk's scalar bookkeeping.
ProbeResult rho_probe(const ECPoint& G, const BigInt& a, const BigInt& b, const BigInt& p,
                      const BigInt& order, const ProbeConfig& cfg);

double execution_score(double elapsed_seconds, const ProbeConfig& cfg);

FitnessReport evaluate(const CurveParams& candidate, const ProbeConfig& cfg);

} // namespace eccforge::fitness
