#include "eccforge/fitness.hpp"

#include <algorithm>
#include <chrono>

namespace eccforge::fitness {

namespace {

bool is_distinguished(const ECPoint& pt, unsigned bits)
{
    if (pt.infinity)
        return false;
    if (bits == 0)
        return true;
    return mpz_scan1(pt.x.get_mpz_t(), 0) >= bits; // x = 0 scans to ULONG_MAX
}

struct Walker {
    ECPoint point;
    BigInt scalar = 0;
};

// One move of the probe walk, partitioned on x mod 3. The point at infinity
// is treated as x = 0.
void probe_step(Walker& w, const ECPoint& G, const BigInt& a, const BigInt& p, const BigInt& order)
{
    const unsigned long bucket = w.point.infinity ? 0 : mpz_fdiv_ui(w.point.x.get_mpz_t(), 3);
    switch (bucket) {
    case 0:
        w.point = ec_addition(w.point, G, a, p);
        w.scalar = mod_floor(BigInt(w.scalar + 1), order);
        break;
    case 1:
        w.point = ec_scalar_multiplication(w.point, 2, a, p);
        w.scalar = mod_floor(BigInt(2 * w.scalar), order);
        break;
    default:
        w.point = ec_scalar_multiplication(w.point, 2, a, p);
        w.scalar = mod_floor(BigInt(2 * w.scalar), order);
        w.point = ec_addition(w.point, G, a, p);
        w.scalar = mod_floor(BigInt(w.scalar + 1), order);
        break;
    }
}

} // namespace

void ProbeConfig::check() const
{
    if (trials < 1)
        throw std::invalid_argument("probe trials must be at least 1");
    if (!(max_time > min_time))
        throw std::invalid_argument("probe max_time must exceed min_time");
}

std::string_view describe(Rejection r)
{
    switch (r) {
    case Rejection::None: return "";
    case Rejection::CofactorBelowOne: return "The cofactor h is less than 1, which makes it invalid.";
    case Rejection::ZeroPrime: return "The prime p can't be zero.";
    case Rejection::MalformedGenerator: return "Invalid generator point provided. Skipping curve creation.";
    case Rejection::GeneratorOffCurve: return "The point G is not on the curve!";
    case Rejection::NoSubgroup: return "No generator point found!";
    case Rejection::CofactorMismatch: return "The cofactor does not match the expected cofactor!";
    case Rejection::Singular: return "The curve is singular!";
    case Rejection::Anomalous: return "The curve is anomalous!";
    case Rejection::Supersingular: return "The curve is supersingular!";
    }
    return "unknown rejection";
}

bool is_singular(const BigInt& a, const BigInt& b, const BigInt& p)
{
    return mod_floor(BigInt(4 * a * a * a + 27 * b * b), p) == 0;
}

bool is_anomalous(const BigInt& p, const BigInt& n) { return p == n; }

bool is_supersingular(const BigInt& p, const BigInt& n)
{
    if (p == 2 || p == 3 || !is_probable_prime(p))
        return false;
    return mod_floor(BigInt(p + 1 - n), p) == 0;
}

Validation validate_curve(const CurveParams& c)
{
    if (c.h < 1)
        return {Rejection::CofactorBelowOne};
    if (c.p == 0)
        return {Rejection::ZeroPrime};
    if (c.G.infinity)
        return {Rejection::MalformedGenerator};
    if (!is_on_curve(c.G, c.a, c.b, c.p))
        return {Rejection::GeneratorOffCurve};
    if (c.n < 1)
        return {Rejection::NoSubgroup};

    // Without a point-counting backend the cofactor can only be checked for
    // consistency: small fields against the Hasse interval, large ones must be 1.
    if (c.p <= kMaxBruteForcePrime) {
        const BigInt deviation = c.h * c.n - (c.p + 1);
        if (deviation * deviation > 4 * c.p)
            return {Rejection::CofactorMismatch};
    } else if (c.h != 1) {
        return {Rejection::CofactorMismatch};
    }

    if (is_singular(c.a, c.b, c.p))
        return {Rejection::Singular};
    if (is_anomalous(c.p, c.n))
        return {Rejection::Anomalous};
    if (is_supersingular(c.p, c.n))
        return {Rejection::Supersingular};
    return {Rejection::None};
}

BigInt expected_order(const BigInt& p) { return p + 1 - 2 * isqrt(p); }

double hasse_score(const BigInt& p, const BigInt& n)
{
    const BigInt root = isqrt(p);
    const BigInt expected = p + 1 - 2 * root;
    const BigInt upper = expected + 2 * root;
    const BigInt lower = expected;
    if (upper == lower)
        throw DegenerateBounds("Hasse bounds collapse for p = " + to_decimal(p));
    const BigInt numerator = upper - abs(BigInt(n - expected));
    if (numerator <= 0)
        return 0.0;
    return to_double(numerator) / to_double(BigInt(upper - lower));
}

ProbeResult rho_probe(const ECPoint& G_in, const BigInt& a_in, const BigInt& b, const BigInt& p,
                      const BigInt& order, const ProbeConfig& cfg)
{
    (void)b; // the walk never needs b; kept for signature parity with validation
    ProbeResult result;
    const BigInt a = mod_floor(a_in, p);
    const ECPoint G = G_in.infinity ? G_in : ECPoint{mod_floor(G_in.x, p), mod_floor(G_in.y, p), false};

    for (unsigned trial = 0; trial < cfg.trials; ++trial) {
        Walker tortoise{G, 0};
        Walker hare{G, 0};
        std::uint64_t power_of_two = 1;
        std::uint64_t iterations = 0;
        while (iterations < cfg.max_iterations) {
            for (std::uint64_t k = 0; k < power_of_two; ++k) {
                probe_step(tortoise, G, a, p, order);
                if (is_distinguished(tortoise.point, cfg.distinguished_bits)) {
                    result.iterations += iterations + 1;
                    result.hit = ProbeHit{tortoise.scalar, tortoise.point};
                    return result;
                }
            }
            for (int k = 0; k < 2; ++k) {
                probe_step(hare, G, a, p, order);
                if (is_distinguished(hare.point, cfg.distinguished_bits)) {
                    result.iterations += iterations + 1;
                    result.hit = ProbeHit{hare.scalar, hare.point};
                    return result;
                }
            }
            ++iterations;
            if (tortoise.point == hare.point) {
                // Epoch growth is capped so a short cycle cannot blow up the inner loop.
                power_of_two = std::min<std::uint64_t>(power_of_two * 2, cfg.max_iterations);
                hare = tortoise;
            }
        }
        result.iterations += iterations;
    }
    return result;
}

double execution_score(double elapsed, const ProbeConfig& cfg)
{
    return std::max(0.0, std::min(1.0, (elapsed - cfg.min_time) / (cfg.max_time - cfg.min_time)));
}

FitnessReport evaluate(const CurveParams& c, const ProbeConfig& cfg)
{
    FitnessReport report;
    const Validation check = validate_curve(c);
    if (!check) {
        report.rejection_reason = std::string(check.reason());
        return report;
    }
    report.valid = true;
    report.hasse_score = hasse_score(c.p, c.n);

    const auto start = std::chrono::steady_clock::now();
    const ProbeResult probe = rho_probe(c.G, c.a, c.b, c.p, expected_order(c.p), cfg);
    const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;

    if (cfg.deterministic_timing) {
        const double budget = static_cast<double>(cfg.trials) * static_cast<double>(cfg.max_iterations);
        report.probe_elapsed = budget > 0 ? static_cast<double>(probe.iterations) / budget * cfg.max_time : 0.0;
    } else {
        report.probe_elapsed = wall.count();
    }
    report.execution_score = execution_score(report.probe_elapsed, cfg);
    report.attack_resistance_score = probe.hit ? 0 : 1;

    const double log_n = log_natural(c.n);
    report.fitness = 0.4 * log_n + 0.2 * report.hasse_score * log_n + 0.2 * report.execution_score +
                     0.2 * report.attack_resistance_score;
    return report;
}

} // namespace eccforge::fitness
