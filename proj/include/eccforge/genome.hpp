#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "eccforge/ecmath.hpp"
#include "eccforge/fitness.hpp"
#include "eccforge/rng.hpp"

namespace eccforge {

// Gene positions inside a genome, in the order [a, b, p, G, n, h].
enum GeneIndex : std::size_t { kGeneA = 0, kGeneB = 1, kGeneP = 2, kGeneG = 3, kGeneN = 4, kGeneH = 5 };
inline constexpr std::size_t kGeneCount = 6;

/// One optimizer genome (GA individual or PSO particle position) with its
/// cached evaluation. An empty report means the fitness is invalidated.
struct Candidate {
    CurveParams genome;
    std::optional<fitness::FitnessReport> report;

    double fitness() const { return report ? report->fitness : 0.0; }
    bool evaluated() const { return report.has_value(); }
};

/// Mutable access to a scalar gene; index 3 (the G pair) is rejected.
BigInt& scalar_gene(CurveParams& genome, std::size_t index);
const BigInt& scalar_gene(const CurveParams& genome, std::size_t index);

void copy_gene(CurveParams& dst, const CurveParams& src, std::size_t index);
void swap_gene(CurveParams& x, CurveParams& y, std::size_t index);

/// Random nonsingular curve: fresh `bits`-bit prime, uniform a and b, and the
/// first generator point; restarts with a new prime when the generator search
/// fails. n = p - 1 and h = 1 as in the original generator.
CurveParams generate_curve(unsigned bits, Rng& rng, const GeneratorSearch& search = {});

} // namespace eccforge
