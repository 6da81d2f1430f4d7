#include "eccforge/genome.hpp"

#include <stdexcept>
#include <utility>

namespace eccforge {

BigInt& scalar_gene(CurveParams& g, std::size_t index)
{
    switch (index) {
    case kGeneA: return g.a;
    case kGeneB: return g.b;
    case kGeneP: return g.p;
    case kGeneN: return g.n;
    case kGeneH: return g.h;
    default: throw std::out_of_range("gene index is not a scalar gene");
    }
}

const BigInt& scalar_gene(const CurveParams& g, std::size_t index)
{
    return scalar_gene(const_cast<CurveParams&>(g), index);
}

void copy_gene(CurveParams& dst, const CurveParams& src, std::size_t index)
{
    if (index == kGeneG)
        dst.G = src.G;
    else
        scalar_gene(dst, index) = scalar_gene(src, index);
}

void swap_gene(CurveParams& x, CurveParams& y, std::size_t index)
{
    if (index == kGeneG)
        std::swap(x.G, y.G);
    else
        std::swap(scalar_gene(x, index), scalar_gene(y, index));
}

CurveParams generate_curve(unsigned bits, Rng& rng, const GeneratorSearch& search)
{
    for (;;) {
        CurveParams c;
        c.p = get_prime_for_p(bits, rng);
        do {
            c.a = rng.below(c.p);
            c.b = rng.below(c.p);
        } while (fitness::is_singular(c.a, c.b, c.p));
        try {
            c.G = find_generator_point(c.a, c.b, c.p, search);
        } catch (const NoGeneratorPoint&) {
            continue;
        } catch (const GeneratorTimeout&) {
            continue;
        }
        c.n = c.p - 1;
        c.h = 1;
        return c;
    }
}

} // namespace eccforge
