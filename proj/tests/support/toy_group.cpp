#include "toy_group.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace oracle {

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::int64_t> primes_between(std::int64_t lo, std::int64_t hi)
{
    std::vector<std::int64_t> out;
    for (std::int64_t n = lo; n <= hi; ++n)
        if (is_prime(n))
            out.push_back(n);
    return out;
}

ToyGroup::ToyGroup(std::int64_t a, std::int64_t b, std::int64_t p) : a_(a), b_(b), p_(p)
{
    if (p < 3 || p > 1 << 16 || !is_prime(p))
        throw std::invalid_argument("toy group needs an odd prime below 2^16");
    a_ = m(a);
    b_ = m(b);

    // Per-prime tables are shared across curves; the sweep tests build many groups.
    thread_local std::map<std::int64_t, std::pair<std::vector<std::int64_t>, std::vector<std::vector<std::int64_t>>>>
        cache;
    auto& entry = cache[p];
    if (entry.first.empty()) {
        entry.first.assign(p, 0);
        for (std::int64_t v = 1; v < p; ++v)
            for (std::int64_t w = 1; w < p; ++w)
                if (v * w % p == 1) {
                    entry.first[v] = w;
                    break;
                }
        entry.second.resize(p);
        for (std::int64_t y = 0; y < p; ++y)
            entry.second[y * y % p].push_back(y);
    }
    inverse_ = &entry.first;
    const auto& roots = entry.second;
    points_.push_back(Pt{});
    for (std::int64_t x = 0; x < p; ++x) {
        const std::int64_t rhs = m(x * x % p * x + a_ * x + b_);
        for (std::int64_t y : roots[rhs])
            points_.push_back(Pt{x, y, false});
    }
}

std::int64_t ToyGroup::m(std::int64_t v) const
{
    v %= p_;
    return v < 0 ? v + p_ : v;
}

bool ToyGroup::singular() const { return m(4 * a_ % p_ * a_ % p_ * a_ + 27 * b_ % p_ * b_) == 0; }

bool ToyGroup::on_curve(const Pt& P) const
{
    if (P.inf)
        return true;
    return m(P.y * P.y) == m(P.x * P.x % p_ * P.x + a_ * P.x + b_);
}

// add-1998-cmo-2
ToyGroup::Proj ToyGroup::padd(const Proj& P, const Proj& Q) const
{
    const std::int64_t Y1Z2 = m(P.Y * Q.Z), X1Z2 = m(P.X * Q.Z), Z1Z2 = m(P.Z * Q.Z);
    const std::int64_t u = m(Q.Y * P.Z - Y1Z2), uu = m(u * u);
    const std::int64_t v = m(Q.X * P.Z - X1Z2), vv = m(v * v), vvv = m(v * vv);
    const std::int64_t R = m(vv * X1Z2);
    const std::int64_t A = m(uu * Z1Z2 - vvv - 2 * R);
    return Proj{m(v * A), m(u * m(R - A) - vvv * Y1Z2), m(vvv * Z1Z2)};
}

// dbl-2007-bl
ToyGroup::Proj ToyGroup::pdbl(const Proj& P) const
{
    const std::int64_t XX = m(P.X * P.X), ZZ = m(P.Z * P.Z);
    const std::int64_t w = m(a_ * ZZ + 3 * XX);
    const std::int64_t s = m(2 * P.Y * P.Z), ss = m(s * s), sss = m(s * ss);
    const std::int64_t R = m(P.Y * s), RR = m(R * R);
    const std::int64_t B = m((P.X + R) * (P.X + R) - XX - RR);
    const std::int64_t h = m(w * w - 2 * B);
    return Proj{m(h * s), m(w * m(B - h) - 2 * RR), sss};
}

Pt ToyGroup::normalize(const Proj& P) const
{
    if (P.Z == 0)
        return Pt{};
    const std::int64_t zi = (*inverse_)[P.Z];
    return Pt{m(P.X * zi), m(P.Y * zi), false};
}

Pt ToyGroup::add(const Pt& P, const Pt& Q) const
{
    if (P.inf)
        return Q;
    if (Q.inf)
        return P;
    const Proj pp{P.x, P.y, 1}, qp{Q.x, Q.y, 1};
    if (P.x == Q.x) {
        if (m(P.y + Q.y) == 0)
            return Pt{};
        return normalize(pdbl(pp));
    }
    return normalize(padd(pp, qp));
}

Pt ToyGroup::negate(const Pt& P) const
{
    if (P.inf)
        return P;
    return Pt{P.x, m(-P.y), false};
}

Pt ToyGroup::mul(std::int64_t k, const Pt& P) const
{
    Pt acc{};
    for (std::int64_t i = 0; i < k; ++i)
        acc = add(acc, P);
    return acc;
}

std::int64_t ToyGroup::point_order(const Pt& P) const
{
    Pt acc = P;
    for (std::int64_t k = 1;; ++k) {
        if (acc.inf)
            return k;
        acc = add(acc, P);
    }
}

std::int64_t ToyGroup::discrete_log(const Pt& G, const Pt& Q) const
{
    Pt acc{};
    for (std::int64_t k = 0; k <= order(); ++k) {
        if (acc == Q)
            return k;
        acc = add(acc, G);
    }
    return -1;
}

} // namespace oracle
