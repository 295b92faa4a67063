#include "kummer/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kummer {

OrbitDecomposition orbits(unsigned n, std::uint64_t p) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (std::gcd<std::uint64_t>(n, p) != 1) throw std::invalid_argument("gcd(n, p) must be 1");
    OrbitDecomposition out{n, p, {}};
    const unsigned pr = static_cast<unsigned>(p % n);
    std::vector<bool> seen(n, false);
    for (unsigned s = 1; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<unsigned> orbit;
        unsigned cur = s;
        while (!seen[cur]) {
            seen[cur] = true;
            orbit.push_back(cur);
            cur = static_cast<unsigned>(std::uint64_t(pr) * cur % n);
        }
        std::sort(orbit.begin(), orbit.end());
        out.orbits.push_back(std::move(orbit));
    }
    return out;
}

long long a_number_lower_bound(const RamificationProfile& profile, unsigned n, std::uint64_t p) {
    const unsigned pr = static_cast<unsigned>(p % n);
    long long sum = 0;
    for (unsigned i = 1; i < n; ++i) {
        const unsigned ip = static_cast<unsigned>(std::uint64_t(pr) * i % n);
        sum += std::max<long long>(1, profile.m_at(i) - profile.m_at(ip) + 1);
    }
    return 1 - static_cast<long long>(n) + sum;
}

long long p_rank_upper_bound(const RamificationProfile& profile, const OrbitDecomposition& orb) {
    long long sum = 0;
    for (const auto& orbit : orb.orbits) {
        long long least = -1;
        for (unsigned i : orbit) {
            const long long dim = profile.m_at(i) - 1;
            if (least < 0 || dim < least) least = dim;
        }
        sum += std::max<long long>(least, 0);
    }
    return sum;
}

BoundsReport bounds_report(const KummerCurve& curve) {
    const unsigned n = curve.n();
    const std::uint64_t p = curve.field()->p();
    const RamificationProfile profile = ramification_profile(curve);
    const OrbitDecomposition orb = orbits(n, p);

    BoundsReport out;
    out.a_lower = a_number_lower_bound(profile, n, p);
    out.f_upper = p_rank_upper_bound(profile, orb);

    long long sum = 0;
    for (unsigned i = 1; i < n; ++i) {
        const FrobeniusExponents ex = frobenius_exponents(curve, i);
        BlockBound b;
        b.i = i;
        b.m_i = profile.m_at(i);
        b.deg_q = ex.degree;
        b.q_i = (b.deg_q + profile.m_at(ex.i_prime) - 1) / static_cast<long long>(p);
        b.v_i = b.deg_q / static_cast<long long>(p);
        b.rank_lower = std::max<long long>(0, std::min(b.q_i - b.v_i, b.m_i - 1 - b.v_i));
        sum += std::min(b.m_i, std::max(b.m_i - b.q_i + b.v_i, 1 + b.v_i));
        out.per_block.push_back(b);
    }
    out.a_upper = 1 - static_cast<long long>(n) + sum;
    return out;
}

}  // namespace kummer
