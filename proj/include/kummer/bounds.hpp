#pragma once

#include <cstdint>
#include <vector>

#include "kummer/curve.hpp"

namespace kummer {

/// Partition of S = Z/nZ \ {0} under multiplication by p. Orbits are sorted
/// ascending and the orbit list is sorted by smallest element.
struct OrbitDecomposition {
    unsigned n = 0;
    std::uint64_t p = 0;
    std::vector<std::vector<unsigned>> orbits;
};

/// Throws std::invalid_argument unless gcd(n, p) = 1 and n >= 2.
OrbitDecomposition orbits(unsigned n, std::uint64_t p);

/// a(C) >= 1 - n + sum_i max{1, m_i - m_(p*i mod n) + 1}.
long long a_number_lower_bound(const RamificationProfile& profile, unsigned n, std::uint64_t p);

/// f(C) <= sum over orbits of min_i (m_i - 1).
long long p_rank_upper_bound(const RamificationProfile& profile, const OrbitDecomposition& orbits);

struct BlockBound {
    unsigned i = 0;
    long long m_i = 0;
    long long deg_q = 0;       // deg Q_i from the exponent formula
    long long q_i = 0;         // floor((deg Q_i + m_(p*i mod n) - 1)/p)
    long long v_i = 0;         // floor(deg Q_i / p)
    long long rank_lower = 0;  // max{0, min{q_i - v_i, m_i - 1 - v_i}}
};

struct BoundsReport {
    long long a_lower = 0;
    long long a_upper = 0;
    long long f_upper = 0;
    std::vector<BlockBound> per_block;
};

/// All three bounds; a_upper = 1 - n + sum_i min{m_i, max{m_i - q_i + v_i,
/// 1 + v_i}}, with deg Q_i taken from the exponent formula (the polynomials
/// are never materialized here).
BoundsReport bounds_report(const KummerCurve& curve);

}  // namespace kummer
