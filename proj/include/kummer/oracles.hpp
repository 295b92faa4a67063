#pragma once

#include <cstdint>
#include <utility>

#include "kummer/curve.hpp"

namespace kummer {

/// Genus from tame Riemann-Hurwitz over the ramification data:
/// 2g - 2 = -2n + sum_j deg(f_j)(n - gcd(n, j)) + (n - gcd(n, deg f)) where
/// the last term is present only when n does not divide deg f. This shares
/// no code with ramification_profile. Throws internal_error on parity
/// violation.
long long rh_genus(const KummerCurve& curve);

/// Exhaustive-point-count p-rank of y^2 = x^3 + ax + b over F_p, p >= 5
/// prime: 0 (supersingular) iff the projective point count equals p + 1,
/// else 1. Throws std::invalid_argument for p < 5 or composite p and
/// std::domain_error for a singular cubic.
int elliptic_point_count_prank(std::uint64_t p, std::uint64_t a, std::uint64_t b);

/// Iterates twisted products m = 0, 1, 2, ... until two consecutive ranks
/// agree; returns (stable rank, first stabilization m). The identity is the
/// 0-th iterate, so a full-rank matrix stabilizes at m = 0.
std::pair<std::size_t, std::size_t> stabilized_prank(const TwistedMatrix& m);

}  // namespace kummer
