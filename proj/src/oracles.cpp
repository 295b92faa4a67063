#include "kummer/oracles.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace kummer {

long long rh_genus(const KummerCurve& curve) {
    const long long n = curve.n();
    long long two_g_minus_2 = -2 * n;
    for (const auto& [j, part] : curve.decomposition().parts)
        two_g_minus_2 +=
            static_cast<long long>(part.degree()) * (n - std::gcd<long long>(n, j));
    const long long deg_f = static_cast<long long>(curve.f().degree());
    if (deg_f % n != 0) two_g_minus_2 += n - std::gcd(n, deg_f);
    if (two_g_minus_2 % 2 != 0) throw internal_error("Riemann-Hurwitz parity violation");
    const long long g = two_g_minus_2 / 2 + 1;
    if (g < 0) throw internal_error("Riemann-Hurwitz gave a negative genus");
    return g;
}

int elliptic_point_count_prank(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
    if (p < 5) throw std::invalid_argument("point-count oracle requires p >= 5");
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("point-count oracle requires prime p");
    a %= p;
    b %= p;
    // singular iff 4a^3 + 27b^2 = 0
    const std::uint64_t disc = (4 * ((a * a % p) * a % p) + 27 * (b * b % p)) % p;
    if (disc == 0) throw std::domain_error("singular cubic");

    // quadratic residue table
    std::vector<bool> is_square(p, false);
    for (std::uint64_t y = 0; y < p; ++y) is_square[y * y % p] = true;

    std::uint64_t count = 1;  // point at infinity
    for (std::uint64_t x = 0; x < p; ++x) {
        const std::uint64_t t = (((x * x % p) * x % p) + a * x % p + b) % p;
        if (t == 0)
            count += 1;
        else if (is_square[t])
            count += 2;
    }
    return count == p + 1 ? 0 : 1;
}

std::pair<std::size_t, std::size_t> stabilized_prank(const TwistedMatrix& m) {
    const std::size_t g = m.size();
    if (g == 0) return {0, 0};
    std::size_t prev = g;  // rank of the identity = 0-th iterate
    TwistedMatrix power = m;
    for (unsigned it = 1;; ++it) {
        const std::size_t cur = rank(power);
        if (cur == prev) return {cur, it - 1};
        if (it > g + 1) throw internal_error("twisted ranks failed to stabilize by g iterations");
        prev = cur;
        power = power.grid_product(m.entrywise_frobenius(it * m.twist()), (it + 1) * m.twist());
    }
}

}  // namespace kummer
