#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/polynomial.hpp"
#include "kummer/semilinear.hpp"

namespace kummer {

/// Per-residue data of the cover: m_i for i = 1..n-1 and the genus
/// g = (sum m_i) - n + 1.
struct RamificationProfile {
    std::vector<long long> m;  // m[i-1] = m_i
    long long genus = 0;

    long long m_at(unsigned i) const { return m.at(i - 1); }
};

/// Position of the block B_i inside the concatenated basis (i ascending,
/// then t = 1..m_i-1 ascending).
struct BlockIndex {
    unsigned i = 0;          // residue in 1..n-1
    long long dim = 0;       // max(m_i - 1, 0)
    long long offset = 0;    // starting row/column of the block
};

/// Exponent data of Q_i = u^pow_f * prod_j f_j^{e_j}, computed without any
/// polynomial division; deg Q_i follows without materializing Q_i.
struct FrobeniusExponents {
    unsigned i_prime = 0;                                  // p*i mod n
    long long pow_f = 0;                                   // floor(p*i/n)
    std::vector<std::pair<unsigned, long long>> e;         // (multiplicity j, e_j)
    long long degree = 0;                                  // deg Q_i
};

/// A validated Kummer cover y^n = f(x) over F_{p^k}. The stored f is the
/// reduced model: input multiplicities are taken mod n and the discarded
/// n-th-power factor h (with f_input = u * f_reduced_part * h^n) is kept for
/// reporting. All multiplicities in the stored decomposition lie in [1, n-1].
class KummerCurve {
public:
    /// Accepts the curve iff gcd(n, p) = 1, f != 0, and Z^n - f defines a
    /// geometrically irreducible cover: no prime d | n may divide every
    /// multiplicity in the square-free decomposition of f. Throws CurveError.
    static KummerCurve validate(const FieldPtr& field, unsigned n, const Polynomial& f);

    const FieldPtr& field() const noexcept { return field_; }
    unsigned n() const noexcept { return n_; }
    const Polynomial& f() const noexcept { return f_; }
    const SquareFreeDecomposition& decomposition() const noexcept { return dec_; }
    /// Discarded n-th-power factor h (1 when no reduction happened).
    const Polynomial& discarded() const noexcept { return discarded_; }

private:
    KummerCurve(FieldPtr field, unsigned n, Polynomial f, SquareFreeDecomposition dec,
                Polynomial discarded)
        : field_(std::move(field)),
          n_(n),
          f_(std::move(f)),
          dec_(std::move(dec)),
          discarded_(std::move(discarded)) {}

    FieldPtr field_;
    unsigned n_;
    Polynomial f_;
    SquareFreeDecomposition dec_;
    Polynomial discarded_;
};

/// m_i = ceil(i*deg(f)/n) - sum_j deg(f_j)*floor(j*i/n) and the genus.
RamificationProfile ramification_profile(const KummerCurve& curve);

FrobeniusExponents frobenius_exponents(const KummerCurve& curve, unsigned i);

/// (Q_i, p*i mod n), Q_i built multiplicatively from the decomposition.
std::pair<Polynomial, unsigned> frobenius_polynomial(const KummerCurve& curve, unsigned i);

struct HasseWitt {
    TwistedMatrix matrix;
    std::vector<BlockIndex> blocks;  // one entry per residue i = 1..n-1
};

/// The genus x genus matrix of Frobenius on H^1(C, O_C) in the concatenated
/// basis: column (i, t) carries coeff(Q_i, p*t - w) at row (p*i mod n, w).
HasseWitt hasse_witt_matrix(const KummerCurve& curve);

}  // namespace kummer
