#pragma once

#include "kummer/errors.hpp"
#include "kummer/polynomial.hpp"
#include "kummer/semilinear.hpp"

namespace kummer {

/// Hyperelliptic curve y^2 + Q y = P over F_{2^k}, ramified at infinity:
/// deg(Q) <= g, deg(P) = 2g + 1, Q coprime to (Q')^2 P + (P')^2.
class ArtinSchreierHyperelliptic {
public:
    /// Throws CurveError (WrongCharacteristic, DegreeViolation, NotSmooth).
    static ArtinSchreierHyperelliptic validate(const FieldPtr& field, unsigned g,
                                               const Polynomial& q, const Polynomial& p);

    const FieldPtr& field() const noexcept { return field_; }
    unsigned genus() const noexcept { return g_; }
    const Polynomial& q() const noexcept { return q_; }
    const Polynomial& p() const noexcept { return p_; }

private:
    ArtinSchreierHyperelliptic(FieldPtr field, unsigned g, Polynomial q, Polynomial p)
        : field_(std::move(field)), g_(g), q_(std::move(q)), p_(std::move(p)) {}

    FieldPtr field_;
    unsigned g_;
    Polynomial q_;
    Polynomial p_;
};

/// g x g Frobenius matrix in the basis y/x^1, ..., y/x^g: the entry at
/// (row j, column i) is coeff(Q, 2i - j), i.e. y/x^i maps to
/// sum_j coeff(Q, 2i-j) * y/x^j.
TwistedMatrix char2_matrix(const ArtinSchreierHyperelliptic& curve);

/// The same matrix from Q alone (it does not involve P); used by sweeps that
/// factor the (Q, P) space Q-major.
TwistedMatrix char2_matrix_for(const FieldPtr& field, unsigned g, const Polynomial& q);

}  // namespace kummer
