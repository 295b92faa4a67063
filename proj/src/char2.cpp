#include "kummer/char2.hpp"

namespace kummer {

ArtinSchreierHyperelliptic ArtinSchreierHyperelliptic::validate(const FieldPtr& field, unsigned g,
                                                                const Polynomial& q,
                                                                const Polynomial& p) {
    if (field->p() != 2)
        throw CurveError(CurveErrorKind::WrongCharacteristic,
                         "the y^2 + Qy = P model requires characteristic 2");
    if (g < 1) throw std::invalid_argument("genus must be >= 1");
    if (!q.field()->same(*field) || !p.field()->same(*field))
        throw std::invalid_argument("polynomial over a different field");
    if (!q.is_zero() && q.degree() > g)
        throw CurveError(CurveErrorKind::DegreeViolation, "deg(Q) must be <= g");
    if (p.is_zero() || p.degree() != 2 * static_cast<std::size_t>(g) + 1)
        throw CurveError(CurveErrorKind::DegreeViolation, "deg(P) must be exactly 2g + 1");

    const Polynomial dq = derivative(q);
    const Polynomial dp = derivative(p);
    const Polynomial disc = dq * dq * p + dp * dp;
    // gcd(Q, (Q')^2 P + (P')^2) = 1; in particular Q = 0 never passes since
    // deg P odd makes (P')^2 nonzero of positive degree.
    if (q.is_zero() || !gcd(q, disc).is_one())
        throw CurveError(CurveErrorKind::NotSmooth,
                         "Q shares a factor with (Q')^2 P + (P')^2 (singular model)");
    return ArtinSchreierHyperelliptic(field, g, q, p);
}

TwistedMatrix char2_matrix(const ArtinSchreierHyperelliptic& curve) {
    return char2_matrix_for(curve.field(), curve.genus(), curve.q());
}

TwistedMatrix char2_matrix_for(const FieldPtr& field, unsigned g, const Polynomial& q) {
    TwistedMatrix m(field, g, 1);
    for (unsigned i = 1; i <= g; ++i)
        for (unsigned j = 1; j <= g; ++j) {
            FieldElement c = q.coeff_at(2LL * i - j);
            if (!c.is_zero()) m.set(j - 1, i - 1, std::move(c));
        }
    return m;
}

}  // namespace kummer
