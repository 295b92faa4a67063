#include "kummer/curve.hpp"

#include <numeric>
#include <sstream>

namespace kummer {

namespace {

std::vector<unsigned> prime_divisors(unsigned n) {
    std::vector<unsigned> ps;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

KummerCurve KummerCurve::validate(const FieldPtr& field, unsigned n, const Polynomial& f) {
    if (n < 2) throw std::invalid_argument("cover degree n must be >= 2");
    if (!f.field()->same(*field))
        throw std::invalid_argument("polynomial over a different field");
    if (f.is_zero())
        throw CurveError(CurveErrorKind::ZeroPolynomial, "f must be nonzero");
    if (n % field->p() == 0)
        throw CurveError(CurveErrorKind::CharacteristicDividesDegree,
                         "characteristic divides the cover degree n", field->p());

    SquareFreeDecomposition dec = squarefree_decompose(f);
    if (dec.parts.empty())
        throw CurveError(CurveErrorKind::ZeroPolynomial, "f must be nonconstant");

    // Z^n - f must define a geometrically irreducible cover: no prime d | n
    // may divide every multiplicity. (When d divides all multiplicities the
    // cover is either a d-th power or a constant-field extension, depending
    // on whether the unit is a d-th power in F_q*.)
    for (unsigned d : prime_divisors(n)) {
        bool all_divisible = true;
        for (const auto& [j, part] : dec.parts)
            if (j % d != 0) {
                all_divisible = false;
                break;
            }
        if (all_divisible) {
            const std::uint64_t q = field->order();
            const std::uint64_t g = std::gcd<std::uint64_t>(d, q - 1);
            const bool unit_is_dth_power = pow(dec.unit, (q - 1) / g).is_one();
            std::ostringstream msg;
            msg << "Z^" << n << " - f is reducible: every multiplicity is divisible by " << d
                << (unit_is_dth_power ? " and f is a d-th power"
                                      : " (geometrically reducible: constant-field extension)")
                << "; reduce n";
            throw CurveError(CurveErrorKind::ReduciblePolynomial, msg.str(), d);
        }
    }

    // Reduce multiplicities mod n; parts with j = 0 mod n are absorbed into
    // the discarded n-th-power factor, leaving the function field unchanged.
    SquareFreeDecomposition reduced{dec.unit, {}};
    Polynomial discarded = Polynomial::one(field);
    for (const auto& [j, part] : dec.parts) {
        const unsigned r = j % n;
        const unsigned c = j / n;
        if (c > 0) discarded = discarded * poly_pow(part, c);
        if (r > 0) {
            auto it = reduced.parts.find(r);
            if (it == reduced.parts.end())
                reduced.parts.emplace(r, part);
            else
                it->second = it->second * part;
        }
    }
    if (reduced.parts.empty())
        throw internal_error("reduction emptied a geometrically irreducible cover");

    Polynomial f_reduced = reduced.reassemble();
    return KummerCurve(field, n, std::move(f_reduced), std::move(reduced), std::move(discarded));
}

RamificationProfile ramification_profile(const KummerCurve& curve) {
    const unsigned n = curve.n();
    const long long deg_f = static_cast<long long>(curve.f().degree());
    RamificationProfile out;
    out.m.reserve(n - 1);
    long long sum = 0;
    for (unsigned i = 1; i < n; ++i) {
        long long m_i = (static_cast<long long>(i) * deg_f + n - 1) / n;  // ceil
        for (const auto& [j, part] : curve.decomposition().parts)
            m_i -= static_cast<long long>(part.degree()) *
                   ((static_cast<long long>(j) * i) / n);
        if (m_i < 1) throw internal_error("ramification count m_i < 1 on a valid curve");
        out.m.push_back(m_i);
        sum += m_i;
    }
    out.genus = sum - n + 1;
    if (out.genus < 0) throw internal_error("negative genus");
    if (2 * out.genus > static_cast<long long>(n - 1) * (deg_f - 1))
        throw internal_error("genus exceeds (n-1)(deg f - 1)/2");
    return out;
}

FrobeniusExponents frobenius_exponents(const KummerCurve& curve, unsigned i) {
    const unsigned n = curve.n();
    if (i < 1 || i >= n) throw std::invalid_argument("residue i out of range 1..n-1");
    const long long p = static_cast<long long>(curve.field()->p());
    FrobeniusExponents out;
    out.i_prime = static_cast<unsigned>((p % n) * i % n);
    out.pow_f = p * i / n;
    for (const auto& [j, part] : curve.decomposition().parts) {
        const long long jj = j;
        const long long e = jj * out.pow_f - p * ((jj * i) / n) +
                            (jj * out.i_prime) / n;
        if (e < 0) throw internal_error("negative Q_i exponent");
        out.e.emplace_back(j, e);
        out.degree += static_cast<long long>(part.degree()) * e;
    }
    return out;
}

std::pair<Polynomial, unsigned> frobenius_polynomial(const KummerCurve& curve, unsigned i) {
    const FrobeniusExponents ex = frobenius_exponents(curve, i);
    Polynomial q = Polynomial::constant(pow(curve.decomposition().unit,
                                            static_cast<std::uint64_t>(ex.pow_f)));
    auto it = ex.e.begin();
    for (const auto& [j, part] : curve.decomposition().parts) {
        q = q * poly_pow(part, static_cast<std::uint64_t>(it->second));
        ++it;
    }
    return {std::move(q), ex.i_prime};
}

HasseWitt hasse_witt_matrix(const KummerCurve& curve) {
    const unsigned n = curve.n();
    const RamificationProfile profile = ramification_profile(curve);
    std::vector<BlockIndex> blocks(n - 1);
    long long offset = 0;
    for (unsigned i = 1; i < n; ++i) {
        BlockIndex& b = blocks[i - 1];
        b.i = i;
        b.dim = std::max<long long>(profile.m_at(i) - 1, 0);
        b.offset = offset;
        offset += b.dim;
    }
    if (offset != profile.genus) throw internal_error("block offsets do not total the genus");

    const long long p = static_cast<long long>(curve.field()->p());
    TwistedMatrix m(curve.field(), static_cast<std::size_t>(profile.genus), 1);
    for (unsigned i = 1; i < n; ++i) {
        const BlockIndex& src = blocks[i - 1];
        if (src.dim == 0) continue;
        auto [q_i, i_prime] = frobenius_polynomial(curve, i);
        const BlockIndex& dst = blocks[i_prime - 1];
        if (dst.dim == 0) continue;  // the whole block maps to zero
        for (long long t = 1; t <= src.dim; ++t)
            for (long long w = 1; w <= dst.dim; ++w) {
                FieldElement c = q_i.coeff_at(p * t - w);
                if (!c.is_zero())
                    m.set(static_cast<std::size_t>(dst.offset + w - 1),
                          static_cast<std::size_t>(src.offset + t - 1), std::move(c));
            }
    }
    return {std::move(m), std::move(blocks)};
}

}  // namespace kummer
