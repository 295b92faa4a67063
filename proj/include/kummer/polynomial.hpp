#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kummer/field.hpp"

namespace kummer {

/// Dense univariate polynomial over a Field. Coefficient index = exponent,
/// trailing zeros trimmed; the zero polynomial has an empty coefficient list
/// and no degree (degree() throws on it rather than returning a sentinel).
class Polynomial {
public:
    explicit Polynomial(FieldPtr field);  // zero polynomial
    Polynomial(FieldPtr field, std::vector<FieldElement> coeffs);

    static Polynomial zero(const FieldPtr& field) { return Polynomial(field); }
    static Polynomial one(const FieldPtr& field);
    static Polynomial x(const FieldPtr& field);
    static Polynomial constant(FieldElement c);
    static Polynomial monomial(FieldElement c, std::size_t e);
    /// Polynomial with prime-subfield coefficients, constant first.
    static Polynomial from_ints(const FieldPtr& field, const std::vector<std::int64_t>& coeffs);

    const FieldPtr& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_monic() const { return !is_zero() && leading().is_one(); }
    /// Degree of a nonzero polynomial; throws std::logic_error on zero.
    std::size_t degree() const;
    const FieldElement& leading() const;
    /// Coefficient of x^e; zero outside [0, degree].
    FieldElement coeff_at(long long e) const;
    const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const FieldElement& scalar) const;
    bool operator==(const Polynomial& rhs) const;
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    FieldElement eval(const FieldElement& at) const;
    Polynomial monic() const;

private:
    void trim();

    FieldPtr field_;
    std::vector<FieldElement> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on zero divisor.
std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);
/// Formal derivative.
Polynomial derivative(const Polynomial& f);
/// f^e by square-and-multiply (f^0 = 1).
Polynomial poly_pow(const Polynomial& f, std::uint64_t e);
/// Exact p-th root of a polynomial whose exponents are all divisible by p
/// (coefficientwise root = frobenius(., k-1)); throws otherwise.
Polynomial pth_root(const Polynomial& f);
bool is_squarefree(const Polynomial& f);

/// f = unit * prod_j parts[j]^j with the parts monic, square-free,
/// nonconstant and pairwise coprime.
struct SquareFreeDecomposition {
    FieldElement unit;
    std::map<unsigned, Polynomial> parts;

    Polynomial reassemble() const;
};

/// Square-free decomposition valid in characteristic p: the gcd-detectable
/// multiplicities are split off first, and the residual p-th-power part is
/// handled by taking its exact p-th root and recursing with multiplicities
/// scaled by p. Throws std::domain_error on the zero polynomial.
SquareFreeDecomposition squarefree_decompose(const Polynomial& f);

/// Canonical text form, descending exponents, grammar-compatible for
/// prime-subfield coefficients ("x^5+4*x", "0").
std::string to_text(const Polynomial& f);

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

}  // namespace kummer
