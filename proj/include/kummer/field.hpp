#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace kummer {

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

/// The finite field F_{p^k} with a fixed defining polynomial.
///
/// The modulus is the lexicographically smallest monic irreducible of degree
/// k over F_p, comparing coefficient tuples (c_{k-1}, ..., c_0). Construction
/// is therefore deterministic: two fields built with the same (p, k) agree
/// coordinate for coordinate, and elements of either interoperate.
class Field : public std::enable_shared_from_this<Field> {
public:
    /// Builds F_{p^k}. Throws std::invalid_argument if p is not prime,
    /// p >= 2^31, or k < 1.
    static FieldPtr make(std::uint64_t p, unsigned k = 1);

    std::uint64_t p() const noexcept { return p_; }
    unsigned k() const noexcept { return k_; }
    /// Field size p^k; throws std::overflow_error if it exceeds 2^63.
    std::uint64_t order() const;
    /// Defining polynomial, constant coordinate first, length k+1, monic.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    /// Image of an integer under Z -> F_p included in F_{p^k}.
    FieldElement from_int(std::int64_t v) const;
    /// Element with the given power-basis coordinates, constant first.
    /// Coordinates are reduced mod p; at most k of them.
    FieldElement element(std::vector<std::uint64_t> coords) const;
    /// The m-th element in coordinate-odometer order (m < order()), used by
    /// exhaustive enumerations.
    FieldElement nth(std::uint64_t m) const;

    /// Structural equality of (p, k, modulus).
    bool same(const Field& other) const noexcept;
    std::string name() const;  // "F_13", "F_121", ...

private:
    Field(std::uint64_t p, unsigned k, std::vector<std::uint32_t> modulus);

    std::uint64_t p_;
    unsigned k_;
    std::vector<std::uint32_t> modulus_;

    friend class FieldElement;
};

/// Immutable element of a Field. Carries its owner; operations on elements of
/// different fields throw std::invalid_argument rather than coercing.
class FieldElement {
public:
    FieldElement(FieldPtr field, std::vector<std::uint32_t> coords);

    const FieldPtr& field() const noexcept { return field_; }
    /// Power-basis coordinates, constant first, always k entries in [0, p).
    const std::vector<std::uint32_t>& coords() const noexcept { return coords_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    /// The coordinate value for prime-field elements (k == 1 only).
    std::uint64_t as_integer() const;

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
    FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
    FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

private:
    FieldPtr field_;
    std::vector<std::uint32_t> coords_;
};

/// Multiplicative inverse; throws std::domain_error on zero.
FieldElement inv(const FieldElement& a);
/// a^e by square-and-multiply, e >= 0 (a^0 = 1, including a = 0).
FieldElement pow(const FieldElement& a, std::uint64_t e);
/// a^(p^e): the p-power Frobenius endomorphism iterated e times.
FieldElement frobenius(const FieldElement& a, unsigned e = 1);

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

}  // namespace kummer
