#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kummer/field.hpp"

namespace kummer {

struct BlockIndex;

/// Square matrix over F_{p^k} together with a twist e: the represented map
/// sends a coordinate vector v to entries * (v raised entrywise to p^e).
/// A freshly built Frobenius matrix has twist 1; twisted products record the
/// composition length in the twist.
class TwistedMatrix {
public:
    TwistedMatrix(FieldPtr field, std::size_t size, unsigned twist = 1);

    static TwistedMatrix identity(const FieldPtr& field, std::size_t size);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t size() const noexcept { return size_; }
    unsigned twist() const noexcept { return twist_; }

    const FieldElement& at(std::size_t row, std::size_t col) const;
    void set(std::size_t row, std::size_t col, FieldElement v);

    bool is_zero() const;
    /// The represented semilinear action on a coordinate vector.
    std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;

    /// Entrywise p^e power (the sigma^e conjugate of the grid).
    TwistedMatrix entrywise_frobenius(unsigned e) const;
    /// Plain grid product (no twisting); twist of the result is given.
    TwistedMatrix grid_product(const TwistedMatrix& rhs, unsigned result_twist) const;

    bool operator==(const TwistedMatrix& rhs) const;

private:
    FieldPtr field_;
    std::size_t size_;
    unsigned twist_;
    std::vector<FieldElement> a_;  // row-major
};

/// Rank of the entry grid over F_{p^k} by Gaussian elimination, pivoting on
/// the first nonzero entry scanning rows top-down.
std::size_t rank(const TwistedMatrix& m);

/// Matrix of the m-th iterate: M * M^(sigma^e) * M^(sigma^2e) * ... with
/// e = twist of M; m = 0 gives the identity (twist 0).
TwistedMatrix twisted_product(const TwistedMatrix& m, unsigned iterations);

struct SemilinearInvariants {
    std::size_t rank = 0;
    std::size_t a_number = 0;
    std::size_t p_rank = 0;
    std::size_t index = 0;
    bool nilpotent = false;
    bool superspecial = false;
    bool genus_zero = false;
};

/// rank/a-number via Gaussian elimination, p-rank as rank of the g-th
/// twisted iterate, index as the first m >= 0 with rk(F^m) = rk(F^{m+1})
/// (F^0 = identity).
SemilinearInvariants invariants(const TwistedMatrix& m);

/// Rank of the submatrix of the m-th iterate whose columns are the block of
/// the chosen representative of `orbit` (smallest when `representative` is 0)
/// and whose rows are its image block. `blocks` is indexed by residue i-1.
/// Throws std::invalid_argument when the orbit is not closed under
/// multiplication by p mod n.
std::size_t orbit_restricted_rank(const TwistedMatrix& m, const std::vector<BlockIndex>& blocks,
                                  const std::vector<unsigned>& orbit, unsigned iterations,
                                  unsigned n, unsigned representative = 0);

}  // namespace kummer
