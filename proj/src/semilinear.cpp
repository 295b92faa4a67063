#include "kummer/semilinear.hpp"

#include <algorithm>
#include <stdexcept>

#include "kummer/curve.hpp"

namespace kummer {

TwistedMatrix::TwistedMatrix(FieldPtr field, std::size_t size, unsigned twist)
    : field_(std::move(field)), size_(size), twist_(twist) {
    if (!field_) throw std::invalid_argument("matrix without a field");
    a_.assign(size_ * size_, field_->zero());
}

TwistedMatrix TwistedMatrix::identity(const FieldPtr& field, std::size_t size) {
    TwistedMatrix m(field, size, 0);
    for (std::size_t i = 0; i < size; ++i) m.set(i, i, field->one());
    return m;
}

const FieldElement& TwistedMatrix::at(std::size_t row, std::size_t col) const {
    if (row >= size_ || col >= size_) throw std::out_of_range("matrix index");
    return a_[row * size_ + col];
}

void TwistedMatrix::set(std::size_t row, std::size_t col, FieldElement v) {
    if (row >= size_ || col >= size_) throw std::out_of_range("matrix index");
    if (!v.field()->same(*field_)) throw std::invalid_argument("entry from a different field");
    a_[row * size_ + col] = std::move(v);
}

bool TwistedMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const FieldElement& e) { return e.is_zero(); });
}

std::vector<FieldElement> TwistedMatrix::apply(const std::vector<FieldElement>& v) const {
    if (v.size() != size_) throw std::invalid_argument("vector size mismatch");
    std::vector<FieldElement> tw;
    tw.reserve(size_);
    for (const auto& x : v) tw.push_back(frobenius(x, twist_));
    std::vector<FieldElement> out(size_, field_->zero());
    for (std::size_t r = 0; r < size_; ++r)
        for (std::size_t c = 0; c < size_; ++c)
            if (!a_[r * size_ + c].is_zero()) out[r] += a_[r * size_ + c] * tw[c];
    return out;
}

TwistedMatrix TwistedMatrix::entrywise_frobenius(unsigned e) const {
    TwistedMatrix m(field_, size_, twist_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        m.a_[i] = frobenius(a_[i], e);
    return m;
}

TwistedMatrix TwistedMatrix::grid_product(const TwistedMatrix& rhs, unsigned result_twist) const {
    if (!field_->same(*rhs.field_)) throw std::invalid_argument("matrices over different fields");
    if (size_ != rhs.size_) throw std::invalid_argument("matrix size mismatch");
    TwistedMatrix out(field_, size_, result_twist);
    for (std::size_t r = 0; r < size_; ++r)
        for (std::size_t k = 0; k < size_; ++k) {
            const FieldElement& lhs_rk = a_[r * size_ + k];
            if (lhs_rk.is_zero()) continue;
            for (std::size_t c = 0; c < size_; ++c) {
                const FieldElement& rhs_kc = rhs.a_[k * size_ + c];
                if (!rhs_kc.is_zero()) out.a_[r * size_ + c] += lhs_rk * rhs_kc;
            }
        }
    return out;
}

bool TwistedMatrix::operator==(const TwistedMatrix& rhs) const {
    if (!field_->same(*rhs.field_) || size_ != rhs.size_ || twist_ != rhs.twist_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!(a_[i] == rhs.a_[i])) return false;
    return true;
}

std::size_t rank(const TwistedMatrix& m) {
    const std::size_t g = m.size();
    std::vector<FieldElement> a;
    a.reserve(g * g);
    for (std::size_t r = 0; r < g; ++r)
        for (std::size_t c = 0; c < g; ++c) a.push_back(m.at(r, c));

    std::size_t rk = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < g && row < g; ++col) {
        std::size_t pivot = row;
        while (pivot < g && a[pivot * g + col].is_zero()) ++pivot;
        if (pivot == g) continue;
        if (pivot != row)
            for (std::size_t c = col; c < g; ++c) std::swap(a[pivot * g + c], a[row * g + c]);
        const FieldElement piv_inv = inv(a[row * g + col]);
        for (std::size_t r = row + 1; r < g; ++r) {
            if (a[r * g + col].is_zero()) continue;
            const FieldElement factor = a[r * g + col] * piv_inv;
            for (std::size_t c = col; c < g; ++c)
                a[r * g + c] -= factor * a[row * g + c];
        }
        ++row;
        ++rk;
    }
    return rk;
}

TwistedMatrix twisted_product(const TwistedMatrix& m, unsigned iterations) {
    if (iterations == 0) return TwistedMatrix::identity(m.field(), m.size());
    const unsigned e = m.twist();
    TwistedMatrix out = m;
    for (unsigned step = 1; step < iterations; ++step)
        out = out.grid_product(m.entrywise_frobenius(step * e), (step + 1) * e);
    return out;
}

SemilinearInvariants invariants(const TwistedMatrix& m) {
    const std::size_t g = m.size();
    SemilinearInvariants out;
    out.genus_zero = (g == 0);
    out.rank = rank(m);
    out.a_number = g - out.rank;
    out.superspecial = m.is_zero();
    if (g == 0) {
        out.p_rank = 0;
        out.index = 0;
        out.nilpotent = true;
        return out;
    }
    out.p_rank = rank(twisted_product(m, static_cast<unsigned>(g)));
    out.nilpotent = (out.p_rank == 0);

    // index: smallest iteration count with stable rank, counting from F^0 = id
    std::size_t prev = g;
    for (unsigned it = 1;; ++it) {
        const std::size_t cur = rank(twisted_product(m, it));
        if (cur == prev) {
            out.index = it - 1;
            break;
        }
        prev = cur;
        if (it > g + 1) throw internal_error("semilinear rank failed to stabilize by g iterations");
    }
    return out;
}

std::size_t orbit_restricted_rank(const TwistedMatrix& m, const std::vector<BlockIndex>& blocks,
                                  const std::vector<unsigned>& orbit, unsigned iterations,
                                  unsigned n, unsigned representative) {
    if (orbit.empty()) throw std::invalid_argument("empty orbit");
    const std::uint64_t p = m.field()->p();
    for (unsigned s : orbit) {
        if (s < 1 || s >= n) throw std::invalid_argument("orbit member out of range");
        const unsigned next = static_cast<unsigned>((p % n) * s % n);
        if (std::find(orbit.begin(), orbit.end(), next) == orbit.end())
            throw std::invalid_argument("orbit not closed under multiplication by p");
    }
    unsigned rep = representative;
    if (rep == 0) rep = *std::min_element(orbit.begin(), orbit.end());
    else if (std::find(orbit.begin(), orbit.end(), rep) == orbit.end())
        throw std::invalid_argument("representative not in orbit");

    unsigned image = rep;
    for (unsigned it = 0; it < iterations; ++it)
        image = static_cast<unsigned>((p % n) * image % n);

    const BlockIndex& src = blocks.at(rep - 1);
    const BlockIndex& dst = blocks.at(image - 1);
    if (src.dim == 0 || dst.dim == 0) return 0;

    const TwistedMatrix power = twisted_product(m, iterations);
    TwistedMatrix sub(m.field(), static_cast<std::size_t>(std::max(src.dim, dst.dim)), 0);
    for (long long r = 0; r < dst.dim; ++r)
        for (long long c = 0; c < src.dim; ++c)
            sub.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c),
                    power.at(static_cast<std::size_t>(dst.offset + r),
                             static_cast<std::size_t>(src.offset + c)));
    return rank(sub);
}

}  // namespace kummer
