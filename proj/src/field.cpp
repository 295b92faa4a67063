#include "kummer/field.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kummer {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Minimal F_p[x] arithmetic on raw coefficient vectors (constant first),
// used only for the modulus search. The full Polynomial type lives above
// this layer and cannot be used here.
using FpPoly = std::vector<std::uint32_t>;

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
    fp_trim(r);
    return r;
}

// a mod f, f monic.
FpPoly fp_mod(FpPoly a, const FpPoly& f, std::uint64_t p) {
    fp_trim(a);
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        const std::uint64_t c = a.back();
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t j = 0; j < f.size(); ++j) {
            std::uint64_t sub = (c * f[j]) % p;
            std::uint64_t cur = a[shift + j];
            a[shift + j] = static_cast<std::uint32_t>((cur + p - sub) % p);
        }
        fp_trim(a);
    }
    return a;
}

FpPoly fp_powmod(FpPoly base, std::uint64_t e, const FpPoly& f, std::uint64_t p) {
    FpPoly r{1};
    base = fp_mod(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) r = fp_mod(fp_mul(r, base, p), f, p);
        base = fp_mod(fp_mul(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        a = fp_mod(std::move(a), [&] {
            // make b monic for fp_mod
            FpPoly m = b;
            std::uint64_t lead = m.back();
            if (lead != 1) {
                // lead^-1 via Fermat
                std::uint64_t invl = 1, base = lead, e = p - 2;
                while (e > 0) {
                    if (e & 1) invl = (invl * base) % p;
                    base = (base * base) % p;
                    e >>= 1;
                }
                for (auto& c : m) c = static_cast<std::uint32_t>((std::uint64_t(c) * invl) % p);
            }
            return m;
        }(), p);
        std::swap(a, b);
    }
    return a;
}

// f monic of degree k: irreducible over F_p iff it has no irreducible factor
// of degree <= k/2, i.e. gcd(f, x^(p^i) - x) = 1 for i = 1..k/2.
bool fp_irreducible(const FpPoly& f, std::uint64_t p) {
    const std::size_t k = f.size() - 1;
    if (k == 1) return true;
    FpPoly xp{0, 1};  // running x^(p^i) mod f
    for (std::size_t i = 1; 2 * i <= k; ++i) {
        xp = fp_powmod(std::move(xp), p, f, p);
        FpPoly diff = xp;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
        fp_trim(diff);
        FpPoly g = fp_gcd(f, diff, p);
        if (!(g.size() == 1)) return false;
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree k, comparing the
// coefficient tuple (c_{k-1}, ..., c_0).
std::vector<std::uint32_t> find_modulus(std::uint64_t p, unsigned k) {
    std::vector<std::uint32_t> c(k, 0);  // c[0] = c_{k-1}, ..., c[k-1] = c_0
    for (;;) {
        FpPoly f(k + 1, 0);
        f[k] = 1;
        for (unsigned i = 0; i < k; ++i) f[k - 1 - i] = c[i];
        if (fp_irreducible(f, p)) return f;
        // odometer with c_0 (the last tuple position) fastest
        int pos = static_cast<int>(k) - 1;
        while (pos >= 0) {
            if (++c[pos] < p) break;
            c[pos] = 0;
            --pos;
        }
        if (pos < 0) throw std::logic_error("no irreducible polynomial found");
    }
}

}  // namespace

Field::Field(std::uint64_t p, unsigned k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {}

FieldPtr Field::make(std::uint64_t p, unsigned k) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (p >= (std::uint64_t(1) << 31)) throw std::invalid_argument("characteristic too large");
    if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
    return FieldPtr(new Field(p, k, find_modulus(p, k)));
}

std::uint64_t Field::order() const {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k_; ++i) {
        if (q > (std::uint64_t(1) << 63) / p_) throw std::overflow_error("field order exceeds 2^63");
        q *= p_;
    }
    return q;
}

bool Field::same(const Field& other) const noexcept {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
}

FieldElement Field::zero() const {
    return FieldElement(shared_from_this(), std::vector<std::uint32_t>(k_, 0));
}

FieldElement Field::one() const {
    std::vector<std::uint32_t> c(k_, 0);
    c[0] = 1;
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Field::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    std::vector<std::uint32_t> c(k_, 0);
    c[0] = static_cast<std::uint32_t>(r);
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Field::element(std::vector<std::uint64_t> coords) const {
    if (coords.size() > k_) throw std::invalid_argument("too many coordinates for field element");
    std::vector<std::uint32_t> c(k_, 0);
    for (std::size_t i = 0; i < coords.size(); ++i)
        c[i] = static_cast<std::uint32_t>(coords[i] % p_);
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Field::nth(std::uint64_t m) const {
    std::vector<std::uint32_t> c(k_, 0);
    for (unsigned i = 0; i < k_ && m > 0; ++i) {
        c[i] = static_cast<std::uint32_t>(m % p_);
        m /= p_;
    }
    if (m > 0) throw std::out_of_range("element index exceeds field order");
    return FieldElement(shared_from_this(), std::move(c));
}

std::string Field::name() const {
    std::ostringstream os;
    os << "F_" << order();
    return os.str();
}

namespace {

const Field& check_same(const FieldElement& a, const FieldElement& b) {
    if (!a.field() || !b.field()) throw std::invalid_argument("element without a field");
    if (!a.field()->same(*b.field()))
        throw std::invalid_argument("elements belong to different fields");
    return *a.field();
}

}  // namespace

FieldElement::FieldElement(FieldPtr field, std::vector<std::uint32_t> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (!field_) throw std::invalid_argument("element without a field");
    if (coords_.size() != field_->k()) throw std::invalid_argument("coordinate count mismatch");
}

bool FieldElement::is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](std::uint32_t c) { return c == 0; });
}

bool FieldElement::is_one() const noexcept {
    if (coords_[0] != 1) return false;
    return std::all_of(coords_.begin() + 1, coords_.end(), [](std::uint32_t c) { return c == 0; });
}

std::uint64_t FieldElement::as_integer() const {
    if (field_->k() != 1) throw std::logic_error("as_integer requires a prime field");
    return coords_[0];
}

FieldElement FieldElement::operator-() const {
    const std::uint64_t p = field_->p();
    std::vector<std::uint32_t> c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = static_cast<std::uint32_t>((p - coords_[i]) % p);
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    const Field& F = check_same(*this, rhs);
    const std::uint64_t p = F.p();
    std::vector<std::uint32_t> c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = static_cast<std::uint32_t>((std::uint64_t(coords_[i]) + rhs.coords_[i]) % p);
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    const Field& F = check_same(*this, rhs);
    const std::uint64_t p = F.p();
    std::vector<std::uint32_t> c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = static_cast<std::uint32_t>((std::uint64_t(coords_[i]) + p - rhs.coords_[i]) % p);
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    const Field& F = check_same(*this, rhs);
    const std::uint64_t p = F.p();
    const unsigned k = F.k();
    if (k == 1) {
        std::uint64_t v = (std::uint64_t(coords_[0]) * rhs.coords_[0]) % p;
        return FieldElement(field_, {static_cast<std::uint32_t>(v)});
    }
    // schoolbook product, then reduction by the monic modulus
    std::vector<std::uint64_t> prod(2 * k - 1, 0);
    for (unsigned i = 0; i < k; ++i) {
        if (coords_[i] == 0) continue;
        for (unsigned j = 0; j < k; ++j)
            prod[i + j] = (prod[i + j] + std::uint64_t(coords_[i]) * rhs.coords_[j]) % p;
    }
    const auto& mod = F.modulus();
    for (unsigned i = 2 * k - 2; i >= k; --i) {
        const std::uint64_t c = prod[i];
        if (c != 0) {
            prod[i] = 0;
            for (unsigned j = 0; j < k; ++j)
                prod[i - k + j] = (prod[i - k + j] + (p - (c * mod[j]) % p)) % p;
        }
        if (i == k) break;
    }
    std::vector<std::uint32_t> c(k);
    for (unsigned i = 0; i < k; ++i) c[i] = static_cast<std::uint32_t>(prod[i]);
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    return *this * inv(rhs);
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    check_same(*this, rhs);
    return coords_ == rhs.coords_;
}

FieldElement inv(const FieldElement& a) {
    if (a.is_zero()) throw std::domain_error("inversion of zero");
    const Field& F = *a.field();
    const std::uint64_t p = F.p();
    if (F.k() == 1) {
        std::uint64_t r = 1, base = a.coords()[0], e = p - 2;
        while (e > 0) {
            if (e & 1) r = (r * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        return FieldElement(a.field(), {static_cast<std::uint32_t>(r)});
    }
    // extended Euclid in F_p[x] against the modulus
    FpPoly r0(F.modulus().begin(), F.modulus().end());
    FpPoly r1(a.coords().begin(), a.coords().end());
    fp_trim(r1);
    FpPoly s0{}, s1{1};
    auto inv_mod_p = [p](std::uint64_t v) {
        std::uint64_t r = 1, base = v, e = p - 2;
        while (e > 0) {
            if (e & 1) r = (r * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        return r;
    };
    while (!r1.empty()) {
        // divide r0 by r1
        FpPoly q;
        FpPoly rem = r0;
        const std::uint64_t lead_inv = inv_mod_p(r1.back());
        while (rem.size() >= r1.size() && !rem.empty()) {
            const std::size_t shift = rem.size() - r1.size();
            const std::uint64_t c = (std::uint64_t(rem.back()) * lead_inv) % p;
            if (q.size() < shift + 1) q.resize(shift + 1, 0);
            q[shift] = static_cast<std::uint32_t>(c);
            for (std::size_t j = 0; j < r1.size(); ++j) {
                std::uint64_t sub = (c * r1[j]) % p;
                rem[shift + j] = static_cast<std::uint32_t>((rem[shift + j] + p - sub) % p);
            }
            fp_trim(rem);
        }
        // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
        FpPoly qs = fp_mul(q, s1, p);
        FpPoly s2 = s0;
        if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
        for (std::size_t j = 0; j < qs.size(); ++j)
            s2[j] = static_cast<std::uint32_t>((std::uint64_t(s2[j]) + p - qs[j]) % p);
        fp_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (a unit since the modulus is irreducible); normalize
    const std::uint64_t scale = inv_mod_p(r0.back());
    std::vector<std::uint32_t> c(F.k(), 0);
    for (std::size_t i = 0; i < s0.size(); ++i)
        c[i] = static_cast<std::uint32_t>((std::uint64_t(s0[i]) * scale) % p);
    return FieldElement(a.field(), std::move(c));
}

FieldElement pow(const FieldElement& a, std::uint64_t e) {
    FieldElement r = a.field()->one();
    FieldElement base = a;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

FieldElement frobenius(const FieldElement& a, unsigned e) {
    FieldElement r = a;
    const std::uint64_t p = a.field()->p();
    for (unsigned i = 0; i < e; ++i) r = pow(r, p);
    return r;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
    if (a.field()->k() == 1) return os << a.coords()[0];
    os << '[';
    for (std::size_t i = 0; i < a.coords().size(); ++i) {
        if (i) os << ',';
        os << a.coords()[i];
    }
    return os << ']';
}

}  // namespace kummer
