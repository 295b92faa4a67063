#include "kummer/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kummer {

Polynomial::Polynomial(FieldPtr field) : field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("polynomial without a field");
}

Polynomial::Polynomial(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) throw std::invalid_argument("polynomial without a field");
    for (const auto& c : coeffs_)
        if (!c.field()->same(*field_))
            throw std::invalid_argument("coefficient from a different field");
    trim();
}

Polynomial Polynomial::one(const FieldPtr& field) {
    return Polynomial(field, {field->one()});
}

Polynomial Polynomial::x(const FieldPtr& field) {
    return Polynomial(field, {field->zero(), field->one()});
}

Polynomial Polynomial::constant(FieldElement c) {
    FieldPtr f = c.field();
    return Polynomial(f, {std::move(c)});
}

Polynomial Polynomial::monomial(FieldElement c, std::size_t e) {
    FieldPtr f = c.field();
    std::vector<FieldElement> v(e + 1, f->zero());
    v[e] = std::move(c);
    return Polynomial(f, std::move(v));
}

Polynomial Polynomial::from_ints(const FieldPtr& field, const std::vector<std::int64_t>& coeffs) {
    std::vector<FieldElement> v;
    v.reserve(coeffs.size());
    for (auto c : coeffs) v.push_back(field->from_int(c));
    return Polynomial(field, std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::size_t Polynomial::degree() const {
    if (is_zero()) throw std::logic_error("degree of the zero polynomial");
    return coeffs_.size() - 1;
}

const FieldElement& Polynomial::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

FieldElement Polynomial::coeff_at(long long e) const {
    if (e < 0 || e >= static_cast<long long>(coeffs_.size())) return field_->zero();
    return coeffs_[static_cast<std::size_t>(e)];
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    if (!field_->same(*rhs.field_)) throw std::invalid_argument("polynomials over different fields");
    std::vector<FieldElement> v;
    const std::size_t n = std::max(coeffs_.size(), rhs.coeffs_.size());
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < coeffs_.size() && i < rhs.coeffs_.size())
            v.push_back(coeffs_[i] + rhs.coeffs_[i]);
        else if (i < coeffs_.size())
            v.push_back(coeffs_[i]);
        else
            v.push_back(rhs.coeffs_[i]);
    }
    return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    if (!field_->same(*rhs.field_)) throw std::invalid_argument("polynomials over different fields");
    std::vector<FieldElement> v;
    const std::size_t n = std::max(coeffs_.size(), rhs.coeffs_.size());
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < coeffs_.size() && i < rhs.coeffs_.size())
            v.push_back(coeffs_[i] - rhs.coeffs_[i]);
        else if (i < coeffs_.size())
            v.push_back(coeffs_[i]);
        else
            v.push_back(-rhs.coeffs_[i]);
    }
    return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (!field_->same(*rhs.field_)) throw std::invalid_argument("polynomials over different fields");
    if (is_zero() || rhs.is_zero()) return Polynomial(field_);
    std::vector<FieldElement> v(coeffs_.size() + rhs.coeffs_.size() - 1, field_->zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j].is_zero()) continue;
            v[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::operator*(const FieldElement& scalar) const {
    if (scalar.is_zero()) return Polynomial(field_);
    std::vector<FieldElement> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(c * scalar);
    return Polynomial(field_, std::move(v));
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    if (!field_->same(*rhs.field_)) throw std::invalid_argument("polynomials over different fields");
    if (coeffs_.size() != rhs.coeffs_.size()) return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!(coeffs_[i] == rhs.coeffs_[i])) return false;
    return true;
}

FieldElement Polynomial::eval(const FieldElement& at) const {
    FieldElement r = field_->zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * at + *it;
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero() || leading().is_one()) return *this;
    return *this * inv(leading());
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    const FieldPtr& F = a.field();
    if (!F->same(*b.field())) throw std::invalid_argument("polynomials over different fields");
    if (a.is_zero() || a.degree() < b.degree())
        return {Polynomial(F), a};
    std::vector<FieldElement> rem = a.coeffs();
    const std::size_t db = b.degree();
    std::vector<FieldElement> q(a.degree() - db + 1, F->zero());
    const FieldElement lead_inv = inv(b.leading());
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i].is_zero()) continue;
        const FieldElement c = rem[i] * lead_inv;
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            rem[i - db + j] -= c * b.coeffs()[j];
    }
    return {Polynomial(F, std::move(q)), Polynomial(F, std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial derivative(const Polynomial& f) {
    const FieldPtr& F = f.field();
    if (f.is_zero() || f.degree() == 0) return Polynomial(F);
    std::vector<FieldElement> v;
    v.reserve(f.degree());
    for (std::size_t i = 1; i < f.coeffs().size(); ++i)
        v.push_back(f.coeffs()[i] * F->from_int(static_cast<std::int64_t>(i % F->p())));
    return Polynomial(F, std::move(v));
}

Polynomial poly_pow(const Polynomial& f, std::uint64_t e) {
    Polynomial r = Polynomial::one(f.field());
    Polynomial base = f;
    while (e > 0) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

Polynomial pth_root(const Polynomial& f) {
    const FieldPtr& F = f.field();
    if (f.is_zero()) return f;
    const std::uint64_t p = F->p();
    std::vector<FieldElement> v;
    v.reserve(f.degree() / p + 1);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i % p == 0) {
            v.push_back(frobenius(f.coeffs()[i], F->k() == 0 ? 0 : F->k() - 1));
        } else if (!f.coeffs()[i].is_zero()) {
            throw std::domain_error("polynomial is not a p-th power");
        }
    }
    return Polynomial(F, std::move(v));
}

bool is_squarefree(const Polynomial& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    Polynomial d = derivative(f);
    if (d.is_zero()) return false;  // p-th power over a perfect field
    return gcd(f, d).is_one();
}

Polynomial SquareFreeDecomposition::reassemble() const {
    Polynomial r = Polynomial::constant(unit);
    for (const auto& [j, part] : parts) r = r * poly_pow(part, j);
    return r;
}

namespace {

void merge_part(std::map<unsigned, Polynomial>& parts, unsigned j, const Polynomial& g) {
    if (g.is_one()) return;
    auto it = parts.find(j);
    if (it == parts.end())
        parts.emplace(j, g);
    else
        it->second = it->second * g;
}

// Recursion on monic input; multiplicities recorded scaled by `scale`.
void sff_monic(const Polynomial& f, unsigned scale, std::map<unsigned, Polynomial>& parts) {
    const FieldPtr& F = f.field();
    const std::uint64_t p = F->p();
    if (f.degree() == 0) return;
    Polynomial d = derivative(f);
    if (d.is_zero()) {
        sff_monic(pth_root(f), scale * static_cast<unsigned>(p), parts);
        return;
    }
    Polynomial c = gcd(f, d);
    Polynomial w = divrem(f, c).first;
    unsigned i = 1;
    while (!w.is_one()) {
        Polynomial y = gcd(w, c);
        Polynomial z = divrem(w, y).first;
        merge_part(parts, i * scale, z);
        ++i;
        w = std::move(y);
        c = divrem(c, w).first;
    }
    if (!c.is_one()) sff_monic(pth_root(c), scale * static_cast<unsigned>(p), parts);
}

}  // namespace

SquareFreeDecomposition squarefree_decompose(const Polynomial& f) {
    if (f.is_zero()) throw std::domain_error("square-free decomposition of zero");
    SquareFreeDecomposition out{f.leading(), {}};
    sff_monic(f.monic(), 1, out.parts);
    return out;
}

std::string to_text(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        const FieldElement& c = f.coeffs()[i];
        if (c.is_zero()) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << c;
        } else {
            if (!c.is_one()) os << c << '*';
            os << 'x';
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
    return os << to_text(f);
}

}  // namespace kummer
