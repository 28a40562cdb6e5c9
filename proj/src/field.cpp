#include "wheelzeta/field.hpp"

#include "wheelzeta/errors.hpp"

namespace wheelzeta {

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

// Remainder of a modulo monic m over F_p.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        if (lead != 0)
            for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
        a.pop_back();
    }
    return a;
}

bool poly_is_zero(const Poly& a) {
    for (auto c : a)
        if (c) return false;
    return true;
}

Poly monic_from_index(std::uint64_t idx, std::uint32_t p, unsigned degree) {
    Poly f(degree + 1, 0);
    for (unsigned i = 0; i < degree; ++i) {
        f[i] = static_cast<std::uint32_t>(idx % p);
        idx /= p;
    }
    f[degree] = 1;
    return f;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<Poly> monic_irreducibles(std::uint32_t p, unsigned degree) {
    if (degree == 0) throw InvalidArgument("irreducibles need degree >= 1");
    std::vector<std::vector<Poly>> by_degree(degree / 2 + 1);
    for (unsigned d = 1; d <= degree / 2; ++d) by_degree[d] = monic_irreducibles(p, d);
    std::uint64_t count = 1;
    for (unsigned i = 0; i < degree; ++i) count *= p;
    std::vector<Poly> out;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly f = monic_from_index(idx, p, degree);
        bool irreducible = true;
        for (unsigned d = 1; d <= degree / 2 && irreducible; ++d)
            for (const auto& g : by_degree[d])
                if (poly_is_zero(poly_mod(f, g, p))) {
                    irreducible = false;
                    break;
                }
        if (irreducible) out.push_back(std::move(f));
    }
    return out;
}

FiniteField::FiniteField(std::uint32_t p, unsigned n) : p_(p), n_(n) {
    if (p < 5 || p > kMaxPrime || !is_prime(p))
        throw InvalidArgument("field characteristic must be a prime in [5, " + std::to_string(kMaxPrime) + "], got " +
                              std::to_string(p));
    if (n < 1 || n > kMaxDegree)
        throw InvalidArgument("extension degree must be in [1, " + std::to_string(kMaxDegree) + "], got " +
                              std::to_string(n));
    size_ = 1;
    for (unsigned i = 0; i < n; ++i) size_ *= p;
    modulus_ = monic_irreducibles(p, n).front();
    sqrt_.assign(size_, -1);
    for (Elem y = 0; y < size_; ++y) {
        const Elem s = mul(y, y);
        if (sqrt_[s] < 0) sqrt_[s] = y;
    }
}

FiniteField::Elem FiniteField::from_int(std::int64_t v) const {
    const std::int64_t p = p_;
    return static_cast<Elem>(((v % p) + p) % p);
}

FiniteField::Elem FiniteField::from_coefficients(const std::vector<std::int64_t>& coeffs) const {
    if (coeffs.size() > n_) throw InvalidArgument("element has more than " + std::to_string(n_) + " coefficients");
    Elem out = 0, scale = 1;
    for (auto c : coeffs) {
        out += from_int(c) * scale;
        scale *= p_;
    }
    return out;
}

std::vector<std::uint32_t> FiniteField::coefficients(Elem a) const {
    if (a >= size_) throw InvalidArgument("element out of range");
    std::vector<std::uint32_t> v(n_);
    for (unsigned i = 0; i < n_; ++i) {
        v[i] = a % p_;
        a /= p_;
    }
    return v;
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
    Elem out = 0, scale = 1;
    for (unsigned i = 0; i < n_; ++i) {
        out += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return out;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
    Elem out = 0, scale = 1;
    for (unsigned i = 0; i < n_; ++i) {
        out += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return out;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
    const auto ca = coefficients(a), cb = coefficients(b);
    Poly prod(2 * n_ - 1, 0);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    prod = poly_mod(std::move(prod), modulus_, p_);
    Elem out = 0, scale = 1;
    for (unsigned i = 0; i < n_; ++i) {
        out += (i < prod.size() ? prod[i] : 0) * scale;
        scale *= p_;
    }
    return out;
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
    Elem result = 1, base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FiniteField::Elem FiniteField::inv(Elem a) const {
    if (a == 0) throw InvalidArgument("zero has no inverse");
    return pow(a, size_ - 2);
}

std::string FiniteField::to_string(Elem a) const {
    const auto c = coefficients(a);
    std::string s = "[";
    for (unsigned i = 0; i < n_; ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + "]";
}

} // namespace wheelzeta
