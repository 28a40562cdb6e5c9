#include "wheelzeta/curve.hpp"

#include "wheelzeta/ecnum.hpp"
#include "wheelzeta/errors.hpp"
#include "wheelzeta/univariate.hpp"

#include <numeric>

namespace wheelzeta {

using Elem = FiniteField::Elem;

EllipticCurve::EllipticCurve(std::shared_ptr<const FiniteField> field, Elem a, Elem b)
    : field_(std::move(field)), a_(a), b_(b) {
    const FiniteField& f = *field_;
    if (a >= f.size() || b >= f.size()) throw InvalidArgument("curve coefficient outside the field");
    const Elem a3 = f.mul(f.mul(a, a), a);
    const Elem disc = f.add(f.mul(f.from_int(4), a3), f.mul(f.from_int(27), f.mul(b, b)));
    if (disc == 0) throw InvalidArgument("singular curve: 4a^3 + 27b^2 = 0");
}

bool EllipticCurve::on_curve(const CurvePoint& p) const {
    if (p.infinity) return true;
    const FiniteField& f = *field_;
    if (p.x >= f.size() || p.y >= f.size()) return false;
    const Elem rhs = f.add(f.add(f.mul(f.mul(p.x, p.x), p.x), f.mul(a_, p.x)), b_);
    return f.mul(p.y, p.y) == rhs;
}

void EllipticCurve::require_on_curve(const CurvePoint& p) const {
    if (!on_curve(p)) throw InvalidArgument("point is not on the curve");
}

CurvePoint EllipticCurve::neg(const CurvePoint& p) const {
    require_on_curve(p);
    if (p.infinity) return p;
    return CurvePoint::affine(p.x, field_->neg(p.y));
}

CurvePoint EllipticCurve::add(const CurvePoint& p, const CurvePoint& q) const {
    require_on_curve(p);
    require_on_curve(q);
    if (p.infinity) return q;
    if (q.infinity) return p;
    const FiniteField& f = *field_;
    Elem lambda;
    if (p.x == q.x) {
        if (f.add(p.y, q.y) == 0) return CurvePoint::at_infinity();
        // Tangent: (3x^2 + a) / 2y.
        lambda = f.mul(f.add(f.mul(f.from_int(3), f.mul(p.x, p.x)), a_), f.inv(f.mul(f.from_int(2), p.y)));
    } else {
        lambda = f.mul(f.sub(q.y, p.y), f.inv(f.sub(q.x, p.x)));
    }
    const Elem x3 = f.sub(f.sub(f.mul(lambda, lambda), p.x), q.x);
    const Elem y3 = f.sub(f.mul(lambda, f.sub(p.x, x3)), p.y);
    return CurvePoint::affine(x3, y3);
}

CurvePoint EllipticCurve::scalar(std::int64_t m, const CurvePoint& p) const {
    require_on_curve(p);
    CurvePoint base = m < 0 ? neg(p) : p;
    std::uint64_t n = m < 0 ? static_cast<std::uint64_t>(-(m + 1)) + 1 : static_cast<std::uint64_t>(m);
    CurvePoint acc = CurvePoint::at_infinity();
    while (n) {
        if (n & 1) acc = add(acc, base);
        base = add(base, base);
        n >>= 1;
    }
    return acc;
}

CurvePoint EllipticCurve::frobenius(const CurvePoint& p) const {
    require_on_curve(p);
    if (p.infinity) return p;
    return CurvePoint::affine(field_->frobenius(p.x), field_->frobenius(p.y));
}

CurvePoint EllipticCurve::frobenius_power(const CurvePoint& p, unsigned j) const {
    CurvePoint out = p;
    for (unsigned i = 0; i < j; ++i) out = frobenius(out);
    return out;
}

std::vector<CurvePoint> EllipticCurve::points(std::uint32_t budget) const {
    const FiniteField& f = *field_;
    if (f.size() > budget)
        throw ResourceLimit("field of size " + std::to_string(f.size()) + " exceeds budget " + std::to_string(budget));
    std::vector<CurvePoint> out{CurvePoint::at_infinity()};
    for (Elem x = 0; x < f.size(); ++x) {
        const Elem rhs = f.add(f.add(f.mul(f.mul(x, x), x), f.mul(a_, x)), b_);
        const std::int64_t r = f.sqrt(rhs);
        if (r < 0) continue;
        const Elem y = static_cast<Elem>(r);
        out.push_back(CurvePoint::affine(x, y));
        if (f.neg(y) != y) out.push_back(CurvePoint::affine(x, f.neg(y)));
    }
    return out;
}

EllipticCurve curve_over(std::uint32_t p, std::int64_t a, std::int64_t b, unsigned n) {
    auto f = std::make_shared<const FiniteField>(p, n);
    const Elem ea = f->from_int(a), eb = f->from_int(b);
    return EllipticCurve(std::move(f), ea, eb);
}

BigInt ec_count(const EllipticCurve& e, std::uint32_t budget) {
    return BigInt(static_cast<unsigned long>(e.points(budget).size()));
}

bool hasse_bound_holds(std::uint64_t q, const BigInt& n) {
    const BigInt trace = BigInt(static_cast<unsigned long>(q)) + 1 - n;
    return trace * trace <= BigInt(static_cast<unsigned long>(4 * q));
}

GroupInvariants ec_group_invariants(const EllipticCurve& e, std::uint32_t budget) {
    const auto pts = e.points(budget);
    const std::uint64_t n = pts.size();
    std::uint64_t exponent = 1;
    for (const auto& p : pts) {
        std::uint64_t order = 1;
        CurvePoint acc = p;
        while (!acc.infinity) {
            acc = e.add(acc, p);
            ++order;
        }
        exponent = std::lcm(exponent, order);
    }
    if (n % exponent != 0) throw InternalError("group exponent does not divide the order");
    GroupInvariants g{BigInt(static_cast<unsigned long>(n / exponent)), BigInt(static_cast<unsigned long>(exponent))};
    if (g.n2 % g.n1 != 0) throw InternalError("n1 does not divide n2");
    return g;
}

BigInt kernel_cyc_frobenius(std::uint32_t p, std::int64_t a, std::int64_t b, unsigned d, std::uint32_t budget) {
    const EllipticCurve e = curve_over(p, a, b, d);
    const IntPolynomial cyc = cyclotomic(d);
    unsigned long count = 0;
    for (const auto& pt : e.points(budget)) {
        CurvePoint acc = CurvePoint::at_infinity();
        CurvePoint pj = pt;
        for (std::size_t j = 0; j < cyc.coefficients().size(); ++j) {
            acc = e.add(acc, e.scalar(to_int64(cyc.coefficients()[j]), pj));
            pj = e.frobenius(pj);
        }
        if (acc.infinity) ++count;
    }
    return BigInt(count);
}

BigInt frobenius_fixed_count(std::uint32_t p, std::int64_t a, std::int64_t b, unsigned k, unsigned m,
                             std::uint32_t budget) {
    const EllipticCurve e = curve_over(p, a, b, k * m);
    unsigned long count = 0;
    for (const auto& pt : e.points(budget))
        if (e.frobenius_power(pt, k) == pt) ++count;
    return BigInt(count);
}

bool characteristic_equation_holds(std::uint32_t p, std::int64_t a, std::int64_t b, unsigned k, std::uint32_t budget) {
    const auto n1 = to_int64(ec_count(curve_over(p, a, b, 1), budget));
    const EllipticCurve e = curve_over(p, a, b, k);
    const std::int64_t trace = 1 + static_cast<std::int64_t>(p) - n1;
    for (const auto& pt : e.points(budget)) {
        const CurvePoint f1 = e.frobenius(pt);
        const CurvePoint f2 = e.frobenius(f1);
        const CurvePoint r = e.add(e.add(f2, e.scalar(-trace, f1)), e.scalar(p, pt));
        if (!r.infinity) return false;
    }
    return true;
}

CokerReport coker_mk_compare(std::uint32_t p, std::int64_t a, std::int64_t b, unsigned k, std::uint32_t budget) {
    CokerReport rep;
    const EllipticCurve base = curve_over(p, a, b, 1);
    rep.n1_base = ec_count(base, budget);
    rep.base_cyclic = ec_group_invariants(base, budget).n1 == 1;
    const EllipticCurve ext = curve_over(p, a, b, k);
    rep.measured = ec_group_invariants(ext, budget);
    rep.nk_measured = rep.measured.n1 * rep.measured.n2;
    const IntMatrix mk = mk_numeric(k, BigInt(static_cast<unsigned long>(p)), rep.n1_base);
    rep.det_mk = abs(det_bareiss(mk));
    rep.mk_snf = smith_normal_form(mk);
    rep.order_matches = rep.det_mk == rep.nk_measured;
    SNFResult measured{{rep.measured.n1, rep.measured.n2}};
    SNFResult predicted{rep.mk_snf.nontrivial()};
    while (predicted.invariant_factors.size() < 2) predicted.invariant_factors.insert(predicted.invariant_factors.begin(), 1);
    rep.invariants_match = predicted == measured;
    return rep;
}

} // namespace wheelzeta
