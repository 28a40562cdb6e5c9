#pragma once

#include "wheelzeta/bigint.hpp"
#include "wheelzeta/field.hpp"
#include "wheelzeta/snf.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace wheelzeta {

struct CurvePoint {
    bool infinity = true;
    FiniteField::Elem x = 0;
    FiniteField::Elem y = 0;

    static CurvePoint at_infinity() { return {}; }
    static CurvePoint affine(FiniteField::Elem x, FiniteField::Elem y) { return {false, x, y}; }

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
    friend auto operator<=>(const CurvePoint&, const CurvePoint&) = default;
};

inline constexpr std::uint32_t kDefaultFieldBudget = 625;

/// y^2 = x^3 + ax + b over a FiniteField.
class EllipticCurve {
public:
    /// Throws InvalidArgument for a singular curve.
    EllipticCurve(std::shared_ptr<const FiniteField> field, FiniteField::Elem a, FiniteField::Elem b);

    const FiniteField& field() const noexcept { return *field_; }
    FiniteField::Elem a() const noexcept { return a_; }
    FiniteField::Elem b() const noexcept { return b_; }

    bool on_curve(const CurvePoint& p) const;
    CurvePoint add(const CurvePoint& p, const CurvePoint& q) const;
    CurvePoint neg(const CurvePoint& p) const;
    /// m*P by double-and-add; negative m allowed.
    CurvePoint scalar(std::int64_t m, const CurvePoint& p) const;
    /// (x, y) -> (x^p, y^p), p the characteristic.
    CurvePoint frobenius(const CurvePoint& p) const;
    CurvePoint frobenius_power(const CurvePoint& p, unsigned j) const;

    /// All points, P_infinity first. Throws ResourceLimit if the field has
    /// more than budget elements.
    std::vector<CurvePoint> points(std::uint32_t budget = kDefaultFieldBudget) const;

private:
    void require_on_curve(const CurvePoint& p) const;

    std::shared_ptr<const FiniteField> field_;
    FiniteField::Elem a_, b_;
};

/// The curve with prime-field coefficients a, b viewed over F_{p^n}.
EllipticCurve curve_over(std::uint32_t p, std::int64_t a, std::int64_t b, unsigned n);

/// Brute-force point count.
BigInt ec_count(const EllipticCurve& e, std::uint32_t budget = kDefaultFieldBudget);

/// (1 + q - N)^2 <= 4q for the field size q.
bool hasse_bound_holds(std::uint64_t q, const BigInt& n);

struct GroupInvariants {
    BigInt n1, n2;  // n1 | n2, n1 * n2 = N, n2 = exponent
};

GroupInvariants ec_group_invariants(const EllipticCurve& e, std::uint32_t budget = kDefaultFieldBudget);

/// Points of E(F_{p^d}) killed by Cyc_d(pi).
BigInt kernel_cyc_frobenius(std::uint32_t p, std::int64_t a, std::int64_t b, unsigned d,
                            std::uint32_t budget = kDefaultFieldBudget);

/// Points of E(F_{p^{k m}}) fixed by pi^k.
BigInt frobenius_fixed_count(std::uint32_t p, std::int64_t a, std::int64_t b, unsigned k, unsigned m,
                             std::uint32_t budget = kDefaultFieldBudget);

/// pi^2 - (1+q-N1) pi + q = 0 on every point of E(F_{p^k}).
bool characteristic_equation_holds(std::uint32_t p, std::int64_t a, std::int64_t b, unsigned k,
                                   std::uint32_t budget = kDefaultFieldBudget);

struct CokerReport {
    BigInt n1_base;        // #E(F_p)
    BigInt nk_measured;    // #E(F_{p^k})
    BigInt det_mk;         // |det M_k|
    SNFResult mk_snf;
    GroupInvariants measured;
    bool order_matches = false;
    bool invariants_match = false;
    bool base_cyclic = false;  // hypothesis of the isomorphism claim
};

CokerReport coker_mk_compare(std::uint32_t p, std::int64_t a, std::int64_t b, unsigned k,
                             std::uint32_t budget = kDefaultFieldBudget);

} // namespace wheelzeta
