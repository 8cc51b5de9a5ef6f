#pragma once
// Projective values over Q(i)(b1,b2,b3) and the linear parameter solver.

#include <string>

#include "algebra.hpp"
#include "specialization.hpp"

namespace gbt {

/// Projective pair (num : den). Both entries may carry parameters.
struct SymValue {
    LaurentPoly num{1};
    LaurentPoly den{1};

    SymValue() = default;
    SymValue(LaurentPoly n, LaurentPoly d) : num(std::move(n)), den(std::move(d)) {
        if (num.is_zero() && den.is_zero()) throw ContractViolation("SymValue (0:0)");
    }
    static SymValue of(LaurentPoly v) { return {std::move(v), LaurentPoly(1)}; }
    static SymValue zero() { return {LaurentPoly(0), LaurentPoly(1)}; }
    static SymValue infinity() { return {LaurentPoly(1), LaurentPoly(0)}; }

    bool is_zero() const { return num.is_zero(); }
    bool is_infinity() const { return den.is_zero(); }
    bool params_free() const { return num.params_free() && den.params_free(); }

    /// True when the value is c*b^e for a unit monomial ratio (0 and
    /// infinity excluded).
    bool is_monomial() const { return num.is_monomial() && den.is_monomial(); }
    /// Affine value num/den; requires den to be a monomial.
    LaurentPoly affine() const {
        if (is_infinity()) throw ContractViolation("affine value of infinity");
        return num * den.monomial_inverse();
    }

    SymValue substitute(const Specialization& s) const { return {num.substitute(s), den.substitute(s)}; }

    /// Scales by the inverse of the b-monomial and coefficient of den's
    /// leading term, so that values differing by such a factor print alike.
    SymValue normalized() const {
        if (is_zero()) return zero();
        if (is_infinity()) return infinity();
        auto [e, c] = *den.terms().begin();
        LaurentPoly inv = LaurentPoly(c, b_part(e)).monomial_inverse();
        return {num * inv, den * inv};
    }

    std::string str() const {
        if (is_infinity()) return "inf";
        SymValue n = normalized();
        if (n.den == LaurentPoly(1)) return n.num.str();
        return "(" + n.num.str() + " : " + n.den.str() + ")";
    }

    friend bool operator==(const SymValue& x, const SymValue& y) { return x.num * y.den == y.num * x.den; }
};

/// Which formal parameters a family carries.
enum class ParamKind { None, Nu, Mu };

/// Polynomial of degree at most 1 in the family's parameters; stored in the
/// common Laurent ring rather than as a separate type.
using ParamPoly = LaurentPoly;

struct Condition {
    enum class Kind { IdenticallyZero, NeverZero, ZeroIff };
    Kind kind = Kind::NeverZero;
    /// Parameter value for ZeroIff: nu = (nu1 : nu2) or mu = (num : den).
    SymValue value;

    static Condition identically_zero() { return {Kind::IdenticallyZero, {}}; }
    static Condition never_zero() { return {Kind::NeverZero, {}}; }
    static Condition zero_iff(SymValue v) { return {Kind::ZeroIff, std::move(v)}; }

    std::string str() const {
        switch (kind) {
            case Kind::IdenticallyZero: return "identically zero";
            case Kind::NeverZero: return "never zero";
            case Kind::ZeroIff: return "zero iff param = " + value.str();
        }
        return "";
    }
};

/// Solves v = 0 for the parameter: v = nu1*A + nu2*B (Nu) or v = A + mu*C
/// (Mu); with ParamKind::None v is a plain Laurent polynomial.
inline Condition param_solve_linear(const ParamPoly& v, ParamKind kind) {
    if (v.is_zero()) return Condition::identically_zero();
    Exponents pn1{}, pn2{}, pmu{}, none{};
    pn1[3] = 1;
    pn2[4] = 1;
    pmu[5] = 1;
    for (const auto& [e, c] : v.terms()) {
        Exponents p = param_part(e);
        bool ok = false;
        switch (kind) {
            case ParamKind::None: ok = p == none; break;
            case ParamKind::Nu: ok = p == pn1 || p == pn2; break;
            case ParamKind::Mu: ok = p == none || p == pmu; break;
        }
        if (!ok) throw ContractViolation("param_solve_linear: not linear in the declared parameters: " + v.str());
    }
    switch (kind) {
        case ParamKind::None: return Condition::never_zero();
        case ParamKind::Nu: {
            LaurentPoly A = v.param_coefficient(pn1), B = v.param_coefficient(pn2);
            return Condition::zero_iff(SymValue(B, -A));
        }
        case ParamKind::Mu: {
            LaurentPoly A = v.param_coefficient(none), C = v.param_coefficient(pmu);
            if (C.is_zero()) return Condition::never_zero();
            return Condition::zero_iff(SymValue(-A, C));
        }
    }
    return Condition::never_zero();
}

}  // namespace gbt
