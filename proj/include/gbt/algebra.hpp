#pragma once
// Exact coefficient arithmetic: Gaussian rationals and sparse Laurent
// polynomials in b1, b2, b3 with polynomial parameter slots nu1, nu2, mu.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace gbt {

using Rational = boost::multiprecision::cpp_rational;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition of an operation was violated by the caller.
class ContractViolation : public Error {
public:
    using Error::Error;
};

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

/// Element re + im*i of Q(i).
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(long long r) : re(r) {}
    GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {0, 1}; }

    bool is_zero() const { return re == 0 && im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianRational inverse() const {
        if (is_zero()) throw ContractViolation("division by zero in Q(i)");
        Rational n = norm();
        return {re / n, -im / n};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }

    /// Canonical text: "3", "-1/2", "i", "-2*i", "(1+i)", "(1/2-3*i)".
    std::string str() const {
        if (im == 0) return to_string(re);
        std::string ipart;
        if (im == 1)
            ipart = "i";
        else if (im == -1)
            ipart = "-i";
        else
            ipart = to_string(im) + "*i";
        if (re == 0) return ipart;
        std::string s = "(" + to_string(re);
        if (im > 0) s += "+";
        return s + ipart + ")";
    }
};

/// Variables of the coefficient ring. b1..b3 are Laurent variables; nu1, nu2
/// and mu are formal parameters and only ever carry non-negative exponents.
enum class Var : int { b1 = 0, b2 = 1, b3 = 2, nu1 = 3, nu2 = 4, mu = 5 };
inline constexpr int kNumVars = 6;
inline constexpr std::array<const char*, kNumVars> kVarNames{"b1", "b2", "b3", "nu1", "nu2", "mu"};

inline const char* name(Var v) { return kVarNames[static_cast<int>(v)]; }

inline std::optional<Var> parse_var(const std::string& s) {
    for (int k = 0; k < kNumVars; ++k)
        if (s == kVarNames[k]) return static_cast<Var>(k);
    return std::nullopt;
}

using Exponents = std::array<int, kNumVars>;

inline Exponents operator+(Exponents a, const Exponents& b) {
    for (int k = 0; k < kNumVars; ++k) a[k] += b[k];
    return a;
}
inline Exponents operator-(Exponents a, const Exponents& b) {
    for (int k = 0; k < kNumVars; ++k) a[k] -= b[k];
    return a;
}

inline bool params_free(const Exponents& e) { return e[3] == 0 && e[4] == 0 && e[5] == 0; }
inline bool is_unit_exponent(const Exponents& e) {
    for (int x : e)
        if (x != 0) return false;
    return true;
}
inline int param_degree(const Exponents& e) { return e[3] + e[4] + e[5]; }

/// Exponents restricted to the parameter slots (b-part zeroed).
inline Exponents param_part(Exponents e) {
    e[0] = e[1] = e[2] = 0;
    return e;
}
inline Exponents b_part(Exponents e) {
    e[3] = e[4] = e[5] = 0;
    return e;
}

class Specialization;

/// Sparse Laurent polynomial with Gaussian-rational coefficients. Zero
/// coefficients are never stored, so the representation is canonical.
class LaurentPoly {
public:
    using Terms = std::map<Exponents, GaussianRational>;

    LaurentPoly() = default;
    LaurentPoly(long long c) : LaurentPoly(GaussianRational(c)) {}
    LaurentPoly(const GaussianRational& c) {
        if (!c.is_zero()) terms_.emplace(Exponents{}, c);
    }
    LaurentPoly(const GaussianRational& c, const Exponents& e) {
        if (!c.is_zero()) terms_.emplace(e, c);
    }

    static LaurentPoly var(Var v, int power = 1) {
        Exponents e{};
        e[static_cast<int>(v)] = power;
        return LaurentPoly(GaussianRational(1), e);
    }
    static LaurentPoly i() { return LaurentPoly(GaussianRational::i()); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool is_monomial() const { return terms_.size() == 1; }
    /// Leading (single) term of a monomial.
    std::pair<Exponents, GaussianRational> monomial() const {
        if (!is_monomial()) throw ContractViolation("not a monomial: " + str());
        return *terms_.begin();
    }
    bool is_constant() const { return is_zero() || (is_monomial() && is_unit_exponent(terms_.begin()->first)); }
    bool params_free() const {
        for (const auto& [e, c] : terms_)
            if (!gbt::params_free(e)) return false;
        return true;
    }
    int max_param_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, param_degree(e));
        return d;
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend LaurentPoly operator*(const GaussianRational& s, const LaurentPoly& p) {
        LaurentPoly r;
        if (s.is_zero()) return r;
        for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, s * c);
        return r;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    /// Inverse of a monomial; throws for anything else.
    LaurentPoly monomial_inverse() const {
        auto [e, c] = monomial();
        Exponents ne{};
        for (int k = 0; k < kNumVars; ++k) ne[k] = -e[k];
        if (!gbt::params_free(e)) throw ContractViolation("cannot invert a parameter monomial");
        return LaurentPoly(c.inverse(), ne);
    }

    LaurentPoly pow(int n) const {
        if (n < 0) return monomial_inverse().pow(-n);
        LaurentPoly r(1);
        for (int k = 0; k < n; ++k) r *= *this;
        return r;
    }

    /// Coefficient of the parameter monomial `params` (only slots 3..5 read),
    /// as a polynomial in b1..b3.
    LaurentPoly param_coefficient(const Exponents& params) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_)
            if (param_part(e) == param_part(params)) r.terms_.emplace(b_part(e), c);
        return r;
    }

    LaurentPoly substitute(const Specialization& s) const;

    /// Canonical rendering: terms in ascending exponent order, explicit i.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            std::string mono;
            for (int k = 0; k < kNumVars; ++k) {
                if (e[k] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += kVarNames[k];
                if (e[k] != 1) mono += "^" + std::to_string(e[k]);
            }
            std::string coef;
            bool negative = false;
            if (c.im == 0) {
                negative = c.re < 0;
                Rational a = negative ? Rational(-c.re) : c.re;
                if (!(a == 1 && !mono.empty())) coef = to_string(a);
            } else if (c.re == 0) {
                negative = c.im < 0;
                Rational a = negative ? Rational(-c.im) : c.im;
                coef = (a == 1) ? "i" : to_string(a) + "*i";
            } else {
                coef = c.str();
            }
            std::string term = coef;
            if (!mono.empty()) term += (coef.empty() ? "" : "*") + mono;
            if (first)
                out += (negative ? "-" : "") + term;
            else
                out += (negative ? " - " : " + ") + term;
            first = false;
        }
        return out;
    }

private:
    void add_term(const Exponents& e, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    Terms terms_;
};

inline LaurentPoly b(int j, int power = 1) { return LaurentPoly::var(static_cast<Var>(j - 1), power); }
inline LaurentPoly nu1() { return LaurentPoly::var(Var::nu1); }
inline LaurentPoly nu2() { return LaurentPoly::var(Var::nu2); }
inline LaurentPoly mu() { return LaurentPoly::var(Var::mu); }
/// a_j = b_j^2.
inline LaurentPoly a(int j) { return b(j, 2); }

}  // namespace gbt
