#pragma once
// Monomial specializations of b1..b3, nu and mu, monomial relations between
// the b_j, and the `var=monomial` mini-language used on the command line.

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace gbt {

class SpecializationError : public Error {
public:
    using Error::Error;
};

/// Ring homomorphism fixing Q(i) and sending selected variables to
/// monomials. Targets of b_j are invertible monomials in the b's that are
/// not themselves substituted; parameter targets may be zero.
class Specialization {
public:
    Specialization() = default;

    bool empty() const { return map_.empty(); }
    bool substitutes(Var v) const { return map_.count(v) != 0; }
    const std::map<Var, LaurentPoly>& substitutions() const { return map_; }

    /// Adds v -> target after validating it against the current map.
    Specialization& set(Var v, const LaurentPoly& target) {
        if (map_.count(v)) throw SpecializationError(std::string("variable substituted twice: ") + name(v));
        if (!target.is_zero() && !target.is_monomial())
            throw SpecializationError(std::string("target of ") + name(v) + " is not a monomial: " + target.str());
        if (!target.params_free())
            throw SpecializationError(std::string("target of ") + name(v) + " mentions a parameter");
        bool is_b = static_cast<int>(v) < 3;
        if (is_b) {
            if (target.is_zero()) throw SpecializationError(std::string(name(v)) + " cannot be zero");
            auto [e, c] = target.monomial();
            if (e[static_cast<int>(v)] != 0)
                throw SpecializationError(std::string("target of ") + name(v) + " mentions itself");
            for (int k = 0; k < 3; ++k)
                if (e[k] != 0 && map_.count(static_cast<Var>(k)))
                    throw SpecializationError(std::string("target of ") + name(v) + " mentions substituted " +
                                              kVarNames[k]);
            LaurentPoly sq = target * target;
            if (sq == LaurentPoly(1) || sq == LaurentPoly(-1))
                throw SpecializationError(std::string("a_j = ") + name(v) + "^2 would be a branch value +-1");
        }
        // Existing b-targets must not mention the newly substituted variable.
        if (is_b)
            for (const auto& [w, t] : map_)
                if (!t.is_zero() && t.monomial().first[static_cast<int>(v)] != 0)
                    throw SpecializationError(std::string("target of ") + name(w) + " mentions substituted " +
                                              name(v));
        map_.emplace(v, target);
        return *this;
    }

    /// Image of variable v (v itself when not substituted).
    LaurentPoly image(Var v) const {
        auto it = map_.find(v);
        return it == map_.end() ? LaurentPoly::var(v) : it->second;
    }

    /// Union of two specializations on disjoint variables.
    Specialization merged(const Specialization& other) const {
        Specialization r = *this;
        for (const auto& [v, t] : other.map_) r.set(v, t);
        return r;
    }

    std::string str() const {
        if (map_.empty()) return "generic";
        std::string s;
        for (const auto& [v, t] : map_) {
            if (!s.empty()) s += ", ";
            s += std::string(name(v)) + "=" + t.str();
        }
        return s;
    }

    friend bool operator==(const Specialization& x, const Specialization& y) { return x.map_ == y.map_; }

private:
    std::map<Var, LaurentPoly> map_;
};

inline LaurentPoly LaurentPoly::substitute(const Specialization& s) const {
    if (s.empty()) return *this;
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
        LaurentPoly t(c);
        for (int k = 0; k < kNumVars && !t.is_zero(); ++k) {
            if (e[k] == 0) continue;
            Var v = static_cast<Var>(k);
            if (s.substitutes(v))
                t *= s.image(v).pow(e[k]);
            else
                t *= LaurentPoly::var(v, e[k]);
        }
        r += t;
    }
    return r;
}

/// Monomial relation b1^e1 b2^e2 b3^e3 = value between the b_j.
struct Relation {
    std::array<int, 3> exponents{};
    GaussianRational value{1};

    /// Canonical form: first non-zero exponent positive (inverting both sides
    /// otherwise), so "m = e" and "m^-1 = e^-1" compare equal.
    Relation normalized() const {
        Relation r = *this;
        for (int k = 0; k < 3; ++k) {
            if (r.exponents[k] == 0) continue;
            if (r.exponents[k] < 0) {
                for (int& x : r.exponents) x = -x;
                r.value = r.value.inverse();
            }
            break;
        }
        return r;
    }

    bool trivial() const { return exponents == std::array<int, 3>{}; }

    LaurentPoly lhs() const {
        Exponents e{};
        for (int k = 0; k < 3; ++k) e[k] = exponents[k];
        return LaurentPoly(GaussianRational(1), e);
    }

    /// Specialization realizing the relation, solving for the highest-index
    /// b_j that appears with exponent +-1.
    Specialization to_specialization() const {
        for (int k = 2; k >= 0; --k) {
            int ek = exponents[k];
            if (ek != 1 && ek != -1) continue;
            Exponents rest{};
            for (int m = 0; m < 3; ++m)
                if (m != k) rest[m] = -exponents[m] * ek;
            GaussianRational c = ek == 1 ? value : value.inverse();
            Specialization s;
            s.set(static_cast<Var>(k), LaurentPoly(c, rest));
            return s;
        }
        throw SpecializationError("relation " + str() + " has no variable with exponent +-1");
    }

    std::string str() const { return lhs().str() + " = " + value.str(); }

    friend auto operator<=>(const Relation& x, const Relation& y) {
        if (auto c = x.exponents <=> y.exponents; c != 0) return c;
        return x.value.str() <=> y.value.str();
    }
    friend bool operator==(const Relation& x, const Relation& y) {
        return x.exponents == y.exponents && x.value == y.value;
    }
};

namespace detail {

class SpecParser {
public:
    explicit SpecParser(std::string text) : s_(std::move(text)) {}

    Specialization parse() {
        Specialization out;
        skip_ws();
        if (pos_ == s_.size()) return out;
        for (;;) {
            item(out);
            skip_ws();
            if (pos_ == s_.size()) break;
            if (s_[pos_] == ',' || s_[pos_] == ';') {
                ++pos_;
                continue;
            }
            fail("expected ',' or end of input");
        }
        return out;
    }

private:
    struct Mono {
        GaussianRational coef{1};
        Exponents exps{};
        bool single_var(Var v) const {
            if (!(coef == GaussianRational(1))) return false;
            for (int k = 0; k < kNumVars; ++k)
                if (exps[k] != (k == static_cast<int>(v) ? 1 : 0)) return false;
            return true;
        }
        LaurentPoly poly() const { return LaurentPoly(coef, exps); }
    };

    [[noreturn]] void fail(const std::string& msg) const {
        throw SpecializationError("specialization '" + s_ + "': " + msg + " at offset " + std::to_string(pos_));
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::string ident() {
        skip_ws();
        std::size_t st = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        return s_.substr(st, pos_ - st);
    }
    long long integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
        std::size_t st = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (st == pos_) fail("expected integer");
        long long v = std::stoll(s_.substr(st, pos_ - st));
        return neg ? -v : v;
    }

    // factor := INT | 'i' | VAR ['^' INT]
    Mono factor() {
        skip_ws();
        Mono m;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            m.coef = GaussianRational(integer());
            return m;
        }
        std::string id = ident();
        if (id.empty()) fail("expected factor");
        if (id == "i") {
            m.coef = GaussianRational::i();
            return m;
        }
        auto v = parse_var(id);
        if (!v || *v == Var::nu1 || *v == Var::nu2 || *v == Var::mu)
            fail("unknown variable '" + id + "' (monomials range over b1, b2, b3, i)");
        int p = 1;
        if (eat('^')) p = static_cast<int>(integer());
        m.exps[static_cast<int>(*v)] = p;
        return m;
    }

    Mono monomial() {
        bool neg = eat('-');
        Mono m = factor();
        for (;;) {
            if (eat('*')) {
                Mono f = factor();
                m.coef = m.coef * f.coef;
                m.exps = m.exps + f.exps;
            } else if (eat('/')) {
                Mono f = factor();
                if (f.coef.is_zero()) fail("division by zero");
                m.coef = m.coef / f.coef;
                m.exps = m.exps - f.exps;
            } else {
                break;
            }
        }
        if (neg) m.coef = -m.coef;
        return m;
    }

    void item(Specialization& out) {
        skip_ws();
        std::size_t st = pos_;
        std::string id = ident();
        if (id == "nu" || id == "mu" || id == "nu1" || id == "nu2") {
            if (!eat('=')) fail("expected '='");
            if (id == "nu") {
                if (eat('(')) {
                    Mono p = monomial();
                    if (!eat(':')) fail("expected ':' in projective pair");
                    Mono q = monomial();
                    if (!eat(')')) fail("expected ')'");
                    out.set(Var::nu1, p.poly());
                    out.set(Var::nu2, q.poly());
                } else {
                    out.set(Var::nu1, monomial().poly());
                    out.set(Var::nu2, LaurentPoly(1));
                }
            } else {
                out.set(*parse_var(id), monomial().poly());
            }
            return;
        }
        pos_ = st;
        Mono lhs = monomial();
        if (!eat('=')) fail("expected '='");
        Mono rhs = monomial();
        for (int k = 0; k < 3; ++k) {
            Var v = static_cast<Var>(k);
            if (lhs.single_var(v)) {
                out.set(v, rhs.poly());
                return;
            }
        }
        if (lhs.coef.is_zero() || rhs.coef.is_zero()) fail("relation with zero side");
        Relation r;
        for (int k = 0; k < 3; ++k) r.exponents[k] = lhs.exps[k] - rhs.exps[k];
        r.value = rhs.coef / lhs.coef;
        if (r.trivial()) fail("relation does not involve any b_j");
        Specialization s = r.to_specialization();
        for (const auto& [v, t] : s.substitutions()) out.set(v, t);
    }

    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses e.g. "b1*b2*b3=1", "b3=b1/b2", "nu=(b1:1)", "mu=-b1^2,b2=i*b1".
inline Specialization parse_specialization(const std::string& text) { return detail::SpecParser(text).parse(); }

}  // namespace gbt
