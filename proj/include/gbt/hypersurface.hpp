#pragma once
// The three Burniat hypersurface families as trilinear forms on (P^1)^3,
// incidence at torsion points and fixed loci of group elements on X.

#include <algorithm>
#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "legendre.hpp"
#include "specialization.hpp"
#include "symvalue.hpp"
#include "torus.hpp"

namespace gbt {

enum class FamilyKind { Nu, Mu, B };

inline const char* name(FamilyKind k) {
    switch (k) {
        case FamilyKind::Nu: return "nu";
        case FamilyKind::Mu: return "mu";
        case FamilyKind::B: return "b";
    }
    return "?";
}

inline FamilyKind parse_family(const std::string& s) {
    if (s == "nu") return FamilyKind::Nu;
    if (s == "mu") return FamilyKind::Mu;
    if (s == "b") return FamilyKind::B;
    throw Error("unknown family '" + s + "' (expected nu, mu or b)");
}

class ReducibleFamily : public Error {
public:
    using Error::Error;
};

/// Trilinear form sum c[i][j][k] x_i y_j z_k in the homogeneous coordinates
/// (x0 : x1) = (L_1 : 1) etc., with a specialization applied on evaluation.
class Family {
public:
    static Family make(FamilyKind kind, const Specialization& spec = {}, const Convention& conv = {}) {
        Family f;
        f.kind_ = kind;
        f.spec_ = spec;
        f.conv_ = conv;
        LaurentPoly bb = b(1) * b(2) * b(3);
        bool has_nu = spec.substitutes(Var::nu1) || spec.substitutes(Var::nu2);
        bool has_mu = spec.substitutes(Var::mu);
        switch (kind) {
            case FamilyKind::Nu:
                if (has_mu) throw SpecializationError("the nu family has no parameter mu");
                if (spec.substitutes(Var::nu1) != spec.substitutes(Var::nu2))
                    throw SpecializationError("nu must be given as a pair, e.g. nu=(b1:1)");
                f.c_[idx(0, 0, 0)] = nu1();
                f.c_[idx(1, 1, 1)] = nu1() * bb;
                f.c_[idx(0, 1, 1)] = nu2() * b(2) * b(3);
                f.c_[idx(1, 0, 0)] = nu2() * b(1);
                f.params_ = has_nu ? ParamKind::None : ParamKind::Nu;
                if (has_nu) {
                    LaurentPoly n1 = spec.image(Var::nu1), n2 = spec.image(Var::nu2);
                    if (n1.is_zero() && n2.is_zero()) throw SpecializationError("nu = (0:0)");
                    if ((n1 - n2).is_zero() || (n1 + n2).is_zero())
                        throw ReducibleFamily("nu = (1:1) or (1:-1) gives a reducible hypersurface");
                }
                break;
            case FamilyKind::Mu:
                if (has_nu) throw SpecializationError("the mu family has no parameter nu");
                f.c_[idx(0, 0, 0)] = LaurentPoly(1);
                f.c_[idx(1, 1, 1)] = -mu();
                f.params_ = has_mu ? ParamKind::None : ParamKind::Mu;
                if (has_mu && spec.image(Var::mu).is_zero()) throw ReducibleFamily("mu = 0 is excluded");
                break;
            case FamilyKind::B:
                if (has_nu || has_mu) throw SpecializationError("the b family has no parameters");
                f.c_[idx(0, 0, 0)] = LaurentPoly(1);
                f.c_[idx(1, 1, 1)] = -bb;
                f.params_ = ParamKind::None;
                break;
        }
        auto vals = std::make_shared<std::array<std::array<SymValue, 16>, 3>>();
        for (int j = 0; j < 3; ++j)
            for (int p = 0; p < 4; ++p)
                for (int q = 0; q < 4; ++q) (*vals)[j][4 * p + q] = legendre_value(j, {p, q, 4}, conv).substitute(spec);
        f.values_ = std::move(vals);
        return f;
    }

    FamilyKind kind() const { return kind_; }
    ParamKind params() const { return params_; }
    const Specialization& spec() const { return spec_; }
    const Convention& convention() const { return conv_; }
    const ParamPoly& coef(int i, int j, int k) const { return c_[idx(i, j, k)]; }

    /// Same family with the specialization replaced.
    Family with_spec(const Specialization& s) const { return make(kind_, s, conv_); }

    /// L-value of factor j at a torsion point, specialized.
    SymValue value(int j, const TorsionPoint& z) const {
        if (4 % z.n == 0) {
            TorsionPoint w = z.at_level(4);
            return values_->at(j)[4 * w.p + w.q];
        }
        return legendre_value(j, z, conv_).substitute(spec_);
    }

    /// Contracts the form with three projective values; the result is the
    /// incidence polynomial (zero iff the point lies on X).
    ParamPoly contract(const std::array<SymValue, 3>& v) const {
        ParamPoly r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) {
                    const ParamPoly& c = c_[idx(i, j, k)];
                    if (c.is_zero()) continue;
                    r += c * coord(v[0], i) * coord(v[1], j) * coord(v[2], k);
                }
        return r.substitute(spec_);
    }

    ParamPoly evaluate(const Triple& z) const { return contract({value(0, z[0]), value(1, z[1]), value(2, z[2])}); }

    /// Solves p = 0 in the family's remaining parameters.
    Condition solve(const ParamPoly& p) const { return param_solve_linear(p, params_); }

    /// False for excluded parameter values: nu = (1:+-1), mu in {0, inf}.
    bool admissible(const SymValue& v) const {
        switch (params_) {
            case ParamKind::Nu: return !(v == SymValue::of(1)) && !(v == SymValue::of(-1));
            case ParamKind::Mu: return !v.is_zero() && !v.is_infinity();
            case ParamKind::None: return true;
        }
        return true;
    }

    /// Specialization substituting the family's parameter by v.
    Specialization parameter_specialization(const SymValue& v) const {
        Specialization s;
        if (params_ == ParamKind::Nu) {
            s.set(Var::nu1, v.num);
            s.set(Var::nu2, v.den);
        } else if (params_ == ParamKind::Mu) {
            s.set(Var::mu, v.affine());
        }
        return s;
    }

    std::string str() const {
        std::string s = std::string(name(kind_));
        if (!spec_.empty()) s += " [" + spec_.str() + "]";
        return s;
    }

private:
    static int idx(int i, int j, int k) { return 4 * i + 2 * j + k; }
    static const LaurentPoly& coord(const SymValue& v, int i) { return i == 0 ? v.num : v.den; }

    FamilyKind kind_ = FamilyKind::B;
    ParamKind params_ = ParamKind::None;
    Specialization spec_;
    Convention conv_;
    std::array<ParamPoly, 8> c_{};
    std::shared_ptr<const std::array<std::array<SymValue, 16>, 3>> values_;
};

/// Conjunction of vanishing conditions (all must vanish together).
inline Condition combine(const std::vector<Condition>& cs) {
    std::optional<SymValue> v;
    for (const auto& c : cs) {
        if (c.kind == Condition::Kind::NeverZero) return Condition::never_zero();
        if (c.kind == Condition::Kind::ZeroIff) {
            if (!v) v = c.value;
            else if (!(*v == c.value)) return Condition::never_zero();
        }
    }
    return v ? Condition::zero_iff(*v) : Condition::identically_zero();
}

/// One coordinate of a component: the whole factor, a torsion point, or the
/// pair of points z, -z over a non-torsion L-value.
struct Slot {
    enum class Kind { Free, At, Fiber };
    Kind kind = Kind::Free;
    TorsionPoint point;
    SymValue value;

    static Slot free() { return {}; }
    static Slot at(TorsionPoint p) { return {Kind::At, p, {}}; }
    static Slot fiber(SymValue v) { return {Kind::Fiber, {}, std::move(v)}; }

    int multiplicity() const { return kind == Kind::Fiber ? 2 : 1; }

    std::string str() const {
        switch (kind) {
            case Kind::Free: return "*";
            case Kind::At: return point.str();
            case Kind::Fiber: return "L^-1(" + value.str() + ")";
        }
        return "";
    }

    friend bool operator==(const Slot& x, const Slot& y) {
        if (x.kind != y.kind) return false;
        if (x.kind == Kind::At) return x.point == y.point;
        if (x.kind == Kind::Fiber) return x.value == y.value;
        return true;
    }
};

using Slots = std::array<Slot, 3>;

inline std::string str(const Slots& s) { return "(" + s[0].str() + ", " + s[1].str() + ", " + s[2].str() + ")"; }

struct Component {
    enum class Type { Point, Elliptic, Genus5 };
    Type type = Type::Point;
    Slots slots;
    bool node = false;

    int count() const {
        int c = 1;
        for (const auto& s : slots) c *= s.multiplicity();
        return c;
    }
    int genus() const { return type == Type::Point ? 0 : type == Type::Elliptic ? 1 : 5; }
    bool is_curve() const { return type != Type::Point; }
    /// Torsion triple of a point component whose slots are all At.
    std::optional<Triple> triple() const {
        if (type != Type::Point) return std::nullopt;
        for (const auto& s : slots)
            if (s.kind != Slot::Kind::At) return std::nullopt;
        return Triple{slots[0].point, slots[1].point, slots[2].point};
    }
    std::string type_name() const {
        switch (type) {
            case Type::Point: return node ? "node" : "point";
            case Type::Elliptic: return "elliptic";
            case Type::Genus5: return "genus5";
        }
        return "";
    }

    friend bool operator==(const Component& x, const Component& y) { return x.type == y.type && x.slots == y.slots; }
};

/// A piece of the product set that meets X only for special parameter values
/// (or, with no parameters left, for special moduli of the curves).
struct SpecialIncidence {
    Slots slots;
    std::string what;  // "point" or "curve"
    std::optional<SymValue> parameter;
};

struct Locus {
    std::vector<Component> components;
    std::vector<SpecialIncidence> special;

    int points() const {
        int n = 0;
        for (const auto& c : components)
            if (c.type == Component::Type::Point && !c.node) n += c.count();
        return n;
    }
    int nodes() const {
        int n = 0;
        for (const auto& c : components)
            if (c.type == Component::Type::Point && c.node) n += c.count();
        return n;
    }
    int elliptic() const {
        int n = 0;
        for (const auto& c : components)
            if (c.type == Component::Type::Elliptic) n += c.count();
        return n;
    }
    int genus5() const {
        int n = 0;
        for (const auto& c : components)
            if (c.type == Component::Type::Genus5) n += c.count();
        return n;
    }
    bool empty() const { return components.empty(); }

    /// "16 pt, 8 ell. curves", "4 genus 5 curves", "32 pt, 8 nodes", ...
    std::string summary() const {
        std::vector<std::string> parts;
        if (genus5()) parts.push_back(std::to_string(genus5()) + " genus 5 curves");
        if (points()) parts.push_back(std::to_string(points()) + " pt");
        if (nodes()) parts.push_back(std::to_string(nodes()) + " nodes");
        if (elliptic()) parts.push_back(std::to_string(elliptic()) + " ell. curves");
        if (parts.empty()) return "empty";
        std::string s;
        for (const auto& p : parts) s += (s.empty() ? "" : ", ") + p;
        return s;
    }
};

/// Exact singularity test at a torsion triple: the point lies on X and for
/// each factor where L_j' != 0 (z_j not 2-torsion) the linear form in that
/// factor vanishes identically. Chart-free, poles included.
inline Condition singular_condition(const Family& f, const Triple& z) {
    std::array<SymValue, 3> v{f.value(0, z[0]), f.value(1, z[1]), f.value(2, z[2])};
    std::vector<Condition> cs{f.solve(f.contract(v))};
    for (int j = 0; j < 3; ++j) {
        if (z[j].is_two_torsion()) continue;
        if (cs.back().kind == Condition::Kind::NeverZero) break;
        auto w = v;
        w[j] = SymValue::infinity();
        cs.push_back(f.solve(f.contract(w)));
        w[j] = SymValue::zero();
        cs.push_back(f.solve(f.contract(w)));
    }
    return combine(cs);
}

inline bool is_singular(const Family& f, const Triple& z) {
    return singular_condition(f, z).kind == Condition::Kind::IdenticallyZero;
}

/// Per-factor description of a subset of T: the whole factor or a finite
/// list of At/Fiber coordinates.
struct ProductSet {
    std::array<std::vector<Slot>, 3> factors;  // a single Free slot means the whole factor

    static ProductSet from(const TFixedLocus& l) {
        ProductSet s;
        for (int j = 0; j < 3; ++j) {
            if (l.per_factor[j].kind == FactorFix::Kind::WholeCurve)
                s.factors[j] = {Slot::free()};
            else
                for (const auto& p : l.per_factor[j].points) s.factors[j].push_back(Slot::at(p));
        }
        return s;
    }
    static ProductSet of(const Slots& sl) {
        ProductSet s;
        for (int j = 0; j < 3; ++j) s.factors[j] = {sl[j]};
        return s;
    }
    bool is_free(int j) const { return factors[j].size() == 1 && factors[j][0].kind == Slot::Kind::Free; }
};

namespace detail {

inline SymValue slot_value(const Family& f, int j, const Slot& s) {
    if (s.kind == Slot::Kind::At) return f.value(j, s.point);
    if (s.kind == Slot::Kind::Fiber) return s.value;
    throw ContractViolation("slot_value of a free slot");
}

/// Slots over the zero set of the linear form alpha*x0 + beta*x1 on factor j.
inline std::vector<Slot> solve_fiber(const Family& f, int j, const ParamPoly& alpha, const ParamPoly& beta) {
    SymValue v(-beta, alpha);
    std::vector<Slot> out;
    for (const auto& z : all_points(4))
        if (f.value(j, z) == v) out.push_back(Slot::at(z));
    if (out.empty()) out.push_back(Slot::fiber(v));
    return out;
}

inline void classify_point(const Family& f, const Slots& sl, Locus& out) {
    std::array<SymValue, 3> v{slot_value(f, 0, sl[0]), slot_value(f, 1, sl[1]), slot_value(f, 2, sl[2])};
    ParamPoly F = f.contract(v);
    Condition c = f.solve(F);
    if (c.kind == Condition::Kind::IdenticallyZero) {
        Component comp{Component::Type::Point, sl, false};
        if (auto t = comp.triple()) comp.node = is_singular(f, *t);
        out.components.push_back(comp);
    } else if (c.kind == Condition::Kind::ZeroIff) {
        if (f.admissible(c.value)) out.special.push_back({sl, "point", c.value});
    } else if (f.params() == ParamKind::None && !F.is_monomial()) {
        out.special.push_back({sl, "point", std::nullopt});
    }
}

}  // namespace detail

class SurfaceComponent : public Error {
public:
    using Error::Error;
};

/// X intersected with a product set. Zero free factors: incidence test per
/// point. One: linear form in the free factor (whole curve, 1 or 2 points).
/// Two: bilinear 2x2 form (genus 5 when det != 0, else a rank-1 split into
/// elliptic curves).
inline Locus locus_on_X(const Family& f, const ProductSet& ps) {
    Locus out;
    std::vector<int> free, fixed;
    for (int j = 0; j < 3; ++j) (ps.is_free(j) ? free : fixed).push_back(j);
    if (free.size() == 3) throw SurfaceComponent("locus_on_X: the product set is all of T");

    if (free.empty()) {
        for (const auto& x : ps.factors[0])
            for (const auto& y : ps.factors[1])
                for (const auto& z : ps.factors[2]) detail::classify_point(f, {x, y, z}, out);
        return out;
    }

    if (free.size() == 1) {
        int j = free[0], k1 = fixed[0], k2 = fixed[1];
        for (const auto& s1 : ps.factors[k1])
            for (const auto& s2 : ps.factors[k2]) {
                std::array<SymValue, 3> v;
                v[k1] = detail::slot_value(f, k1, s1);
                v[k2] = detail::slot_value(f, k2, s2);
                v[j] = SymValue::infinity();
                ParamPoly alpha = f.contract(v);
                v[j] = SymValue::zero();
                ParamPoly beta = f.contract(v);
                Slots sl;
                sl[k1] = s1;
                sl[k2] = s2;
                if (alpha.is_zero() && beta.is_zero()) {
                    sl[j] = Slot::free();
                    out.components.push_back({Component::Type::Elliptic, sl, false});
                    continue;
                }
                Condition both = combine({f.solve(alpha), f.solve(beta)});
                if (both.kind == Condition::Kind::ZeroIff && f.admissible(both.value)) {
                    sl[j] = Slot::free();
                    out.special.push_back({sl, "curve", both.value});
                }
                for (const auto& s : detail::solve_fiber(f, j, alpha, beta)) {
                    sl[j] = s;
                    Component comp{Component::Type::Point, sl, false};
                    if (auto t = comp.triple()) comp.node = is_singular(f, *t);
                    out.components.push_back(comp);
                }
            }
        return out;
    }

    int j = free[0], l = free[1], k = fixed[0];
    for (const auto& sk : ps.factors[k]) {
        std::array<std::array<ParamPoly, 2>, 2> M;
        std::array<SymValue, 3> v;
        v[k] = detail::slot_value(f, k, sk);
        const SymValue e[2] = {SymValue::infinity(), SymValue::zero()};
        for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q) {
                v[j] = e[p];
                v[l] = e[q];
                M[p][q] = f.contract(v);
            }
        Slots sl;
        sl[k] = sk;
        sl[j] = Slot::free();
        sl[l] = Slot::free();
        bool all_zero = M[0][0].is_zero() && M[0][1].is_zero() && M[1][0].is_zero() && M[1][1].is_zero();
        if (all_zero) throw SurfaceComponent("X contains the surface " + str(sl));
        ParamPoly det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
        if (!det.is_zero()) {
            out.components.push_back({Component::Type::Genus5, sl, false});
            continue;
        }
        int q = (M[0][0].is_zero() && M[1][0].is_zero()) ? 1 : 0;
        int r = (M[0][0].is_zero() && M[0][1].is_zero()) ? 1 : 0;
        // M = u w^T: u is a non-zero column, w a non-zero row.
        for (const auto& s : detail::solve_fiber(f, j, M[0][q], M[1][q])) {
            Slots c = sl;
            c[j] = s;
            out.components.push_back({Component::Type::Elliptic, c, false});
        }
        for (const auto& s : detail::solve_fiber(f, l, M[r][0], M[r][1])) {
            Slots c = sl;
            c[l] = s;
            out.components.push_back({Component::Type::Elliptic, c, false});
        }
    }
    return out;
}

struct XFixedLocus {
    GroupElement element;
    TFixedLocus on_T;
    Locus locus;
};

inline XFixedLocus fixed_locus_on_X(const Family& f, GroupElement g) {
    TFixedLocus t = fixed_locus_on_T(g);
    if (t.empty()) throw ContractViolation("fixed_locus_on_X: " + g.str() + " has no fixed points on T");
    return {g, t, locus_on_X(f, ProductSet::from(t))};
}

/// Intersection of two slots of factor j, if non-empty.
inline std::optional<Slot> intersect(const Family& f, int j, const Slot& x, const Slot& y) {
    using K = Slot::Kind;
    if (x.kind == K::Free) return y;
    if (y.kind == K::Free) return x;
    if (x.kind == K::At && y.kind == K::At) return x.point == y.point ? std::optional<Slot>(x) : std::nullopt;
    if (x.kind == K::Fiber && y.kind == K::Fiber) return x.value == y.value ? std::optional<Slot>(x) : std::nullopt;
    const Slot& at = x.kind == K::At ? x : y;
    const Slot& fib = x.kind == K::At ? y : x;
    return f.value(j, at.point) == fib.value ? std::optional<Slot>(at) : std::nullopt;
}

/// Every component is (product of its slots) intersected with X, so two
/// components meet in X intersected with the slotwise intersection.
inline Locus intersect(const Family& f, const Component& a, const Component& b) {
    Slots s;
    for (int j = 0; j < 3; ++j) {
        auto r = intersect(f, j, a.slots[j], b.slots[j]);
        if (!r) return {};
        s[j] = *r;
    }
    Locus l = locus_on_X(f, ProductSet::of(s));
    l.special.clear();
    return l;
}

struct IntersectionRecord {
    std::size_t first;
    std::size_t second;
    Locus meet;
};

/// Non-empty pairwise intersections among the components of a locus.
inline std::vector<IntersectionRecord> component_intersections(const Family& f, const std::vector<Component>& comps) {
    std::vector<IntersectionRecord> out;
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t j = i + 1; j < comps.size(); ++j) {
            Locus m = intersect(f, comps[i], comps[j]);
            if (!m.empty()) out.push_back({i, j, std::move(m)});
        }
    return out;
}

/// Image of a slot of factor j under g.
inline Slot act(const Family& f, GroupElement g, int j, const Slot& s) {
    switch (s.kind) {
        case Slot::Kind::Free: return s;
        case Slot::Kind::At: return Slot::at(g.code(j).act(s.point));
        case Slot::Kind::Fiber:
            return Slot::fiber(apply_p1(j, induced_p1_action(g)[j], s.value).substitute(f.spec()));
    }
    return s;
}

inline Component act(const Family& f, GroupElement g, const Component& c) {
    Component r = c;
    for (int j = 0; j < 3; ++j) r.slots[j] = act(f, g, j, c.slots[j]);
    return r;
}

}  // namespace gbt
