#pragma once
// Torsion points on E1 x E2 x E3 and the affine (Z/2)^9 action.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace gbt {

/// Point (p + q*tau)/n of one factor, stored with 0 <= p, q < n.
struct TorsionPoint {
    int p = 0;
    int q = 0;
    int n = 4;

    TorsionPoint() = default;
    TorsionPoint(int p_, int q_, int n_ = 4) : p(p_), q(q_), n(n_) {
        if (n <= 0) throw ContractViolation("torsion level must be positive");
        p = ((p % n) + n) % n;
        q = ((q % n) + n) % n;
    }

    /// Same point at level m (n must divide m).
    TorsionPoint at_level(int m) const {
        if (m % n != 0) throw ContractViolation("level " + std::to_string(m) + " is not a multiple of " + std::to_string(n));
        return {p * (m / n), q * (m / n), m};
    }
    /// Smallest level at which the point is defined.
    int order() const {
        int g = std::gcd(std::gcd(p, q), n);
        return n / g;
    }
    TorsionPoint reduced() const {
        int g = std::gcd(std::gcd(p, q), n);
        return {p / g, q / g, n / g};
    }
    bool is_two_torsion() const { return (2 * p) % n == 0 && (2 * q) % n == 0; }

    friend TorsionPoint operator+(const TorsionPoint& a, const TorsionPoint& b) {
        int m = std::lcm(a.n, b.n);
        TorsionPoint x = a.at_level(m), y = b.at_level(m);
        return {x.p + y.p, x.q + y.q, m};
    }
    TorsionPoint operator-() const { return {-p, -q, n}; }

    friend bool operator==(const TorsionPoint& a, const TorsionPoint& b) {
        return a.p * b.n == b.p * a.n && a.q * b.n == b.q * a.n;
    }
    /// Lexicographic on (p/n, q/n).
    friend std::strong_ordering operator<=>(const TorsionPoint& a, const TorsionPoint& b) {
        if (auto c = a.p * b.n <=> b.p * a.n; c != 0) return c;
        return a.q * b.n <=> b.q * a.n;
    }

    /// "0", "1/4", "tau/2", "1/4+3tau/4".
    std::string str() const {
        TorsionPoint r = reduced();
        auto frac = [](int num, int den, const char* unit) {
            int g = std::gcd(num, den);
            num /= g;
            den /= g;
            std::string s = (num == 1 && *unit) ? "" : std::to_string(num);
            s += unit;
            if (den != 1) s += "/" + std::to_string(den);
            return s;
        };
        if (r.p == 0 && r.q == 0) return "0";
        std::string s;
        if (r.p != 0) s = frac(r.p, r.n, "");
        if (r.q != 0) {
            if (!s.empty()) s += "+";
            s += frac(r.q, r.n, "tau");
        }
        return s;
    }
};

/// All points of one factor at level n, in canonical order.
inline std::vector<TorsionPoint> all_points(int n = 4) {
    std::vector<TorsionPoint> v;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) v.emplace_back(p, q, n);
    return v;
}

/// The 2-torsion points 0, 1/2, tau/2, (1+tau)/2.
inline std::vector<TorsionPoint> two_torsion() { return {{0, 0, 2}, {0, 1, 2}, {1, 0, 2}, {1, 1, 2}}; }

using Triple = std::array<TorsionPoint, 3>;

inline std::string str(const Triple& z) { return "(" + z[0].str() + ", " + z[1].str() + ", " + z[2].str() + ")"; }

struct FactorCode {
    bool zeta = false;
    bool eta = false;
    bool epsilon = false;

    int sign() const { return (zeta + eta + epsilon) % 2 ? -1 : 1; }
    bool has_translation() const { return eta || epsilon; }
    /// eta*tau/2 + epsilon/2.
    TorsionPoint translation() const { return {epsilon ? 1 : 0, eta ? 1 : 0, 2}; }

    TorsionPoint act(const TorsionPoint& z) const {
        TorsionPoint s = sign() < 0 ? -z : z;
        return s + translation();
    }
    friend bool operator==(const FactorCode&, const FactorCode&) = default;
};

/// Element of (Z/2)^9; bit 8 is zeta_1, bit 0 is epsilon_3, so numeric order
/// is lexicographic order of (zeta1, eta1, eps1, ..., eps3).
class GroupElement {
public:
    constexpr GroupElement() = default;
    explicit constexpr GroupElement(std::uint16_t bits) : bits_(bits & 0x1FF) {}

    static GroupElement from_bits(const std::array<int, 9>& b) {
        std::uint16_t v = 0;
        for (int k = 0; k < 9; ++k) {
            if (b[k] != 0 && b[k] != 1) throw ContractViolation("group element bits must be 0 or 1");
            v = static_cast<std::uint16_t>((v << 1) | b[k]);
        }
        return GroupElement(v);
    }

    /// Accepts "(1,0,0|1,0,0|1,0,0)", "100100100" or "1,0,0,1,0,0,1,0,0".
    static GroupElement parse(const std::string& s) {
        std::array<int, 9> b{};
        int k = 0;
        for (char c : s) {
            if (c == '0' || c == '1') {
                if (k == 9) throw Error("group element '" + s + "' has more than 9 bits");
                b[k++] = c - '0';
            } else if (c != ',' && c != '|' && c != '(' && c != ')' && c != ' ') {
                throw Error("group element '" + s + "': unexpected character");
            }
        }
        if (k != 9) throw Error("group element '" + s + "' needs 9 bits");
        return from_bits(b);
    }

    std::uint16_t bits() const { return bits_; }
    bool is_identity() const { return bits_ == 0; }

    FactorCode code(int j) const {
        int shift = 3 * (2 - j);
        return {bool((bits_ >> (shift + 2)) & 1), bool((bits_ >> (shift + 1)) & 1), bool((bits_ >> shift) & 1)};
    }

    Triple act(const Triple& z) const { return {code(0).act(z[0]), code(1).act(z[1]), code(2).act(z[2])}; }

    friend GroupElement operator+(GroupElement a, GroupElement b) {
        return GroupElement(static_cast<std::uint16_t>(a.bits_ ^ b.bits_));
    }
    friend bool operator==(GroupElement, GroupElement) = default;
    friend auto operator<=>(GroupElement a, GroupElement b) { return a.bits_ <=> b.bits_; }

    std::string str() const {
        std::string s = "(";
        for (int k = 8; k >= 0; --k) {
            s += ((bits_ >> k) & 1) ? '1' : '0';
            if (k == 6 || k == 3) s += '|';
            else if (k > 0) s += ',';
        }
        return s + ")";
    }

private:
    std::uint16_t bits_ = 0;
};

/// Element of H1 = (Z/2)^2 acting on P^1: swap (s:t) -> (t:s) after
/// b-normalization, flip x -> -x.
struct P1Action {
    bool swap = false;
    bool flip = false;
    friend bool operator==(const P1Action&, const P1Action&) = default;
};

inline std::array<P1Action, 3> induced_p1_action(GroupElement g) {
    std::array<P1Action, 3> r;
    for (int j = 0; j < 3; ++j) r[j] = {g.code(j).eta, g.code(j).epsilon};
    return r;
}

struct FactorFix {
    enum class Kind { FourPoints, WholeCurve, Empty };
    Kind kind = Kind::Empty;
    std::vector<TorsionPoint> points;
};

struct TFixedLocus {
    GroupElement element;
    std::array<FactorFix, 3> per_factor;

    bool empty() const {
        for (const auto& f : per_factor)
            if (f.kind == FactorFix::Kind::Empty) return true;
        return false;
    }
    /// Number of WholeCurve factors, or -1 when empty.
    int dimension() const {
        if (empty()) return -1;
        int d = 0;
        for (const auto& f : per_factor) d += f.kind == FactorFix::Kind::WholeCurve;
        return d;
    }
    /// All fixed torsion triples (only meaningful for dimension 0).
    std::vector<Triple> points() const {
        std::vector<Triple> out;
        if (dimension() != 0) return out;
        for (const auto& x : per_factor[0].points)
            for (const auto& y : per_factor[1].points)
                for (const auto& z : per_factor[2].points) out.push_back({x, y, z});
        return out;
    }
};

/// Fixed set of one factor code: the 4 solutions of 2z = t when the sign
/// is -1, everything when the code is trivial, nothing otherwise.
inline FactorFix factor_fixed_set(const FactorCode& c, int level = 4) {
    if (level % 4 != 0) throw ContractViolation("torsion level must be a multiple of 4");
    FactorFix f;
    if (c.sign() < 0) {
        f.kind = FactorFix::Kind::FourPoints;
        TorsionPoint half{c.epsilon ? 1 : 0, c.eta ? 1 : 0, 4};
        for (const auto& t : two_torsion()) f.points.push_back((half + t).at_level(level));
        std::sort(f.points.begin(), f.points.end());
    } else if (!c.has_translation()) {
        f.kind = FactorFix::Kind::WholeCurve;
    }
    return f;
}

inline TFixedLocus fixed_locus_on_T(GroupElement g, int level = 4) {
    if (g.is_identity()) throw ContractViolation("fixed_locus_on_T: identity element");
    TFixedLocus l;
    l.element = g;
    for (int j = 0; j < 3; ++j) l.per_factor[j] = factor_fixed_set(g.code(j), level);
    return l;
}

/// Finite subgroup stored as its full sorted element list.
class Subgroup {
public:
    Subgroup() : name_("trivial"), elements_{GroupElement{}} {}

    static Subgroup closure(std::string name, const std::vector<GroupElement>& gens) {
        std::vector<GroupElement> el{GroupElement{}};
        for (GroupElement g : gens) {
            if (std::find(el.begin(), el.end(), g) != el.end()) continue;
            std::size_t m = el.size();
            for (std::size_t k = 0; k < m; ++k) el.push_back(el[k] + g);
        }
        std::sort(el.begin(), el.end());
        Subgroup s;
        s.name_ = std::move(name);
        s.elements_ = std::move(el);
        s.generators_ = gens;
        return s;
    }

    template <class Pred>
    static Subgroup filter(std::string name, Pred pred) {
        std::vector<GroupElement> gens;
        Subgroup s;
        for (int v = 1; v < 512; ++v) {
            GroupElement g(static_cast<std::uint16_t>(v));
            if (pred(g) && !s.contains(g)) {
                gens.push_back(g);
                s = closure(name, gens);
            }
        }
        s.name_ = std::move(name);
        return s;
    }

    const std::string& name() const { return name_; }
    const std::vector<GroupElement>& elements() const { return elements_; }
    const std::vector<GroupElement>& generators() const { return generators_; }
    std::size_t order() const { return elements_.size(); }
    bool contains(GroupElement g) const { return std::binary_search(elements_.begin(), elements_.end(), g); }
    bool is_subgroup_of(const Subgroup& h) const {
        return std::all_of(elements_.begin(), elements_.end(), [&](GroupElement g) { return h.contains(g); });
    }
    std::vector<GroupElement> coset(GroupElement s) const {
        std::vector<GroupElement> c;
        for (GroupElement g : elements_) c.push_back(s + g);
        std::sort(c.begin(), c.end());
        return c;
    }

private:
    std::string name_;
    std::vector<GroupElement> elements_;
    std::vector<GroupElement> generators_;
};

namespace groups {

inline Subgroup full() {
    return Subgroup::filter("G_full", [](GroupElement) { return true; });
}
/// eta1 = eta2 = eta3 and eps1 + eps2 + eps3 = 0.
inline Subgroup G0() {
    return Subgroup::filter("G0", [](GroupElement g) {
        auto c0 = g.code(0), c1 = g.code(1), c2 = g.code(2);
        return c0.eta == c1.eta && c1.eta == c2.eta && ((c0.epsilon + c1.epsilon + c2.epsilon) % 2 == 0);
    });
}
/// eps1 = 0, eta1 = eta2 = eta3, eps2 = eps3.
inline Subgroup G1prime() {
    return Subgroup::filter("G1'", [](GroupElement g) {
        auto c0 = g.code(0), c1 = g.code(1), c2 = g.code(2);
        return !c0.epsilon && c0.eta == c1.eta && c1.eta == c2.eta && c1.epsilon == c2.epsilon;
    });
}
/// All eta = 0 and eps1 + eps2 + eps3 = 0.
inline Subgroup G1() {
    return Subgroup::filter("G1", [](GroupElement g) {
        auto c0 = g.code(0), c1 = g.code(1), c2 = g.code(2);
        return !c0.eta && !c1.eta && !c2.eta && ((c0.epsilon + c1.epsilon + c2.epsilon) % 2 == 0);
    });
}

inline Subgroup GrpG(int j) {
    static const char* rows[4][3] = {
        {"100100100", "010110110", "000001101"},
        {"100001101", "001000101", "000101001"},
        {"100001101", "010010110", "001101100"},
        {"101001100", "010010110", "000101101"},
    };
    if (j < 1 || j > 4) throw ContractViolation("GrpG index must be 1..4");
    std::vector<GroupElement> gens;
    for (const char* r : rows[j - 1]) gens.push_back(GroupElement::parse(r));
    return Subgroup::closure("GrpG" + std::to_string(j), gens);
}

inline Subgroup by_name(const std::string& n) {
    if (n == "G_full") return full();
    if (n == "G0") return G0();
    if (n == "G1'" || n == "G1p") return G1prime();
    if (n == "G1") return G1();
    for (int j = 1; j <= 4; ++j)
        if (n == "GrpG" + std::to_string(j)) return GrpG(j);
    throw Error("unknown group '" + n + "'");
}

}  // namespace groups

/// The 17 columns of the table of elements of G0 fixing points on T,
/// index 0 is g1.
inline const std::array<GroupElement, 17>& table1() {
    static const std::array<GroupElement, 17> t = [] {
        const char* cols[17] = {"000000100", "000100000", "100000000", "000100100", "100000100", "100100000",
                                "000001001", "001000001", "001001000", "100100100", "100001001", "001100001",
                                "001001100", "010010010", "010111111", "111010111", "111111010"};
        std::array<GroupElement, 17> r;
        for (int k = 0; k < 17; ++k) r[k] = GroupElement::parse(cols[k]);
        return r;
    }();
    return t;
}

/// g0 = (1,0,0|1,0,0|1,0,0), which is also g10.
inline GroupElement g0() { return GroupElement::parse("100100100"); }

/// "g7" for table elements, the bit string otherwise.
inline std::optional<int> table1_index(GroupElement g) {
    const auto& t = table1();
    for (int k = 0; k < 17; ++k)
        if (t[k] == g) return k + 1;
    return std::nullopt;
}
inline std::string label(GroupElement g) {
    if (auto k = table1_index(g)) return "g" + std::to_string(*k);
    return g.str();
}

/// Non-identity elements of G with non-empty fixed locus on T, ordered by
/// dimension (descending) and then lexicographically.
inline std::vector<std::pair<GroupElement, TFixedLocus>> enumerate_fixing_elements(const Subgroup& G, int level = 4) {
    std::vector<std::pair<GroupElement, TFixedLocus>> out;
    for (GroupElement g : G.elements()) {
        if (g.is_identity()) continue;
        TFixedLocus l = fixed_locus_on_T(g, level);
        if (!l.empty()) out.emplace_back(g, std::move(l));
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        int dx = x.second.dimension(), dy = y.second.dimension();
        if (dx != dy) return dx > dy;
        return x.first < y.first;
    });
    return out;
}

}  // namespace gbt
