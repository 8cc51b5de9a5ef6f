#pragma once
// Floating-point Legendre functions from theta quotients, used to check the
// exact decisions and to confirm that nodes are ordinary double points.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "singularity.hpp"

namespace gbt::numeric {

using cplx = std::complex<double>;

class IllConditioned : public Error {
public:
    using Error::Error;
};

struct Pair {
    cplx num;
    cplx den;
};

inline double norm(const Pair& p) { return std::sqrt(std::norm(p.num) + std::norm(p.den)); }

/// Projective distance |n1 d2 - n2 d1| / (|p1| |p2|).
inline double projective_distance(const Pair& x, const Pair& y) {
    double nx = norm(x), ny = norm(y);
    if (nx == 0 || ny == 0) return 1.0;
    return std::abs(x.num * y.den - y.num * x.den) / (nx * ny);
}

namespace detail {

constexpr double kPi = 3.14159265358979323846;

struct Theta12 {
    cplx t1, t2, d1, d2;  // values and z-derivatives
};

/// theta_1 and theta_2 at v = pi z with nome exp(i pi tau).
inline Theta12 theta12(cplx z, cplx tau) {
    Theta12 r{};
    cplx v = kPi * z;
    for (int n = 0; n < 64; ++n) {
        double h = n + 0.5;
        cplx qn = std::exp(cplx(0, kPi) * tau * (h * h));
        double m = 2 * n + 1;
        cplx s = std::sin(m * v), c = std::cos(m * v);
        double sg = n % 2 ? -1.0 : 1.0;
        cplx a1 = 2.0 * sg * qn * s, a2 = 2.0 * qn * c;
        r.t1 += a1;
        r.t2 += a2;
        r.d1 += 2.0 * sg * qn * m * kPi * c;
        r.d2 -= 2.0 * qn * m * kPi * s;
        if (n > 2 && std::abs(qn) * std::cosh(m * std::abs(v.imag())) * m < 1e-18) break;
    }
    return r;
}

}  // namespace detail

/// One factor: tau, the branch value a with b = L(tau/4), b^2 = a, and the
/// Moebius map f -> (f - s)/(f + s) from f = (theta_2/theta_1)^2 to L.
struct NumericCurve {
    cplx tau;
    cplx a;
    cplx b;
    cplx s;
    /// L(1/4 + tau/4) = sign * i * b.
    int sign = 1;
    std::array<std::array<cplx, 2>, 2> moebius{};
    double residual = 0;

    cplx reduce(cplx z) const {
        double k = std::round(z.imag() / tau.imag());
        z -= k * tau;
        z -= std::round(z.real());
        return z;
    }

    /// Chart 1 uses g = 1/f and is regular at the origin; chart 0 uses f.
    int chart_at(cplx z) const {
        auto t = detail::theta12(reduce(z), tau);
        return std::abs(t.t2) >= std::abs(t.t1) ? 1 : 0;
    }

    /// L(z) as a pair together with its z-derivative, in the given chart
    /// (default: the better conditioned one at z).
    std::pair<Pair, Pair> eval(cplx z, int chart = -1) const {
        auto t = detail::theta12(reduce(z), tau);
        if (chart < 0) chart = std::abs(t.t2) >= std::abs(t.t1) ? 1 : 0;
        if (chart == 1) {
            cplx g = t.t1 * t.t1 / (t.t2 * t.t2);
            cplx dg = 2.0 * t.t1 * (t.d1 * t.t2 - t.t1 * t.d2) / (t.t2 * t.t2 * t.t2);
            return {{1.0 - s * g, 1.0 + s * g}, {-s * dg, s * dg}};
        }
        cplx f = t.t2 * t.t2 / (t.t1 * t.t1);
        cplx df = 2.0 * t.t2 * (t.d2 * t.t1 - t.t2 * t.d1) / (t.t1 * t.t1 * t.t1);
        return {{f - s, f + s}, {df, df}};
    }

    Pair legendre(cplx z) const { return eval(z).first; }

    static cplx point(const TorsionPoint& p, cplx tau) {
        return (static_cast<double>(p.p) + static_cast<double>(p.q) * tau) / static_cast<double>(p.n);
    }
    cplx point(const TorsionPoint& p) const { return point(p, tau); }
};

inline Pair numeric_legendre(const NumericCurve& c, cplx z) { return c.legendre(z); }

inline NumericCurve build_curve(cplx tau, double tolerance = 1e-9) {
    if (!(tau.imag() > 0)) throw ContractViolation("build_curve: Im(tau) must be positive");
    if (tau.imag() < 0.2) throw IllConditioned("build_curve: Im(tau) < 0.2 is ill-conditioned");
    NumericCurve c;
    c.tau = tau;
    auto f = [&](cplx z) {
        auto t = detail::theta12(c.reduce(z), tau);
        return t.t2 * t.t2 / (t.t1 * t.t1);
    };
    c.s = f(0.25);
    cplx e2 = f(tau / 2.0);
    c.a = (e2 - c.s) / (e2 + c.s);
    c.moebius = {{{1.0, -c.s}, {1.0, c.s}}};
    Pair pb = c.legendre(tau / 4.0);
    c.b = pb.num / pb.den;
    Pair pc = c.legendre(0.25 + tau / 4.0);
    cplx ratio = pc.num / (pc.den * cplx(0, 1) * c.b);
    c.sign = ratio.real() > 0 ? 1 : -1;

    auto dist = [](const Pair& p, cplx v) { return projective_distance(p, {v, 1.0}); };
    double scale = std::max(1.0, std::abs(c.a));
    c.residual = std::max({projective_distance(c.legendre(0.0), {1.0, 1.0}), dist(c.legendre(0.5), -1.0),
                           dist(c.legendre(tau / 2.0), c.a), dist(c.legendre((1.0 + tau) / 2.0), -c.a),
                           dist(c.legendre(0.25), 0.0), std::abs(c.b * c.b - c.a) / scale,
                           std::abs(ratio - static_cast<double>(c.sign))});
    if (c.residual > tolerance)
        throw IllConditioned("build_curve: interpolation residual " + std::to_string(c.residual) + " exceeds tolerance");
    return c;
}

/// Numeric values of the ring variables.
struct Valuation {
    std::array<cplx, kNumVars> v{};

    cplx operator()(const LaurentPoly& p) const {
        cplx r = 0;
        for (const auto& [e, c] : p.terms()) {
            cplx t(c.re.convert_to<double>(), c.im.convert_to<double>());
            for (int k = 0; k < kNumVars; ++k)
                if (e[k]) t *= std::pow(v[k], e[k]);
            r += t;
        }
        return r;
    }
    Pair operator()(const SymValue& s) const { return {(*this)(s.num), (*this)(s.den)}; }
};

using Curves = std::array<NumericCurve, 3>;

inline Convention convention_of(const Curves& c) { return Convention{{c[0].sign, c[1].sign, c[2].sign}}; }

/// Family with numeric coefficients on three fixed curves.
class NumericFamily {
public:
    NumericFamily(const Family& f, const Curves& c, Valuation val) : curves_(c), val_(val) {
        for (int k = 0; k < 3; ++k) val_.v[k] = c[k].b;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) coef_[4 * i + 2 * j + k] = val_(f.coef(i, j, k).substitute(f.spec()));
    }

    const Valuation& valuation() const { return val_; }
    const Curves& curves() const { return curves_; }

    struct Local {
        double value = 0;  // |F| / scale
        std::array<cplx, 3> gradient{};
        double scale = 1;
        cplx raw = 0;
    };

    static Local evaluate(const std::array<cplx, 8>& coef, const std::array<std::pair<Pair, Pair>, 3>& p) {
        auto comp = [](const Pair& x, int i) { return i == 0 ? x.num : x.den; };
        Local r;
        double scale = 0;
        for (const auto& c : coef) scale += std::abs(c);
        scale *= norm(p[0].first) * norm(p[1].first) * norm(p[2].first);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) {
                    cplx c = coef[4 * i + 2 * j + k];
                    if (c == 0.0) continue;
                    cplx x = comp(p[0].first, i), y = comp(p[1].first, j), z = comp(p[2].first, k);
                    r.raw += c * x * y * z;
                    r.gradient[0] += c * comp(p[0].second, i) * y * z;
                    r.gradient[1] += c * x * comp(p[1].second, j) * z;
                    r.gradient[2] += c * x * y * comp(p[2].second, k);
                }
        r.scale = scale > 0 ? scale : 1;
        r.value = std::abs(r.raw) / r.scale;
        for (auto& g : r.gradient) g /= r.scale;
        return r;
    }

    Local at(const std::array<cplx, 3>& z, const std::array<int, 3>& charts = {-1, -1, -1}) const {
        return evaluate(coef_, {curves_[0].eval(z[0], charts[0]), curves_[1].eval(z[1], charts[1]),
                                curves_[2].eval(z[2], charts[2])});
    }
    Local at(const Triple& t) const {
        return at({curves_[0].point(t[0]), curves_[1].point(t[1]), curves_[2].point(t[2])});
    }

private:
    Curves curves_;
    Valuation val_;
    std::array<cplx, 8> coef_{};
};

enum class Decision { Zero, NonZero, Inconclusive };

inline const char* name(Decision d) {
    switch (d) {
        case Decision::Zero: return "zero";
        case Decision::NonZero: return "nonzero";
        case Decision::Inconclusive: return "inconclusive";
    }
    return "";
}

/// Below tolerance is zero; above eps/tolerance is nonzero; between is
/// inconclusive.
inline Decision decide(double v, double tolerance) {
    if (v < tolerance) return Decision::Zero;
    if (v > std::numeric_limits<double>::epsilon() / tolerance) return Decision::NonZero;
    return Decision::Inconclusive;
}

struct Disagreement {
    std::string family;
    std::string point;
    std::string expected;
    std::string observed;
    double value = 0;
};

struct NodeCheck {
    std::string family;
    Triple point;
    double gradient_norm = 0;
    double value = 0;
    cplx hessian_det = 0;
    /// sigma_min / sigma_max of the 3x3 Hessian.
    double hessian_conditioning = 0;
    /// Largest |2x2 principal minor| normalised by ||H||^2.
    double transverse_det = 0;
    bool nondegenerate = false;
    bool inconclusive = false;
};

struct FamilyCheck {
    std::string family;
    std::size_t checked = 0;
    std::size_t agreements = 0;
    std::size_t inconclusive = 0;
    double max_zero = 0;
    double min_nonzero = std::numeric_limits<double>::infinity();
    std::vector<Disagreement> disagreements;

    double margin_orders() const {
        if (max_zero <= 0) return 16.0;
        return std::log10(min_nonzero / max_zero);
    }
};

struct SweepCheck {
    std::string family;
    int level = 8;
    std::size_t points = 0;
    std::vector<Triple> numeric_singular;
    std::vector<Triple> symbolic_nodes;
    bool agrees = false;
};

struct OracleTolerances {
    double residual = 1e-9;
    double legendre_relative = 1e-8;
    double gradient = 1e-9;
    double hessian = 1e-6;
    double margin_orders = 6;
};

/// A family instance for the oracle: exact family plus numeric parameters.
struct FamilyCase {
    std::string label;
    Family family;
    std::optional<Relation> relation;
};

namespace detail {

inline double legendre_error(const NumericCurve& c, int j, const Convention& conv) {
    Valuation val;
    val.v[j] = c.b;
    double worst = 0;
    for (const auto& p : all_points(4)) {
        Pair sym = val(legendre_value(j, p, conv));
        Pair num = c.legendre(c.point(p));
        worst = std::max(worst, projective_distance(sym, num));
    }
    return worst;
}

inline double identity_residual(const NumericCurve& c, std::mt19937_64& rng, int samples) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0;
    for (int k = 0; k < samples; ++k) {
        cplx z = u(rng) + u(rng) * c.tau;
        Pair l = c.legendre(z), h = c.legendre(z + 0.5), t = c.legendre(z + c.tau / 2.0), m = c.legendre(-z);
        double nl = norm(l);
        worst = std::max(worst, std::abs(h.num * l.den + l.num * h.den) / (norm(h) * nl));
        worst = std::max(worst, std::abs(t.num * l.num - c.a * t.den * l.den) / (norm(t) * nl * std::max(1.0, std::abs(c.a))));
        worst = std::max(worst, projective_distance(l, m));
    }
    return worst;
}

inline cplx random_tau(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.6, 1.4);
    return {re(rng), im(rng)};
}

/// tau with b(tau) = target, by damped Newton from a grid of starts.
inline std::optional<NumericCurve> curve_with_b(cplx target, double tolerance) {
    auto bval = [&](cplx t) -> std::optional<cplx> {
        if (t.imag() < 0.2) return std::nullopt;
        NumericCurve c;
        c.tau = t;
        auto f = [&](cplx z) {
            auto th = theta12(c.reduce(z), t);
            return th.t2 * th.t2 / (th.t1 * th.t1);
        };
        c.s = f(0.25);
        Pair p = c.legendre(t / 4.0);
        return p.num / p.den;
    };
    std::optional<NumericCurve> best;
    for (double re = -1.75; re <= 1.76 && !best; re += 0.25)
        for (double im = 0.3; im <= 1.5 && !best; im += 0.3) {
            cplx t(re, im);
            for (int it = 0; it < 60; ++it) {
                auto v = bval(t);
                if (!v) break;
                cplx r = *v - target;
                if (std::abs(r) < 1e-13 * std::max(1.0, std::abs(target))) {
                    try {
                        best = build_curve(t, tolerance);
                    } catch (const Error&) {
                    }
                    break;
                }
                const double h = 1e-6;
                auto vp = bval(t + h), vm = bval(t - h);
                if (!vp || !vm) break;
                cplx d = (*vp - *vm) / (2 * h);
                if (d == 0.0) break;
                cplx step = r / d;
                double lim = 0.2;
                if (std::abs(step) > lim) step *= lim / std::abs(step);
                t -= step;
            }
        }
    return best;
}

}  // namespace detail

/// Three random curves; if a relation is given, the last substituted b is
/// realised by solving b(tau) = target.
inline Curves random_curves(std::mt19937_64& rng, double tolerance, const std::optional<Relation>& rel = std::nullopt) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Curves c;
        for (auto& x : c) x = build_curve(detail::random_tau(rng), tolerance);
        if (!rel) return c;
        Specialization sp = rel->to_specialization();
        for (int j = 2; j >= 0; --j) {
            Var v = static_cast<Var>(j);
            if (!sp.substitutes(v)) continue;
            Valuation val;
            for (int k = 0; k < 3; ++k) val.v[k] = c[k].b;
            cplx target = val(sp.image(v));
            auto solved = detail::curve_with_b(target, tolerance);
            if (!solved) break;
            c[j] = *solved;
            return c;
        }
    }
    throw IllConditioned("could not realise relation " + rel->str() + " on numeric curves");
}

/// Checks every exact incidence decision on quarter-torsion triples: zero,
/// nonzero, and zero exactly at the solved parameter value.
inline FamilyCheck cross_check_family(const FamilyCase& fc, const Curves& curves, std::mt19937_64& rng,
                                      double tolerance) {
    FamilyCheck r;
    r.family = fc.label;
    Family f = fc.family.with_spec(fc.family.spec());
    Family fx = Family::make(f.kind(), f.spec(), convention_of(curves));
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Valuation generic;
    generic.v[3] = cplx(u(rng), u(rng));
    generic.v[4] = cplx(u(rng), u(rng));
    generic.v[5] = cplx(u(rng), u(rng));
    NumericFamily gen(fx, curves, generic);

    auto record = [&](const Triple& z, Decision expect, double v, const std::string& where) {
        ++r.checked;
        Decision d = decide(v, tolerance);
        if (expect == Decision::Zero) r.max_zero = std::max(r.max_zero, v);
        else r.min_nonzero = std::min(r.min_nonzero, v);
        if (d == Decision::Inconclusive) {
            ++r.inconclusive;
        } else if (d == expect) {
            ++r.agreements;
        } else {
            r.disagreements.push_back({fc.label, str(z) + where, name(expect), name(d), v});
        }
    };

    for (const auto& z : quarter_torsion_triples()) {
        Condition c = fx.solve(fx.evaluate(z));
        double v = gen.at(z).value;
        switch (c.kind) {
            case Condition::Kind::IdenticallyZero: record(z, Decision::Zero, v, ""); break;
            case Condition::Kind::NeverZero: record(z, Decision::NonZero, v, ""); break;
            case Condition::Kind::ZeroIff: {
                record(z, Decision::NonZero, v, " (generic parameter)");
                if (c.value.is_infinity() && fx.params() == ParamKind::Mu) break;
                Valuation at = generic;
                for (int k = 0; k < 3; ++k) at.v[k] = curves[k].b;
                Pair p = at(c.value);
                if (fx.params() == ParamKind::Nu) {
                    at.v[3] = p.num;
                    at.v[4] = p.den;
                } else {
                    at.v[5] = p.num / p.den;
                }
                record(z, Decision::Zero, NumericFamily(fx, curves, at).at(z).value, " (parameter " + c.value.str() + ")");
                break;
            }
        }
    }
    return r;
}

/// Gradient and finite-difference Hessian of the local equation at a node.
inline NodeCheck verify_node(const Curves& curves, const Family& f, const Triple& point,
                             const OracleTolerances& tol = {}, const std::string& label = "") {
    Family fx = Family::make(f.kind(), f.spec(), convention_of(curves));
    if (fx.params() != ParamKind::None) throw ContractViolation("verify_node: family must be fully specialized");
    NumericFamily nf(fx, curves, Valuation{});
    NodeCheck r;
    r.family = label.empty() ? fx.str() : label;
    r.point = point;
    std::array<cplx, 3> z{curves[0].point(point[0]), curves[1].point(point[1]), curves[2].point(point[2])};
    std::array<int, 3> charts{curves[0].chart_at(z[0]), curves[1].chart_at(z[1]), curves[2].chart_at(z[2])};
    auto base = nf.at(z, charts);
    r.value = base.value;
    double g = 0;
    for (auto x : base.gradient) g += std::norm(x);
    r.gradient_norm = std::sqrt(g);
    if (r.value > tol.gradient || r.gradient_norm > tol.gradient)
        throw ContractViolation("verify_node: " + str(point) + " is not a singular point (gradient " +
                                std::to_string(r.gradient_norm) + ")");

    const double h = std::cbrt(tol.residual);
    Eigen::Matrix3cd H;
    for (int k = 0; k < 3; ++k) {
        auto zp = z, zm = z;
        zp[k] += h;
        zm[k] -= h;
        // Raw gradients share the base scale so the difference is consistent.
        auto gp = nf.at(zp, charts), gm = nf.at(zm, charts);
        for (int j = 0; j < 3; ++j) H(j, k) = (gp.gradient[j] * gp.scale - gm.gradient[j] * gm.scale) / (2 * h * base.scale);
    }
    H = (0.5 * (H + H.transpose())).eval();
    r.hessian_det = H.determinant();
    Eigen::JacobiSVD<Eigen::Matrix3cd> svd(H);
    auto sv = svd.singularValues();
    r.hessian_conditioning = sv(0) > 0 ? sv(2) / sv(0) : 0;
    double hn = sv(0) * sv(0);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            cplx m = H(i, i) * H(j, j) - H(i, j) * H(j, i);
            r.transverse_det = std::max(r.transverse_det, hn > 0 ? std::abs(m) / hn : 0.0);
        }
    r.nondegenerate = r.hessian_conditioning > tol.hessian;
    r.inconclusive = !r.nondegenerate && r.hessian_conditioning > tol.hessian * 1e-3;
    return r;
}

/// Numeric search for singular points among the level-N torsion triples.
inline SweepCheck torsion_sweep(const Curves& curves, const Family& f, int level, const OracleTolerances& tol,
                                const std::string& label = "") {
    Family fx = Family::make(f.kind(), f.spec(), convention_of(curves));
    if (fx.params() != ParamKind::None) throw ContractViolation("torsion_sweep: family must be fully specialized");
    SweepCheck r;
    r.family = label.empty() ? fx.str() : label;
    r.level = level;
    auto pts = all_points(level);
    std::array<std::vector<std::pair<Pair, Pair>>, 3> vals;
    for (int j = 0; j < 3; ++j)
        for (const auto& p : pts) vals[j].push_back(curves[j].eval(curves[j].point(p)));
    std::array<cplx, 8> coef{};
    Valuation val;
    for (int k = 0; k < 3; ++k) val.v[k] = curves[k].b;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) coef[4 * i + 2 * j + k] = val(fx.coef(i, j, k).substitute(fx.spec()));
    // Loose gate: anything close to singular is reported and compared.
    const double gate = std::sqrt(tol.gradient);
    for (std::size_t x = 0; x < pts.size(); ++x)
        for (std::size_t y = 0; y < pts.size(); ++y)
            for (std::size_t w = 0; w < pts.size(); ++w) {
                ++r.points;
                auto l = NumericFamily::evaluate(coef, {vals[0][x], vals[1][y], vals[2][w]});
                if (l.value > gate) continue;
                double g = std::sqrt(std::norm(l.gradient[0]) + std::norm(l.gradient[1]) + std::norm(l.gradient[2]));
                if (g < gate) r.numeric_singular.push_back({pts[x].reduced(), pts[y].reduced(), pts[w].reduced()});
            }
    for (auto& t : r.numeric_singular)
        for (auto& p : t) p = p.at_level(4 % p.n == 0 ? 4 : p.n);
    r.symbolic_nodes = singular_points(fx);
    auto a = r.numeric_singular, b = r.symbolic_nodes;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    r.agrees = a == b;
    return r;
}

struct CurveSummary {
    cplx tau;
    cplx a;
    cplx b;
    int sign = 1;
    double residual = 0;
};

struct OracleReport {
    std::uint64_t seed = 0;
    int triples = 0;
    OracleTolerances tolerances;
    std::vector<std::array<CurveSummary, 3>> curves;
    double legendre_max_error = 0;
    double identity_max_residual = 0;
    std::vector<FamilyCheck> families;
    std::vector<NodeCheck> nodes;
    std::vector<SweepCheck> sweeps;
    std::vector<std::string> errors;

    bool nodes_ok() const {
        return !nodes.empty() && std::all_of(nodes.begin(), nodes.end(), [&](const NodeCheck& n) {
                   return n.nondegenerate && n.gradient_norm < tolerances.gradient;
               });
    }
    double min_margin() const {
        double m = 16;
        for (const auto& f : families) m = std::min(m, f.margin_orders());
        return m;
    }
    bool families_ok() const {
        return std::all_of(families.begin(), families.end(),
                           [](const FamilyCheck& f) { return f.disagreements.empty() && f.inconclusive == 0; });
    }
    bool sweeps_ok() const {
        return std::all_of(sweeps.begin(), sweeps.end(), [](const SweepCheck& s) { return s.agrees; });
    }
    bool ok() const {
        return errors.empty() && legendre_max_error < tolerances.legendre_relative &&
               identity_max_residual < tolerances.legendre_relative && families_ok() && nodes_ok() &&
               min_margin() >= tolerances.margin_orders && sweeps_ok();
    }
};

inline CurveSummary summarize(const NumericCurve& c) { return {c.tau, c.a, c.b, c.sign, c.residual}; }

/// Singular specializations checked for nodes: every singular nu and every
/// relation on b.
inline std::vector<FamilyCase> node_cases() {
    std::vector<FamilyCase> out;
    for (const char* nu : {"nu=(b1:1)", "nu=(-b1:1)", "nu=(1:b1)", "nu=(1:-b1)"})
        out.push_back({nu, Family::make(FamilyKind::Nu, parse_specialization(nu)), std::nullopt});
    for (int e2 : {1, -1})
        for (int e3 : {1, -1})
            for (int v : {1, -1}) {
                Relation r{{1, e2, e3}, GaussianRational(v)};
                out.push_back({r.str(), Family::make(FamilyKind::B, r.to_specialization()), r});
            }
    return out;
}

inline std::vector<FamilyCase> incidence_cases() {
    return {
        {"nu", Family::make(FamilyKind::Nu), std::nullopt},
        {"mu", Family::make(FamilyKind::Mu), std::nullopt},
        {"mu=a1", Family::make(FamilyKind::Mu, parse_specialization("mu=b1^2")), std::nullopt},
        {"b", Family::make(FamilyKind::B), std::nullopt},
    };
}

/// Full oracle run over the pinned tau-triples followed by `triples` random ones.
inline OracleReport cross_check_symbolic(std::uint64_t seed, int triples = 20, const OracleTolerances& tol = {},
                                         int sweep_level = 8, int sweep_triples = 1,
                                         const std::vector<std::array<cplx, 3>>& pinned = {}) {
    OracleReport rep;
    rep.seed = seed;
    rep.triples = static_cast<int>(pinned.size()) + triples;
    rep.tolerances = tol;
    std::mt19937_64 rng(seed);
    const int total = static_cast<int>(pinned.size()) + triples;
    for (int t = 0; t < total; ++t) {
        try {
            Curves c;
            if (t < static_cast<int>(pinned.size()))
                for (int j = 0; j < 3; ++j) c[j] = build_curve(pinned[t][j], tol.residual);
            else
                c = random_curves(rng, tol.residual);
            rep.curves.push_back({summarize(c[0]), summarize(c[1]), summarize(c[2])});
            Convention conv = convention_of(c);
            for (int j = 0; j < 3; ++j) {
                rep.legendre_max_error = std::max(rep.legendre_max_error, detail::legendre_error(c[j], j, conv));
                rep.identity_max_residual = std::max(rep.identity_max_residual, detail::identity_residual(c[j], rng, 100));
            }
            if (t < 4)
                for (const auto& fc : incidence_cases()) {
                    auto fcheck = cross_check_family(fc, c, rng, tol.residual);
                    fcheck.family += " #" + std::to_string(t);
                    rep.families.push_back(std::move(fcheck));
                }
        } catch (const Error& e) {
            rep.errors.push_back(e.what());
        }
    }
    for (const auto& nc : node_cases()) {
        try {
            Curves c = random_curves(rng, tol.residual, nc.relation);
            Family fx = Family::make(nc.family.kind(), nc.family.spec(), convention_of(c));
            auto fcheck = cross_check_family({nc.label, fx, nc.relation}, c, rng, tol.residual);
            rep.families.push_back(std::move(fcheck));
            for (const auto& p : singular_points(fx)) rep.nodes.push_back(verify_node(c, fx, p, tol, nc.label));
            for (int s = 0; s < sweep_triples; ++s) rep.sweeps.push_back(torsion_sweep(c, fx, sweep_level, tol, nc.label));
        } catch (const Error& e) {
            rep.errors.push_back(nc.label + ": " + e.what());
        }
    }
    return rep;
}

}  // namespace gbt::numeric
