#pragma once
// Acceptance criteria with frozen reference values and pinned tolerances.

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "numeric.hpp"
#include "quotient.hpp"

namespace gbt::acceptance {

struct Tolerances {
    static constexpr double legendre_relative = 1e-8;
    static constexpr double residual = 1e-9;
    static constexpr double gradient = 1e-9;
    static constexpr double hessian = 1e-6;
    static constexpr double margin_orders = 6.0;
    static constexpr int oracle_triples = 20;
    static constexpr std::uint64_t oracle_seed = 20240611;
    static constexpr int sweep_level = 8;
};

struct Result {
    int id = 0;
    std::string title;
    bool pass = false;
    std::vector<std::string> details;
    std::vector<std::string> notes;

    std::string line() const {
        std::string s = std::string(pass ? "PASS" : "FAIL") + "  criterion " + std::to_string(id) + ": " + title;
        if (!details.empty()) s += " (" + details.front() + ")";
        return s;
    }
};

namespace reference {

/// Fixing elements of G0 in order, with the dimension of their fixed locus on T.
struct Row {
    const char* label;
    const char* bits;
    int dimension;
};

inline const std::vector<Row>& table1() {
    static const std::vector<Row> t = {
        {"g1", "000000100", 2},  {"g2", "000100000", 2},  {"g3", "100000000", 2},  {"g4", "000100100", 1},
        {"g5", "100000100", 1},  {"g6", "100100000", 1},  {"g7", "000001001", 1},  {"g8", "001000001", 1},
        {"g9", "001001000", 1},  {"g10", "100100100", 0}, {"g11", "100001001", 0}, {"g12", "001100001", 0},
        {"g13", "001001100", 0}, {"g14", "010010010", 0}, {"g15", "010111111", 0}, {"g16", "111010111", 0},
        {"g17", "111111010", 0},
    };
    return t;
}

struct Cell {
    const char* element;
    int points;
    int nodes;
    int elliptic;
    int genus5;
};

inline const std::vector<Cell>& nu_generic() {
    static const std::vector<Cell> c = {{"g1", 0, 0, 0, 4},  {"g2", 0, 0, 0, 4},  {"g3", 0, 0, 0, 4},
                                        {"g4", 32, 0, 0, 0}, {"g5", 32, 0, 0, 0}, {"g6", 32, 0, 0, 0},
                                        {"g7", 16, 0, 8, 0}, {"g11", 32, 0, 0, 0}, {"g14", 32, 0, 0, 0},
                                        {"g15", 32, 0, 0, 0}};
    return c;
}
inline const std::vector<Cell>& nu_singular() {
    static const std::vector<Cell> c = {{"g1", 0, 0, 0, 4},  {"g2", 0, 0, 0, 4},   {"g3", 0, 0, 8, 2},
                                        {"g4", 32, 0, 0, 0}, {"g5", 32, 0, 0, 0},  {"g6", 32, 0, 0, 0},
                                        {"g7", 0, 8, 8, 0},  {"g11", 32, 8, 0, 0}, {"g14", 32, 0, 0, 0},
                                        {"g15", 32, 0, 0, 0}};
    return c;
}
inline const std::vector<Cell>& mu_generic() {
    static const std::vector<Cell> c = {{"g1", 0, 0, 0, 4},  {"g2", 0, 0, 0, 4},  {"g3", 0, 0, 0, 4},
                                        {"g4", 32, 0, 0, 0}, {"g5", 32, 0, 0, 0}, {"g6", 32, 0, 0, 0},
                                        {"g7", 16, 0, 8, 0}, {"g8", 16, 0, 8, 0}, {"g9", 16, 0, 8, 0},
                                        {"g11", 32, 0, 0, 0}, {"g12", 32, 0, 0, 0}, {"g13", 32, 0, 0, 0}};
    return c;
}
inline const std::vector<Cell>& b_generic() {
    static const std::vector<Cell> c = {{"g4", 32, 0, 0, 0}, {"g5", 32, 0, 0, 0}, {"g6", 32, 0, 0, 0},
                                        {"g7", 16, 0, 8, 0}, {"g8", 16, 0, 8, 0}, {"g9", 16, 0, 8, 0}};
    return c;
}
/// The claimed g7-g9 singular cell reads "8 nodes, 8 ell. curves", but the
/// locus does not depend on b, so the reference is the generic value.
inline const std::vector<Cell>& b_singular() {
    static const std::vector<Cell> c = {{"g4", 16, 8, 0, 0}, {"g5", 16, 8, 0, 0}, {"g6", 16, 8, 0, 0},
                                        {"g7", 16, 0, 8, 0}, {"g8", 16, 0, 8, 0}, {"g9", 16, 0, 8, 0}};
    return c;
}
inline const Cell& b_singular_claimed() {
    static const Cell c{"g7", 0, 8, 8, 0};
    return c;
}

/// Singular values of nu and the first coordinate of the nodes per value:
/// z1 with L1(z1) = -nu b1 (over +-1/4) and z1 with L1(z1) = -b1/nu (over
/// tau/2 +- 1/4).
struct NuNodes {
    const char* nu;
    SymValue value;
    TorsionPoint z1_zero;
    TorsionPoint z1_pole;
};

inline const std::vector<NuNodes>& nu_nodes() {
    static const std::vector<NuNodes> n = {
        {"nu=(b1:1)", SymValue::of(b(1)), {2, 2, 4}, {2, 0, 4}},
        {"nu=(-b1:1)", SymValue::of(-b(1)), {0, 2, 4}, {0, 0, 4}},
        {"nu=(1:b1)", SymValue::of(b(1, -1)), {2, 0, 4}, {2, 2, 4}},
        {"nu=(1:-b1)", SymValue::of(-b(1, -1)), {0, 0, 4}, {0, 2, 4}},
    };
    return n;
}

inline std::vector<Triple> expected_nu_nodes(const NuNodes& n) {
    std::vector<Triple> out;
    for (int s2 : {1, 3})
        for (int s3 : {1, 3}) {
            out.push_back({n.z1_zero, TorsionPoint(s2, 0, 4), TorsionPoint(s3, 0, 4)});
            out.push_back({n.z1_pole, TorsionPoint(s2, 2, 4), TorsionPoint(s3, 2, 4)});
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// The eight conditions b1 b2 b3 in {+-1, +-a_i, +-a_i a_j, +-a1 a2 a3}
/// after identifying b = +-a_i with b = +-a_{i+1} a_{i+2}.
inline const std::vector<std::string>& b_relations() {
    static const std::vector<std::string> r = {"b1*b2*b3 = -1",       "b1*b2*b3 = 1",       "b1*b2*b3^-1 = -1",
                                               "b1*b2*b3^-1 = 1",     "b1*b2^-1*b3 = -1",   "b1*b2^-1*b3 = 1",
                                               "b1*b2^-1*b3^-1 = -1", "b1*b2^-1*b3^-1 = 1"};
    return r;
}

}  // namespace reference

namespace detail {

inline std::string cell_str(int p, int n, int e, int g) {
    std::ostringstream s;
    s << p << " pt, " << n << " nodes, " << e << " ell, " << g << " g5";
    return s.str();
}

inline bool check_cells(const Family& f, const std::vector<reference::Cell>& cells, const std::string& tag, Result& r) {
    bool ok = true;
    for (const auto& c : cells) {
        GroupElement g;
        for (const auto& row : reference::table1())
            if (c.element == std::string(row.label)) g = GroupElement::parse(row.bits);
        Locus l = fixed_locus_on_X(f, g).locus;
        bool m = l.points() == c.points && l.nodes() == c.nodes && l.elliptic() == c.elliptic && l.genus5() == c.genus5;
        if (!m) {
            ok = false;
            r.details.push_back(tag + " " + c.element + ": expected " + cell_str(c.points, c.nodes, c.elliptic, c.genus5) +
                                ", got " + cell_str(l.points(), l.nodes(), l.elliptic(), l.genus5()));
        }
    }
    return ok;
}

}  // namespace detail

inline Result criterion1() {
    Result r{1, "fixing elements of G0 on T", false, {}, {}};
    auto found = enumerate_fixing_elements(groups::G0());
    std::set<std::string> have;
    bool ok = found.size() == reference::table1().size();
    for (const auto& [g, t] : found) have.insert(g.str());
    for (const auto& row : reference::table1()) {
        GroupElement g = GroupElement::parse(row.bits);
        if (!have.count(g.str())) {
            ok = false;
            r.details.push_back(std::string(row.label) + " missing");
            continue;
        }
        int d = fixed_locus_on_T(g).dimension();
        if (d != row.dimension) {
            ok = false;
            r.details.push_back(std::string(row.label) + " has dimension " + std::to_string(d));
        }
    }
    r.pass = ok;
    r.details.insert(r.details.begin(), std::to_string(found.size()) + " elements, dimensions 2/1/0 = 3/6/8");
    return r;
}

inline Result criterion2() {
    Result r{2, "singular loci and nodes", true, {}, {}};
    auto mu = singular_locus(Family::make(FamilyKind::Mu), groups::GrpG(2));
    if (!mu.singular_points.empty() || !mu.bad.empty()) {
        r.pass = false;
        r.details.push_back("mu family has singular points for admissible free parameters");
    }
    auto nu = singular_locus(Family::make(FamilyKind::Nu), groups::GrpG(1));
    std::set<std::string> want, got;
    for (const auto& n : reference::nu_nodes()) want.insert(n.nu);
    for (std::size_t i = 0; i < nu.bad.size(); ++i) {
        std::string key;
        for (const auto& n : reference::nu_nodes())
            if (nu.bad[i].value && *nu.bad[i].value == n.value) key = n.nu;
        if (key.empty()) {
            r.pass = false;
            r.details.push_back("unexpected singular nu " + nu.bad[i].str());
            continue;
        }
        got.insert(key);
        auto pts = nu.bad[i].points;
        std::sort(pts.begin(), pts.end());
        auto it = std::find_if(reference::nu_nodes().begin(), reference::nu_nodes().end(),
                               [&](const reference::NuNodes& n) { return key == n.nu; });
        if (pts != reference::expected_nu_nodes(*it) || !nu.reverified[i]) {
            r.pass = false;
            r.details.push_back("node list mismatch for " + key);
        }
    }
    if (got != want || !nu.generic_smooth) {
        r.pass = false;
        r.details.push_back("nu singular set differs from {(+-b1:1),(1:+-b1)}");
    }
    auto b = singular_locus(Family::make(FamilyKind::B), groups::GrpG(3));
    std::vector<std::string> rels;
    for (std::size_t i = 0; i < b.bad.size(); ++i) {
        rels.push_back(b.bad[i].str());
        bool in_f0 = std::all_of(b.bad[i].points.begin(), b.bad[i].points.end(), in_F0);
        if (b.bad[i].points.size() != 8 || !in_f0 || !b.reverified[i]) {
            r.pass = false;
            r.details.push_back(b.bad[i].str() + ": " + std::to_string(b.bad[i].points.size()) + " nodes");
        }
    }
    if (rels != reference::b_relations()) {
        r.pass = false;
        r.details.push_back("b relations differ from the eight expected conditions");
    }
    r.details.insert(r.details.begin(), "mu smooth; nu singular at 4 values with 8 nodes; b singular on 8 relations with 8 nodes in F0");
    return r;
}

inline Result criterion3() {
    Result r{3, "fixed loci on X", true, {}, {}};
    bool ok = detail::check_cells(Family::make(FamilyKind::Nu), reference::nu_generic(), "nu", r);
    for (const auto& n : reference::nu_nodes()) {
        Family f = Family::make(FamilyKind::Nu, parse_specialization(n.nu));
        ok &= detail::check_cells(f, reference::nu_singular(), n.nu, r);
        // Gamma: each elliptic component through exactly two nodes, and two
        // elliptic components meet only at nodes.
        Locus g3 = fixed_locus_on_X(f, GroupElement::parse("100000000")).locus;
        auto nodes = singular_points(f);
        std::vector<Component> ell;
        for (const auto& c : g3.components)
            if (c.type == Component::Type::Elliptic) ell.push_back(c);
        for (const auto& c : ell) {
            int k = 0;
            for (const auto& z : nodes) k += gbt::detail::contains(f, c, z);
            if (k != 2) {
                ok = false;
                r.details.push_back(n.nu + std::string(" g3: elliptic curve through ") + std::to_string(k) + " nodes");
            }
        }
        for (std::size_t i = 0; i < ell.size(); ++i)
            for (std::size_t j = i + 1; j < ell.size(); ++j) {
                Locus m = intersect(f, ell[i], ell[j]);
                for (const auto& c : m.components) {
                    auto t = c.triple();
                    if (!t || std::find(nodes.begin(), nodes.end(), *t) == nodes.end()) {
                        ok = false;
                        r.details.push_back(n.nu + std::string(" g3: elliptic curves meet off the nodes"));
                    }
                }
            }
    }
    ok &= detail::check_cells(Family::make(FamilyKind::Mu), reference::mu_generic(), "mu", r);
    ok &= detail::check_cells(Family::make(FamilyKind::B), reference::b_generic(), "b", r);
    for (const auto& rel : reference::b_relations()) {
        Family f = Family::make(FamilyKind::B, parse_specialization(rel));
        ok &= detail::check_cells(f, reference::b_singular(), rel, r);
        const auto& p = reference::b_singular_claimed();
        Locus l = fixed_locus_on_X(f, GroupElement::parse("000001001")).locus;
        if (rel == reference::b_relations().front() && l.nodes() != p.nodes)
            r.notes.push_back("b singular g7-g9: claimed cell says 8 nodes + 8 elliptic; computed " + l.summary() +
                              ", in line with the b-independence argument");
    }
    r.pass = ok;
    r.details.insert(r.details.begin(), "nu (generic and 4 singular values), mu, b (generic and 8 relations)");
    return r;
}

inline Result criterion4() {
    Result r{4, "free actions", true, {}, {}};
    auto c1 = certify_free_action(Family::make(FamilyKind::Nu), groups::GrpG(1));
    // B0 = {(L2 : -L1)(z) : z in F0}, built from the 2-torsion L-values.
    std::vector<SymValue> b0;
    auto two = [](int j, int k) {
        switch (k) {
            case 0: return LaurentPoly(1);
            case 1: return -LaurentPoly(1);
            case 2: return a(j);
            default: return -a(j);
        }
    };
    LaurentPoly bb = b(1) * b(2) * b(3);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            for (int z = 0; z < 4; ++z) {
                LaurentPoly l1 = two(1, x) * two(2, y) * two(3, z) + bb;
                LaurentPoly l2 = two(1, x) * b(2) * b(3) + b(1) * two(2, y) * two(3, z);
                SymValue v(l2, -l1);
                if (std::none_of(b0.begin(), b0.end(), [&](const SymValue& w) { return w == v; })) b0.push_back(v);
            }
    bool same = b0.size() == c1.bad.values.size();
    for (const auto& v : c1.bad.values)
        same &= std::any_of(b0.begin(), b0.end(), [&](const SymValue& w) { return w == *v.value; });
    if (c1.verdict != FreenessCertificate::Verdict::FreeIffAvoids || !same) {
        r.pass = false;
        r.details.push_back("G1 on X_nu: bad set differs from B0");
    }
    auto c2 = certify_free_action(Family::make(FamilyKind::Mu), groups::GrpG(2));
    std::vector<SymValue> bp;
    for (int s : {1, -1}) {
        LaurentPoly sg(s);
        bp.push_back(SymValue::of(sg));
        for (int i = 1; i <= 3; ++i) bp.push_back(SymValue::of(sg * a(i)));
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j) bp.push_back(SymValue::of(sg * a(i) * a(j)));
        bp.push_back(SymValue::of(sg * a(1) * a(2) * a(3)));
    }
    bool same2 = bp.size() == c2.bad.values.size() && c2.bad.relations.size() == 8;
    for (const auto& v : c2.bad.values)
        same2 &= std::any_of(bp.begin(), bp.end(), [&](const SymValue& w) { return w == *v.value; });
    if (c2.verdict != FreenessCertificate::Verdict::FreeIffAvoids || !same2) {
        r.pass = false;
        r.details.push_back("G2 on X_mu: bad set differs from B'");
    }
    for (int j : {3, 4}) {
        auto c = certify_free_action(Family::make(FamilyKind::B), groups::GrpG(j));
        if (!c.free()) {
            r.pass = false;
            r.details.push_back("G" + std::to_string(j) + " on X_b is not free");
        }
    }
    r.details.insert(r.details.begin(), "G1: " + std::to_string(b0.size()) + " values in B0; G2: " +
                                            std::to_string(bp.size()) + " values in B', " +
                                            std::to_string(c2.bad.relations.size()) + " conditions; G3, G4 free");
    return r;
}

inline Result criterion5() {
    Result r{5, "numerical invariants", true, {}, {}};
    auto s = surface_invariants({2, 2, 2}, 1);
    auto q = surface_invariants({2, 2, 2}, 8);
    bool ok = s.K2 == 48 && s.e == 48 && s.chi == 8 && q.quotient_K2 == 6 && q.quotient_chi == 1 &&
              adjunction_genus(2, 2) == 5;
    r.pass = ok;
    r.details.push_back("K^2=" + std::to_string(s.K2) + " e=" + std::to_string(s.e) + " chi=" + std::to_string(s.chi) +
                        "; quotient K^2=" + std::to_string(q.quotient_K2) + " chi=" + std::to_string(q.quotient_chi) +
                        "; genus " + std::to_string(adjunction_genus(2, 2)));
    return r;
}

inline Result criterion6() {
    Result r{6, "descent arithmetic", true, {}, {}};
    Family nu = Family::make(FamilyKind::Nu);
    const Subgroup g1 = groups::GrpG(1);
    auto s2 = descend(nu, g1, coset_fixed_loci(nu, g1, GroupElement::parse("000100000")), "sigma2", "smooth", {});
    auto s3 = descend(nu, g1, coset_fixed_loci(nu, g1, GroupElement::parse("000100100")), "sigma3", "smooth", {});
    Family mu = Family::make(FamilyKind::Mu);
    const Subgroup g2 = groups::GrpG(2);
    auto s4 = descend(mu, g2, coset_fixed_loci(mu, g2, GroupElement::parse("100000000")), "sigma4", "smooth", {});
    bool ok = true;
    // 32-point loci: g5 and g11 each give 4 points.
    ok &= s2.smooth_points == 8 && s2.genera() == std::vector<int>{3};
    ok &= s2.curves.size() == 1 && s2.curves[0].orbit_size == 4 && s2.curves[0].stabilizer_order == 2;
    ok &= s3.genera() == std::vector<int>{2, 2};
    ok &= s4.smooth_points == 10 && s4.genera() == std::vector<int>{2, 2, 1, 1};
    ok &= quotient_genus(5, 2, 0) == 3 && quotient_genus(5, 4, 0) == 2;
    r.pass = ok;
    r.details.push_back("sigma2: " + s2.summary() + "; sigma3: " + s3.summary() + "; sigma4: " + s4.summary());
    return r;
}

inline Result criterion7() {
    Result r{7, "involution quotients not of general type", true, {}, {}};
    std::vector<BlochReport> reps;
    for (int j = 1; j <= 4; ++j) {
        try {
            reps.push_back(bloch_verdict(InvolutionScheme::standard(j)));
        } catch (const Error& e) {
            r.pass = false;
            r.details.push_back("G" + std::to_string(j) + ": " + e.what());
            return r;
        }
    }
    auto case_of = [](const BlochReport& b, const std::string& sigma, const std::string& branch) {
        for (const auto& x : b.results)
            if (x.report.sigma_name == sigma && x.report.branch == branch) return x.strict.front().case_number;
        return -1;
    };
    bool ok = reps[1].holds_strict && reps[2].holds_strict && reps[3].holds_strict;
    for (const auto& s : {"sigma4", "sigma5", "sigma4+sigma5"}) ok &= case_of(reps[1], s, "smooth") == 1;
    for (int j : {2, 3})
        for (const auto& s : {"sigma6", "sigma7", "sigma6+sigma7"}) ok &= case_of(reps[j], s, "smooth") == 2;
    bool flag_ell = false, flag_eight = false;
    for (const auto& d : reps[0].discrepancies) {
        flag_ell |= d.find("sigma2 [smooth]: claimed") != std::string::npos;
        flag_eight |= d.find("case (i) needs more than 8") != std::string::npos;
    }
    ok &= flag_ell && flag_eight && !reps[0].holds_strict;
    for (const auto& b : reps) ok &= b.holds_as_claimed;
    r.pass = ok;
    r.details.push_back(std::string("strict: G1 ") + (reps[0].holds_strict ? "holds" : "flagged") + ", G2 " +
                        (reps[1].holds_strict ? "holds" : "fails") + ", G3 " + (reps[2].holds_strict ? "holds" : "fails") +
                        ", G4 " + (reps[3].holds_strict ? "holds" : "fails") + "; as-claimed holds for all four");
    for (const auto& d : reps[0].discrepancies)
        if (std::find(r.notes.begin(), r.notes.end(), d) == r.notes.end()) r.notes.push_back("G1: " + d);
    return r;
}

inline numeric::OracleReport oracle_run() {
    numeric::OracleTolerances t;
    t.residual = Tolerances::residual;
    t.legendre_relative = Tolerances::legendre_relative;
    t.gradient = Tolerances::gradient;
    t.hessian = Tolerances::hessian;
    t.margin_orders = Tolerances::margin_orders;
    return numeric::cross_check_symbolic(Tolerances::oracle_seed, Tolerances::oracle_triples, t, Tolerances::sweep_level);
}

inline Result criterion8() {
    Result r{8, "numeric oracle", false, {}, {}};
    auto rep = oracle_run();
    std::size_t nd = std::count_if(rep.nodes.begin(), rep.nodes.end(), [](const numeric::NodeCheck& n) { return n.nondegenerate; });
    std::ostringstream s;
    s.precision(3);
    s << rep.curves.size() << " tau-triples, L error " << rep.legendre_max_error << ", margin " << rep.min_margin()
      << " orders, " << nd << "/" << rep.nodes.size() << " nodes A1";
    r.details.push_back(s.str());
    for (const auto& e : rep.errors) r.details.push_back(e);
    for (const auto& f : rep.families)
        for (const auto& d : f.disagreements) r.details.push_back(d.family + " " + d.point + ": " + d.observed);
    r.pass = rep.ok() && static_cast<int>(rep.curves.size()) >= Tolerances::oracle_triples;
    return r;
}

inline Result criterion9() {
    Result r{9, "property suites", true, {}, {}};
    const Subgroup G0 = groups::G0();
    const auto& g0 = G0.elements();
    const auto& pts = quarter_torsion_triples();
    bool invol = true, comp = true;
    for (GroupElement g : g0)
        for (const auto& z : pts) {
            if (g.act(g.act(z)) != z) invol = false;
            for (GroupElement h : g0)
                if (g.act(h.act(z)) != (g + h).act(z)) comp = false;
        }
    if (!invol || !comp) r.details.push_back("group action laws fail");

    // Legendre: translations by 1/2, tau/2 and negation agree with the table.
    bool route = true;
    for (const auto& c : {Convention::all(1), Convention::all(-1)})
        for (int j = 0; j < 3; ++j)
            for (const auto& p : all_points(4)) {
                SymValue v = legendre_value(j, p, c);
                SymValue half = legendre_value(j, p + TorsionPoint(1, 0, 2), c);
                SymValue tau = legendre_value(j, p + TorsionPoint(0, 1, 2), c);
                SymValue neg = legendre_value(j, -p, c);
                route &= half == SymValue(-v.num, v.den) && tau == SymValue(a(j + 1) * v.den, v.num) && neg == v;
            }
    if (!route) r.details.push_back("Legendre identities fail");

    // Conventions: the fixed-locus and singularity summaries do not depend on the i-signs.
    auto summary = [](const Convention& c) {
        std::string s;
        for (FamilyKind k : {FamilyKind::Nu, FamilyKind::Mu, FamilyKind::B}) {
            Family f = Family::make(k, {}, c);
            for (GroupElement g : table1()) {
                try {
                    s += fixed_locus_on_X(f, g).locus.summary() + ";";
                } catch (const Error&) {
                    s += "-;";
                }
            }
            auto sl = singular_locus(f, std::nullopt, false);
            s += std::to_string(sl.bad.size()) + "|";
            for (const auto& bv : sl.bad) s += bv.str() + ":" + std::to_string(bv.points.size()) + ",";
        }
        return s;
    };
    const std::string ref = summary(Convention{});
    bool conv = true;
    for (int k = 0; k < 8; ++k) conv &= summary(Convention::from_index(k)) == ref;
    if (!conv) r.details.push_back("summaries depend on the sign convention");

    // Horikawa: solving the first two relations for K_P^2 and Delta^2 always
    // satisfies the third.
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> kd(0, 10), xd(1, 6), nd(0, 6), pd(-20, 20);
    bool hori = true;
    for (int it = 0; it < 20000; ++it) {
        HorikawaData h;
        h.k = 2 * kd(rng);
        h.KPDelta = pd(rng);
        int n = nd(rng);
        for (int i = 0; i < n; ++i) h.x.push_back(xd(rng));
        long long sxx = 0, sq = 0;
        for (long long x : h.x) {
            sxx += x * (x - 1);
            sq += (x - 1) * (x - 1);
        }
        h.Delta2 = -2 - h.KPDelta + sxx;
        h.KP2 = (6 - h.k + 2 * sq) / 2 - 2 * h.KPDelta - h.Delta2;
        hori &= h.eq_a_residual() == 0 && h.eq_b_residual() == 0 && h.eq_c_residual() == 0;
    }
    if (!hori) r.details.push_back("Horikawa identity fails");
    r.pass = invol && comp && route && conv && hori;
    r.details.insert(r.details.begin(), "64 x 4096 action laws, Legendre identities, 8 sign conventions, 20000 Horikawa samples");
    return r;
}

inline std::vector<std::function<Result()>> all() {
    return {criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7, criterion8, criterion9};
}

}  // namespace gbt::acceptance
