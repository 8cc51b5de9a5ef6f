#pragma once
// JSON and text rendering of command results.

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "acceptance.hpp"

namespace gbt::report {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "gbt-verify/report/v1";

/// A rendered command result: structured payload, text form and verdict.
struct Document {
    std::string command;
    json config = json::object();
    json result = json::object();
    std::string text;
    bool pass = true;
    std::vector<std::string> discrepancies;

    json to_json() const {
        json j;
        j["schema"] = kSchema;
        j["command"] = command;
        j["config"] = config;
        j["pass"] = pass;
        j["discrepancies"] = discrepancies;
        j["result"] = result;
        return j;
    }
};

inline json error_json(const std::string& command, const std::string& kind, const std::string& where,
                       const std::string& message) {
    json j;
    j["schema"] = kSchema;
    j["command"] = command;
    j["pass"] = false;
    j["error"] = {{"kind", kind}, {"location", where}, {"message", message}};
    return j;
}

// ---- leaves ---------------------------------------------------------------

inline std::string fraction(int num, int den) {
    int g = std::gcd(num, den);
    if (g == 0) return "0";
    num /= g;
    den /= g;
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

/// [real part, tau part] as reduced fractions.
inline json to_json(const TorsionPoint& p) { return json::array({fraction(p.p, p.n), fraction(p.q, p.n)}); }

inline json to_json(const Triple& z) { return json::array({to_json(z[0]), to_json(z[1]), to_json(z[2])}); }

inline json to_json(const numeric::cplx& z) { return json::array({z.real(), z.imag()}); }

inline json to_json(const Slot& s) {
    switch (s.kind) {
        case Slot::Kind::Free: return {{"kind", "free"}};
        case Slot::Kind::At: return {{"kind", "point"}, {"coords", to_json(s.point)}};
        case Slot::Kind::Fiber: return {{"kind", "fiber"}, {"l_value", s.value.str()}};
    }
    return nullptr;
}

inline json to_json(const Family& f, const Component& c) {
    json coords = json::array(), lv = json::array();
    for (int j = 0; j < 3; ++j) {
        coords.push_back(to_json(c.slots[j]));
        const Slot& s = c.slots[j];
        if (s.kind == Slot::Kind::At)
            lv.push_back(f.value(j, s.point).str());
        else if (s.kind == Slot::Kind::Fiber)
            lv.push_back(s.value.str());
        else
            lv.push_back(nullptr);
    }
    return {{"type", c.type_name()}, {"fixed_coords", coords}, {"l_values", lv},
            {"genus", c.genus()},    {"count", c.count()},      {"node", c.node}};
}

inline json to_json(const Family& f, const Locus& l) {
    json comps = json::array(), special = json::array();
    for (const auto& c : l.components) comps.push_back(to_json(f, c));
    for (const auto& s : l.special) {
        json sl = json::array();
        for (const auto& x : s.slots) sl.push_back(to_json(x));
        special.push_back({{"what", s.what}, {"slots", sl}, {"parameter", s.parameter ? json(s.parameter->str()) : json()}});
    }
    return {{"summary", l.summary()}, {"points", l.points()},   {"nodes", l.nodes()},
            {"elliptic", l.elliptic()}, {"genus5", l.genus5()}, {"components", comps},
            {"special", special}};
}

inline std::string element_name(GroupElement g) {
    std::string l = label(g);
    return l.empty() ? g.str() : l;
}

inline json to_json(const BadValue& v) {
    json pts = json::array();
    for (const auto& z : v.points) pts.push_back(to_json(z));
    return {{"value", v.str()}, {"nodes", pts}};
}

inline json to_json(const BadSet& b) {
    json vals = json::array(), rels = json::array(), always = json::array(), curves = json::array();
    for (const auto& v : b.values) vals.push_back(v.str());
    for (const auto& r : b.relations) rels.push_back(r.str());
    for (const auto& z : b.always) always.push_back(to_json(z));
    for (auto g : b.curve_type) curves.push_back(element_name(g));
    return {{"family", name(b.family)}, {"group", b.group},   {"values", vals},
            {"relations", rels},         {"always", always}, {"curve_type_elements", curves}};
}

// ---- commands -------------------------------------------------------------

inline Document table1_doc() {
    Document d;
    d.command = "table1";
    auto r = acceptance::criterion1();
    d.pass = r.pass;
    d.discrepancies.assign(r.details.begin() + 1, r.details.end());
    json rows = json::array();
    std::ostringstream t;
    t << "Elements of G0 with fixed points on T\n\n";
    t << std::left << std::setw(5) << "" << std::setw(11) << "element" << std::setw(5) << "dim" << "fixed locus on T\n";
    for (auto g : table1()) {
        TFixedLocus f = fixed_locus_on_T(g);
        std::string desc;
        for (int j = 0; j < 3; ++j) {
            const auto& fj = f.per_factor[j];
            std::string s;
            if (fj.kind == FactorFix::Kind::WholeCurve)
                s = "E" + std::to_string(j + 1);
            else {
                s = "{";
                for (std::size_t k = 0; k < fj.points.size(); ++k) s += (k ? "," : "") + fj.points[k].str();
                s += "}";
            }
            desc += (j ? " x " : "") + s;
        }
        rows.push_back({{"label", label(g)}, {"element", g.str()}, {"dimension", f.dimension()}, {"fixed_on_T", desc}});
        t << std::setw(5) << label(g) << std::setw(11) << g.str() << std::setw(5) << f.dimension() << desc << "\n";
    }
    d.result["rows"] = rows;
    t << "\n" << (d.pass ? "matches" : "DIFFERS from") << " the reference table\n";
    d.text = t.str();
    return d;
}

inline Document fixed_loci_doc(FamilyKind kind, const std::string& spec_text) {
    Document d;
    d.command = "fixed-loci";
    d.config = {{"family", name(kind)}, {"specialize", spec_text}};
    Family f = Family::make(kind, spec_text.empty() ? Specialization{} : parse_specialization(spec_text));
    Subgroup amb = InvolutionScheme::invariance_group(kind);
    auto fx = which_elements_fix_on_X(f, amb);

    // Reference rows where the parameters match a frozen table.
    const std::vector<acceptance::reference::Cell>* ref = nullptr;
    if (spec_text.empty()) {
        ref = kind == FamilyKind::Nu   ? &acceptance::reference::nu_generic()
              : kind == FamilyKind::Mu ? &acceptance::reference::mu_generic()
                                       : &acceptance::reference::b_generic();
    } else if (kind == FamilyKind::Nu && !singular_points(f).empty()) {
        ref = &acceptance::reference::nu_singular();
    } else if (kind == FamilyKind::B && !singular_points(f).empty()) {
        ref = &acceptance::reference::b_singular();
    }

    json rows = json::array();
    std::ostringstream t;
    t << "Fixed loci on X, family " << name(kind) << (spec_text.empty() ? "" : " [" + spec_text + "]") << "\n\n";
    for (auto g : fx.generic) {
        Locus l = fixed_locus_on_X(f, g).locus;
        json row = {{"label", element_name(g)}, {"element", g.str()}, {"locus", to_json(f, l)}};
        std::string mark;
        if (ref)
            for (const auto& c : *ref)
                if (element_name(g) == c.element) {
                    bool ok = l.points() == c.points && l.nodes() == c.nodes && l.elliptic() == c.elliptic &&
                              l.genus5() == c.genus5;
                    row["reference_match"] = ok;
                    if (!ok) {
                        d.pass = false;
                        d.discrepancies.push_back(element_name(g) + ": computed " + l.summary());
                        mark = "  [differs from reference]";
                    }
                }
        rows.push_back(row);
        t << std::left << std::setw(5) << element_name(g) << l.summary() << mark << "\n";
    }
    json special = json::array();
    for (auto g : fx.special_only) {
        special.push_back(element_name(g));
        t << std::left << std::setw(5) << element_name(g) << "fixed points only for special parameters\n";
    }
    d.result = {{"family", name(kind)}, {"specialization", f.spec().str()}, {"ambient_group", amb.name()},
                {"rows", rows},         {"special_only", special},         {"reference_checked", ref != nullptr}};
    d.text = t.str();
    return d;
}

inline json to_json(const SmoothnessReport& r) {
    json sp = json::array(), bad = json::array(), nf = json::array();
    for (const auto& z : r.singular_points) sp.push_back(to_json(z));
    for (std::size_t i = 0; i < r.bad.size(); ++i) {
        json b = to_json(r.bad[i]);
        if (i < r.reverified.size()) b["reverified"] = bool(r.reverified[i]);
        bad.push_back(b);
    }
    for (const auto& v : r.non_free) nf.push_back(to_json(v));
    return {{"family", name(r.family)},   {"specialization", r.spec}, {"generic_smooth", r.generic_smooth},
            {"singular_points", sp},       {"bad", bad},              {"non_free", nf}};
}

inline Document singularities_doc(const std::vector<FamilyKind>& kinds) {
    Document d;
    d.command = "singularities";
    json fams = json::array();
    std::ostringstream t;
    for (FamilyKind k : kinds) {
        int gj = k == FamilyKind::Nu ? 1 : k == FamilyKind::Mu ? 2 : 3;
        auto r = singular_locus(Family::make(k), groups::GrpG(gj));
        fams.push_back(to_json(r));
        t << "Family " << name(k) << ": " << (r.generic_smooth ? "smooth" : "singular") << " for general parameters\n";
        if (r.bad.empty()) t << "  no singular points on quarter-torsion triples for admissible free parameters\n";
        for (std::size_t i = 0; i < r.bad.size(); ++i) {
            bool ok = i < r.reverified.size() && r.reverified[i];
            if (!ok) {
                d.pass = false;
                d.discrepancies.push_back(std::string(name(k)) + " " + r.bad[i].str() + ": node list not reproduced");
            }
            t << "  " << r.bad[i].str() << ": " << r.bad[i].points.size() << " nodes" << (ok ? "" : " (not reverified)")
              << "\n";
            for (const auto& z : r.bad[i].points) t << "    " << str(z) << "\n";
        }
        for (const auto& v : r.non_free)
            t << "  " << v.str() << ": " << v.points.size() << " singular points, group not free there\n";
        t << "\n";
    }
    d.result["families"] = fams;
    d.text = t.str();
    return d;
}

inline FamilyKind family_of_group(int j) { return j == 1 ? FamilyKind::Nu : j == 2 ? FamilyKind::Mu : FamilyKind::B; }

inline Document freeness_doc(int j) {
    Document d;
    d.command = "freeness";
    d.config = {{"group", "G" + std::to_string(j)}};
    FamilyKind k = family_of_group(j);
    auto c = certify_free_action(Family::make(k), groups::GrpG(j));
    json w = json::array();
    std::ostringstream t;
    t << "G" << j << " acting on X_" << name(k) << ": " << c.verdict_str() << "\n\n";
    for (const auto& x : c.witnesses) {
        w.push_back({{"element", x.element.str()},
                     {"label", table1_index(x.element) ? json(label(x.element)) : json()},
                     {"evidence", x.evidence},
                     {"point", x.point ? to_json(*x.point) : json()}});
        t << "  " << x.element.str() << " " << std::left << std::setw(5)
          << (table1_index(x.element) ? label(x.element) : "") << x.evidence << "\n";
    }
    if (!c.bad.values.empty()) {
        t << "\nbad parameter values (" << c.bad.values.size() << "):";
        for (const auto& v : c.bad.values) t << " " << v.str();
        t << "\n";
    }
    if (!c.bad.relations.empty()) {
        t << "conditions on b (" << c.bad.relations.size() << "):";
        for (const auto& r : c.bad.relations) t << " [" << r.str() << "]";
        t << "\n";
    }
    d.pass = c.verdict != FreenessCertificate::Verdict::NotFree;
    if (!d.pass) d.discrepancies.push_back("action is not free");
    d.result = {{"group", c.group}, {"family", name(k)}, {"verdict", c.verdict_str()}, {"witnesses", w},
                {"bad_set", to_json(c.bad)}};
    d.text = t.str();
    return d;
}

inline Document bad_sets_doc() {
    Document d;
    d.command = "bad-sets";
    json sets = json::array();
    std::ostringstream t;
    for (int j = 1; j <= 4; ++j) {
        FamilyKind k = family_of_group(j);
        auto b = bad_parameter_set(Family::make(k), groups::GrpG(j));
        sets.push_back(to_json(b));
        t << "G" << j << " on X_" << name(k) << ": ";
        if (b.empty()) t << "empty";
        if (!b.values.empty()) t << b.values.size() << " values";
        if (!b.relations.empty()) t << (b.values.empty() ? "" : ", ") << b.relations.size() << " conditions on b";
        t << "\n";
        for (const auto& v : b.values) t << "    " << v.str() << "\n";
        for (const auto& r : b.relations) t << "    [" << r.str() << "]\n";
    }
    d.result["sets"] = sets;
    d.text = t.str();
    return d;
}

inline Document invariants_doc() {
    Document d;
    d.command = "invariants";
    auto s = surface_invariants({2, 2, 2}, 8);
    int g = adjunction_genus(2, 2);
    d.pass = s.K2 == 48 && s.e == 48 && s.chi == 8 && s.quotient_K2 == 6 && s.quotient_chi == 1 && g == 5;
    if (!d.pass) d.discrepancies.push_back("invariants differ from K^2 = e = 48, chi = 8");
    d.result = {{"multidegree", {2, 2, 2}},     {"K2", s.K2},          {"e", s.e},
                {"chi", s.chi},                 {"group_order", 8},    {"quotient_K2", s.quotient_K2},
                {"quotient_e", s.quotient_e},   {"quotient_chi", s.quotient_chi},
                {"bidegree_2_2_genus", g}};
    std::ostringstream t;
    t << "X of multidegree (2,2,2) in E1 x E2 x E3\n"
      << "  K^2 = " << s.K2 << ", e = " << s.e << ", chi = " << s.chi << "\n"
      << "free quotient by a group of order 8\n"
      << "  K^2 = " << s.quotient_K2 << ", e = " << s.quotient_e << ", chi = " << s.quotient_chi << "\n"
      << "curve of bidegree (2,2) on an abelian surface: genus " << g << "\n";
    d.text = t.str();
    return d;
}

inline json to_json(const NotGTVerdict& v) {
    json sol = json::array();
    for (const auto& s : v.solutions) sol.push_back({{"KP2", s.KP2}, {"KPDelta", s.KPDelta}, {"excess", s.excess}});
    return {{"mode", name(v.mode)},     {"not_general_type", v.not_general_type}, {"case", v.case_name()},
            {"horikawa_solutions", sol}, {"evidence", v.evidence}};
}

inline json to_json(const QuotientFixReport& r) {
    json curves = json::array(), contrib = json::array();
    for (const auto& c : r.curves) {
        json st = json::array();
        for (auto h : c.stabilizer) st.push_back(h.str());
        curves.push_back({{"genus", c.genus},
                          {"upstairs_genus", c.upstairs_genus},
                          {"element", element_name(c.element)},
                          {"orbit_size", c.orbit_size},
                          {"stabilizer", st},
                          {"stabilizer_fixed_points", c.fixed_points_of_stabilizer},
                          {"nodes_on_curve", c.nodes_on_curve}});
    }
    for (const auto& [g, s] : r.contributions) contrib.push_back({{"element", element_name(g)}, {"locus", s}});
    return {{"sigma", r.sigma_name},       {"sigma_element", r.sigma.str()}, {"branch", r.branch},
            {"summary", r.summary()},      {"smooth_points", r.smooth_points}, {"nodes_fixed", r.nodes_fixed},
            {"curves", curves},            {"coset_contributions", contrib},   {"disjoint", r.disjoint}};
}

inline Document bloch_doc(int j, const std::string& mode) {
    Document d;
    d.command = "bloch";
    d.config = {{"group", "G" + std::to_string(j)}, {"mode", mode}};
    BlochReport b = bloch_verdict(InvolutionScheme::standard(j));
    json res = json::array();
    std::ostringstream t;
    t << "G" << j << " on X_" << name(b.family) << "\n";
    std::string current;
    for (const auto& r : b.results) {
        if (r.report.sigma_name != current) {
            current = r.report.sigma_name;
            t << "\n== " << current << " (" << r.report.sigma.str() << ")\n";
        }
        t << "  [" << r.report.branch << "] fixed locus on S: " << r.report.summary() << "\n";
        for (const auto& [g, s] : r.report.contributions) t << "      " << std::left << std::setw(5) << element_name(g) << s << "\n";
        json inputs = json::array();
        for (std::size_t i = 0; i < r.inputs.size(); ++i) {
            const auto& in = r.inputs[i];
            inputs.push_back({{"branch", in.branch},
                              {"k", in.k},
                              {"genera", in.genera},
                              {"minus2_curve_fixed", in.minus2_in_fix},
                              {"elliptic_meets_minus2_curve", in.elliptic_meets_L},
                              {"strict", to_json(r.strict[i])},
                              {"as_claimed", to_json(r.as_claimed[i])}});
            t << "    " << in.branch << ": k = " << in.k << "; strict case " << r.strict[i].case_name()
              << ", as-claimed case " << r.as_claimed[i].case_name() << "\n";
            if (mode != "as-claimed") t << "      " << r.strict[i].evidence << "\n";
            else t << "      " << r.as_claimed[i].evidence << "\n";
        }
        res.push_back({{"quotient_fix", to_json(r.report)},
                       {"inputs", inputs},
                       {"holds_strict", r.holds(VerdictMode::Strict)},
                       {"holds_as_claimed", r.holds(VerdictMode::AsClaimed)}});
    }
    auto verdict = [](bool h) { return h ? "Bloch holds" : "not established"; };
    t << "\nstrict: " << verdict(b.holds_strict) << "; as-claimed: " << verdict(b.holds_as_claimed) << "\n";
    if (!b.discrepancies.empty()) {
        t << "\ndiscrepancies:\n";
        for (const auto& s : b.discrepancies) t << "  - " << s << "\n";
    }
    d.discrepancies = b.discrepancies;
    if (mode == "as-claimed")
        d.pass = b.holds_as_claimed;
    else
        d.pass = b.holds_strict && b.discrepancies.empty() && (mode == "strict" || b.holds_as_claimed);
    d.result = {{"group", b.group_name},
                {"family", name(b.family)},
                {"sigmas", b.sigma_names},
                {"results", res},
                {"holds_strict", b.holds_strict},
                {"holds_as_claimed", b.holds_as_claimed},
                {"verdict_strict", verdict(b.holds_strict)},
                {"verdict_as_claimed", verdict(b.holds_as_claimed)}};
    d.text = t.str();
    return d;
}

inline Document oracle_doc(const numeric::OracleReport& r) {
    Document d;
    d.command = "oracle";
    d.pass = r.ok();
    d.discrepancies = r.errors;
    json curves = json::array(), fams = json::array(), nodes = json::array(), sweeps = json::array();
    for (const auto& tr : r.curves) {
        json x = json::array();
        for (const auto& c : tr)
            x.push_back({{"tau", to_json(c.tau)}, {"a", to_json(c.a)}, {"b", to_json(c.b)}, {"sign", c.sign},
                         {"residual", c.residual}});
        curves.push_back(x);
    }
    for (const auto& f : r.families) {
        json dis = json::array();
        for (const auto& x : f.disagreements) {
            dis.push_back({{"point", x.point}, {"expected", x.expected}, {"observed", x.observed}, {"value", x.value}});
            d.discrepancies.push_back(f.family + " " + x.point + ": expected " + x.expected + ", observed " + x.observed);
        }
        fams.push_back({{"family", f.family},
                        {"checked", f.checked},
                        {"agreements", f.agreements},
                        {"inconclusive", f.inconclusive},
                        {"max_zero", f.max_zero},
                        {"min_nonzero", f.min_nonzero},
                        {"margin_orders", f.margin_orders()},
                        {"disagreements", dis}});
    }
    for (const auto& n : r.nodes)
        nodes.push_back({{"family", n.family},
                         {"point", to_json(n.point)},
                         {"value", n.value},
                         {"gradient_norm", n.gradient_norm},
                         {"hessian_det", to_json(n.hessian_det)},
                         {"hessian_conditioning", n.hessian_conditioning},
                         {"transverse_minor", n.transverse_det},
                         {"nondegenerate", n.nondegenerate},
                         {"inconclusive", n.inconclusive}});
    for (const auto& s : r.sweeps) {
        json ns = json::array();
        for (const auto& z : s.numeric_singular) ns.push_back(to_json(z));
        sweeps.push_back({{"family", s.family}, {"level", s.level}, {"points", s.points}, {"numeric_singular", ns},
                          {"agrees", s.agrees}});
    }
    d.result = {{"seed", r.seed},
                {"triples", r.triples},
                {"tolerances",
                 {{"residual", r.tolerances.residual},
                  {"legendre_relative", r.tolerances.legendre_relative},
                  {"gradient", r.tolerances.gradient},
                  {"hessian", r.tolerances.hessian},
                  {"margin_orders", r.tolerances.margin_orders}}},
                {"legendre_max_error", r.legendre_max_error},
                {"identity_max_residual", r.identity_max_residual},
                {"min_margin_orders", r.min_margin()},
                {"curves", curves},
                {"families", fams},
                {"nodes", nodes},
                {"sweeps", sweeps},
                {"errors", r.errors}};
    std::ostringstream t;
    t << std::setprecision(3);
    t << "numeric cross-check, seed " << r.seed << ", " << r.curves.size() << " tau-triples\n"
      << "  Legendre table error   " << r.legendre_max_error << "\n"
      << "  identity residual      " << r.identity_max_residual << "\n"
      << "  incidence decisions    ";
    std::size_t checked = 0, agree = 0, inc = 0;
    for (const auto& f : r.families) checked += f.checked, agree += f.agreements, inc += f.inconclusive;
    t << agree << "/" << checked << " agree, " << inc << " inconclusive, margin " << r.min_margin() << " orders\n";
    std::size_t nd = 0;
    double worst = 1;
    for (const auto& n : r.nodes) nd += n.nondegenerate, worst = std::min(worst, n.hessian_conditioning);
    t << "  nodes                  " << nd << "/" << r.nodes.size() << " nondegenerate, worst conditioning " << worst
      << "\n";
    std::size_t sw = 0;
    for (const auto& s : r.sweeps) sw += s.agrees;
    t << "  torsion sweeps         " << sw << "/" << r.sweeps.size() << " reproduce the exact node set\n";
    for (const auto& e : r.errors) t << "  error: " << e << "\n";
    t << (d.pass ? "oracle agrees\n" : "oracle DISAGREES\n");
    d.text = t.str();
    return d;
}

inline Document verify_all_doc() {
    Document d;
    d.command = "verify-all";
    json crit = json::array();
    std::ostringstream t;
    for (const auto& c : acceptance::all()) {
        auto r = c();
        crit.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"details", r.details}, {"notes", r.notes}});
        t << r.line() << "\n";
        if (!r.pass) {
            d.pass = false;
            for (std::size_t i = 1; i < r.details.size(); ++i) {
                t << "      " << r.details[i] << "\n";
                d.discrepancies.push_back("criterion " + std::to_string(r.id) + ": " + r.details[i]);
            }
        }
    }
    d.result["criteria"] = crit;
    d.text = t.str();
    return d;
}

}  // namespace gbt::report
