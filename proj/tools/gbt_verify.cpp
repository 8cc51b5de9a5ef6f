// gbt-verify: command-line front end.
//
// Exit codes: 0 all checks pass, 1 mismatch or discrepancy, 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>

#include <CLI11.hpp>

#include "gbt/report.hpp"

namespace {

using gbt::report::Document;

struct Options {
    std::string format = "text";
    std::string mode = "both";
    std::string family = "nu";
    std::string group = "G1";
    std::string specialize;
    std::vector<std::string> families;
    std::uint64_t seed = gbt::acceptance::Tolerances::oracle_seed;
    int triples = gbt::acceptance::Tolerances::oracle_triples;
    int level = gbt::acceptance::Tolerances::sweep_level;
    double tolerance = gbt::acceptance::Tolerances::residual;
    double hessian_tolerance = gbt::acceptance::Tolerances::hessian;
    std::vector<std::string> tau;
    std::string report_dir;
};

class UsageError : public gbt::Error {
public:
    using Error::Error;
};

int group_index(const std::string& g) {
    static const std::regex re("G([1-4])");
    std::smatch m;
    if (!std::regex_match(g, m, re)) throw UsageError("--group expects G1, G2, G3 or G4, got '" + g + "'");
    return std::stoi(m[1]);
}

gbt::FamilyKind family_kind(const std::string& s) {
    try {
        return gbt::parse_family(s);
    } catch (const gbt::Error&) {
        throw UsageError("--family expects nu, mu or b, got '" + s + "'");
    }
}

std::vector<std::array<gbt::numeric::cplx, 3>> parse_taus(const std::vector<std::string>& in) {
    if (in.size() % 3) throw UsageError("--tau must be given in groups of three (one per factor)");
    std::vector<std::array<gbt::numeric::cplx, 3>> out;
    static const std::regex re(R"(\s*([-+0-9.eE]+)\s*,\s*([-+0-9.eE]+)\s*)");
    for (std::size_t i = 0; i < in.size(); i += 3) {
        std::array<gbt::numeric::cplx, 3> t;
        for (int j = 0; j < 3; ++j) {
            std::smatch m;
            if (!std::regex_match(in[i + j], m, re)) throw UsageError("--tau expects RE,IM, got '" + in[i + j] + "'");
            t[j] = {std::stod(m[1]), std::stod(m[2])};
            if (t[j].imag() <= 0) throw UsageError("--tau needs a positive imaginary part, got '" + in[i + j] + "'");
        }
        out.push_back(t);
    }
    return out;
}

Document run_command(const std::string& cmd, const Options& o) {
    using namespace gbt::report;
    if (cmd == "table1") return table1_doc();
    if (cmd == "fixed-loci") {
        auto kind = family_kind(o.family);
        if (!o.specialize.empty()) gbt::parse_specialization(o.specialize);
        return fixed_loci_doc(kind, o.specialize);
    }
    if (cmd == "singularities") {
        std::vector<gbt::FamilyKind> kinds;
        for (const auto& f : o.families) kinds.push_back(family_kind(f));
        if (kinds.empty()) kinds = {gbt::FamilyKind::Nu, gbt::FamilyKind::Mu, gbt::FamilyKind::B};
        return singularities_doc(kinds);
    }
    if (cmd == "freeness") return freeness_doc(group_index(o.group));
    if (cmd == "bad-sets") return bad_sets_doc();
    if (cmd == "invariants") return invariants_doc();
    if (cmd == "bloch") return bloch_doc(group_index(o.group), o.mode);
    if (cmd == "oracle") {
        auto pinned = parse_taus(o.tau);
        if (o.tolerance <= 0 || o.hessian_tolerance <= 0) throw UsageError("tolerances must be positive");
        if (o.level < 4 || o.level % 4) throw UsageError("--level must be a positive multiple of 4");
        gbt::numeric::OracleTolerances t;
        t.residual = o.tolerance;
        t.gradient = o.tolerance;
        t.hessian = o.hessian_tolerance;
        Document d = oracle_doc(gbt::numeric::cross_check_symbolic(o.seed, o.triples, t, o.level, 1, pinned));
        d.config = {{"seed", o.seed}, {"triples", o.triples}, {"level", o.level}, {"tolerance", o.tolerance},
                    {"hessian_tolerance", o.hessian_tolerance}, {"tau", o.tau}};
        return d;
    }
    if (cmd == "verify-all") return verify_all_doc();
    throw UsageError("unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of fixed loci, singularities, free actions and quotient verdicts"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--report-dir", o.report_dir, "Also write <command>.json into this directory")
        ->envname("GBT_REPORT_DIR");

    app.add_subcommand("table1", "Elements of G0 fixing points on T");
    auto* fl = app.add_subcommand("fixed-loci", "Fixed loci on X for one family");
    fl->add_option("--family", o.family, "nu, mu or b");
    fl->add_option("--specialize", o.specialize, "Specialization, e.g. \"b1*b2*b3=1\" or \"nu=(b1:1)\"");
    auto* sg = app.add_subcommand("singularities", "Singular points and bad parameter values");
    sg->add_option("--family", o.families, "Restrict to these families");
    auto* fr = app.add_subcommand("freeness", "Free-action certificate for G1..G4");
    fr->add_option("--group", o.group, "G1, G2, G3 or G4")->required();
    app.add_subcommand("bad-sets", "Parameter values where some element fixes a point of X");
    app.add_subcommand("invariants", "Numerical invariants of X and its quotient");
    auto* bl = app.add_subcommand("bloch", "Involution quotients and the not-of-general-type verdict");
    bl->add_option("--group", o.group, "G1, G2, G3 or G4")->required();
    bl->add_option("--mode", o.mode, "Verdict mode")->check(CLI::IsMember({"strict", "as-claimed", "both"}));
    auto* orc = app.add_subcommand("oracle", "Floating-point cross-check of the exact decisions");
    orc->add_option("--seed", o.seed, "Random seed");
    orc->add_option("--triples", o.triples, "Number of random tau-triples")->check(CLI::NonNegativeNumber);
    orc->add_option("--tau", o.tau, "Pinned tau as RE,IM; three per triple");
    orc->add_option("--level", o.level, "Torsion level of the numeric sweep");
    orc->add_option("--tolerance", o.tolerance, "Absolute tolerance on residuals and gradients");
    orc->add_option("--hessian-tolerance", o.hessian_tolerance, "Threshold on Hessian conditioning");
    app.add_subcommand("verify-all", "Run every acceptance check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    auto fail = [&](const std::string& kind, const std::string& where, const std::string& msg, int rc) {
        if (o.format == "json")
            std::cout << gbt::report::error_json(cmd, kind, where, msg).dump(2) << "\n";
        else
            std::cerr << "gbt-verify " << cmd << ": " << kind << " at " << where << ": " << msg << "\n";
        return rc;
    };

    Document d;
    try {
        d = run_command(cmd, o);
    } catch (const UsageError& e) {
        return fail("usage", "arguments", e.what(), 2);
    } catch (const gbt::SpecializationError& e) {
        return fail("usage", "--specialize", e.what(), 2);
    } catch (const gbt::ContractViolation& e) {
        return fail("contract", cmd, e.what(), 2);
    } catch (const gbt::Error& e) {
        return fail("computation", cmd, e.what(), 1);
    }

    if (o.format == "json")
        std::cout << d.to_json().dump(2) << "\n";
    else
        std::cout << d.text;

    if (!o.report_dir.empty()) {
        std::filesystem::create_directories(o.report_dir);
        std::ofstream out(std::filesystem::path(o.report_dir) / (cmd + ".json"));
        out << d.to_json().dump(2) << "\n";
    }
    return d.pass ? 0 : 1;
}
