// surgeon: exact chain link surgery calculus and batch table verification.
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "surgeon/cusped.hpp"
#include "surgeon/families.hpp"
#include "surgeon/tables.hpp"

using namespace surgeon;

namespace {

ReportFormat parse_format(const std::string& f) {
    if (f == "json") return ReportFormat::Json;
    if (f == "csv") return ReportFormat::Csv;
    throw CLI::ValidationError("--format must be json or csv");
}

AuditRanges parse_range(const std::string& text) {
    AuditRanges r;
    auto dots = text.find("..");
    if (dots == std::string::npos) throw CLI::ValidationError("--range expects a..b");
    r.lo = std::stoll(text.substr(0, dots));
    r.hi = std::stoll(text.substr(dots + 2));
    if (r.lo > r.hi) std::swap(r.lo, r.hi);
    return r;
}

int emit_and_code(const VerificationReport& report, const std::string& format) {
    std::cout << emit_report(report, parse_format(format));
    return report.clean() ? 0 : 1;
}

std::string describe(const std::optional<ClosedManifold>& m) {
    return m ? to_string(*m) : "none";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chain link surgery calculus, lens space classification, and table audits"};
    app.require_subcommand(1);
    std::string format = "csv";
    app.add_option("--format", format, "report format: csv or json")->capture_default_str();

    // verify dhl | verify table --id X [--range a..b]
    auto* verify = app.add_subcommand("verify", "run a bundled verification dataset");
    verify->require_subcommand(1);
    verify->fallthrough();
    auto* verify_dhl_cmd = verify->add_subcommand("dhl", "recompute both fillings of the census rows");
    verify_dhl_cmd->fallthrough();
    std::string table_id;
    std::string range_text = "-6..6";
    auto* verify_table_cmd = verify->add_subcommand("table", "audit one bundled table");
    verify_table_cmd->fallthrough();
    verify_table_cmd->add_option("--id", table_id, "dataset id")->required();
    verify_table_cmd->add_option("--range", range_text, "symbol range a..b")->capture_default_str();

    std::string chain_text;
    auto* eval_chain_cmd = app.add_subcommand("eval-chain", "evaluate a surgery chain");
    eval_chain_cmd->add_option("coefficients", chain_text, "comma list, e.g. -3,-2,-2,3,0,-1")
        ->required();

    long long hp = 0, hq = 0, hp2 = 0, hq2 = 0;
    bool oriented = false;
    auto* homeo_cmd = app.add_subcommand("lens-homeo", "compare two lens spaces");
    homeo_cmd->add_option("p", hp)->required();
    homeo_cmd->add_option("q", hq)->required();
    homeo_cmd->add_option("p2", hp2)->required();
    homeo_cmd->add_option("q2", hq2)->required();
    homeo_cmd->add_flag("--oriented", oriented, "compare with orientation");

    std::string fm = "-1", fr = "0", fs = "0", fb = "1";
    long long fk = 0;
    auto* family_cmd = app.add_subcommand("family", "evaluate the closed family forms");
    family_cmd->require_subcommand(1);
    auto* family_y = family_cmd->add_subcommand("y", "ambient manifold");
    auto* family_ystar = family_cmd->add_subcommand("ystar", "surgered manifold");
    for (auto* cmd : {family_y, family_ystar}) {
        cmd->add_option("--m", fm)->required();
        cmd->add_option("--r", fr)->required();
        cmd->add_option("--s", fs)->required();
        cmd->add_option("--b", fb)->required();
        cmd->add_option("--k", fk);
    }

    std::string ma, mb, mc;
    auto* magic_cmd = app.add_subcommand("magic", "magic manifold filling");
    magic_cmd->add_option("a", ma)->required();
    magic_cmd->add_option("b", mb)->required();
    magic_cmd->add_option("c", mc)->required();

    std::string wa, wb;
    auto* whitehead_cmd = app.add_subcommand("whitehead", "Whitehead link filling");
    whitehead_cmd->add_option("a", wa)->required();
    whitehead_cmd->add_option("b", wb)->required();

    std::string cm, cr;
    long long ck = 0;
    auto* cable_cmd = app.add_subcommand("cable", "cable space slope of the framed surgery");
    cable_cmd->add_option("m", cm)->required();
    cable_cmd->add_option("r", cr)->required();
    cable_cmd->add_option("k", ck)->required();

    long long rp = 0, rq = 0;
    std::string family_id;
    auto* realizable_cmd = app.add_subcommand("realizable", "search L[3,x,3,y] / L[2,x,4,y]");
    realizable_cmd->add_option("p", rp)->required();
    realizable_cmd->add_option("q", rq)->required();
    realizable_cmd->add_option("--family", family_id, "33 or 24")->required();

    std::string cusp_file;
    int cusp_index = 0;
    double max_length = hk_length_bound;
    auto* slopes_cmd = app.add_subcommand("slopes", "enumerate short slopes of one cusp");
    slopes_cmd->add_option("--cusp", cusp_file, "manifold data file")->required();
    slopes_cmd->add_option("--index", cusp_index, "cusp index")->capture_default_str();
    slopes_cmd->add_option("--max-length", max_length, "normalized length bound")
        ->capture_default_str();

    std::string data_file, multislope_text;
    auto* symmetry_cmd = app.add_subcommand("symmetry", "test a multislope against the isometries");
    symmetry_cmd->add_option("--data", data_file, "manifold data file")->required();
    symmetry_cmd->add_option("--multislope", multislope_text, "e.g. *,1/1,-2/1,2/1,1/2")->required();

    std::string cdata_file, cms_text;
    auto* certify_cmd = app.add_subcommand("certify", "hyperbolic filling length certificate");
    certify_cmd->add_option("--data", cdata_file, "manifold data file")->required();
    certify_cmd->add_option("--multislope", cms_text)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify_dhl_cmd->parsed()) return emit_and_code(verify_dhl(), format);
        if (verify_table_cmd->parsed())
            return emit_and_code(audit_table(table_id, parse_range(range_text)), format);

        if (eval_chain_cmd->parsed()) {
            ChainDescription c = parse_chain(chain_text);
            ClosedManifold m = chain_eval(c);
            std::printf("%s h1=%lld\n", to_string(m).c_str(), chain_h1_oracle(c));
            return 0;
        }
        if (homeo_cmd->parsed()) {
            bool same = is_homeomorphic(manifold_from_pq(hp, hq), manifold_from_pq(hp2, hq2),
                                        oriented);
            std::printf("%s\n", same ? "true" : "false");
            return same ? 0 : 1;
        }
        if (family_y->parsed() || family_ystar->parsed()) {
            FamilyParams p{parse_ext_rational(fm), parse_ext_rational(fr), parse_ext_rational(fs),
                           parse_ext_rational(fb), fk};
            if (family_y->parsed())
                std::printf("%s\n", describe(compute_Y(p)).c_str());
            else
                std::printf("%s\n", to_string(compute_Ystar(p)).c_str());
            return 0;
        }
        if (magic_cmd->parsed()) {
            std::printf("%s\n", describe(magic_filling(parse_ext_rational(ma),
                                                       parse_ext_rational(mb),
                                                       parse_ext_rational(mc)))
                                    .c_str());
            return 0;
        }
        if (whitehead_cmd->parsed()) {
            std::printf("%s\n",
                        describe(whitehead_filling(parse_ext_rational(wa), parse_ext_rational(wb)))
                            .c_str());
            return 0;
        }
        if (cable_cmd->parsed()) {
            ExtRational slope = cable_slope(parse_ext_rational(cm), parse_ext_rational(cr), ck);
            auto kind = classify_cable(slope);
            const char* name = kind.kind == CableSpaceKind::Kind::TorusKnotExterior
                                   ? "torus-knot-exterior"
                                   : kind.kind == CableSpaceKind::Kind::ThickenedTorus
                                         ? "thickened-torus"
                                         : "two-solid-tori";
            if (kind.kind == CableSpaceKind::Kind::TorusKnotExterior)
                std::printf("A(%s) %s (%lld,%lld)\n", to_string(slope).c_str(), name, kind.p,
                            kind.qprime);
            else
                std::printf("A(%s) %s\n", to_string(slope).c_str(), name);
            return 0;
        }
        if (realizable_cmd->parsed()) {
            LensFamily fam;
            if (family_id == "33") fam = LensFamily::F33;
            else if (family_id == "24") fam = LensFamily::F24;
            else throw parse_error("--family must be 33 or 24");
            auto w = realizable_as(manifold_from_pq(rp, rq), fam);
            if (w)
                std::printf("x=%lld y=%lld\n", w->first, w->second);
            else
                std::printf("none\n");
            return 0;
        }
        if (slopes_cmd->parsed()) {
            CuspedManifoldData data = load_manifold_file(cusp_file);
            if (cusp_index < 0 || cusp_index >= int(data.cusps.size()))
                throw invalid_cusp("cusp index out of range");
            const CuspShape& c = data.cusps[cusp_index];
            for (const auto& s : enumerate_short_slopes(c, max_length))
                std::printf("%lld/%lld %.6f\n", s.p, s.q, normalized_length(s, c));
            return 0;
        }
        if (symmetry_cmd->parsed()) {
            CuspedManifoldData data = load_manifold_file(data_file);
            Multislope ms = parse_multislope(multislope_text);
            bool breaking = is_symmetry_breaking(ms, data);
            std::printf("symmetry-breaking: %s\n", breaking ? "true" : "false");
            for (std::size_t i = 0; i < data.isometries.size(); ++i) {
                Multislope moved = apply_isometry(data.isometries[i], ms);
                std::printf("isometry %zu: %s %s\n", i, to_string(moved).c_str(),
                            moved == ms ? "fixes" : "moves");
            }
            return breaking ? 0 : 1;
        }
        if (certify_cmd->parsed()) {
            CuspedManifoldData data = load_manifold_file(cdata_file);
            Multislope ms = parse_multislope(cms_text);
            bool certified = hk_certify(ms, data.cusps);
            for (std::size_t j = 0; j < ms.slopes.size(); ++j) {
                double len = normalized_length(ms.slopes[j], data.cusps[j]);
                if (ms.slopes[j].empty)
                    std::printf("cusp %zu: * inf\n", j);
                else
                    std::printf("cusp %zu: %lld/%lld %.6f\n", j, ms.slopes[j].p, ms.slopes[j].q,
                                len);
            }
            std::printf("certified: %s (bound %.4f)\n", certified ? "true" : "false",
                        hk_length_bound);
            return certified ? 0 : 1;
        }
    } catch (const error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
