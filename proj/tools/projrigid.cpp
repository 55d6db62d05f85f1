#include "projrigid/io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace projrigid;
using nlohmann::json;

constexpr const char* kNoInputHash = "0000000000000000";

void emit(const json& report, bool as_json) {
    if (as_json) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << render_human(report);
    }
}

long long parse_integer(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(text, &used, 10);
    } catch (const std::exception&) {
        throw ParseError(what + ": '" + text + "' is not an integer");
    }
    if (used != text.size()) throw ParseError(what + ": '" + text + "' is not an integer");
    return value;
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(text.substr(start));
            break;
        }
        out.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

std::pair<long long, long long> parse_slope(const std::string& text) {
    std::size_t slash = text.find('/');
    if (slash == std::string::npos)
        throw ParseError("slope '" + text + "' must have the form p/q");
    return {parse_integer(text.substr(0, slash), "slope numerator"),
            parse_integer(text.substr(slash + 1), "slope denominator")};
}

json dims_json(const CohomologyReport& c, bool with_h2) {
    json dims;
    dims["rank"] = c.fox_rank;
    dims["z1"] = c.z1.dim();
    dims["b1"] = c.b1.dim();
    dims["h0"] = c.h0.dim();
    dims["h1"] = c.dim_h1;
    if (with_h2) {
        dims["h2"] = c.dim_h2;
        dims["h2_valid"] = c.h2_valid;
    }
    return dims;
}

json rows_json(const Matrix& rows) {
    json out = json::array();
    for (Eigen::Index i = 0; i < rows.rows(); ++i)
        out.push_back(vector_to_json(rows.row(i).transpose()));
    return out;
}

json run_check(const std::string& input) {
    InputDocument doc = load_input(input);
    Representation rep = build_representation(doc);
    check_relators(doc.pres, rep);
    json results;
    results["ok"] = true;
    results["d"] = doc.d;
    results["form"] = doc.form;
    results["generators"] = doc.pres.generators.size();
    results["relators"] = doc.pres.relators.size();
    results["cusps"] = doc.pres.cusps.size();
    return report_document("check", file_hash(input), results);
}

json run_cohomology(const std::string& input, const std::string& module, bool with_h2) {
    InputDocument doc = load_input(input);
    Representation rep = build_representation(doc);
    check_relators(doc.pres, rep);
    CohomologyReport c = cohomology(doc.pres, rep, module_from_name(module));
    json results;
    results["module"] = module_name(c.module);
    results["dims"] = dims_json(c, with_h2);
    results["h1_basis"] = rows_json(c.h1_reps);
    return report_document("cohomology", file_hash(input), results);
}

json run_rigidity(const std::string& input) {
    InputDocument doc = load_input(input);
    Representation rep = build_representation(doc);
    RigidityVerdict v = rigidity_report(doc.pres, rep);
    json results;
    results["k"] = v.k;
    results["h1_v"] = v.h1_v;
    results["h1_so31"] = v.h1_so31;
    results["h1_sl4"] = v.h1_sl4;
    results["h1_su31_derived"] = v.h1_su31;
    results["verdict"] = v.rigid ? "rigid" : "non-rigid";
    results["weil_garland"] = v.weil_garland_ok;
    return report_document("rigidity", file_hash(input), results);
}

json run_flexing(const std::string& input, int cusp, const std::string& slopes_text,
                 const std::string& predict, long long line_constant) {
    InputDocument doc = load_input(input);
    Representation rep = build_representation(doc);
    std::vector<std::pair<long long, long long>> slopes;
    for (const std::string& s : split_commas(slopes_text)) slopes.push_back(parse_slope(s));
    SlopeScan scan = flexing_scan(doc.pres, rep, cusp, slopes);
    json results;
    results["cusp"] = scan.cusp;
    results["verdict"] = scan.verdict.rigid ? "rigid" : "non-rigid";
    json out_slopes = json::array();
    for (const SlopeResult& s : scan.slopes) {
        json one;
        one["p"] = s.p;
        one["q"] = s.q;
        one["gamma"] = word_to_string(s.gamma, doc.pres.generators);
        one["per_class"] = s.class_flexing;
        one["flexing"] = s.flexing;
        one["certificate"] = s.has_certificate ? json(render_field(s.certificate)) : json();
        out_slopes.push_back(one);
    }
    results["slopes"] = out_slopes;
    if (!predict.empty()) {
        auto [p, q] = parse_slope(predict);
        results["prediction"] = filling_prediction(scan, p, q, line_constant);
    }
    return report_document("flexing", file_hash(input), results);
}

json run_invariant(const std::string& input, const std::string& words_text,
                   const std::string& module) {
    InputDocument doc = load_input(input);
    Representation rep = build_representation(doc);
    check_relators(doc.pres, rep);
    std::vector<Word> words;
    if (!words_text.empty()) {
        for (const std::string& w : split_commas(words_text))
            words.push_back(parse_word(w, doc.pres.generators));
    }
    Module m = module_from_name(module);
    Subspace inv = invariant_subspace(words, rep, m);
    json results;
    results["module"] = module_name(m);
    results["dim"] = inv.dim();
    results["basis"] = rows_json(inv.basis());
    return report_document("invariant", file_hash(input), results);
}

json run_pairing(const std::string& input, const std::string& cocycle_path,
                 const std::string& word_text, const std::string& invariant_path) {
    InputDocument doc = load_input(input);
    Representation rep = build_representation(doc);
    check_relators(doc.pres, rep);
    Cochain1 z = load_cocycle(cocycle_path, doc);
    if (!is_cocycle(z, doc.pres, rep))
        throw PreconditionError("pairing: the loaded cochain is not a cocycle");
    Word w = parse_word(word_text, doc.pres.generators);
    Matrix a = load_matrix_file(invariant_path, doc);
    FieldElement value = pairing_certificate(z, w, a, rep);
    json results;
    results["module"] = module_name(z.module);
    results["word"] = word_to_string(w, doc.pres.generators);
    results["value"] = render_field(value);
    results["restriction_nontrivial"] = restriction_nontrivial(z, w, rep);
    return report_document("pairing", file_hash(input), results);
}

json run_cup(const std::string& input, const std::string& z1_path, const std::string& z2_path) {
    InputDocument doc = load_input(input);
    Representation rep = build_representation(doc);
    check_relators(doc.pres, rep);
    Cochain1 z1 = load_cocycle(z1_path, doc);
    Cochain1 z2 = load_cocycle(z2_path, doc);
    CupResult cup = cup_product(z1, z2, doc.pres, rep);
    json results;
    json values = json::array();
    for (const Matrix& m : cup.cochain.values) values.push_back(matrix_to_json(m));
    results["cochain"] = values;
    results["class"] = vector_to_json(cup.class_rep);
    results["class_zero"] = cup.class_zero;
    return report_document("cup", file_hash(input), results);
}

json run_auto(const std::string& input, const std::string& phi_path,
              const std::string& intertwiner_path, const std::string& cocycle_path) {
    InputDocument doc = load_input(input);
    Representation rep = build_representation(doc);
    check_relators(doc.pres, rep);
    std::vector<Word> phi = load_endomorphism(phi_path, doc);
    Matrix a = load_matrix_file(intertwiner_path, doc);
    Cochain1 z = load_cocycle(cocycle_path, doc);
    Cochain1 pulled = pullback_cocycle(z, phi, a, doc.pres, rep);
    json results;
    results["intertwiner_ok"] = true;
    json values = json::object();
    for (std::size_t g = 0; g < doc.pres.generators.size(); ++g)
        values[doc.pres.generators[g]] = matrix_to_json(pulled.values[g]);
    results["pullback"] = {{"module", module_name(pulled.module)}, {"values", values}};
    results["is_cocycle"] = true;
    return report_document("auto", file_hash(input), results);
}

json run_su31_selftest() {
    Su31Report r = su31_root_check();
    json results;
    results["dims"] = r.dims;
    results["ad_eta_rational"] = r.ad_eta_rational;
    results["orthogonal"] = r.orthogonal;
    results["gplus_dim"] = r.gplus_dim;
    results["radical_is_g1_plus_g2"] = r.radical_matches;
    results["ok"] = r.all_ok();
    return report_document("su31-selftest", kNoInputHash, results);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact twisted-cohomology and projective-rigidity toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    std::string input, module = "v", slopes, words, cocycle_path, invariant_path;
    std::string z1_path, z2_path, phi_path, intertwiner_path, word_text, predict;
    bool with_h2 = false;
    int cusp = 0;
    long long line_constant = 0;

    CLI::App* c_check = app.add_subcommand("check", "parse and validate an input file");
    c_check->add_option("input", input, "input JSON file")->required();

    CLI::App* c_coh = app.add_subcommand("cohomology", "twisted cohomology dimensions and basis");
    c_coh->add_option("input", input)->required();
    c_coh->add_option("--module", module, "coefficient module: v, so31, sl4 or gl4");
    c_coh->add_flag("--h2", with_h2, "also report the H^2 dimension");

    CLI::App* c_rig = app.add_subcommand("rigidity", "infinitesimal projective rigidity verdict");
    c_rig->add_option("input", input)->required();

    CLI::App* c_flex = app.add_subcommand("flexing", "scan peripheral slopes for flexing");
    c_flex->add_option("input", input)->required();
    c_flex->add_option("--cusp", cusp, "cusp index (default 0)");
    c_flex->add_option("--slopes", slopes, "comma-separated coprime slopes p/q")->required();
    c_flex->add_option("--predict", predict, "emit a filling prediction for this slope p/q");
    c_flex->add_option("--line", line_constant, "line constant for the filling prediction");

    CLI::App* c_inv = app.add_subcommand("invariant", "common invariant subspace of words");
    c_inv->add_option("input", input)->required();
    c_inv->add_option("--words", words, "comma-separated words (empty: whole module)");
    c_inv->add_option("--module", module, "coefficient module");

    CLI::App* c_pair = app.add_subcommand("pairing", "Killing pairing of a cocycle with an invariant");
    c_pair->add_option("input", input)->required();
    c_pair->add_option("--cocycle", cocycle_path)->required();
    c_pair->add_option("--word", word_text)->required();
    c_pair->add_option("--invariant", invariant_path)->required();

    CLI::App* c_cup = app.add_subcommand("cup", "cup product of two cocycles");
    c_cup->add_option("input", input)->required();
    c_cup->add_option("--z1", z1_path)->required();
    c_cup->add_option("--z2", z2_path)->required();

    CLI::App* c_auto = app.add_subcommand("auto", "pull a cocycle back along an automorphism");
    c_auto->add_option("input", input)->required();
    c_auto->add_option("--phi", phi_path)->required();
    c_auto->add_option("--intertwiner", intertwiner_path)->required();
    c_auto->add_option("--cocycle", cocycle_path)->required();

    CLI::App* c_su = app.add_subcommand("su31-selftest", "root-space structure self-test");

    for (CLI::App* sub : {c_check, c_coh, c_rig, c_flex, c_inv, c_pair, c_cup, c_auto, c_su})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        nlohmann::json report;
        if (app.got_subcommand(c_check)) {
            report = run_check(input);
        } else if (app.got_subcommand(c_coh)) {
            report = run_cohomology(input, module, with_h2);
        } else if (app.got_subcommand(c_rig)) {
            report = run_rigidity(input);
        } else if (app.got_subcommand(c_flex)) {
            report = run_flexing(input, cusp, slopes, predict, line_constant);
        } else if (app.got_subcommand(c_inv)) {
            report = run_invariant(input, words, module);
        } else if (app.got_subcommand(c_pair)) {
            report = run_pairing(input, cocycle_path, word_text, invariant_path);
        } else if (app.got_subcommand(c_cup)) {
            report = run_cup(input, z1_path, z2_path);
        } else if (app.got_subcommand(c_auto)) {
            report = run_auto(input, phi_path, intertwiner_path, cocycle_path);
        } else if (app.got_subcommand(c_su)) {
            report = run_su31_selftest();
        }
        emit(report, as_json);
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
