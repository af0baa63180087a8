// Command-line front end: proving, translating, countermodel generation,
// chain analysis, model checking, faithfulness round trips, and frame
// audits. Structured output is JSON on stdout; diagnostics go to stderr.
// Exit codes: 0 success, 1 precondition/property failure, 2 usage or parse
// errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "l1k/chains.hpp"
#include "l1k/corpus.hpp"
#include "l1k/errors.hpp"
#include "l1k/kripke.hpp"
#include "l1k/modal_k.hpp"
#include "l1k/tableau.hpp"
#include "l1k/translate.hpp"

namespace {

using namespace l1k;

// Formula arguments accept @path to read the text from a file.
std::string formula_text(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw Error("cannot read formula file: " + arg.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_prove(const std::string& arg, bool trace) {
    L1Formula f = parse_l1(formula_text(arg));
    Tableau t = build_normal_tableau(f);
    std::cout << (t.closed() ? "PROVABLE" : "UNPROVABLE") << "\n";
    if (trace) std::cout << t.to_json() << "\n";
    return 0;
}

int cmd_translate(const std::string& arg, const std::string& scheme,
                  const std::string& render) {
    L1Formula f = parse_l1(formula_text(arg));
    ModalFormula m = translate(f, scheme == "naive" ? TranslationScheme::Naive
                                                    : TranslationScheme::Blass);
    auto r = render == "O" ? ModalFormula::Render::OSymbol
                           : ModalFormula::Render::BoxSymbol;
    std::cout << m.to_string(r) << "\n";
    return 0;
}

// Reduce to the first open leaf; provable inputs have no countermodel.
L1Formula leaf_of(const L1Formula& f) {
    auto leaf = first_hintikka_leaf(f);
    if (!leaf)
        throw ProvableInputError("formula is provable; no countermodel exists");
    return *leaf;
}

int cmd_countermodel(const std::string& arg, const std::string& variant) {
    L1Formula f = parse_l1(formula_text(arg));
    L1Formula leaf = leaf_of(f);
    std::cerr << "leaf: " << leaf.to_string() << "\n";
    KripkeModel m = countermodel_variant(leaf, parse_variant(variant));
    std::cout << m.to_json() << "\n";
    return 0;
}

int cmd_chains(const std::string& arg, bool reduce) {
    L1Formula f = parse_l1(formula_text(arg));
    L1Formula target = f;
    if (reduce && !is_hintikka(f)) target = leaf_of(f);
    ChainAnalysis a = analyze(target);  // throws NotHintikkaError otherwise
    nlohmann::json j = nlohmann::json::parse(a.to_json());
    j["formula"] = target.to_string();
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_check(const std::string& model_path, const std::string& arg) {
    KripkeModel m = KripkeModel::from_json(read_file(model_path));
    ModalFormula f = parse_modal(formula_text(arg));
    bool result = forces(m, m.star, f);
    nlohmann::json j;
    j["world"] = m.star;
    j["forces"] = result;
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_roundtrip(int vars, int max_size, std::uint64_t seed, bool seeded,
                  int count, int jobs) {
    auto names = default_name_vars(vars);
    std::vector<L1Formula> corpus =
        seeded ? sample_l1(names, max_size, seed, count)
               : enumerate_l1(names, max_size);
    RoundtripReport report = jobs == 1 ? roundtrip_serial(corpus)
                                       : roundtrip_parallel(corpus, jobs);
    if (report.ok()) {
        std::cout << "OK: " << report.checked << " formulas, 0 mismatches\n";
        return 0;
    }
    for (const auto& m : report.mismatches) {
        nlohmann::json j;
        j["formula"] = m.formula.to_string();
        j["provable"] = m.provable;
        j["translation_valid"] = m.translation_valid;
        std::cout << j.dump() << "\n";
    }
    std::cerr << "FAIL: " << report.mismatches.size() << " of " << report.checked
              << " formulas disagree\n";
    return 1;
}

int cmd_audit(const std::string& variant, int n) {
    FrameVariant v = parse_variant(variant);
    KripkeModel frame = variant_frame(v, n);
    nlohmann::json j;
    j["variant"] = variant_name(v);
    j["n"] = n;
    nlohmann::json rel = nlohmann::json::array();
    for (const auto& [x, y] : frame.relation)
        rel.push_back(nlohmann::json::array({x, y}));
    j["relation"] = std::move(rel);
    j["properties"] = nlohmann::json::parse(frame_properties(frame).to_json());
    j["notes"] = audit_notes(v, n);
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decision procedure and modal embeddings for the "
                 "propositional ontology"};
    app.require_subcommand(1);

    std::string formula, scheme = "blass", render = "box", variant = "k";
    std::string model_path;
    bool trace = false, reduce = false;
    int vars = 2, max_size = 7, count = 500, jobs = 0, audit_n = 2;
    std::uint64_t seed = 0;

    auto* prove = app.add_subcommand("prove", "decide provability");
    prove->add_option("formula", formula)->required();
    prove->add_flag("--trace", trace, "print the tableau as JSON");

    auto* tr = app.add_subcommand("translate", "translate into modal syntax");
    tr->add_option("formula", formula)->required();
    tr->add_option("--scheme", scheme)->check(CLI::IsMember({"blass", "naive"}));
    tr->add_option("--render", render)->check(CLI::IsMember({"box", "O"}));

    auto* cm = app.add_subcommand("countermodel",
                                  "build a falsifying model for an unprovable "
                                  "formula");
    cm->add_option("formula", formula)->required();
    cm->add_option("--variant", variant, "frame variant (default k)")
        ->check(CLI::IsMember(all_variant_names()));

    auto* ch = app.add_subcommand("chains", "chain analysis of a saturated "
                                            "formula");
    ch->add_option("formula", formula)->required();
    ch->add_flag("--reduce", reduce, "reduce to the first open leaf first");

    auto* check = app.add_subcommand("check", "evaluate a modal formula at a "
                                              "model's distinguished world");
    check->add_option("model", model_path)->required();
    check->add_option("formula", formula)->required();

    auto* rt = app.add_subcommand("roundtrip",
                                  "provability vs translated validity over a "
                                  "corpus");
    rt->add_option("--vars", vars)->check(CLI::Range(1, 26));
    rt->add_option("--max-size", max_size)->check(CLI::Range(1, 64));
    auto* seed_opt = rt->add_option("--seed", seed, "sample randomly instead "
                                                    "of enumerating");
    rt->add_option("--count", count, "sample size when --seed is given");
    rt->add_option("--jobs", jobs, "worker threads; 1 forces the serial path");

    auto* audit = app.add_subcommand("audit-frames", "frame property audit");
    audit->add_option("--variant", variant)
        ->required()
        ->check(CLI::IsMember(all_variant_names()));
    audit->add_option("--n", audit_n, "number of companion worlds; 0 audits "
                                      "the chainless core")
        ->check(CLI::Range(0, 64));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (prove->parsed()) return cmd_prove(formula, trace);
        if (tr->parsed()) return cmd_translate(formula, scheme, render);
        if (cm->parsed()) return cmd_countermodel(formula, variant);
        if (ch->parsed()) return cmd_chains(formula, reduce);
        if (check->parsed()) return cmd_check(model_path, formula);
        if (rt->parsed())
            return cmd_roundtrip(vars, max_size, seed, seed_opt->count() > 0,
                                 count, jobs);
        if (audit->parsed()) return cmd_audit(variant, audit_n);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
