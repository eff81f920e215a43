// umbra: exact umbral calculus on symmetric functions
//   eval    evaluate an expression
//   seq     binomial-type sequence element of a named species
//   full    full-sequence element of a genus table
//   genfun  generating function and delta-operator pair of a species
//   verify  run an identity suite

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "umbra/expr.hpp"
#include "umbra/json_io.hpp"
#include "umbra/verify.hpp"

using namespace umbra;

namespace {

struct GlobalOpts {
    int degree_cap = default_degree_cap;
    int trunc = default_truncation;
    int vars = 0;
    bool json = false;
    std::uint64_t seed = 20260808;
};

QuasiGenus load_genus(const std::string& name, int bound) {
    if (name == "e") return genus_e(bound);
    if (name == "h") return genus_h(bound);
    std::ifstream in(name);
    if (!in) throw domain_error("cannot open genus table: " + name);
    json j;
    in >> j;
    return genus_from_json(j);
}

Partition parse_partition_arg(std::string text) {
    // accepts "3,1", "[3,1]", "[]"
    std::erase(text, '[');
    std::erase(text, ']');
    std::erase(text, ' ');
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        if (next > pos) parts.push_back(std::stoi(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    return Partition::from_unsorted(std::move(parts));
}

json value_to_json(const Value& v) {
    if (auto* r = std::get_if<Rat>(&v)) return json{{"rational", rat_to_string(*r)}};
    if (auto* p = std::get_if<SymFunc>(&v)) return symfunc_to_json(*p);
    if (auto* u = std::get_if<UniPoly>(&v)) return unipoly_to_json(*u);
    return shifted_to_json(std::get<ShiftedPoly>(v));
}

int emit_results(const std::vector<CriterionResult>& results, bool as_json) {
    bool all = true;
    if (as_json) {
        json arr = json::array();
        for (auto& r : results) {
            arr.push_back(json{{"criterion", r.id},
                               {"name", r.name},
                               {"pass", r.pass},
                               {"checks", r.checks},
                               {"detail", r.detail}});
            all &= r.pass;
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (auto& r : results) {
            std::cout << "criterion " << (r.id < 10 ? " " : "") << r.id << " "
                      << (r.pass ? "[PASS]" : "[FAIL]") << " " << r.name << " (" << r.checks
                      << " checks)";
            if (!r.detail.empty()) std::cout << "  -- " << r.detail;
            std::cout << "\n";
            all &= r.pass;
        }
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact umbral calculus on symmetric functions"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOpts g;
    if (const char* env = std::getenv("UMBRA_DEGREE_CAP")) g.degree_cap = std::atoi(env);
    app.add_option("--degree-cap", g.degree_cap, "grading cap for all computations");
    app.add_option("--trunc", g.trunc, "power series truncation order");
    app.add_option("--vars", g.vars, "number of alphabet variables for expansions");
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_option("--seed", g.seed, "seed for randomized suites");

    std::string expr_text, species_name, genus_name, part_text, suite_name;
    int seq_degree = 0;
    int verify_degree = -1;

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
    eval_cmd->add_option("expr", expr_text, "expression")->required();

    CLI::App* seq_cmd = app.add_subcommand("seq", "binomial sequence element p_n of a species");
    seq_cmd->add_option("species", species_name, "Deg|Inj|Lin|Forest|ExpLin|Forest1")->required();
    seq_cmd->add_option("n", seq_degree, "degree")->required();

    CLI::App* full_cmd = app.add_subcommand("full", "full sequence element p_lambda of a genus");
    full_cmd->add_option("genus", genus_name, "e, h, or a genus JSON file")->required();
    full_cmd->add_option("partition", part_text, "index partition, e.g. [3,1]")->required();

    CLI::App* gen_cmd = app.add_subcommand("genfun", "EGF and delta pair of a species");
    gen_cmd->add_option("species", species_name, "species name")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "run an identity suite");
    verify_cmd->add_option("suite", suite_name,
                           "binomial|derivatives|genfun|hopf|taylor|roman|transfer|schur|"
                           "plethysm|oracle|all")
        ->required();
    verify_cmd->add_option("--degree", verify_degree, "lower the exhaustive degree bounds");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*eval_cmd) {
            ParseResult pr = parse_expr(expr_text);
            for (auto& w : pr.warnings) std::cerr << "warning: " << w << "\n";
            EvalConfig cfg;
            cfg.degree_cap = g.degree_cap;
            cfg.truncation = g.trunc;
            cfg.genus_loader = load_genus;
            Value v = eval_expr(*pr.expr, cfg);
            if (g.json)
                std::cout << value_to_json(v).dump(2) << "\n";
            else
                std::cout << print_value(v) << "\n";
            return 0;
        }
        if (*seq_cmd) {
            QuasiSpecies s = named_species(species_name, g.degree_cap);
            SymFunc p = linear_binomial(s, seq_degree, g.degree_cap);
            if (g.json)
                std::cout << symfunc_to_json(p).dump(2) << "\n";
            else
                std::cout << p.to_string() << "\n";
            return 0;
        }
        if (*full_cmd) {
            QuasiGenus gn = load_genus(genus_name, g.degree_cap);
            SymFunc p = full_binomial(gn, parse_partition_arg(part_text), g.degree_cap);
            if (g.json)
                std::cout << symfunc_to_json(p).dump(2) << "\n";
            else
                std::cout << p.to_string() << "\n";
            return 0;
        }
        if (*gen_cmd) {
            QuasiSpecies s = named_species(species_name, std::max(g.trunc, g.degree_cap));
            DeltaPair dp = delta_pair(s, g.trunc);
            FPSeries egf = species_egf(s, g.trunc);
            if (g.json) {
                json out{{"egf", fpseries_to_json(egf)},
                         {"conjugate", fpseries_to_json(dp.conjugate)},
                         {"associated", fpseries_to_json(dp.associated)}};
                if (g.vars > 0) {
                    json seqs = json::array();
                    for (int n = 0; n <= g.trunc; ++n)
                        seqs.push_back(symfunc_to_json(linear_binomial(s, n, g.degree_cap)));
                    out["sequence"] = seqs;
                }
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "egf        " << egf.to_string() << "\n";
                std::cout << "conjugate  " << dp.conjugate.to_string() << "\n";
                std::cout << "associated " << dp.associated.to_string() << "\n";
                if (g.vars > 0)
                    for (int n = 0; n <= g.trunc; ++n)
                        std::cout << "p_" << n << "  "
                                  << linear_binomial(s, n, g.degree_cap).to_string() << "\n";
            }
            return 0;
        }
        if (*verify_cmd) {
            VerifyConfig cfg;
            cfg.seed = g.seed;
            cfg.degree = verify_degree;
            return emit_results(run_suite(suite_name, cfg), g.json);
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
