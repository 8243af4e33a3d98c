#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "valsemi/driver.hpp"
#include "valsemi/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"value semirings of toric branch arrangements"};
    app.require_subcommand(1);

    valsemi::RunConfig cfg;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input)
            sub->add_option("--input", cfg.input_path, "arrangement JSON file")
                ->required();
        sub->add_option("--format", cfg.format, "json | table")
            ->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--max-degree", cfg.max_degree, "degree cap (default 64)");
        sub->add_option("--seed", cfg.seed, "seed recorded in reports");
    };

    add_common(app.add_subcommand("analyze", "full semiring profile"), true);

    auto* layer = app.add_subcommand("layer", "circuits of one degree layer");
    add_common(layer, true);
    layer->add_option("--degree", cfg.layer_degree, "layer degree")->required();

    auto* membership = app.add_subcommand("membership", "decide one vector");
    add_common(membership, true);
    membership
        ->add_option("--vector", cfg.vector_arg,
                     "value vector, e.g. \"[2,1,inf]\"")
        ->required();

    add_common(app.add_subcommand("conductor", "conductor of the semiring"), true);
    add_common(app.add_subcommand("gaps", "canonical gap sequence"), true);
    add_common(app.add_subcommand("genus", "gap count with path check"), true);
    add_common(app.add_subcommand("very-uniform",
                                  "rank test and closed-form comparison"),
               true);

    auto* severi = app.add_subcommand("severi", "codimension upper bound");
    add_common(severi, false);
    severi->add_option("--n", cfg.severi_n, "ambient projective dimension")
        ->required();
    severi->add_option("--r", cfg.severi_r, "branch multiplicity")->required();
    severi->add_option("--l", cfg.severi_l, "embedding dimension")->required();
    severi->add_option("--d", cfg.severi_d, "curve degree (validity d > r)");

    auto* threshold =
        app.add_subcommand("severi-threshold", "least r with excess dimension");
    add_common(threshold, false);
    threshold->add_option("--n", cfg.severi_n, "ambient projective dimension")
        ->required();

    auto* oracle = app.add_subcommand("oracle-check",
                                      "engine vs brute-force agreement suite");
    add_common(oracle, true);
    oracle->add_flag("--inject-fault", cfg.inject_fault,
                     "corrupt a cached layer first (testing)");

    app.set_version_flag("--version", std::string(valsemi::kToolVersion));

    CLI11_PARSE(app, argc, argv);
    cfg.command = app.get_subcommands().front()->get_name();

    const valsemi::RunResult res = valsemi::run_command(cfg);
    if (res.exit_code == 0 || res.exit_code == 4) {
        std::cout << res.output;
    } else {
        std::cerr << res.output;
    }
    return res.exit_code;
}
