#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "qwvd/io.hpp"
#include "qwvd/parallel.hpp"
#include "qwvd/runners.hpp"

namespace {

struct Overrides {
    std::optional<std::string> config_path;
    std::vector<std::string> sets;  // raw key=value overrides

    std::optional<std::string> input, input2, output, output_heatmap, heatmap_mode, output_csv;
    std::optional<std::string> kind, suite, path_mode, lambda, mu, sizes;
    std::optional<int> n, K, seeds, slice1, slice2;
    std::optional<double> sigma;
    bool deterministic = false;
    bool use_oracle = false;
    bool half_step = false;
};

void add_common(CLI::App* cmd, Overrides& ov) {
    cmd->add_option("--config", ov.config_path, "flat key = value job file");
    cmd->add_option("--set", ov.sets, "override any config key (key=value, repeatable)");
    cmd->add_option("-i,--input", ov.input, "input file (QGRID or .ppm)");
    cmd->add_option("-o,--output", ov.output, "output file or directory");
    cmd->add_flag("--deterministic", ov.deterministic,
                  "single worker, ordered reductions (byte-stable outputs)");
}

qwvd::JobConfig build_config(const std::string& command, const Overrides& ov) {
    qwvd::JobConfig cfg;
    if (ov.config_path) cfg = qwvd::load_config(*ov.config_path);
    cfg.command = command;

    std::string text;
    auto add = [&](const std::string& key, const std::string& value) {
        text += key + " = " + value + "\n";
    };
    if (ov.input) add("input", *ov.input);
    if (ov.input2) add("input2", *ov.input2);
    if (ov.output) add("output", *ov.output);
    if (ov.output_heatmap) add("output_heatmap", *ov.output_heatmap);
    if (ov.heatmap_mode) add("heatmap_mode", *ov.heatmap_mode);
    if (ov.output_csv) add("output_csv", *ov.output_csv);
    if (ov.kind) add("kind", *ov.kind);
    if (ov.suite) add("suite", *ov.suite);
    if (ov.path_mode) add("path_mode", *ov.path_mode);
    if (ov.lambda) add("lambda", *ov.lambda);
    if (ov.mu) add("mu", *ov.mu);
    if (ov.sizes) add("sizes", *ov.sizes);
    if (ov.n) {
        add("n1", std::to_string(*ov.n));
        add("n2", std::to_string(*ov.n));
    }
    if (ov.K) add("K", std::to_string(*ov.K));
    if (ov.seeds) add("seeds", std::to_string(*ov.seeds));
    if (ov.slice1) add("slice1", std::to_string(*ov.slice1));
    if (ov.slice2) add("slice2", std::to_string(*ov.slice2));
    if (ov.sigma) add("sigma", qwvd::format_double(*ov.sigma));
    if (ov.deterministic) add("deterministic", "true");
    if (ov.use_oracle) add("use_oracle", "true");
    if (ov.half_step) add("half_step", "true");
    for (const auto& kv : ov.sets) text += kv + "\n";

    if (!text.empty()) {
        // route overrides through the same parser so validation is uniform
        const std::string base = qwvd::serialize_config(cfg);
        cfg = qwvd::parse_config_text(base + text);
        cfg.command = command;
    }
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaternion two-sided transforms, offset linear canonical transforms, and "
                 "the associated Wigner-Ville distribution, with a numerical verification "
                 "suite"};
    app.require_subcommand(1);

    Overrides ov;

    CLI::App* generate = app.add_subcommand("generate", "write a test signal as a QGRID file");
    add_common(generate, ov);
    generate->add_option("--kind", ov.kind, "gaussian | shifted-gaussian | chirp | delta");
    generate->add_option("--sigma", ov.sigma, "gaussian width");
    generate->add_option("-n", ov.n, "samples per axis");

    CLI::App* transform = app.add_subcommand("transform", "offset linear canonical transform "
                                                          "of a signal (QFT at the reduction "
                                                          "parameters)");
    add_common(transform, ov);
    transform->add_option("--path", ov.path_mode, "auto | fast | direct");
    transform->add_option("--lambda", ov.lambda, "left axis (i, j, k or x,y,z)");
    transform->add_option("--mu", ov.mu, "right axis");
    transform->add_option("--heatmap", ov.output_heatmap, "write a P5 graymap of the result");
    transform->add_option("--heatmap-mode", ov.heatmap_mode, "modulus | q0 | q1 | q2 | q3");
    transform->add_option("--csv", ov.output_csv, "write full-precision CSV of the result");
    transform->add_flag("--use-oracle", ov.use_oracle, "route through the brute-force sum");

    CLI::App* wvd = app.add_subcommand("wvd", "time-frequency distribution of one or two "
                                              "signals; writes per-slice QGRID-FREQ files "
                                              "plus a manifest");
    add_common(wvd, ov);
    wvd->add_option("--input2", ov.input2, "second signal (defaults to the first)");
    wvd->add_option("--path", ov.path_mode, "auto | fast | direct");
    wvd->add_option("--slice1", ov.slice1, "export a single slice: first index");
    wvd->add_option("--slice2", ov.slice2, "export a single slice: second index");
    wvd->add_flag("--half-step", ov.half_step, "evaluate on the half-step-refined lattice");
    wvd->add_option("--heatmap", ov.output_heatmap, "graymap of the exported slice");
    wvd->add_option("--heatmap-mode", ov.heatmap_mode, "modulus | q0 | q1 | q2 | q3");
    wvd->add_option("--csv", ov.output_csv, "CSV of the exported slice");

    CLI::App* verify = app.add_subcommand("verify", "run the numerical verification suite "
                                                    "and write report records");
    add_common(verify, ov);
    verify->add_option("suite", ov.suite, "all | qft | qolct | wvd | fastpath | heisenberg | "
                                          "poisson | lieb");
    verify->add_option("--K", ov.K, "lattice truncation for the summation checks");
    verify->add_option("--seeds", ov.seeds, "random-signal count for seeded checks");
    verify->add_flag("--use-oracle", ov.use_oracle, "(reserved) oracle-routed identities");

    CLI::App* bench = app.add_subcommand("bench", "time the brute-force sum against the "
                                                  "FFT-factored path; CSV output");
    add_common(bench, ov);
    bench->add_option("--sizes", ov.sizes, "comma-separated grid sizes (<= 32)");

    CLI11_PARSE(app, argc, argv);

    try {
        const std::string command = app.get_subcommands().front()->get_name();
        const qwvd::JobConfig cfg = build_config(command, ov);
        if (cfg.deterministic) qwvd::set_max_threads(1);
        return qwvd::run_job(cfg);
    } catch (const std::exception& e) {
        std::cerr << "qwvd: " << e.what() << '\n';
        return 2;
    }
}
