#include <complex>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "smig/errors.hpp"
#include "smig/run.hpp"

namespace {

struct RunArgs {
    std::string config_path;
    std::string preset_name;
    double c_re = 0.0, c_im = 0.0;
    bool c_re_set = false, c_im_set = false;
    std::string rank = "auto";
    std::string source;
    int grid = 0;
    int trunc_l = -1;
    std::string out;
};

void apply_overrides(smig::RunConfig& cfg, const RunArgs& args) {
    if (args.c_re_set) cfg.constant_c.real(args.c_re);
    if (args.c_im_set) cfg.constant_c.imag(args.c_im);
    if (args.rank != "auto") {
        cfg.rank_auto = false;
        try {
            cfg.rank_fixed = std::stoi(args.rank);
        } catch (const std::exception&) {
            throw smig::ConfigError("--rank expects 'auto' or an integer");
        }
    }
    if (!args.source.empty()) {
        if (args.source == "born") cfg.source = smig::DataSource::born;
        else if (args.source == "farfield") cfg.source = smig::DataSource::farfield;
        else if (args.source.rfind("external:", 0) == 0) {
            cfg.source = smig::DataSource::external;
            cfg.external_path = args.source.substr(9);
            cfg.norm_tau1 = 0.0;
        } else
            throw smig::ConfigError("--source expects born, farfield or external:PATH");
    }
    if (args.grid > 0) cfg.grid_n = args.grid;
    if (args.trunc_l >= 0) cfg.truncation_l = args.trunc_l;
    if (!args.out.empty()) cfg.out_dir = args.out;
}

smig::RunConfig load_config(const RunArgs& args) {
    if (args.config_path.empty() == args.preset_name.empty())
        throw smig::ConfigError("provide exactly one of --config or --preset");
    smig::RunConfig cfg = args.config_path.empty()
                              ? smig::preset(args.preset_name)
                              : smig::parse_config(args.config_path);
    apply_overrides(cfg, args);
    return cfg;
}

void print_summary(const smig::RunSummary& summary) {
    std::printf("rank M = %d\n", summary.rank);
    for (const smig::PeakInfo& p : summary.peaks)
        std::printf("peak (% .5f, % .5f) value %.6g\n", p.location.x, p.location.y,
                    p.value);
    std::printf("outputs in %s\n", summary.out_dir.string().c_str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subspace-migration microwave imaging laboratory"};
    app.require_subcommand(1);

    RunArgs args;
    CLI::App* run_cmd = app.add_subcommand("run", "execute one experiment");
    run_cmd->add_option("--config", args.config_path, "config file of key = value lines");
    run_cmd->add_option("--preset", args.preset_name,
                        "built-in configuration: example1|example2|example3|table1");
    run_cmd->add_option("--c-re", args.c_re, "real part of the diagonal constant C");
    run_cmd->add_option("--c-im", args.c_im, "imaginary part of the diagonal constant C");
    run_cmd->add_option("--rank", args.rank, "auto (gap strategy) or a fixed integer");
    run_cmd->add_option("--source", args.source, "born|farfield|external:PATH");
    run_cmd->add_option("--grid", args.grid, "imaging grid resolution per axis");
    run_cmd->add_option("--trunc-l", args.trunc_l, "series truncation order");
    run_cmd->add_option("--out", args.out, "output directory");

    std::vector<std::string> sweep_cs;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "run the same data with several constants C");
    sweep_cmd->add_option("--config", args.config_path, "config file");
    sweep_cmd->add_option("--preset", args.preset_name, "built-in configuration");
    sweep_cmd->add_option("--c", sweep_cs,
                          "constant as re or re+imi (repeatable), e.g. --c 0 --c 0.1");
    sweep_cmd->add_option("--rank", args.rank, "auto or fixed integer");
    sweep_cmd->add_option("--source", args.source, "born|farfield|external:PATH");
    sweep_cmd->add_option("--grid", args.grid, "imaging grid resolution per axis");
    sweep_cmd->add_option("--out", args.out, "output directory");

    CLI11_PARSE(app, argc, argv);
    args.c_re_set = run_cmd->count("--c-re") > 0;
    args.c_im_set = run_cmd->count("--c-im") > 0;

    try {
        if (run_cmd->parsed()) {
            print_summary(smig::run(load_config(args)));
        } else {
            smig::RunConfig cfg = load_config(args);
            std::vector<smig::Complex> cs;
            for (const std::string& s : sweep_cs) {
                // accepted forms: "0.1", "0.1i", "0.1+0.2i"
                try {
                    std::string t = s;
                    double re = 0.0, im = 0.0;
                    if (!t.empty() && t.back() == 'i') {
                        t.pop_back();
                        const auto plus = t.find_last_of("+-", t.size() - 1);
                        if (plus != std::string::npos && plus > 0) {
                            re = std::stod(t.substr(0, plus));
                            im = std::stod(t.substr(plus));
                        } else {
                            im = std::stod(t.empty() ? "1" : t);
                        }
                    } else {
                        re = std::stod(t);
                    }
                    cs.emplace_back(re, im);
                } catch (const std::exception&) {
                    throw smig::ConfigError("--c: cannot parse constant '" + s + "'");
                }
            }
            if (cs.empty()) cs = {{0.0, 0.0}};
            const auto summaries = sweep_constant(cfg, cs);
            for (const auto& s : summaries) print_summary(s);
        }
    } catch (const smig::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const smig::NumericalError& e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
