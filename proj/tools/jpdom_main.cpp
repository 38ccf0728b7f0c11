#include <cstdint>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>

#include "jpdom/io.hpp"
#include "jpdom/suites.hpp"
#include "jpdom/svg.hpp"

namespace {

using namespace jpdom;

constexpr double two_pi = 2.0 * std::numbers::pi;

struct Options {
    std::string h_spec = "sqrt";
    std::string c_spec = "one_over_log";
    std::string set_file;
    std::string out_dir = ".";
    std::size_t depth = 6;
    double measure = 0.5;  // fraction of the full circle
    double max_gap = 0.1;
    std::size_t samples = 100000;
    double eps_shell = 1e-6;
    std::uint64_t seed = 0;
    std::size_t horizon = 10000;
    double tol = 1e-6;
    double scale = 0.1;
    double arc_t = std::numbers::pi / 4.0;
};

std::filesystem::path prepare_out_dir(const Options& opt) {
    std::filesystem::path dir(opt.out_dir);
    std::filesystem::create_directories(dir);
    return dir;
}

void write_report_files(const std::filesystem::path& dir, const SuiteReport& rep) {
    write_text_file((dir / "report.json").string(), rep.report_string() + "\n");
    write_text_file((dir / "report.csv").string(), rep.csv);
}

// locate the first row whose own verdict field is false, for the failure diagnostic
std::string first_failing_row(const json& report) {
    if (!report.contains("rows")) return {};
    static const char* verdict_keys[] = {"pass", "holds", "within_bound", "all_within_bound",
                                         "equal_within_ci"};
    for (const json& row : report["rows"]) {
        for (const char* key : verdict_keys)
            if (row.contains(key) && row[key].is_boolean() && !row[key].get<bool>())
                return row.dump();
    }
    return {};
}

int finish_suite(const Options& opt, const SuiteReport& rep) {
    const auto dir = prepare_out_dir(opt);
    write_report_files(dir, rep);
    if (rep.pass) return 0;
    std::cerr << "verify " << rep.name << ": FAIL\n";
    const std::string row = first_failing_row(rep.report);
    if (!row.empty()) std::cerr << "first failing row: " << row << "\n";
    std::cerr << "summary: " << rep.report["summary"].dump() << "\n";
    return 1;
}

WosConfig wos_config(const Options& opt) {
    WosConfig cfg;
    cfg.eps_shell = opt.eps_shell;
    cfg.seed = opt.seed;
    cfg.samples = opt.samples;
    return cfg;
}

// resolve the set for suites that walk a domain: an explicit file wins,
// otherwise the standard construction from --h/--depth/--measure
ArcSet resolve_set(const Options& opt) {
    if (!opt.set_file.empty()) {
        try {
            return arcset_from_json(json::parse(read_text_file(opt.set_file)));
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception& e) {  // missing or malformed file: a config error
            throw std::invalid_argument(std::string("--set ") + opt.set_file + ": " + e.what());
        }
    }
    if (!(opt.measure >= 0.0 && opt.measure < 1.0))
        throw std::invalid_argument("--measure must lie in [0, 1) (fraction of the full circle)");
    return build_cantor_set(load_majorant_spec(opt.h_spec), opt.depth, opt.measure * two_pi);
}

int run_construct(const Options& opt) {
    if (!(opt.measure >= 0.0 && opt.measure < 1.0)) {
        std::cerr << "construct-set: --measure must lie in [0, 1) (fraction of the full circle)\n";
        return 2;
    }
    RegularMajorant h = load_majorant_spec(opt.h_spec);
    const ConstructResult res = suite_construct_audit(h, opt.depth, opt.measure * two_pi,
                                                      opt.h_spec);
    const auto dir = prepare_out_dir(opt);
    write_text_file((dir / "set.json").string(), arcset_to_json(res.set).dump(1) + "\n");
    write_text_file((dir / "gaps.csv").string(), gaps_to_csv(res.set));
    const PrivalovDomain domain(split_long_gaps(res.set, opt.max_gap), opt.max_gap);
    write_text_file((dir / "domain.svg").string(), render_domain_svg(domain));
    write_report_files(dir, res.report);
    if (!res.report.pass) {
        std::cerr << "construct-set: audit FAIL\n"
                  << res.report.report["summary"].dump(1) << "\n";
        for (const std::string& line : res.set.construction_log()) std::cerr << line << "\n";
        return 1;
    }
    return 0;
}

int run_verify(const Options& opt, const std::string& suite) {
    if (suite == "lemma-arc") return finish_suite(opt, suite_lemma_arc());
    if (suite == "distortion") return finish_suite(opt, suite_distortion(opt.samples, opt.seed));
    if (suite == "legendre")
        return finish_suite(opt,
                            suite_legendre(load_sequence_spec(opt.c_spec), opt.horizon, opt.seed));
    if (suite == "moments") {
        const PositiveSequence c = load_sequence_spec(opt.c_spec);
        const auto dir = prepare_out_dir(opt);
        write_text_file((dir / "moment_plot.svg").string(),
                        render_moment_plot_svg(moment_bound_check(c, opt.horizon, opt.tol)));
        return finish_suite(opt, suite_moments(c, opt.horizon, opt.tol));
    }
    if (suite == "proposition") {
        const ArcSet E = resolve_set(opt);
        return finish_suite(opt, suite_proposition(E, load_majorant_spec(opt.h_spec),
                                                   wos_config(opt), opt.max_gap));
    }
    if (suite == "subordination")
        return finish_suite(opt, suite_subordination(resolve_set(opt), wos_config(opt), 3,
                                                     opt.max_gap));
    if (suite == "subharmonic")
        return finish_suite(opt, suite_subharmonic(resolve_set(opt), wos_config(opt), 20, 20,
                                                   opt.max_gap));
    std::cerr << "verify: unknown suite '" << suite << "'\n"
              << "suites: lemma-arc proposition legendre moments distortion subordination "
                 "subharmonic\n";
    return 2;
}

int run_render(const Options& opt, bool have_set, bool have_h, bool have_scale) {
    if (!have_set && !have_h && !have_scale) {
        std::cerr << "render: nothing to draw; pass --set FILE, --h NAME --depth K, or --scale L\n";
        return 2;
    }
    const auto dir = prepare_out_dir(opt);
    if (have_set || have_h) {
        const ArcSet E = resolve_set(opt);
        const PrivalovDomain domain(split_long_gaps(E, opt.max_gap), opt.max_gap);
        write_text_file((dir / "domain.svg").string(), render_domain_svg(domain));
    }
    if (have_scale)
        write_text_file((dir / "mapping.svg").string(), render_mapping_svg(opt.scale, opt.arc_t));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cantor-type boundary sets, their slit domains, and the quantitative checks "
                 "behind them"};
    app.require_subcommand(1);
    Options opt;

    const auto add_geometry_flags = [&opt](CLI::App* cmd) {
        cmd->set_help_flag("--help", "print help");
        cmd->add_option("--h", opt.h_spec,
                        "majorant: sqrt | identity | xlog | one_over_log | const:<v> | file.json");
        cmd->add_option("--depth", opt.depth, "construction rounds");
        cmd->add_option("--measure", opt.measure, "target measure as a fraction of the circle");
        cmd->add_option("--max-gap", opt.max_gap, "gap-splitting threshold (radians)");
        cmd->add_option("--out", opt.out_dir, "output directory");
    };
    const auto add_walk_flags = [&opt](CLI::App* cmd) {
        cmd->add_option("--samples", opt.samples, "Monte Carlo walks");
        cmd->add_option("--eps-shell", opt.eps_shell, "walk termination shell");
        cmd->add_option("--seed", opt.seed, "random seed");
    };

    CLI::App* construct = app.add_subcommand("construct-set", "build a set and audit it");
    add_geometry_flags(construct);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("suite", suite,
                       "lemma-arc | proposition | legendre | moments | distortion | "
                       "subordination | subharmonic")
        ->required();
    add_geometry_flags(verify);
    add_walk_flags(verify);
    verify->add_option("--set", opt.set_file, "arc-set JSON produced by construct-set");
    verify->add_option("--c", opt.c_spec, "sequence: one_over_n | one_over_log | file.json");
    verify->add_option("--horizon", opt.horizon, "largest n in sequence pipelines");
    verify->add_option("--tol", opt.tol, "quadrature tolerance for moments");

    CLI::App* render = app.add_subcommand("render", "emit SVG illustrations");
    add_geometry_flags(render);
    render->add_option("--set", opt.set_file, "arc-set JSON to draw");
    render->add_option("--scale", opt.scale, "half-plane slit scale L in (0, 0.5]");
    render->add_option("--arc-t", opt.arc_t, "marked sub-arc parameter t in (0, pi)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(construct)) return run_construct(opt);
        if (app.got_subcommand(verify)) return run_verify(opt, suite);
        return run_render(opt, render->count("--set") > 0,
                          render->count("--h") > 0 || render->count("--depth") > 0,
                          render->count("--scale") > 0);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
