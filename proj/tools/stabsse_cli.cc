// Command-line driver: `run` an SSE temperature sweep, `ed` the exact
// reference on the same grid, `compare` the two CSV files.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "stabsse/csv_io.h"
#include "stabsse/errors.h"
#include "stabsse/run_config.h"
#include "stabsse/sse.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct Flags {
    std::string config_file;
    std::string model, proposal, out;
    std::size_t n = 0, lx = 0, ly = 0, length = 0, therm = 0, meas = 0;
    double h = 0, j = 0, j_star = 0, j_plaq = 0, t_start = 0, t_end = 0, t_step = 0;
    std::uint64_t seed = 0;
    double threshold = 0.01;
    std::string mc_csv, ed_csv;
};

void add_model_options(CLI::App& app, Flags& f) {
    app.add_option("--config", f.config_file, "key=value file; flags override its entries");
    app.add_option("--model", f.model, "cnot_chain | tfi_chain | z2_plaquette");
    app.add_option("--n", f.n, "number of qubits (chains)");
    app.add_option("--lx", f.lx, "lattice width (z2_plaquette)");
    app.add_option("--ly", f.ly, "lattice height (z2_plaquette)");
    app.add_option("--h", f.h, "field h");
    app.add_option("--j", f.j, "coupling J");
    app.add_option("--j-star", f.j_star, "star coupling (z2_plaquette)");
    app.add_option("--j-plaq", f.j_plaq, "plaquette coupling (z2_plaquette)");
    app.add_option("--L", f.length, "expansion cutoff");
    app.add_option("--t-start", f.t_start, "first (highest) temperature");
    app.add_option("--t-end", f.t_end, "last (lowest) temperature");
    app.add_option("--t-step", f.t_step, "temperature step");
    app.add_option("--therm", f.therm, "thermalization cycles per temperature");
    app.add_option("--meas", f.meas, "measurement cycles per temperature");
    app.add_option("--seed", f.seed, "RNG seed");
    app.add_option("--proposal", f.proposal, "state proposal: uniform | single_flip");
    app.add_option("--out", f.out, "output CSV path (stdout if omitted)");
}

stabsse::RunConfig resolve_config(const CLI::App& app, const Flags& f) {
    stabsse::RunConfig config;
    if (!f.config_file.empty()) {
        std::ifstream in(f.config_file);
        if (!in) throw std::runtime_error("cannot read config file '" + f.config_file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        config = stabsse::parse_config_text(buf.str());
    }
    auto given = [&app](const char* name) { return app.count(name) > 0; };
    if (given("--model")) config.model = stabsse::parse_model(f.model);
    if (given("--proposal")) stabsse::apply_key_value(config, "proposal", f.proposal);
    if (given("--out")) config.out = f.out;
    if (given("--n")) config.n = f.n;
    if (given("--lx")) config.lx = f.lx;
    if (given("--ly")) config.ly = f.ly;
    if (given("--h")) config.h = f.h;
    if (given("--j")) config.j = f.j;
    if (given("--j-star")) config.j_star = f.j_star;
    if (given("--j-plaq")) config.j_plaq = f.j_plaq;
    if (given("--L")) config.length = f.length;
    if (given("--t-start")) config.t_start = f.t_start;
    if (given("--t-end")) config.t_end = f.t_end;
    if (given("--t-step")) config.t_step = f.t_step;
    if (given("--therm")) config.cycles_therm = f.therm;
    if (given("--meas")) config.cycles_meas = f.meas;
    if (given("--seed")) config.seed = f.seed;
    stabsse::validate(config);
    return config;
}

template <typename Writer>
void emit(const std::string& path, Writer&& write) {
    if (path.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write(out);
    out.flush();
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

int cmd_run(const CLI::App& app, const Flags& f) {
    stabsse::RunConfig config = resolve_config(app, f);
    stabsse::HamiltonianCatalog catalog = stabsse::build_catalog(config);
    stabsse::ScheduleOptions options;
    options.length = config.length;
    options.temperatures = stabsse::temperature_grid(config);
    options.cycles_therm = config.cycles_therm;
    options.cycles_meas = config.cycles_meas;
    options.seed = config.seed;
    options.cycle.proposal = config.proposal;
    stabsse::RunResult result = stabsse::run_schedule(catalog, options);
    for (const auto& r : result.records) {
        if (r.max_n >= config.length) {
            std::cerr << "warning: n reached the cutoff L=" << config.length << " at T=" << r.temperature
                      << "; results follow the truncated partition function\n";
            break;
        }
    }
    emit(config.out, [&](std::ostream& out) { stabsse::write_run_csv(out, config, result); });
    return 0;
}

int cmd_ed(const CLI::App& app, const Flags& f) {
    stabsse::RunConfig config = resolve_config(app, f);
    auto rows = stabsse::compute_ed_rows(config);
    emit(config.out, [&](std::ostream& out) { stabsse::write_ed_csv(out, config, rows); });
    return 0;
}

stabsse::CsvTable load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    return stabsse::read_csv(in);
}

int cmd_compare(const Flags& f) {
    auto report = stabsse::compare_energies(load_table(f.mc_csv), load_table(f.ed_csv), f.threshold);
    stabsse::write_report(std::cout, report);
    if (!report.pass) {
        std::cerr << "relative error " << report.max_relative_error << " at T="
                  << report.rows[report.worst_row].temperature << " exceeds " << report.threshold << '\n';
        return kExitFail;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stochastic series expansion with stabilizer-state matrix elements"};
    app.require_subcommand(1);
    // -h is taken by the field option; subcommands inherit this.
    app.set_help_flag("--help", "print this help message and exit");
    Flags flags;

    CLI::App* run = app.add_subcommand("run", "anneal an SSE chain over the temperature grid, write CSV");
    add_model_options(*run, flags);
    CLI::App* ed = app.add_subcommand("ed", "exact-diagonalization energies on the same grid, write CSV");
    add_model_options(*ed, flags);
    CLI::App* compare = app.add_subcommand("compare", "relative error of a run CSV against an ed CSV");
    compare->add_option("mc_csv", flags.mc_csv, "CSV written by `run`")->required();
    compare->add_option("ed_csv", flags.ed_csv, "CSV written by `ed`")->required();
    compare->add_option("--threshold", flags.threshold, "maximum allowed relative error")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(*run, flags);
        if (ed->parsed()) return cmd_ed(*ed, flags);
        return cmd_compare(flags);
    } catch (const stabsse::CapabilityError& e) {
        std::cerr << "capability error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return kExitError;
}
