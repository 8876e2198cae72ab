#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stabsse/hamiltonian.h"
#include "stabsse/sse.h"

namespace stabsse {

inline constexpr std::string_view kVersion = "1.0.0";

enum class ModelKind { cnot_chain, tfi_chain, z2_plaquette };

std::string_view to_string(ModelKind model);
ModelKind parse_model(std::string_view text);

/// Everything needed to reproduce a temperature sweep. Defaults are the
/// 10-qubit CNOT chain at h/J = 4 annealed from T = 10 to T = 0.4.
struct RunConfig {
    ModelKind model = ModelKind::cnot_chain;
    std::size_t n = 10;
    std::size_t lx = 2;
    std::size_t ly = 2;
    double h = 4.0;
    double j = 1.0;
    double j_star = 1.0;
    double j_plaq = 1.0;
    std::size_t length = 40;
    double t_start = 10.0;
    double t_end = 0.4;
    double t_step = 0.4;
    std::size_t cycles_therm = 50000;
    std::size_t cycles_meas = 50000;
    std::uint64_t seed = 1;
    StateProposal proposal = StateProposal::uniform;
    std::string out;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Throws std::invalid_argument describing the first violated constraint.
void validate(const RunConfig& config);

HamiltonianCatalog build_catalog(const RunConfig& config);
std::vector<double> temperature_grid(const RunConfig& config);

/// Keys match the long CLI flag names: model, n, lx, ly, h, j, j-star,
/// j-plaq, L, t-start, t-end, t-step, therm, meas, seed, proposal, out.
std::vector<std::pair<std::string, std::string>> to_key_values(const RunConfig& config);

/// Throws std::invalid_argument for unknown keys or malformed values.
void apply_key_value(RunConfig& config, std::string_view key, std::string_view value);

/// Plain key=value text: blank lines and lines starting with '#' are skipped.
RunConfig parse_config_text(std::string_view text, RunConfig base = {});

/// Recovers the configuration echoed into the '#' comment block of a CSV
/// written by this tool.
RunConfig parse_csv_provenance(std::string_view csv_text);

/// Shortest decimal representation that round-trips; locale independent.
std::string format_number(double value);

}  // namespace stabsse
