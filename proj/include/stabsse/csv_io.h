#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "stabsse/run_config.h"
#include "stabsse/sse.h"

namespace stabsse {

inline constexpr std::string_view kRunHeader = "T,beta,mean_n,energy,energy_stderr,state_accept,op_accept,seed";
inline constexpr std::string_view kEdHeader = "T,beta,energy_truncated_L,energy_full";

struct EdRow {
    double temperature;
    double beta;
    double energy_truncated;
    double energy_full;
};

/// Exact-diagonalization energies on the config's temperature grid and L.
/// Throws CapabilityError when the model exceeds the dense bound.
std::vector<EdRow> compute_ed_rows(const RunConfig& config);

/// Both writers emit '#'-prefixed provenance lines (tool version, command,
/// one key=value per config field except `out`), then the header, then one
/// row per temperature.
void write_run_csv(std::ostream& out, const RunConfig& config, const RunResult& result);
void write_ed_csv(std::ostream& out, const RunConfig& config, const std::vector<EdRow>& rows);

/// Numeric CSV with '#' comment lines and a single header row.
struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    /// Throws std::invalid_argument if the column is absent.
    std::size_t column(std::string_view name) const;
};

CsvTable read_csv(std::istream& in);

struct CompareRow {
    double temperature;
    double energy_mc;
    double energy_ed;
    double relative_error;
    bool pass;
};

struct CompareReport {
    std::vector<CompareRow> rows;
    double max_relative_error = 0.0;
    std::size_t worst_row = 0;
    double threshold = 0.01;
    bool pass = true;
};

/// Row-wise |E_mc - E_ed| / |E_ed| with E_ed taken from the truncated
/// column. Throws std::invalid_argument when the temperature grids differ.
CompareReport compare_energies(const CsvTable& mc, const CsvTable& ed, double threshold);

void write_report(std::ostream& out, const CompareReport& report);

}  // namespace stabsse
