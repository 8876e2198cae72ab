#include "stabsse/csv_io.h"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "stabsse/errors.h"
#include "stabsse/exact_diag.h"

namespace stabsse {

namespace {

void write_provenance(std::ostream& out, std::string_view command, const RunConfig& config) {
    out << "# stabsse " << kVersion << '\n';
    out << "# command=" << command << '\n';
    for (const auto& [key, value] : to_key_values(config)) {
        // the destination path does not affect the data
        if (key != "out") out << "# " << key << '=' << value << '\n';
    }
}

std::vector<std::string> split(std::string_view line) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = line.find(',', pos);
        std::string_view cell = line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.remove_suffix(1);
        while (!cell.empty() && cell.front() == ' ') cell.remove_prefix(1);
        out.emplace_back(cell);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

double parse_cell(const std::string& cell) {
    if (cell == "nan") return std::nan("");
    double v{};
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw std::invalid_argument("malformed CSV number '" + cell + "'");
    }
    return v;
}

constexpr double kGridTolerance = 1e-9;

}  // namespace

std::vector<EdRow> compute_ed_rows(const RunConfig& config) {
    validate(config);
    HamiltonianCatalog catalog = build_catalog(config);
    if (catalog.num_qubits() > kDenseHamiltonianQubitLimit) {
        throw CapabilityError("exact diagonalization of " + std::to_string(catalog.num_qubits()) +
                              " qubits exceeds the limit of " + std::to_string(kDenseHamiltonianQubitLimit) +
                              "; full diagonalization costs O(8^N)");
    }
    Spectrum spectrum = symmetric_eigenvalues(build_dense(catalog));
    std::vector<EdRow> rows;
    for (double t : temperature_grid(config)) {
        double beta = 1.0 / t;
        rows.push_back({t, beta, mean_energy_truncated(spectrum, beta, config.length),
                        mean_energy_full(spectrum, beta)});
    }
    return rows;
}

void write_run_csv(std::ostream& out, const RunConfig& config, const RunResult& result) {
    write_provenance(out, "run", config);
    out << kRunHeader << '\n';
    for (const auto& r : result.records) {
        out << format_number(r.temperature) << ',' << format_number(r.beta) << ',' << format_number(r.mean_n) << ','
            << format_number(r.energy) << ',' << format_number(r.energy_stderr) << ','
            << format_number(r.state_accept_rate) << ',' << format_number(r.op_accept_rate) << ',' << result.seed
            << '\n';
    }
}

void write_ed_csv(std::ostream& out, const RunConfig& config, const std::vector<EdRow>& rows) {
    write_provenance(out, "ed", config);
    out << kEdHeader << '\n';
    for (const auto& r : rows) {
        out << format_number(r.temperature) << ',' << format_number(r.beta) << ','
            << format_number(r.energy_truncated) << ',' << format_number(r.energy_full) << '\n';
    }
}

std::size_t CsvTable::column(std::string_view name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) return i;
    }
    throw std::invalid_argument("CSV has no column '" + std::string(name) + "'");
}

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#' || line == "\r") continue;
        auto cells = split(line);
        if (!have_header) {
            table.columns = std::move(cells);
            have_header = true;
            continue;
        }
        if (cells.size() != table.columns.size()) throw std::invalid_argument("CSV row has the wrong number of cells");
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& c : cells) row.push_back(parse_cell(c));
        table.rows.push_back(std::move(row));
    }
    if (!have_header) throw std::invalid_argument("CSV has no header");
    return table;
}

CompareReport compare_energies(const CsvTable& mc, const CsvTable& ed, double threshold) {
    if (!(threshold > 0.0)) throw std::invalid_argument("threshold must be positive");
    const std::size_t mc_t = mc.column("T"), mc_e = mc.column("energy");
    const std::size_t ed_t = ed.column("T"), ed_e = ed.column("energy_truncated_L");
    if (mc.rows.size() != ed.rows.size()) {
        throw std::invalid_argument("temperature grids differ: " + std::to_string(mc.rows.size()) + " vs " +
                                    std::to_string(ed.rows.size()) + " rows");
    }
    CompareReport report;
    report.threshold = threshold;
    for (std::size_t i = 0; i < mc.rows.size(); ++i) {
        double t = mc.rows[i][mc_t];
        if (std::abs(t - ed.rows[i][ed_t]) > kGridTolerance * std::max(1.0, std::abs(t))) {
            throw std::invalid_argument("temperature grids differ at row " + std::to_string(i + 1));
        }
        CompareRow row{t, mc.rows[i][mc_e], ed.rows[i][ed_e], 0.0, true};
        double diff = std::abs(row.energy_mc - row.energy_ed);
        row.relative_error = diff == 0.0 ? 0.0 : diff / std::abs(row.energy_ed);
        row.pass = row.relative_error < threshold;
        if (i == 0 || row.relative_error > report.max_relative_error || std::isnan(row.relative_error)) {
            report.max_relative_error = row.relative_error;
            report.worst_row = i;
        }
        report.pass = report.pass && row.pass;
        report.rows.push_back(row);
    }
    return report;
}

void write_report(std::ostream& out, const CompareReport& report) {
    out << "T,energy_mc,energy_ed,relative_error,status\n";
    for (const auto& r : report.rows) {
        out << format_number(r.temperature) << ',' << format_number(r.energy_mc) << ','
            << format_number(r.energy_ed) << ',' << format_number(r.relative_error) << ','
            << (r.pass ? "ok" : "FAIL") << '\n';
    }
    if (!report.rows.empty()) {
        out << "# max_relative_error=" << format_number(report.max_relative_error) << " at T="
            << format_number(report.rows[report.worst_row].temperature) << '\n';
    }
    out << "# threshold=" << format_number(report.threshold) << '\n';
    out << "# result=" << (report.pass ? "PASS" : "FAIL") << '\n';
}

}  // namespace stabsse
