#include "stabsse/run_config.h"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace stabsse {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

template <typename T>
T parse_integer(std::string_view key, std::string_view text) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument("bad integer for '" + std::string(key) + "': " + std::string(text));
    }
    return value;
}

double parse_double(std::string_view key, std::string_view text) {
    double value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument("bad number for '" + std::string(key) + "': " + std::string(text));
    }
    return value;
}

std::string_view to_string(StateProposal p) { return p == StateProposal::uniform ? "uniform" : "single_flip"; }

StateProposal parse_proposal(std::string_view text) {
    if (text == "uniform") return StateProposal::uniform;
    if (text == "single_flip") return StateProposal::single_flip;
    throw std::invalid_argument("unknown state proposal '" + std::string(text) + "'");
}

void apply_lines(RunConfig& config, std::string_view text, bool comment_lines) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        if (comment_lines) {
            if (line.empty() || line.front() != '#') break;  // end of the provenance block
            line = trim(line.substr(1));
        } else if (line.empty() || line.front() == '#') {
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) continue;
        std::string_view key = trim(line.substr(0, eq));
        if (comment_lines && key == "command") continue;
        apply_key_value(config, key, trim(line.substr(eq + 1)));
    }
}

}  // namespace

std::string_view to_string(ModelKind model) {
    switch (model) {
        case ModelKind::cnot_chain:
            return "cnot_chain";
        case ModelKind::tfi_chain:
            return "tfi_chain";
        case ModelKind::z2_plaquette:
            return "z2_plaquette";
    }
    return "unknown";
}

ModelKind parse_model(std::string_view text) {
    if (text == "cnot_chain") return ModelKind::cnot_chain;
    if (text == "tfi_chain") return ModelKind::tfi_chain;
    if (text == "z2_plaquette") return ModelKind::z2_plaquette;
    throw std::invalid_argument("unknown model '" + std::string(text) + "' (cnot_chain, tfi_chain, z2_plaquette)");
}

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) throw std::runtime_error("number formatting failed");
    return std::string(buf, ptr);
}

void validate(const RunConfig& c) {
    if (c.model == ModelKind::z2_plaquette) {
        if (c.lx < 2 || c.ly < 2) throw std::invalid_argument("lx and ly must be >= 2");
    } else if (c.n < 2) {
        throw std::invalid_argument("n must be >= 2");
    }
    if (c.length < 1) throw std::invalid_argument("L must be >= 1");
    // Negative couplings would make weights negative (sign problem).
    for (double v : {c.h, c.j, c.j_star, c.j_plaq}) {
        if (!(v >= 0.0) || !std::isfinite(v)) throw std::invalid_argument("couplings must be finite and >= 0");
    }
    if (!(c.t_end > 0.0)) throw std::invalid_argument("t-end must be > 0");
    if (!(c.t_start >= c.t_end)) throw std::invalid_argument("t-start must be >= t-end");
    if (!(c.t_step > 0.0)) throw std::invalid_argument("t-step must be > 0");
    if (c.cycles_therm < 1 || c.cycles_meas < 1) throw std::invalid_argument("cycle counts must be >= 1");
}

HamiltonianCatalog build_catalog(const RunConfig& c) {
    switch (c.model) {
        case ModelKind::cnot_chain:
            return build_cnot_chain(c.n, c.h, c.j);
        case ModelKind::tfi_chain:
            return build_tfi_chain(c.n, c.h, c.j);
        case ModelKind::z2_plaquette:
            return build_z2_plaquette_model(c.lx, c.ly, c.j_star, c.j_plaq);
    }
    throw std::logic_error("unhandled model");
}

std::vector<double> temperature_grid(const RunConfig& c) { return temperature_grid(c.t_start, c.t_end, c.t_step); }

std::vector<std::pair<std::string, std::string>> to_key_values(const RunConfig& c) {
    return {
        {"model", std::string(to_string(c.model))},
        {"n", std::to_string(c.n)},
        {"lx", std::to_string(c.lx)},
        {"ly", std::to_string(c.ly)},
        {"h", format_number(c.h)},
        {"j", format_number(c.j)},
        {"j-star", format_number(c.j_star)},
        {"j-plaq", format_number(c.j_plaq)},
        {"L", std::to_string(c.length)},
        {"t-start", format_number(c.t_start)},
        {"t-end", format_number(c.t_end)},
        {"t-step", format_number(c.t_step)},
        {"therm", std::to_string(c.cycles_therm)},
        {"meas", std::to_string(c.cycles_meas)},
        {"seed", std::to_string(c.seed)},
        {"proposal", std::string(to_string(c.proposal))},
        {"out", c.out},
    };
}

void apply_key_value(RunConfig& c, std::string_view key, std::string_view value) {
    if (key == "model") {
        c.model = parse_model(value);
    } else if (key == "n") {
        c.n = parse_integer<std::size_t>(key, value);
    } else if (key == "lx") {
        c.lx = parse_integer<std::size_t>(key, value);
    } else if (key == "ly") {
        c.ly = parse_integer<std::size_t>(key, value);
    } else if (key == "h") {
        c.h = parse_double(key, value);
    } else if (key == "j") {
        c.j = parse_double(key, value);
    } else if (key == "j-star") {
        c.j_star = parse_double(key, value);
    } else if (key == "j-plaq") {
        c.j_plaq = parse_double(key, value);
    } else if (key == "L") {
        c.length = parse_integer<std::size_t>(key, value);
    } else if (key == "t-start") {
        c.t_start = parse_double(key, value);
    } else if (key == "t-end") {
        c.t_end = parse_double(key, value);
    } else if (key == "t-step") {
        c.t_step = parse_double(key, value);
    } else if (key == "therm") {
        c.cycles_therm = parse_integer<std::size_t>(key, value);
    } else if (key == "meas") {
        c.cycles_meas = parse_integer<std::size_t>(key, value);
    } else if (key == "seed") {
        c.seed = parse_integer<std::uint64_t>(key, value);
    } else if (key == "proposal") {
        c.proposal = parse_proposal(value);
    } else if (key == "out") {
        c.out = std::string(value);
    } else {
        throw std::invalid_argument("unknown configuration key '" + std::string(key) + "'");
    }
}

RunConfig parse_config_text(std::string_view text, RunConfig base) {
    apply_lines(base, text, false);
    return base;
}

RunConfig parse_csv_provenance(std::string_view csv_text) {
    RunConfig c;
    apply_lines(c, csv_text, true);
    return c;
}

}  // namespace stabsse
