#include "stabsse/sse.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "stabsse/binning.h"

namespace stabsse {

void OperatorString::set(std::size_t p, std::int32_t term) {
    std::int32_t& slot = slots_.at(p);
    if (term < kIdentity) throw std::invalid_argument("invalid term index");
    if (slot == kIdentity && term != kIdentity) ++count_;
    if (slot != kIdentity && term == kIdentity) --count_;
    slot = term;
}

Configuration Configuration::initial(std::size_t num_qubits, std::size_t length) {
    return Configuration{BasisState(num_qubits), OperatorString(length), MatrixElement::one()};
}

namespace {

/// Matrix element with slot p replaced by `replacement`. `ket_right`, when
/// given, must hold the state after applying slots L-1 … p+1 to |σ⟩.
MatrixElement evaluate_with(const HamiltonianCatalog& catalog, const BasisState& state, const OperatorString& ops,
                            std::size_t p, std::int32_t replacement, const StabilizerState* ket_right) {
    StabilizerState ket = ket_right ? *ket_right : StabilizerState::from_basis_state(state);
    if (!ket_right) {
        for (std::size_t q = ops.length(); q-- > p + 1;) {
            if (ops.at(q) != OperatorString::kIdentity) catalog.apply(static_cast<std::size_t>(ops.at(q)), ket);
            if (ket.is_zero()) return MatrixElement::zero();
        }
    }
    if (replacement != OperatorString::kIdentity) {
        catalog.apply(static_cast<std::size_t>(replacement), ket);
        if (ket.is_zero()) return MatrixElement::zero();
    }
    for (std::size_t q = p; q-- > 0;) {
        if (ops.at(q) != OperatorString::kIdentity) catalog.apply(static_cast<std::size_t>(ops.at(q)), ket);
        if (ket.is_zero()) return MatrixElement::zero();
    }
    return ket.overlap_with_basis(state);
}

void check_sizes(const HamiltonianCatalog& catalog, const BasisState& state, const OperatorString& ops) {
    if (state.num_qubits() != catalog.num_qubits()) {
        throw std::invalid_argument("basis state and Hamiltonian disagree on the qubit count");
    }
    for (std::int32_t t : ops.slots()) {
        if (t != OperatorString::kIdentity && static_cast<std::size_t>(t) >= catalog.size()) {
            throw std::invalid_argument("operator string references a term outside the catalog");
        }
    }
}

bool operator_update(Configuration& config, const HamiltonianCatalog& catalog, std::size_t p, double beta, Rng& rng,
                     const StabilizerState* ket_right) {
    const std::size_t length = config.ops.length();
    const std::size_t n = config.ops.count();
    const double total = catalog.total_coupling();
    if (config.ops.is_identity(p)) {
        auto k = static_cast<std::int32_t>(catalog.sample_term(rng.uniform()));
        MatrixElement w_new = evaluate_with(catalog, config.state, config.ops, p, k, ket_right);
        double accept = insertion_acceptance(beta, total, length, n, config.weight, w_new);
        if (rng.uniform() < accept) {
            config.ops.set(p, k);
            config.weight = w_new;
            return true;
        }
        return false;
    }
    MatrixElement w_new =
        evaluate_with(catalog, config.state, config.ops, p, OperatorString::kIdentity, ket_right);
    double accept = removal_acceptance(beta, total, length, n, config.weight, w_new);
    if (rng.uniform() < accept) {
        config.ops.set(p, OperatorString::kIdentity);
        config.weight = w_new;
        return true;
    }
    return false;
}

}  // namespace

MatrixElement evaluate_matrix_element(const HamiltonianCatalog& catalog, const BasisState& state,
                                      const OperatorString& ops) {
    check_sizes(catalog, state, ops);
    StabilizerState ket = StabilizerState::from_basis_state(state);
    for (std::size_t q = ops.length(); q-- > 0;) {
        if (ops.at(q) != OperatorString::kIdentity) catalog.apply(static_cast<std::size_t>(ops.at(q)), ket);
        if (ket.is_zero()) return MatrixElement::zero();
    }
    return ket.overlap_with_basis(state);
}

double configuration_weight(const HamiltonianCatalog& catalog, const BasisState& state, const OperatorString& ops,
                            double beta) {
    MatrixElement m = evaluate_matrix_element(catalog, state, ops);
    if (m.is_zero()) return 0.0;
    const std::size_t length = ops.length();
    const std::size_t n = ops.count();
    double w = m.value();
    for (std::int32_t t : ops.slots()) {
        if (t != OperatorString::kIdentity) w *= beta * catalog.term(static_cast<std::size_t>(t)).coupling;
    }
    // (L-n)!/L! = 1 / (L (L-1) … (L-n+1))
    for (std::size_t i = 0; i < n; ++i) w /= static_cast<double>(length - i);
    return w;
}

double insertion_acceptance(double beta, double total_coupling, std::size_t length, std::size_t n,
                            const MatrixElement& w_old, const MatrixElement& w_new) {
    if (n >= length) throw std::invalid_argument("insertion into a full operator string");
    double a = beta * total_coupling / static_cast<double>(length - n) * ratio(w_new, w_old);
    return std::min(1.0, a);
}

double removal_acceptance(double beta, double total_coupling, std::size_t length, std::size_t n,
                          const MatrixElement& w_old, const MatrixElement& w_new) {
    if (n == 0 || n > length) throw std::invalid_argument("removal from an empty operator string");
    double a = static_cast<double>(length - n + 1) / (beta * total_coupling) * ratio(w_new, w_old);
    return std::min(1.0, a);
}

bool propose_state_update(Configuration& config, const HamiltonianCatalog& catalog, Rng& rng,
                          StateProposal proposal) {
    const std::size_t n = config.state.num_qubits();
    BasisState candidate = config.state;
    if (proposal == StateProposal::uniform) {
        auto words = candidate.down_words();
        for (std::size_t w = 0; w < words.size(); ++w) {
            std::uint64_t draw = rng.bits();
            std::size_t used = std::min<std::size_t>(kWordBits, n - w * kWordBits);
            words[w] = used == kWordBits ? draw : (draw & ((std::uint64_t{1} << used) - 1));
        }
    } else {
        auto site = static_cast<std::size_t>(rng.uniform() * static_cast<double>(n));
        candidate.flip(std::min(site, n - 1));
    }
    MatrixElement w_new = evaluate_matrix_element(catalog, candidate, config.ops);
    double accept = w_new.is_zero() ? 0.0 : std::min(1.0, ratio(w_new, config.weight));
    if (rng.uniform() < accept) {
        config.state = std::move(candidate);
        config.weight = w_new;
        return true;
    }
    return false;
}

bool propose_operator_update(Configuration& config, const HamiltonianCatalog& catalog, std::size_t p, double beta,
                             Rng& rng) {
    if (p >= config.ops.length()) {
        throw std::out_of_range("slot " + std::to_string(p) + " outside operator string of length " +
                                std::to_string(config.ops.length()));
    }
    check_sizes(catalog, config.state, config.ops);
    return operator_update(config, catalog, p, beta, rng, nullptr);
}

void mc_cycle(Configuration& config, const HamiltonianCatalog& catalog, double beta, Rng& rng,
              CycleCounters& counters, const CycleOptions& options) {
    ++counters.state_attempts;
    if (propose_state_update(config, catalog, rng, options.proposal)) ++counters.state_accepts;

    const std::size_t length = config.ops.length();
    if (length == 0) return;

    if (!options.prefix_cache) {
        for (std::size_t p = 0; p < length; ++p) {
            ++counters.op_attempts;
            if (operator_update(config, catalog, p, beta, rng, nullptr)) ++counters.op_accepts;
        }
        return;
    }

    // ket_right[p] = O_{p+1} … O_{L-1} |σ⟩. During the sweep only slots left
    // of the current position change, so every entry stays valid when used.
    thread_local std::vector<StabilizerState> ket_right;
    ket_right.clear();
    ket_right.reserve(length);
    ket_right.push_back(StabilizerState::from_basis_state(config.state));
    for (std::size_t q = length - 1; q > 0; --q) {
        ket_right.push_back(ket_right.back());
        if (!config.ops.is_identity(q)) catalog.apply(static_cast<std::size_t>(config.ops.at(q)), ket_right.back());
    }
    // ket_right was filled from the right end: index length-1-p holds slot p's entry.
    for (std::size_t p = 0; p < length; ++p) {
        ++counters.op_attempts;
        if (operator_update(config, catalog, p, beta, rng, &ket_right[length - 1 - p])) ++counters.op_accepts;
    }
}

std::vector<double> temperature_grid(double t_start, double t_end, double t_step) {
    if (!(t_end > 0.0)) throw std::invalid_argument("temperatures must be positive");
    if (!(t_start >= t_end)) throw std::invalid_argument("t_start must be >= t_end");
    if (!(t_step > 0.0)) throw std::invalid_argument("t_step must be positive");
    std::vector<double> grid;
    const double slack = 1e-9 * t_step;
    for (std::size_t k = 0;; ++k) {
        double t = t_start - static_cast<double>(k) * t_step;
        if (t < t_end - slack) break;
        grid.push_back(t);
    }
    return grid;
}

RunResult run_schedule(const HamiltonianCatalog& catalog, const ScheduleOptions& options) {
    if (options.length == 0) throw std::invalid_argument("expansion cutoff L must be >= 1");
    for (double t : options.temperatures) {
        if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("temperatures must be positive and finite");
    }

    RunResult result{options.seed, options.length, {}};
    Rng rng(options.seed);
    Configuration config = Configuration::initial(catalog.num_qubits(), options.length);
    std::vector<double> samples;
    samples.reserve(options.cycles_meas);

    for (double t : options.temperatures) {
        const double beta = 1.0 / t;
        CycleCounters therm;
        for (std::size_t c = 0; c < options.cycles_therm; ++c) mc_cycle(config, catalog, beta, rng, therm, options.cycle);

        CycleCounters meas;
        samples.clear();
        std::uint64_t sum_n = 0;
        std::size_t max_n = 0;
        for (std::size_t c = 0; c < options.cycles_meas; ++c) {
            mc_cycle(config, catalog, beta, rng, meas, options.cycle);
            std::size_t n = config.ops.count();
            sum_n += n;
            max_n = std::max(max_n, n);
            samples.push_back(static_cast<double>(n));
        }

        TemperatureRecord rec{};
        rec.temperature = t;
        rec.beta = beta;
        rec.mean_n = options.cycles_meas > 0 ? static_cast<double>(sum_n) / static_cast<double>(options.cycles_meas)
                                             : 0.0;
        rec.energy = -rec.mean_n / beta;
        std::size_t bins = std::min(options.bin_count, samples.size() / 2);
        rec.energy_stderr = bins >= 2 ? estimate_error(samples, bins) / beta : std::nan("");
        rec.state_accept_rate =
            meas.state_attempts ? static_cast<double>(meas.state_accepts) / static_cast<double>(meas.state_attempts)
                                : 0.0;
        rec.op_accept_rate =
            meas.op_attempts ? static_cast<double>(meas.op_accepts) / static_cast<double>(meas.op_attempts) : 0.0;
        rec.max_n = max_n;
        result.records.push_back(rec);
    }
    return result;
}

}  // namespace stabsse
