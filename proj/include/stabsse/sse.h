#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "stabsse/basis_state.h"
#include "stabsse/hamiltonian.h"
#include "stabsse/matrix_element.h"
#include "stabsse/stabilizer_state.h"

namespace stabsse {

/// Seeded generator used by the Markov chain. Every proposal consumes a
/// fixed number of draws (see mc_cycle), so a seed fixes the whole run.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

   private:
    std::mt19937_64 engine_;
};

/// Length-L sequence of slots, each the identity or a catalog term index.
/// Slot 0 is the leftmost operator; slot L-1 acts first on the ket.
class OperatorString {
   public:
    static constexpr std::int32_t kIdentity = -1;

    explicit OperatorString(std::size_t length) : slots_(length, kIdentity) {}

    std::size_t length() const { return slots_.size(); }
    /// Number of non-identity slots.
    std::size_t count() const { return count_; }
    std::int32_t at(std::size_t p) const { return slots_.at(p); }
    bool is_identity(std::size_t p) const { return slots_.at(p) == kIdentity; }
    void set(std::size_t p, std::int32_t term);

    const std::vector<std::int32_t>& slots() const { return slots_; }

    friend bool operator==(const OperatorString&, const OperatorString&) = default;

   private:
    std::vector<std::int32_t> slots_;
    std::size_t count_ = 0;
};

/// One element of the Markov chain plus its cached weight ⟨σ|O_0 … O_{L-1}|σ⟩.
struct Configuration {
    BasisState state;
    OperatorString ops;
    MatrixElement weight;

    /// σ = (+1, …, +1) with an all-identity string (weight 1).
    static Configuration initial(std::size_t num_qubits, std::size_t length);
};

/// ⟨σ| O_0 O_1 … O_{L-1} |σ⟩ for the terms named by `ops`, evaluated through
/// stabilizer tracking. Slot L-1 is applied first.
MatrixElement evaluate_matrix_element(const HamiltonianCatalog& catalog, const BasisState& state,
                                      const OperatorString& ops);

/// Full Monte Carlo weight  β^n (L-n)!/L! ∏ c_k · ⟨σ|…|σ⟩  of a configuration.
double configuration_weight(const HamiltonianCatalog& catalog, const BasisState& state, const OperatorString& ops,
                            double beta);

enum class StateProposal {
    /// σ' uniform over all 2^N basis states.
    uniform,
    /// Flip one uniformly chosen spin.
    single_flip,
};

/// Metropolis acceptance for identity -> term at a slot, with n the
/// non-identity count before the move.
double insertion_acceptance(double beta, double total_coupling, std::size_t length, std::size_t n,
                            const MatrixElement& w_old, const MatrixElement& w_new);
/// Metropolis acceptance for term -> identity, n counted before the move.
double removal_acceptance(double beta, double total_coupling, std::size_t length, std::size_t n,
                          const MatrixElement& w_old, const MatrixElement& w_new);

/// Proposes a new basis state; returns true on acceptance.
bool propose_state_update(Configuration& config, const HamiltonianCatalog& catalog, Rng& rng,
                          StateProposal proposal = StateProposal::uniform);

/// Proposes inserting a term at an identity slot p (term k drawn with
/// probability c_k/C) or removing the term at slot p. Returns true on
/// acceptance. Throws std::out_of_range if p >= L.
bool propose_operator_update(Configuration& config, const HamiltonianCatalog& catalog, std::size_t p, double beta,
                             Rng& rng);

struct CycleCounters {
    std::uint64_t state_attempts = 0;
    std::uint64_t state_accepts = 0;
    std::uint64_t op_attempts = 0;
    std::uint64_t op_accepts = 0;
};

struct CycleOptions {
    StateProposal proposal = StateProposal::uniform;
    /// Reuse the ket states of the untouched right part of the string
    /// during a sweep. Produces bit-identical chains to the plain path.
    bool prefix_cache = true;
};

/// One state update, then operator updates at p = 0, 1, …, L-1.
///
/// Random stream: a state update draws ceil(N/64) words for σ' (uniform
/// mode) or one uniform for the site (single-flip mode), then one uniform for
/// the acceptance test. An operator update at an identity slot draws one
/// uniform for the term and one for acceptance; at an occupied slot it
/// draws one for acceptance.
void mc_cycle(Configuration& config, const HamiltonianCatalog& catalog, double beta, Rng& rng,
              CycleCounters& counters, const CycleOptions& options = {});

struct TemperatureRecord {
    double temperature;
    double beta;
    double mean_n;
    /// Always exactly -mean_n / beta.
    double energy;
    /// Binned standard error of the energy; NaN with fewer than 4 samples.
    double energy_stderr;
    double state_accept_rate;
    double op_accept_rate;
    /// Largest n seen while measuring; n reaching L means L is too small.
    std::size_t max_n;
};

struct RunResult {
    std::uint64_t seed;
    std::size_t length;
    std::vector<TemperatureRecord> records;
};

struct ScheduleOptions {
    std::size_t length = 40;
    /// Visited in the given order; the chain carries over between them.
    std::vector<double> temperatures;
    std::size_t cycles_therm = 50000;
    std::size_t cycles_meas = 50000;
    std::uint64_t seed = 1;
    std::size_t bin_count = 50;
    CycleOptions cycle;
};

/// Anneals one chain through the temperature list starting from the
/// all-up, all-identity configuration. Throws std::invalid_argument for
/// T <= 0 or L == 0.
RunResult run_schedule(const HamiltonianCatalog& catalog, const ScheduleOptions& options);

/// t_start, t_start - step, … down to t_end (inclusive within 1e-9·step).
std::vector<double> temperature_grid(double t_start, double t_end, double t_step);

}  // namespace stabsse
