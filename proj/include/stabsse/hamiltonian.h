#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "stabsse/pauli_string.h"
#include "stabsse/stabilizer_state.h"

namespace stabsse {

/// Controlled-not with 0-based qubit indices.
struct CxGate {
    std::size_t control;
    std::size_t target;
};

/// The projector (1 + g)/2.
struct PauliProjector {
    PauliString generator;
};

struct OperatorTerm {
    std::variant<CxGate, PauliProjector> op;
    double coupling;
    std::string label;
};

/// H = -Σ_k c_k T_k. Immutable once built; terms are addressed by index.
///
/// Every term is entrywise non-negative in the Z basis: projectors must be
/// purely X-type or purely Z-type with sign +1, couplings must be >= 0, and
/// the total coupling must be positive. Violations throw ModelError.
class HamiltonianCatalog {
   public:
    HamiltonianCatalog(std::size_t num_qubits, std::vector<OperatorTerm> terms);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t size() const { return terms_.size(); }
    const OperatorTerm& term(std::size_t k) const { return terms_.at(k); }
    const std::vector<OperatorTerm>& terms() const { return terms_; }

    /// C = Σ_k c_k.
    double total_coupling() const { return total_coupling_; }

    /// Term index k with probability c_k / C, for u uniform in [0, 1).
    /// Terms with zero coupling are never returned.
    std::size_t sample_term(double u) const;

    /// Applies term k to a stabilizer state.
    void apply(std::size_t k, StabilizerState& state) const;

   private:
    std::size_t num_qubits_;
    std::vector<OperatorTerm> terms_;
    std::vector<double> cumulative_;
    double total_coupling_ = 0.0;
};

/// -J Σ CX(i, i+1) - h Σ (1 + X_i)/2 on a ring. Term order: CX(i, i+1) then
/// Π_i for each i.
HamiltonianCatalog build_cnot_chain(std::size_t num_qubits, double h, double j);

/// -J Σ (1 + Z_i Z_{i+1})/2 - h Σ (1 + X_i)/2 on a ring. Bond terms first,
/// then site terms.
HamiltonianCatalog build_tfi_chain(std::size_t num_qubits, double h, double j);

/// Star and plaquette projectors (1 + XXXX)/2 and (1 + ZZZZ)/2 on the edges
/// of a periodic lx × ly square lattice. Edge numbering: horizontal edges
/// first, then vertical, each row-major, so edge (x, y) of the horizontal set
/// is y*lx + x and of the vertical set lx*ly + y*lx + x. A horizontal edge
/// (x, y) joins vertices (x, y) and (x+1, y); a vertical one joins (x, y)
/// and (x, y+1). Stars come first (vertex row-major), then plaquettes
/// (indexed by their lower-left vertex).
HamiltonianCatalog build_z2_plaquette_model(std::size_t lx, std::size_t ly, double j_star, double j_plaq);

}  // namespace stabsse
