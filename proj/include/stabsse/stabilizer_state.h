#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stabsse/basis_state.h"
#include "stabsse/matrix_element.h"
#include "stabsse/pauli_string.h"

namespace stabsse {

/// Unnormalized stabilizer state 2^(-F/2)·|ψ⟩, where |ψ⟩ is the unit-norm
/// joint +1 eigenstate of N commuting, independent generators and F is the
/// halving count. A projector that annihilates the state sets the zero flag;
/// all further operations on a zero state are no-ops.
///
/// The generator tableau is stored row-major as packed bit words: row m holds
/// the x and z masks of generator m plus one sign bit.
class StabilizerState {
   public:
    /// Stabilized by σ₀Z₀, …, σ_{N-1}Z_{N-1}; F = 0.
    static StabilizerState from_basis_state(const BasisState& basis);

    /// Builds a state from explicit generators. Throws std::invalid_argument
    /// if the generators do not commute, are dependent, or do not square to +1.
    static StabilizerState from_generators(std::span<const PauliString> generators, int halving_count = 0);

    std::size_t num_qubits() const { return num_qubits_; }
    int halving_count() const { return halving_count_; }
    bool is_zero() const { return zero_; }

    PauliString generator(std::size_t m) const;
    std::vector<PauliString> generators() const;

    /// Conjugates every generator by CX(control → target).
    void apply_cx(std::size_t control, std::size_t target);

    /// Applies (1 + g)/2. g must carry a + sign and square to +1.
    void apply_projector(const PauliString& g);

    /// ⟨basis| state⟩, exact.
    MatrixElement overlap_with_basis(const BasisState& basis) const;

    /// Amplitudes in the Z basis (qubit 0 = most significant index bit), with
    /// the global phase fixed so the first nonzero amplitude is positive.
    /// Limited to 12 qubits; throws CapabilityError beyond that.
    std::vector<double> to_dense() const;

    /// Checks pairwise commutation, GF(2) independence and x·z parity.
    bool tableau_is_valid() const;

   private:
    StabilizerState(std::size_t num_qubits);

    std::uint64_t* row_x(std::size_t m) { return &xs_[m * words_]; }
    std::uint64_t* row_z(std::size_t m) { return &zs_[m * words_]; }
    const std::uint64_t* row_x(std::size_t m) const { return &xs_[m * words_]; }
    const std::uint64_t* row_z(std::size_t m) const { return &zs_[m * words_]; }

    /// Row `dst` <- row `src` · row `dst`.
    void left_multiply_row(std::size_t src, std::size_t dst);

    /// For g commuting with every generator: true if -g lies in the group.
    bool group_contains_negation(const PauliString& g) const;

    std::size_t num_qubits_;
    std::size_t words_;
    std::vector<std::uint64_t> xs_;
    std::vector<std::uint64_t> zs_;
    std::vector<std::uint8_t> negative_;
    int halving_count_ = 0;
    bool zero_ = false;
};

}  // namespace stabsse
