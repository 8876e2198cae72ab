#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace stabsse {

/// A computational (Z) basis state |σ₀⟩⊗…⊗|σ_{N-1}⟩ with σᵢ ∈ {+1, -1}.
/// Stored as bit words where a set bit marks σᵢ = -1 (the |1⟩ state).
class BasisState {
   public:
    /// All spins up, σ = (+1, …, +1).
    explicit BasisState(std::size_t num_qubits);

    /// Throws std::invalid_argument unless every entry is +1 or -1.
    static BasisState from_spins(std::span<const int> spins);

    /// Dense index with qubit 0 as the most significant bit (Kronecker order).
    static BasisState from_dense_index(std::size_t num_qubits, std::uint64_t index);

    std::size_t num_qubits() const { return num_qubits_; }
    int spin(std::size_t site) const;
    bool is_down(std::size_t site) const;
    void flip(std::size_t site);

    std::vector<int> spins() const;
    std::uint64_t dense_index() const;

    /// Bit words, set bit = spin down.
    std::span<const std::uint64_t> down_words() const { return down_; }
    std::span<std::uint64_t> down_words() { return down_; }

    friend bool operator==(const BasisState&, const BasisState&) = default;

   private:
    std::size_t num_qubits_;
    std::vector<std::uint64_t> down_;
};

}  // namespace stabsse
