#include "stabsse/basis_state.h"

#include <stdexcept>
#include <string>

#include "stabsse/pauli_string.h"

namespace stabsse {

BasisState::BasisState(std::size_t num_qubits) : num_qubits_(num_qubits), down_(words_for(num_qubits), 0) {
    if (num_qubits == 0) {
        throw std::invalid_argument("basis state needs at least one qubit");
    }
}

BasisState BasisState::from_spins(std::span<const int> spins) {
    BasisState s(spins.size());
    for (std::size_t i = 0; i < spins.size(); ++i) {
        if (spins[i] == -1) {
            s.flip(i);
        } else if (spins[i] != 1) {
            throw std::invalid_argument("spin " + std::to_string(i) + " is " + std::to_string(spins[i]) +
                                        ", expected +1 or -1");
        }
    }
    return s;
}

BasisState BasisState::from_dense_index(std::size_t num_qubits, std::uint64_t index) {
    if (num_qubits > 63) {
        throw std::invalid_argument("dense index addressing is limited to 63 qubits");
    }
    if (index >> num_qubits) {
        throw std::out_of_range("dense index out of range");
    }
    BasisState s(num_qubits);
    for (std::size_t q = 0; q < num_qubits; ++q) {
        if ((index >> (num_qubits - 1 - q)) & 1) s.flip(q);
    }
    return s;
}

bool BasisState::is_down(std::size_t site) const {
    if (site >= num_qubits_) throw std::out_of_range("site out of range");
    return ((down_[site / kWordBits] >> (site % kWordBits)) & 1) != 0;
}

int BasisState::spin(std::size_t site) const { return is_down(site) ? -1 : 1; }

void BasisState::flip(std::size_t site) {
    if (site >= num_qubits_) throw std::out_of_range("site out of range");
    down_[site / kWordBits] ^= std::uint64_t{1} << (site % kWordBits);
}

std::vector<int> BasisState::spins() const {
    std::vector<int> out(num_qubits_);
    for (std::size_t q = 0; q < num_qubits_; ++q) out[q] = spin(q);
    return out;
}

std::uint64_t BasisState::dense_index() const {
    if (num_qubits_ > 63) {
        throw std::invalid_argument("dense index addressing is limited to 63 qubits");
    }
    std::uint64_t index = 0;
    for (std::size_t q = 0; q < num_qubits_; ++q) {
        index = (index << 1) | (is_down(q) ? 1 : 0);
    }
    return index;
}

}  // namespace stabsse
