#include "stabsse/hamiltonian.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "stabsse/errors.h"

namespace stabsse {

namespace {

void validate_term(std::size_t n, const OperatorTerm& t) {
    if (!(t.coupling >= 0.0) || !std::isfinite(t.coupling)) {
        throw ModelError("term '" + t.label + "' has negative or non-finite coupling");
    }
    if (const auto* cx = std::get_if<CxGate>(&t.op)) {
        if (cx->control >= n || cx->target >= n) {
            throw std::invalid_argument("term '" + t.label + "' addresses a qubit out of range");
        }
        if (cx->control == cx->target) {
            throw std::invalid_argument("term '" + t.label + "' has equal control and target");
        }
        return;
    }
    const PauliString& g = std::get<PauliProjector>(t.op).generator;
    if (g.num_qubits() != n) {
        throw std::invalid_argument("term '" + t.label + "' acts on the wrong number of qubits");
    }
    if (g.negative()) throw ModelError("projector '" + t.label + "' must have sign +1");
    if (g.is_identity()) throw std::invalid_argument("projector '" + t.label + "' is the identity");
    if (g.has_x() && g.has_z()) {
        throw ModelError("projector '" + t.label + "' mixes X and Z; only pure X or pure Z strings are allowed");
    }
}

void check_couplings(double h, double j) {
    if (!(h >= 0.0)) throw ModelError("field h must be >= 0 to avoid a sign problem");
    if (!(j > 0.0)) throw ModelError("coupling J must be > 0");
}

}  // namespace

HamiltonianCatalog::HamiltonianCatalog(std::size_t num_qubits, std::vector<OperatorTerm> terms)
    : num_qubits_(num_qubits), terms_(std::move(terms)) {
    if (num_qubits_ == 0) throw std::invalid_argument("Hamiltonian needs at least one qubit");
    if (terms_.empty()) throw std::invalid_argument("Hamiltonian needs at least one term");
    cumulative_.reserve(terms_.size());
    double acc = 0.0;
    for (const auto& t : terms_) {
        validate_term(num_qubits_, t);
        acc += t.coupling;
        cumulative_.push_back(acc);
    }
    total_coupling_ = acc;
    if (!(total_coupling_ > 0.0)) throw ModelError("total coupling must be positive");
}

std::size_t HamiltonianCatalog::sample_term(double u) const {
    double target = u * total_coupling_;
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
    std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative_.begin()), terms_.size() - 1);
    // Rounding can only land on the last bucket; step back over zero-weight tail terms.
    while (terms_[k].coupling == 0.0 && k > 0) --k;
    return k;
}

void HamiltonianCatalog::apply(std::size_t k, StabilizerState& state) const {
    const OperatorTerm& t = terms_[k];
    if (const auto* cx = std::get_if<CxGate>(&t.op)) {
        state.apply_cx(cx->control, cx->target);
    } else {
        state.apply_projector(std::get<PauliProjector>(t.op).generator);
    }
}

HamiltonianCatalog build_cnot_chain(std::size_t num_qubits, double h, double j) {
    if (num_qubits < 2) throw std::invalid_argument("CNOT chain needs at least 2 qubits");
    check_couplings(h, j);
    std::vector<OperatorTerm> terms;
    for (std::size_t i = 0; i < num_qubits; ++i) {
        std::size_t next = (i + 1) % num_qubits;
        terms.push_back({CxGate{i, next}, j, "CX(" + std::to_string(i) + "," + std::to_string(next) + ")"});
        terms.push_back({PauliProjector{PauliString::single_x(num_qubits, i)}, h, "Pi(" + std::to_string(i) + ")"});
    }
    return HamiltonianCatalog(num_qubits, std::move(terms));
}

HamiltonianCatalog build_tfi_chain(std::size_t num_qubits, double h, double j) {
    if (num_qubits < 2) throw std::invalid_argument("TFI chain needs at least 2 qubits");
    check_couplings(h, j);
    std::vector<OperatorTerm> terms;
    for (std::size_t i = 0; i < num_qubits; ++i) {
        std::size_t next = (i + 1) % num_qubits;
        std::array<std::size_t, 2> sites{i, next};
        terms.push_back({PauliProjector{PauliString::z_product(num_qubits, sites)}, j,
                         "PiZZ(" + std::to_string(i) + "," + std::to_string(next) + ")"});
    }
    for (std::size_t i = 0; i < num_qubits; ++i) {
        terms.push_back({PauliProjector{PauliString::single_x(num_qubits, i)}, h, "Pi(" + std::to_string(i) + ")"});
    }
    return HamiltonianCatalog(num_qubits, std::move(terms));
}

HamiltonianCatalog build_z2_plaquette_model(std::size_t lx, std::size_t ly, double j_star, double j_plaq) {
    if (lx < 2 || ly < 2) throw std::invalid_argument("Z2 lattice needs lx, ly >= 2");
    if (!(j_star > 0.0) || !(j_plaq > 0.0)) throw ModelError("star and plaquette couplings must be > 0");
    const std::size_t n = 2 * lx * ly;
    auto horizontal = [lx, ly](std::size_t x, std::size_t y) { return (y % ly) * lx + (x % lx); };
    auto vertical = [lx, ly](std::size_t x, std::size_t y) { return lx * ly + (y % ly) * lx + (x % lx); };

    std::vector<OperatorTerm> terms;
    for (std::size_t y = 0; y < ly; ++y) {
        for (std::size_t x = 0; x < lx; ++x) {
            std::array<std::size_t, 4> edges{horizontal(x, y), horizontal(x + lx - 1, y), vertical(x, y),
                                             vertical(x, y + ly - 1)};
            terms.push_back({PauliProjector{PauliString::x_product(n, edges)}, j_star,
                             "star(" + std::to_string(x) + "," + std::to_string(y) + ")"});
        }
    }
    for (std::size_t y = 0; y < ly; ++y) {
        for (std::size_t x = 0; x < lx; ++x) {
            std::array<std::size_t, 4> edges{horizontal(x, y), horizontal(x, y + 1), vertical(x, y),
                                             vertical(x + 1, y)};
            terms.push_back({PauliProjector{PauliString::z_product(n, edges)}, j_plaq,
                             "plaq(" + std::to_string(x) + "," + std::to_string(y) + ")"});
        }
    }
    return HamiltonianCatalog(n, std::move(terms));
}

}  // namespace stabsse
