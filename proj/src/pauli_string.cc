#include "stabsse/pauli_string.h"

#include <stdexcept>

namespace stabsse {

namespace {

void check_site(std::size_t num_qubits, std::size_t site) {
    if (site >= num_qubits) {
        throw std::out_of_range("qubit index " + std::to_string(site) + " out of range for " +
                                std::to_string(num_qubits) + " qubits");
    }
}

bool get_bit(const std::vector<std::uint64_t>& words, std::size_t site) {
    return ((words[site / kWordBits] >> (site % kWordBits)) & 1) != 0;
}

void put_bit(std::vector<std::uint64_t>& words, std::size_t site, bool value) {
    std::uint64_t mask = std::uint64_t{1} << (site % kWordBits);
    if (value) {
        words[site / kWordBits] |= mask;
    } else {
        words[site / kWordBits] &= ~mask;
    }
}

}  // namespace

PauliString::PauliString(std::size_t num_qubits)
    : num_qubits_(num_qubits), xs_(words_for(num_qubits), 0), zs_(words_for(num_qubits), 0) {}

PauliString PauliString::single_x(std::size_t num_qubits, std::size_t site) {
    PauliString p(num_qubits);
    p.set_x(site, true);
    return p;
}

PauliString PauliString::single_z(std::size_t num_qubits, std::size_t site) {
    PauliString p(num_qubits);
    p.set_z(site, true);
    return p;
}

PauliString PauliString::x_product(std::size_t num_qubits, std::span<const std::size_t> sites) {
    PauliString p(num_qubits);
    for (std::size_t s : sites) {
        p.set_x(s, !p.x(s));
    }
    return p;
}

PauliString PauliString::z_product(std::size_t num_qubits, std::span<const std::size_t> sites) {
    PauliString p(num_qubits);
    for (std::size_t s : sites) {
        p.set_z(s, !p.z(s));
    }
    return p;
}

bool PauliString::x(std::size_t site) const {
    check_site(num_qubits_, site);
    return get_bit(xs_, site);
}

bool PauliString::z(std::size_t site) const {
    check_site(num_qubits_, site);
    return get_bit(zs_, site);
}

void PauliString::set_x(std::size_t site, bool value) {
    check_site(num_qubits_, site);
    put_bit(xs_, site, value);
}

void PauliString::set_z(std::size_t site, bool value) {
    check_site(num_qubits_, site);
    put_bit(zs_, site, value);
}

bool PauliString::has_x() const {
    for (auto w : xs_) {
        if (w != 0) return true;
    }
    return false;
}

bool PauliString::has_z() const {
    for (auto w : zs_) {
        if (w != 0) return true;
    }
    return false;
}

bool PauliString::is_identity() const { return !has_x() && !has_z(); }

std::string PauliString::str() const {
    std::string out = negative_ ? "-" : "+";
    bool first = true;
    for (std::size_t q = 0; q < num_qubits_; ++q) {
        for (auto [bit, name] : {std::pair{get_bit(xs_, q), 'X'}, std::pair{get_bit(zs_, q), 'Z'}}) {
            if (!bit) continue;
            if (!first) out += ' ';
            out += name;
            out += std::to_string(q);
            first = false;
        }
    }
    if (first) out += 'I';
    return out;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("multiply: qubit count mismatch");
    }
    PauliString out(a.num_qubits());
    auto ax = a.x_words(), az = a.z_words(), bx = b.x_words(), bz = b.z_words();
    auto ox = out.x_words(), oz = out.z_words();
    for (std::size_t w = 0; w < ox.size(); ++w) {
        ox[w] = ax[w] ^ bx[w];
        oz[w] = az[w] ^ bz[w];
    }
    out.set_negative(a.negative() ^ b.negative() ^ dot_parity(az, bx));
    return out;
}

bool anticommutes(const PauliString& a, const PauliString& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("anticommutes: qubit count mismatch");
    }
    return dot_parity(a.x_words(), b.z_words()) ^ dot_parity(a.z_words(), b.x_words());
}

}  // namespace stabsse
