#include "stabsse/stabilizer_state.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "stabsse/errors.h"

namespace stabsse {

namespace {

inline bool parity(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words; ++w) acc ^= a[w] & b[w];
    return (__builtin_popcountll(acc) & 1) != 0;
}

inline bool test_bit(const std::uint64_t* row, std::size_t bit) {
    return ((row[bit / kWordBits] >> (bit % kWordBits)) & 1) != 0;
}

/// Working copy of a tableau for elimination. Row operations are
/// sign-tracking left multiplications, so the rows always stay elements of
/// the original stabilizer group.
struct Scratch {
    std::size_t rows = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> xs;
    std::vector<std::uint64_t> zs;
    std::vector<std::uint8_t> neg;

    void load(std::size_t n, std::size_t w, const std::vector<std::uint64_t>& x,
              const std::vector<std::uint64_t>& z, const std::vector<std::uint8_t>& s) {
        rows = n;
        words = w;
        xs.assign(x.begin(), x.end());
        zs.assign(z.begin(), z.end());
        neg.assign(s.begin(), s.end());
    }

    std::uint64_t* x(std::size_t m) { return &xs[m * words]; }
    std::uint64_t* z(std::size_t m) { return &zs[m * words]; }

    /// Column c < N addresses the x block, N <= c < 2N the z block.
    bool bit(std::size_t m, std::size_t col, std::size_t n) {
        return col < n ? test_bit(x(m), col) : test_bit(z(m), col - n);
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap_ranges(x(a), x(a) + words, x(b));
        std::swap_ranges(z(a), z(a) + words, z(b));
        std::swap(neg[a], neg[b]);
    }

    /// row dst <- row src · row dst
    void left_multiply(std::size_t src, std::size_t dst) {
        neg[dst] ^= neg[src] ^ static_cast<std::uint8_t>(parity(z(src), x(dst), words));
        for (std::size_t w = 0; w < words; ++w) {
            x(dst)[w] ^= x(src)[w];
            z(dst)[w] ^= z(src)[w];
        }
    }
};

Scratch& scratch() {
    thread_local Scratch s;
    return s;
}

constexpr std::size_t kDenseQubitLimit = 12;

}  // namespace

StabilizerState::StabilizerState(std::size_t num_qubits)
    : num_qubits_(num_qubits),
      words_(words_for(num_qubits)),
      xs_(num_qubits * words_for(num_qubits), 0),
      zs_(num_qubits * words_for(num_qubits), 0),
      negative_(num_qubits, 0) {}

StabilizerState StabilizerState::from_basis_state(const BasisState& basis) {
    std::size_t n = basis.num_qubits();
    StabilizerState s(n);
    for (std::size_t m = 0; m < n; ++m) {
        s.row_z(m)[m / kWordBits] = std::uint64_t{1} << (m % kWordBits);
        s.negative_[m] = basis.is_down(m) ? 1 : 0;
    }
    return s;
}

StabilizerState StabilizerState::from_generators(std::span<const PauliString> generators, int halving_count) {
    if (generators.empty()) throw std::invalid_argument("stabilizer state needs at least one generator");
    if (halving_count < 0) throw std::invalid_argument("halving count must be non-negative");
    std::size_t n = generators.size();
    StabilizerState s(n);
    for (std::size_t m = 0; m < n; ++m) {
        const PauliString& g = generators[m];
        if (g.num_qubits() != n) {
            throw std::invalid_argument("generator " + std::to_string(m) + " acts on the wrong number of qubits");
        }
        std::copy(g.x_words().begin(), g.x_words().end(), s.row_x(m));
        std::copy(g.z_words().begin(), g.z_words().end(), s.row_z(m));
        s.negative_[m] = g.negative() ? 1 : 0;
    }
    s.halving_count_ = halving_count;
    if (!s.tableau_is_valid()) {
        throw std::invalid_argument("generators must commute, be independent and square to +1");
    }
    return s;
}

PauliString StabilizerState::generator(std::size_t m) const {
    if (m >= num_qubits_) throw std::out_of_range("generator index out of range");
    PauliString g(num_qubits_);
    std::copy(row_x(m), row_x(m) + words_, g.x_words().begin());
    std::copy(row_z(m), row_z(m) + words_, g.z_words().begin());
    g.set_negative(negative_[m] != 0);
    return g;
}

std::vector<PauliString> StabilizerState::generators() const {
    std::vector<PauliString> out;
    out.reserve(num_qubits_);
    for (std::size_t m = 0; m < num_qubits_; ++m) out.push_back(generator(m));
    return out;
}

void StabilizerState::apply_cx(std::size_t control, std::size_t target) {
    if (control >= num_qubits_ || target >= num_qubits_) {
        throw std::invalid_argument("apply_cx: qubit index out of range");
    }
    if (control == target) throw std::invalid_argument("apply_cx: control and target coincide");
    if (zero_) return;
    const std::size_t cw = control / kWordBits, cb = control % kWordBits;
    const std::size_t tw = target / kWordBits, tb = target % kWordBits;
    for (std::size_t m = 0; m < num_qubits_; ++m) {
        std::uint64_t* x = row_x(m);
        std::uint64_t* z = row_z(m);
        // X_c -> X_c X_t ; Z_t -> Z_c Z_t
        x[tw] ^= ((x[cw] >> cb) & 1) << tb;
        z[cw] ^= ((z[tw] >> tb) & 1) << cb;
    }
}

void StabilizerState::left_multiply_row(std::size_t src, std::size_t dst) {
    negative_[dst] ^= negative_[src] ^ static_cast<std::uint8_t>(parity(row_z(src), row_x(dst), words_));
    for (std::size_t w = 0; w < words_; ++w) {
        row_x(dst)[w] ^= row_x(src)[w];
        row_z(dst)[w] ^= row_z(src)[w];
    }
}

void StabilizerState::apply_projector(const PauliString& g) {
    if (g.num_qubits() != num_qubits_) throw std::invalid_argument("apply_projector: qubit count mismatch");
    if (g.negative()) throw std::invalid_argument("apply_projector: projector operator must have sign +1");
    if (!g.squares_to_identity()) throw std::invalid_argument("apply_projector: operator must square to +1");
    if (g.is_identity()) return;
    if (zero_) return;

    const std::uint64_t* gx = g.x_words().data();
    const std::uint64_t* gz = g.z_words().data();
    std::size_t first = num_qubits_;
    for (std::size_t m = 0; m < num_qubits_; ++m) {
        bool anti = parity(gz, row_x(m), words_) ^ parity(gx, row_z(m), words_);
        if (!anti) continue;
        if (first == num_qubits_) {
            first = m;
        } else {
            left_multiply_row(first, m);
        }
    }

    if (first == num_qubits_) {
        // g commutes with the whole group, so ±g is a group element.
        if (group_contains_negation(g)) zero_ = true;
        return;
    }
    std::copy(gx, gx + words_, row_x(first));
    std::copy(gz, gz + words_, row_z(first));
    negative_[first] = 0;
    ++halving_count_;
}

bool StabilizerState::group_contains_negation(const PauliString& g) const {
    Scratch& s = scratch();
    s.load(num_qubits_, words_, xs_, zs_, negative_);
    PauliString r = g;
    std::uint64_t* rx = r.x_words().data();
    std::uint64_t* rz = r.z_words().data();
    const std::size_t n = num_qubits_;

    std::size_t rank = 0;
    for (std::size_t col = 0; col < 2 * n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && !s.bit(pivot, col, n)) ++pivot;
        bool r_has = col < n ? test_bit(rx, col) : test_bit(rz, col - n);
        if (pivot == n) {
            if (r_has) throw std::logic_error("operator commutes with the stabilizer group but is not in it");
            continue;
        }
        s.swap_rows(rank, pivot);
        for (std::size_t j = rank + 1; j < n; ++j) {
            if (s.bit(j, col, n)) s.left_multiply(rank, j);
        }
        if (r_has) {
            r.set_negative(r.negative() ^ (s.neg[rank] != 0) ^ parity(s.z(rank), rx, words_));
            for (std::size_t w = 0; w < words_; ++w) {
                rx[w] ^= s.x(rank)[w];
                rz[w] ^= s.z(rank)[w];
            }
        }
        ++rank;
    }
    // (pivot product) · g = ±1, hence g = ±(group element).
    return r.negative();
}

MatrixElement StabilizerState::overlap_with_basis(const BasisState& basis) const {
    if (basis.num_qubits() != num_qubits_) throw std::invalid_argument("overlap_with_basis: qubit count mismatch");
    if (zero_) return MatrixElement::zero();

    Scratch& s = scratch();
    s.load(num_qubits_, words_, xs_, zs_, negative_);
    const std::size_t n = num_qubits_;

    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && !test_bit(s.x(pivot), col)) ++pivot;
        if (pivot == n) continue;
        s.swap_rows(rank, pivot);
        for (std::size_t j = rank + 1; j < n; ++j) {
            if (test_bit(s.x(j), col)) s.left_multiply(rank, j);
        }
        ++rank;
    }
    // Rows rank..n-1 are pure Z; each must agree in sign with the basis state.
    const std::uint64_t* down = basis.down_words().data();
    for (std::size_t m = rank; m < n; ++m) {
        bool eigen_negative = parity(s.z(m), down, words_);
        if (eigen_negative != (s.neg[m] != 0)) return MatrixElement::zero();
    }
    return MatrixElement::power_of_sqrt_half(halving_count_ + static_cast<int>(rank));
}

std::vector<double> StabilizerState::to_dense() const {
    if (num_qubits_ > kDenseQubitLimit) {
        throw CapabilityError("to_dense supports at most " + std::to_string(kDenseQubitLimit) + " qubits");
    }
    const std::size_t n = num_qubits_;
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::vector<double> amp(dim, 0.0);
    if (zero_) return amp;

    // Masks in dense index coordinates (qubit q -> bit n-1-q).
    auto dense_mask = [n](const std::uint64_t* row) {
        std::uint64_t mask = 0;
        for (std::size_t q = 0; q < n; ++q) {
            if (test_bit(row, q)) mask |= std::uint64_t{1} << (n - 1 - q);
        }
        return mask;
    };

    std::uint64_t seed = 0;
    while (overlap_with_basis(BasisState::from_dense_index(n, seed)).is_zero()) ++seed;
    amp[seed] = 1.0;

    std::vector<double> tmp(dim);
    for (std::size_t m = 0; m < n; ++m) {
        std::uint64_t px = dense_mask(row_x(m));
        std::uint64_t qz = dense_mask(row_z(m));
        double sign = negative_[m] ? -1.0 : 1.0;
        std::fill(tmp.begin(), tmp.end(), 0.0);
        for (std::uint64_t idx = 0; idx < dim; ++idx) {
            if (amp[idx] == 0.0) continue;
            double phase = (__builtin_popcountll(idx & qz) & 1) ? -sign : sign;
            tmp[idx ^ px] += phase * amp[idx];
        }
        for (std::uint64_t idx = 0; idx < dim; ++idx) amp[idx] = 0.5 * (amp[idx] + tmp[idx]);
    }

    double norm = 0.0;
    for (double a : amp) norm += a * a;
    norm = std::sqrt(norm);
    double first = 0.0;
    for (double a : amp) {
        if (std::abs(a) > 1e-300) {
            first = a;
            break;
        }
    }
    double scale = (first < 0 ? -1.0 : 1.0) / norm * MatrixElement::power_of_sqrt_half(halving_count_).value();
    for (double& a : amp) a *= scale;
    return amp;
}

bool StabilizerState::tableau_is_valid() const {
    const std::size_t n = num_qubits_;
    for (std::size_t i = 0; i < n; ++i) {
        if (parity(row_x(i), row_z(i), words_)) return false;
        for (std::size_t j = i + 1; j < n; ++j) {
            bool anti = parity(row_x(i), row_z(j), words_) ^ parity(row_z(i), row_x(j), words_);
            if (anti) return false;
        }
    }
    Scratch& s = scratch();
    s.load(num_qubits_, words_, xs_, zs_, negative_);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 2 * n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && !s.bit(pivot, col, n)) ++pivot;
        if (pivot == n) continue;
        s.swap_rows(rank, pivot);
        for (std::size_t j = rank + 1; j < n; ++j) {
            if (s.bit(j, col, n)) s.left_multiply(rank, j);
        }
        ++rank;
    }
    return rank == n;
}

}  // namespace stabsse
