#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace stabsse {

inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t num_bits) {
    return (num_bits + kWordBits - 1) / kWordBits;
}

/// Parity of the GF(2) dot product of two equally sized bit-word ranges.
inline bool dot_parity(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < a.size(); ++w) {
        acc ^= a[w] & b[w];
    }
    return (__builtin_popcountll(acc) & 1) != 0;
}

/// A real signed Pauli operator  ±∏ₙ Xₙ^{x[n]} Zₙ^{z[n]}  in the per-site
/// normal order X-then-Z. Qubits are indexed from 0.
///
/// Only real operators are representable: a site with both bits set holds
/// the real matrix XZ (which equals -iY). The set of such operators is closed
/// under multiplication, so no imaginary phase ever needs tracking.
class PauliString {
   public:
    explicit PauliString(std::size_t num_qubits);

    static PauliString single_x(std::size_t num_qubits, std::size_t site);
    static PauliString single_z(std::size_t num_qubits, std::size_t site);
    /// Product of X (or Z) over the given sites.
    static PauliString x_product(std::size_t num_qubits, std::span<const std::size_t> sites);
    static PauliString z_product(std::size_t num_qubits, std::span<const std::size_t> sites);

    std::size_t num_qubits() const { return num_qubits_; }

    bool x(std::size_t site) const;
    bool z(std::size_t site) const;
    void set_x(std::size_t site, bool value);
    void set_z(std::size_t site, bool value);

    bool negative() const { return negative_; }
    int sign() const { return negative_ ? -1 : 1; }
    void set_negative(bool value) { negative_ = value; }

    std::span<const std::uint64_t> x_words() const { return xs_; }
    std::span<const std::uint64_t> z_words() const { return zs_; }
    std::span<std::uint64_t> x_words() { return xs_; }
    std::span<std::uint64_t> z_words() { return zs_; }

    bool is_identity() const;
    bool has_x() const;
    bool has_z() const;
    /// True when x·z is even, i.e. the operator is hermitian and squares to +1.
    bool squares_to_identity() const { return !dot_parity(xs_, zs_); }

    /// Human readable form, e.g. "+X0 Z0 X1" ; "+I" for the identity.
    std::string str() const;

    friend bool operator==(const PauliString&, const PauliString&) = default;

   private:
    std::size_t num_qubits_;
    std::vector<std::uint64_t> xs_;
    std::vector<std::uint64_t> zs_;
    bool negative_ = false;
};

/// Operator product a·b brought back into normal order. The sign picks up
/// (-1)^(a.z · b.x): one factor for every site where a Z of the left operand
/// has to move past an X of the right operand.
PauliString multiply(const PauliString& a, const PauliString& b);

/// True when the two operators anticommute (odd symplectic product).
bool anticommutes(const PauliString& a, const PauliString& b);

}  // namespace stabsse
