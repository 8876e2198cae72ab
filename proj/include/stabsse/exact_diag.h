#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stabsse/hamiltonian.h"

namespace stabsse {

/// Dense real square matrix, row-major.
class DenseMatrix {
   public:
    explicit DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

    std::size_t dim() const { return dim_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
    std::span<double> row(std::size_t i) { return {&data_[i * dim_], dim_}; }
    std::span<const double> row(std::size_t i) const { return {&data_[i * dim_], dim_}; }

    bool is_symmetric(double tol = 0.0) const;
    double frobenius_norm() const;
    double trace() const;

   private:
    std::size_t dim_;
    std::vector<double> data_;
};

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

inline constexpr std::size_t kDenseHamiltonianQubitLimit = 14;
inline constexpr std::size_t kTracePowerQubitLimit = 10;

/// Z-basis matrix of a single catalog term T_k (qubit 0 = most significant
/// index bit). Throws CapabilityError above kDenseHamiltonianQubitLimit.
DenseMatrix dense_term(const HamiltonianCatalog& catalog, std::size_t k);

/// H = -Σ_k c_k T_k.
DenseMatrix build_dense(const HamiltonianCatalog& catalog);

struct Spectrum {
    /// Ascending.
    std::vector<double> eigenvalues;
};

struct Eigensystem {
    std::vector<double> eigenvalues;
    /// Column j is the eigenvector of eigenvalues[j].
    DenseMatrix eigenvectors;
};

/// Full spectrum of a symmetric matrix (Eigen's self-adjoint solver).
/// Throws std::invalid_argument for non-symmetric input.
Spectrum symmetric_eigenvalues(const DenseMatrix& h);
Eigensystem symmetric_eigensystem(const DenseMatrix& h);

/// Thermal ⟨H⟩ = Σ E e^{-βE} / Σ e^{-βE}, shifted by the ground energy.
double mean_energy_full(const Spectrum& spectrum, double beta);

/// -∂_β log Z_L with Z_L = Σ_i S_L(-βE_i), S_k(x) = Σ_{m≤k} x^m/m!:
/// returns Σ E_i S_{L-1}(-βE_i) / Σ S_L(-βE_i). Throws TruncationError if
/// Z_L is not positive.
double mean_energy_truncated(const Spectrum& spectrum, double beta, std::size_t length);

/// Tr[H^n] for n = 0 … l_max by repeated dense multiplication.
/// Throws CapabilityError above kTracePowerQubitLimit qubits.
std::vector<double> trace_powers(const DenseMatrix& h, std::size_t l_max);

/// The same truncated mean energy, evaluated from the moments Tr[H^n]:
/// Σ_{n=1}^{L} (-β)^{n-1}/(n-1)! Tr[H^n] / Σ_{n=0}^{L} (-β)^n/n! Tr[H^n].
/// Needs traces for n = 0 … L.
double mean_energy_from_moments(std::span<const double> traces, double beta, std::size_t length);

}  // namespace stabsse
