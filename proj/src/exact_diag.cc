#include "stabsse/exact_diag.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "stabsse/errors.h"

namespace stabsse {

bool DenseMatrix::is_symmetric(double tol) const {
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i + 1; j < dim_; ++j) {
            if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
        }
    }
    return true;
}

double DenseMatrix::frobenius_norm() const {
    double acc = 0.0;
    for (double v : data_) acc += v * v;
    return std::sqrt(acc);
}

double DenseMatrix::trace() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) acc += (*this)(i, i);
    return acc;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
    const std::size_t d = a.dim();
    DenseMatrix c(d);
    for (std::size_t i = 0; i < d; ++i) {
        auto out = c.row(i);
        for (std::size_t k = 0; k < d; ++k) {
            double aik = a(i, k);
            if (aik == 0.0) continue;
            auto brow = b.row(k);
            for (std::size_t j = 0; j < d; ++j) out[j] += aik * brow[j];
        }
    }
    return c;
}

namespace {

void check_dense_bound(std::size_t n) {
    if (n > kDenseHamiltonianQubitLimit) {
        throw CapabilityError("dense Hamiltonian limited to " + std::to_string(kDenseHamiltonianQubitLimit) +
                              " qubits (requested " + std::to_string(n) + ")");
    }
}

std::uint64_t dense_bit(std::size_t n, std::size_t q) { return std::uint64_t{1} << (n - 1 - q); }

/// Adds `scale` · T_k into m.
void accumulate_term(const HamiltonianCatalog& catalog, std::size_t k, double scale, DenseMatrix& m) {
    const std::size_t n = catalog.num_qubits();
    const std::uint64_t dim = std::uint64_t{1} << n;
    const OperatorTerm& term = catalog.term(k);
    if (const auto* cx = std::get_if<CxGate>(&term.op)) {
        std::uint64_t cbit = dense_bit(n, cx->control), tbit = dense_bit(n, cx->target);
        for (std::uint64_t idx = 0; idx < dim; ++idx) {
            std::uint64_t out = (idx & cbit) ? idx ^ tbit : idx;
            m(out, idx) += scale;
        }
        return;
    }
    const PauliString& g = std::get<PauliProjector>(term.op).generator;
    std::uint64_t px = 0, qz = 0;
    for (std::size_t q = 0; q < n; ++q) {
        if (g.x(q)) px |= dense_bit(n, q);
        if (g.z(q)) qz |= dense_bit(n, q);
    }
    double sign = g.negative() ? -1.0 : 1.0;
    for (std::uint64_t idx = 0; idx < dim; ++idx) {
        double phase = (__builtin_popcountll(idx & qz) & 1) ? -sign : sign;
        m(idx, idx) += 0.5 * scale;
        m(idx ^ px, idx) += 0.5 * scale * phase;
    }
}

/// Neumaier-compensated accumulator.
struct CompensatedSum {
    long double sum = 0.0L;
    long double comp = 0.0L;
    void add(long double v) {
        long double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    long double value() const { return sum + comp; }
};

}  // namespace

DenseMatrix dense_term(const HamiltonianCatalog& catalog, std::size_t k) {
    check_dense_bound(catalog.num_qubits());
    DenseMatrix m(std::size_t{1} << catalog.num_qubits());
    accumulate_term(catalog, k, 1.0, m);
    return m;
}

DenseMatrix build_dense(const HamiltonianCatalog& catalog) {
    check_dense_bound(catalog.num_qubits());
    DenseMatrix h(std::size_t{1} << catalog.num_qubits());
    for (std::size_t k = 0; k < catalog.size(); ++k) {
        accumulate_term(catalog, k, -catalog.term(k).coupling, h);
    }
    return h;
}

namespace {

using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigensystem solve_symmetric(const DenseMatrix& h, bool want_vectors) {
    if (!h.is_symmetric(1e-12 * std::max(1.0, h.frobenius_norm()))) {
        throw std::invalid_argument("eigensolver needs a symmetric matrix");
    }
    const auto d = static_cast<Eigen::Index>(h.dim());
    Eigen::Map<const RowMajor> view(d == 0 ? nullptr : h.row(0).data(), d, d);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        view, want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolver did not converge");

    // ascending order
    const auto& ev = solver.eigenvalues();
    Eigensystem out{std::vector<double>(ev.data(), ev.data() + d), DenseMatrix(want_vectors ? h.dim() : 0)};
    if (want_vectors) {
        const auto& v = solver.eigenvectors();
        for (Eigen::Index i = 0; i < d; ++i)
            for (Eigen::Index j = 0; j < d; ++j) out.eigenvectors(i, j) = v(i, j);
    }
    return out;
}

}  // namespace

Spectrum symmetric_eigenvalues(const DenseMatrix& h) { return Spectrum{solve_symmetric(h, false).eigenvalues}; }

Eigensystem symmetric_eigensystem(const DenseMatrix& h) { return solve_symmetric(h, true); }

double mean_energy_full(const Spectrum& spectrum, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
    if (spectrum.eigenvalues.empty()) throw std::invalid_argument("empty spectrum");
    const double e_min = *std::min_element(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end());
    CompensatedSum num, den;
    for (double e : spectrum.eigenvalues) {
        long double w = std::exp(-static_cast<long double>(beta) * (e - e_min));
        num.add(e * w);
        den.add(w);
    }
    return static_cast<double>(num.value() / den.value());
}

double mean_energy_truncated(const Spectrum& spectrum, double beta, std::size_t length) {
    if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
    if (length == 0) throw std::invalid_argument("expansion order L must be >= 1");
    CompensatedSum num, den;
    for (double e : spectrum.eigenvalues) {
        const long double x = -static_cast<long double>(beta) * e;
        // S_{L-1}(x) and S_L(x), summed in ascending order.
        CompensatedSum partial;
        long double term = 1.0L;
        partial.add(term);
        for (std::size_t m = 1; m < length; ++m) {
            term *= x / static_cast<long double>(m);
            partial.add(term);
        }
        long double s_lm1 = partial.value();
        term *= x / static_cast<long double>(length);
        partial.add(term);
        num.add(e * s_lm1);
        den.add(partial.value());
    }
    long double z = den.value();
    if (!(z > 0.0L) || !std::isfinite(static_cast<double>(z))) {
        throw TruncationError("truncated partition function is not positive at beta=" + std::to_string(beta) +
                              ", L=" + std::to_string(length));
    }
    return static_cast<double>(num.value() / z);
}

std::vector<double> trace_powers(const DenseMatrix& h, std::size_t l_max) {
    if (h.dim() > (std::size_t{1} << kTracePowerQubitLimit)) {
        throw CapabilityError("trace powers limited to " + std::to_string(kTracePowerQubitLimit) + " qubits");
    }
    std::vector<double> out;
    out.reserve(l_max + 1);
    out.push_back(static_cast<double>(h.dim()));
    if (l_max == 0) return out;
    DenseMatrix power = h;
    out.push_back(power.trace());
    for (std::size_t n = 2; n <= l_max; ++n) {
        power = multiply(power, h);
        out.push_back(power.trace());
    }
    return out;
}

double mean_energy_from_moments(std::span<const double> traces, double beta, std::size_t length) {
    if (traces.size() < length + 1) throw std::invalid_argument("need Tr[H^n] for n = 0 … L");
    if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
    CompensatedSum num, den;
    long double coeff = 1.0L;  // (-β)^n / n!
    den.add(traces[0]);
    for (std::size_t n = 1; n <= length; ++n) {
        num.add(coeff * traces[n]);  // (-β)^{n-1}/(n-1)!
        coeff *= -static_cast<long double>(beta) / static_cast<long double>(n);
        den.add(coeff * traces[n]);
    }
    long double z = den.value();
    if (!(z > 0.0L)) throw TruncationError("truncated partition function is not positive");
    return static_cast<double>(num.value() / z);
}

}  // namespace stabsse
