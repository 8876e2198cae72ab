// End-to-end acceptance checks. Prints one [PASS]/[FAIL] line per check
// (indented detail lines in between) and exits non-zero if any check fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "dense_oracle.h"
#include "stabsse/binning.h"
#include "stabsse/exact_diag.h"
#include "stabsse/hamiltonian.h"
#include "stabsse/sse.h"

using namespace stabsse;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(const std::string& name, const std::function<Outcome()>& check) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = check();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("[%s] %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

// Temperatures 10.0, 9.6, ..., 0.4.
std::vector<double> figure_grid() {
    std::vector<double> t;
    for (int k = 25; k >= 1; --k) t.push_back(0.4 * k);
    return t;
}

Outcome reproduce_curves(const HamiltonianCatalog& cat) {
    const Spectrum spectrum = symmetric_eigenvalues(build_dense(cat));
    double worst = 0.0;
    bool ok = true;
    for (std::size_t length : {10u, 20u, 30u, 40u}) {
        ScheduleOptions opt;
        opt.length = length;
        opt.temperatures = figure_grid();
        opt.cycles_therm = 50000;
        opt.cycles_meas = 50000;
        opt.seed = 1;
        auto start = std::chrono::steady_clock::now();
        RunResult run = run_schedule(cat, opt);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        double worst_l = 0.0, worst_t = 0.0;
        for (const auto& r : run.records) {
            double exact = mean_energy_truncated(spectrum, r.beta, length);
            double rel = std::abs(r.energy - exact) / std::abs(exact);
            if (rel > worst_l) {
                worst_l = rel;
                worst_t = r.temperature;
            }
        }
        std::printf("    L=%zu: max relative error %.3e at T=%.1f, %.1fs\n", length, worst_l, worst_t, secs);
        std::fflush(stdout);
        worst = std::max(worst, worst_l);
        ok = ok && worst_l < 0.01;
    }
    return {ok, fmt("max relative error %.3e over all (L, T), bound 1e-2", worst)};
}

oracle::Mat oracle_term(const HamiltonianCatalog& cat, std::size_t k) {
    const auto& t = cat.term(k);
    if (const auto* cx = std::get_if<CxGate>(&t.op)) return oracle::cx(cat.num_qubits(), cx->control, cx->target);
    return oracle::projector(std::get<PauliProjector>(t.op).generator);
}

Outcome worked_example() {
    auto cat = build_cnot_chain(2, 4.0, 1.0);
    OperatorString ops(2);
    ops.set(0, 0);  // CX(0,1)
    ops.set(1, 1);  // Π_0, acts first
    MatrixElement m = evaluate_matrix_element(cat, BasisState(2), ops);
    bool ok = m == MatrixElement::power_of_sqrt_half(2) && m.value() == 0.5;
    return {ok, fmt("<00|CX Pi|00> = %.17g", m.value())};
}

// Catalog of every ordered CX pair plus random X-type and Z-type projectors.
HamiltonianCatalog random_catalog(std::size_t n, std::mt19937_64& rng) {
    std::vector<OperatorTerm> terms;
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t t = 0; t < n; ++t)
            if (c != t) terms.push_back({CxGate{c, t}, 1.0, "cx"});
    for (int i = 0; i < 6; ++i) {
        terms.push_back({PauliProjector{oracle::random_projector_generator(n, 0, rng)}, 1.0, "px"});
        terms.push_back({PauliProjector{oracle::random_projector_generator(n, 1, rng)}, 1.0, "pz"});
    }
    return HamiltonianCatalog(n, terms);
}

Outcome dense_equivalence() {
    std::mt19937_64 rng(12345);
    const int strings = 12000;
    int nonzero = 0, mismatches = 0;
    double worst = 0.0;
    for (int s = 0; s < strings; ++s) {
        std::size_t n = 2 + rng() % 5;
        std::size_t length = 1 + rng() % 20;
        auto cat = random_catalog(n, rng);
        OperatorString ops(length);
        for (std::size_t p = 0; p < length; ++p) ops.set(p, static_cast<std::int32_t>(rng() % cat.size()));
        BasisState sigma = BasisState::from_dense_index(n, rng() % (std::uint64_t{1} << n));
        BasisState other = BasisState::from_dense_index(n, rng() % (std::uint64_t{1} << n));

        oracle::Vec v = oracle::basis_vector(sigma);
        StabilizerState state = StabilizerState::from_basis_state(sigma);
        for (std::size_t p = length; p-- > 0;) {
            v = oracle::apply(oracle_term(cat, static_cast<std::size_t>(ops.at(p))), v);
            cat.apply(static_cast<std::size_t>(ops.at(p)), state);
        }
        const double diag = oracle::dot(oracle::basis_vector(sigma), v);
        const double off = oracle::dot(oracle::basis_vector(other), v);
        const MatrixElement m_diag = evaluate_matrix_element(cat, sigma, ops);
        const MatrixElement m_off = state.overlap_with_basis(other);
        for (auto [m, d] : {std::pair{m_diag, diag}, std::pair{m_off, off}}) {
            double want = m.is_zero() ? 0.0 : std::pow(2.0, -0.5 * m.exponent());
            double err = std::abs(d - want);
            worst = std::max(worst, err);
            if (err > 1e-12) ++mismatches;
            if (!m.is_zero()) ++nonzero;
        }
    }
    std::string detail = std::to_string(strings) + " strings, " + std::to_string(nonzero) + " nonzero elements, " +
                         std::to_string(mismatches) + " mismatches, max |dense - 2^(-k/2)| " + fmt("%.2e", worst);
    return {mismatches == 0 && nonzero > 1000, detail};
}

Outcome exact_distribution() {
    auto cat = build_cnot_chain(2, 4.0, 1.0);
    const double beta = 0.5;
    const std::size_t length = 2;
    const std::size_t choices = cat.size() + 1;

    auto key = [&](const BasisState& s, const OperatorString& ops) {
        return s.dense_index() * choices * choices + static_cast<std::size_t>(ops.at(0) + 1) * choices +
               static_cast<std::size_t>(ops.at(1) + 1);
    };

    // Brute-force weights β^n (L-n)!/L! ∏c ⟨σ|O_0 O_1|σ⟩ from dense matrices.
    std::map<std::size_t, double> weight;
    double z = 0.0;
    for (std::uint64_t idx = 0; idx < 4; ++idx) {
        BasisState s = BasisState::from_dense_index(2, idx);
        for (std::size_t a = 0; a < choices; ++a)
            for (std::size_t b = 0; b < choices; ++b) {
                OperatorString ops(length);
                ops.set(0, static_cast<std::int32_t>(a) - 1);
                ops.set(1, static_cast<std::int32_t>(b) - 1);
                oracle::Vec v = oracle::basis_vector(s);
                double factor = 1.0;
                std::size_t n = 0;
                for (std::size_t p = length; p-- > 0;) {
                    if (ops.is_identity(p)) continue;
                    auto k = static_cast<std::size_t>(ops.at(p));
                    v = oracle::apply(oracle_term(cat, k), v);
                    factor *= beta * cat.term(k).coupling;
                    ++n;
                }
                for (std::size_t i = 0; i < n; ++i) factor /= static_cast<double>(length - i);
                double w = factor * oracle::dot(oracle::basis_vector(s), v);
                if (w > 0.0) weight[key(s, ops)] = w;
                z += w;
            }
    }

    const std::size_t cycles = 1000000;
    Configuration config = Configuration::initial(2, length);
    Rng rng(2);
    CycleCounters counters;
    for (int c = 0; c < 10000; ++c) mc_cycle(config, cat, beta, rng, counters);
    std::vector<std::size_t> trace(cycles);
    std::map<std::size_t, std::size_t> seen;
    for (std::size_t c = 0; c < cycles; ++c) {
        mc_cycle(config, cat, beta, rng, counters);
        trace[c] = key(config.state, config.ops);
        ++seen[trace[c]];
    }

    double worst_sigma = 0.0;
    bool ok = true;
    std::vector<double> indicator(cycles);
    for (const auto& [k, w] : weight) {
        for (std::size_t c = 0; c < cycles; ++c) indicator[c] = trace[c] == k ? 1.0 : 0.0;
        double freq = static_cast<double>(seen[k]) / static_cast<double>(cycles);
        double se = estimate_error(indicator, 100);
        double dev = std::abs(freq - w / z) / se;
        worst_sigma = std::max(worst_sigma, dev);
        if (!(dev <= 3.0)) ok = false;
    }
    for (const auto& [k, count] : seen) {
        if (!weight.count(k)) ok = false;  // zero-weight configuration visited
    }
    return {ok, std::to_string(weight.size()) + " configurations, " + std::to_string(cycles) +
                    " cycles, largest deviation " + fmt("%.2f standard errors", worst_sigma)};
}

Outcome estimator_identity() {
    auto cat = build_cnot_chain(10, 4.0, 1.0);
    ScheduleOptions opt;
    opt.length = 40;
    opt.temperatures = {1e2, 1e4, 1e6};
    opt.cycles_therm = 1000;
    opt.cycles_meas = 20000;
    RunResult run = run_schedule(cat, opt);
    bool ok = true;
    double prev = INFINITY;
    for (const auto& r : run.records) {
        ok = ok && r.energy == -r.mean_n / r.beta && r.mean_n <= prev;
        prev = r.mean_n;
    }
    const auto& last = run.records.back();
    ok = ok && last.mean_n < 1e-3;
    return {ok, fmt("energy == -<n>/beta at every T; <n> = %.3g at T=1e6", last.mean_n)};
}

Outcome ed_consistency() {
    double worst = 0.0;
    for (std::size_t n = 2; n <= 6; ++n) {
        for (const auto& cat : {build_cnot_chain(n, 4.0, 1.0), build_tfi_chain(n, 3.0, 1.0)}) {
            DenseMatrix h = build_dense(cat);
            Spectrum s = symmetric_eigenvalues(h);
            double norm = std::max(std::abs(s.eigenvalues.front()), std::abs(s.eigenvalues.back()));
            auto traces = trace_powers(h, 40);
            for (double x : {0.1, 1.0, 2.0, 3.0}) {
                for (std::size_t l : {1u, 5u, 10u, 20u, 40u}) {
                    double a = mean_energy_from_moments(traces, x / norm, l);
                    double b = mean_energy_truncated(s, x / norm, l);
                    worst = std::max(worst, std::abs(a - b) / std::abs(b));
                }
            }
        }
    }
    double worst_closed = 0.0;
    for (double h : {0.5, 1.0, 3.0, 4.0}) {
        std::vector<OperatorTerm> terms{{PauliProjector{PauliString::single_x(1, 0)}, h, "Pi(0)"}};
        Spectrum s = symmetric_eigenvalues(build_dense(HamiltonianCatalog(1, terms)));
        for (double beta : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0}) {
            double e = std::exp(beta * h);
            worst_closed = std::max(worst_closed, std::abs(mean_energy_full(s, beta) + h * e / (1.0 + e)));
        }
    }
    return {worst < 1e-6 && worst_closed < 1e-10,
            fmt("moments vs spectral max relative difference %.2e", worst) +
                fmt(", one-qubit closed form max error %.2e", worst_closed)};
}

Outcome z2_projectors() {
    auto cat = build_z2_plaquette_model(2, 2, 1.0, 1.0);
    bool ok = cat.num_qubits() == 8 && cat.size() == 8;
    double worst = 0.0;
    for (std::size_t k = 0; k < cat.size(); ++k) {
        oracle::Mat p = oracle_term(cat, k);
        DenseMatrix lib = dense_term(cat, k);
        oracle::Mat sq = oracle::matmul(p, p);
        for (std::size_t i = 0; i < p.dim; ++i)
            for (std::size_t j = 0; j < p.dim; ++j) {
                ok = ok && p(i, j) >= 0.0 && lib(i, j) >= 0.0 && lib(i, j) == p(i, j);
                worst = std::max(worst, std::abs(sq(i, j) - p(i, j)));
            }
    }
    ok = ok && worst == 0.0;
    return {ok, std::to_string(cat.size()) + " terms on 8 qubits, entrywise >= 0, max |P^2 - P| " + fmt("%.1e", worst)};
}

}  // namespace

int main() {
    report("CNOT chain N=10 h/J=4 against truncated exact energy", [] { return reproduce_curves(build_cnot_chain(10, 4.0, 1.0)); });
    report("TFI chain N=10 h/J=3 against truncated exact energy", [] { return reproduce_curves(build_tfi_chain(10, 3.0, 1.0)); });
    report("worked example <00|CX(0,1) Pi(0)|00> = 1/2", worked_example);
    report("stabilizer matrix elements equal dense values", dense_equivalence);
    report("exact configuration distribution N=2 L=2 beta=0.5", exact_distribution);
    report("energy estimator identity in the high-temperature limit", estimator_identity);
    report("exact-diagonalization internal consistency", ed_consistency);
    report("Z2 lattice projectors non-negative and idempotent", z2_projectors);
    std::printf("%d check(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
