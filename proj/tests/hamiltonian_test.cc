#include <gtest/gtest.h>

#include <array>

#include "dense_oracle.h"
#include "stabsse/errors.h"
#include "stabsse/exact_diag.h"
#include "stabsse/hamiltonian.h"

using namespace stabsse;

namespace {

oracle::Mat oracle_term(const HamiltonianCatalog& cat, std::size_t k) {
    const auto& t = cat.term(k);
    if (const auto* cx = std::get_if<CxGate>(&t.op)) return oracle::cx(cat.num_qubits(), cx->control, cx->target);
    return oracle::projector(std::get<PauliProjector>(t.op).generator);
}

}  // namespace

TEST(Hamiltonian, cnot_chain_layout) {
    auto cat = build_cnot_chain(3, 4.0, 1.0);
    EXPECT_EQ(cat.size(), 6u);
    EXPECT_DOUBLE_EQ(cat.total_coupling(), 15.0);
    const auto& last_cx = std::get<CxGate>(cat.term(4).op);
    EXPECT_EQ(last_cx.control, 2u);
    EXPECT_EQ(last_cx.target, 0u);
    EXPECT_EQ(std::get<PauliProjector>(cat.term(1).op).generator, PauliString::single_x(3, 0));

    EXPECT_DOUBLE_EQ(build_cnot_chain(10, 4.0, 1.0).total_coupling(), 50.0);
}

TEST(Hamiltonian, zero_field_terms_are_never_sampled) {
    auto cat = build_cnot_chain(2, 0.0, 1.0);
    EXPECT_EQ(cat.size(), 4u);
    for (int i = 0; i < 1000; ++i) {
        double u = i / 1000.0;
        EXPECT_TRUE(std::holds_alternative<CxGate>(cat.term(cat.sample_term(u)).op));
    }
    EXPECT_TRUE(std::holds_alternative<CxGate>(cat.term(cat.sample_term(0.9999999999999999)).op));
}

TEST(Hamiltonian, sampling_follows_couplings) {
    auto cat = build_cnot_chain(4, 4.0, 1.0);
    std::size_t projectors = 0;
    const int grid = 100000;
    for (int i = 0; i < grid; ++i) {
        auto k = cat.sample_term((i + 0.5) / grid);
        if (std::holds_alternative<PauliProjector>(cat.term(k).op)) ++projectors;
    }
    EXPECT_NEAR(static_cast<double>(projectors) / grid, 0.8, 1e-4);
}

TEST(Hamiltonian, rejects_sign_problem_parameters) {
    EXPECT_THROW(build_cnot_chain(3, -1.0, 1.0), ModelError);
    EXPECT_THROW(build_cnot_chain(3, 1.0, 0.0), ModelError);
    EXPECT_THROW(build_tfi_chain(3, -0.5, 1.0), ModelError);
    EXPECT_THROW(build_cnot_chain(1, 1.0, 1.0), std::invalid_argument);
    EXPECT_THROW(build_z2_plaquette_model(1, 2, 1.0, 1.0), std::invalid_argument);
}

TEST(Hamiltonian, rejects_mixed_projectors) {
    PauliString g(2);
    g.set_x(0, true);
    g.set_z(1, true);
    std::vector<OperatorTerm> terms{{PauliProjector{g}, 1.0, "mixed"}};
    EXPECT_THROW(HamiltonianCatalog(2, terms), ModelError);
    std::vector<OperatorTerm> cx{{CxGate{0, 0}, 1.0, "bad"}};
    EXPECT_THROW(HamiltonianCatalog(2, cx), std::invalid_argument);
}

TEST(Hamiltonian, tfi_chain_layout) {
    auto cat = build_tfi_chain(10, 3.0, 1.0);
    EXPECT_EQ(cat.size(), 20u);
    EXPECT_DOUBLE_EQ(cat.total_coupling(), 40.0);

    auto two = build_tfi_chain(2, 1.0, 1.0);
    std::array<std::size_t, 2> bond{0, 1};
    EXPECT_EQ(std::get<PauliProjector>(two.term(0).op).generator, PauliString::z_product(2, bond));
    EXPECT_EQ(std::get<PauliProjector>(two.term(1).op).generator, PauliString::z_product(2, bond));
    EXPECT_EQ(two.term(1).label, "PiZZ(1,0)");
}

TEST(Hamiltonian, bond_projector_diagonal) {
    auto cat = build_tfi_chain(2, 1.0, 1.0);
    for (std::uint64_t idx = 0; idx < 4; ++idx) {
        auto s = StabilizerState::from_basis_state(BasisState::from_dense_index(2, idx));
        cat.apply(0, s);
        auto m = s.overlap_with_basis(BasisState::from_dense_index(2, idx));
        bool aligned = idx == 0 || idx == 3;
        EXPECT_EQ(m.value(), aligned ? 1.0 : 0.0);
    }
}

TEST(Hamiltonian, z2_lattice_counts_and_star_weight) {
    auto cat = build_z2_plaquette_model(2, 2, 1.0, 1.0);
    EXPECT_EQ(cat.num_qubits(), 8u);
    EXPECT_EQ(cat.size(), 8u);
    for (std::size_t k = 0; k < 4; ++k) {
        const auto& g = std::get<PauliProjector>(cat.term(k).op).generator;
        EXPECT_TRUE(g.has_x() && !g.has_z());
        auto s = StabilizerState::from_basis_state(BasisState(8));
        cat.apply(k, s);
        EXPECT_EQ(s.overlap_with_basis(BasisState(8)).value(), 0.5);
        oracle::Vec v = oracle::apply(oracle_term(cat, k), oracle::basis_vector(BasisState(8)));
        EXPECT_NEAR(oracle::dot(oracle::basis_vector(BasisState(8)), v), 0.5, 1e-15);
    }
    for (std::size_t k = 4; k < 8; ++k) {
        auto s = StabilizerState::from_basis_state(BasisState(8));
        cat.apply(k, s);
        EXPECT_EQ(s.halving_count(), 0);
        EXPECT_EQ(s.overlap_with_basis(BasisState(8)).value(), 1.0);
    }
}

TEST(Hamiltonian, z2_edges_follow_row_major_numbering) {
    auto cat = build_z2_plaquette_model(3, 2, 1.0, 2.0);
    EXPECT_EQ(cat.num_qubits(), 12u);
    // star at vertex (0,0): horizontal edges 0 and 2, vertical edges 6 and 9
    const auto& star = std::get<PauliProjector>(cat.term(0).op).generator;
    for (std::size_t q = 0; q < 12; ++q) EXPECT_EQ(star.x(q), q == 0 || q == 2 || q == 6 || q == 9) << q;
    // plaquette at (0,0): horizontal 0 and 3, vertical 6 and 7
    const auto& plaq = std::get<PauliProjector>(cat.term(6).op).generator;
    for (std::size_t q = 0; q < 12; ++q) EXPECT_EQ(plaq.z(q), q == 0 || q == 3 || q == 6 || q == 7) << q;
    EXPECT_DOUBLE_EQ(cat.total_coupling(), 6 * 1.0 + 6 * 2.0);
}

TEST(HamiltonianProperty, terms_are_non_negative_and_cx_is_hermitian_unitary) {
    std::vector<HamiltonianCatalog> catalogs{build_cnot_chain(4, 2.0, 1.0), build_tfi_chain(5, 1.0, 1.0),
                                             build_cnot_chain(2, 1.0, 1.0)};
    for (const auto& cat : catalogs) {
        for (std::size_t k = 0; k < cat.size(); ++k) {
            oracle::Mat m = oracle_term(cat, k);
            for (double v : m.a) EXPECT_GE(v, 0.0);
            if (std::holds_alternative<CxGate>(cat.term(k).op)) {
                oracle::Mat sq = oracle::matmul(m, m);
                oracle::Mat id = oracle::identity(m.dim);
                for (std::size_t i = 0; i < m.dim; ++i)
                    for (std::size_t j = 0; j < m.dim; ++j) {
                        EXPECT_EQ(sq(i, j), id(i, j));
                        EXPECT_EQ(m(i, j), m(j, i));
                    }
            }
        }
    }
}

// The library's dense construction versus the Pauli form
// H = -1/2 Σ (1 + Z_i + X_{i+1} - Z_i X_{i+1}) - h/2 Σ (X_i + 1), for J = 1.
TEST(HamiltonianProperty, cnot_chain_matches_pauli_expansion) {
    for (std::size_t n : {2u, 3u, 6u}) {
        const double h = 4.0;
        auto cat = build_cnot_chain(n, h, 1.0);
        DenseMatrix lib = build_dense(cat);

        std::size_t dim = std::size_t{1} << n;
        oracle::Mat want(dim);
        oracle::Mat id = oracle::identity(dim);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t next = (i + 1) % n;
            oracle::Mat zi = oracle::on_site(n, i, oracle::pauli_z());
            oracle::Mat xn = oracle::on_site(n, next, oracle::pauli_x());
            oracle::Mat bond = oracle::add(oracle::add(oracle::add(id, zi), xn), oracle::matmul(zi, xn), -1.0);
            want = oracle::add(want, bond, -0.5);
            oracle::Mat xi = oracle::on_site(n, i, oracle::pauli_x());
            want = oracle::add(want, oracle::add(xi, id), -h / 2.0);
        }
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) ASSERT_EQ(lib(i, j), want(i, j)) << n << ":" << i << "," << j;
    }
}
