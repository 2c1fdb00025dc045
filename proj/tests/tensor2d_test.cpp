#include "ncmorse/deformed.hpp"
#include "ncmorse/tensor2d.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace ncmorse;

TEST(Lift, IdentityStaysIdentity) {
    const Basis2D b{3, 4};
    EXPECT_TRUE(lift(OperatorMatrix::identity(3), 1, b).exactly_equals(OperatorMatrix::identity(12)));
    EXPECT_TRUE(lift(OperatorMatrix::identity(4), 2, b).exactly_equals(OperatorMatrix::identity(12)));
}

TEST(Lift, DimensionsMultiply) {
    const Basis2D b{5, 5};
    EXPECT_EQ(lift(OperatorMatrix::identity(5), 2, b).dim(), 25u);
    EXPECT_THROW(lift(OperatorMatrix::identity(4), 1, b), DimensionMismatch);
    EXPECT_THROW(lift(OperatorMatrix::identity(5), 3, b), std::invalid_argument);
}

TEST(Lift, MatchesKroneckerDefinition) {
    const Basis2D b{3, 5};
    const Matrix a = Matrix::Random(3, 3);
    const Matrix c = Matrix::Random(5, 5);
    EXPECT_EQ(lift(OperatorMatrix(a), 1, b).entries(), oracle::kron(a, Matrix::Identity(5, 5)));
    EXPECT_EQ(lift(OperatorMatrix(c), 2, b).entries(), oracle::kron(Matrix::Identity(3, 3), c));
}

TEST(Lift, DifferentSlotsCommuteExactly) {
    const Basis2D b{4, 6};
    for (int k = 0; k < 10; ++k) {
        const OperatorMatrix a(Matrix::Random(4, 4));
        const OperatorMatrix c(Matrix::Random(6, 6));
        EXPECT_TRUE(commutator(lift(a, 1, b), lift(c, 2, b)).exactly_equals(OperatorMatrix::zero(24)));
    }
}

TEST(Basis2D, FlatIndexRoundTrips) {
    const Basis2D b{4, 7};
    std::vector<bool> seen(b.total(), false);
    for (std::size_t n = 0; n < 4; ++n) {
        for (std::size_t m = 0; m < 7; ++m) {
            const std::size_t f = b.flat(n, m);
            ASSERT_LT(f, b.total());
            EXPECT_FALSE(seen[f]);
            seen[f] = true;
            EXPECT_EQ(b.first(f), n);
            EXPECT_EQ(b.second(f), m);
        }
    }
    EXPECT_EQ(b.interior(1).size(), 3u * 6u);
}

TEST(Generators2D, CrossSlotCommutatorsVanishExactly) {
    const Generator2DSet g = build_2d_generators({6, 1.3}, {5, 2.7});
    const OperatorMatrix zero = OperatorMatrix::zero(30);
    for (const OperatorMatrix* a : g.slot_generators(1)) {
        for (const OperatorMatrix* c : g.slot_generators(2)) {
            EXPECT_TRUE(commutator(*a, *c).exactly_equals(zero)) << a->label() << " " << c->label();
        }
    }
}

TEST(Generators2D, PerSlotAlgebraOnInterior) {
    const Generator2DSet g = build_2d_generators({6, 1.5}, {6, 1.5});
    const Basis2D& b = g.basis();
    EXPECT_TRUE(identity_check_2d("", commutator(g.kminus(1), g.kplus(1)), 2.0 * g.kzero(1), b, 1,
                                  AssertionClass::Proven)
                    .passed());
    EXPECT_TRUE(identity_check_2d("", commutator(g.kzero(2), g.kminus(2)), -g.kminus(2), b, 1, AssertionClass::Proven)
                    .passed());
    EXPECT_FALSE(identity_check_2d("", commutator(g.kminus(1), g.kplus(1)), 2.0 * g.kzero(1), b, 0,
                                   AssertionClass::Proven)
                     .passed());
}

TEST(Generators2D, RandomParametersSatisfyAlgebra) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> uq(0.55, 8.0);
    for (int k = 0; k < 50; ++k) {
        const Generator2DSet g = build_2d_generators({5, uq(rng)}, {4, uq(rng)});
        for (const IdentityReport& r : tensor2d_algebra_audit(g)) {
            EXPECT_TRUE(r.passed()) << r.name << " residual=" << r.residual_norm;
        }
    }
}

TEST(Hamiltonian2D, AxisHamiltonianIsClosedFormDiagonal) {
    const double q = 1.5;
    const double scale = 0.5;
    const Generator2DSet g = build_2d_generators({5, q}, {4, 2.0});
    const OperatorMatrix h1 = hamiltonian_ladder_form(g, HamiltonianSlot::One, scale);
    const Basis2D& b = g.basis();
    for (std::size_t r = 0; r < b.total(); ++r) {
        for (std::size_t c = 0; c < b.total(); ++c) {
            const double expect = r == c ? oracle::axis_energy(b.first(r), q, scale) : 0.0;
            EXPECT_NEAR(h1(r, c).real(), expect, 1e-12);
            EXPECT_EQ(h1(r, c).imag(), 0.0);
        }
    }
}

TEST(Hamiltonian2D, TotalSpectrumMatchesDiagonal) {
    for (auto [d1, d2] : {std::pair<std::size_t, std::size_t>{4, 4}, {6, 5}}) {
        const double q1 = 1.0;
        const double q2 = d1 == 4 ? 1.0 : 2.25;
        const double scale = 0.5;
        const Generator2DSet g = build_2d_generators({d1, q1}, {d2, q2});
        const OperatorMatrix h = hamiltonian_ladder_form(g, HamiltonianSlot::Total, scale);
        EXPECT_TRUE(h.exactly_equals(h.transpose()));
        std::vector<double> expect;
        for (std::size_t n = 0; n < d1; ++n) {
            for (std::size_t m = 0; m < d2; ++m) {
                expect.push_back(oracle::axis_energy(n, q1, scale) + oracle::axis_energy(m, q2, scale));
            }
        }
        std::sort(expect.begin(), expect.end());
        const SpectrumResult sp = spectrum(h);
        ASSERT_EQ(sp.eigenvalues.size(), expect.size());
        for (std::size_t k = 0; k < expect.size(); ++k) {
            EXPECT_NEAR(sp.eigenvalues[k].real(), expect[k], 1e-10);
            EXPECT_EQ(sp.eigenvalues[k].imag(), 0.0);
        }
    }
}

TEST(Hamiltonian2D, CommutesWithWeights) {
    const Generator2DSet g = build_2d_generators({5, 1.5}, {5, 1.5});
    const OperatorMatrix h = hamiltonian_ladder_form(g, HamiltonianSlot::Total, 0.5);
    EXPECT_TRUE(commutator(h, g.kzero(1)).exactly_equals(OperatorMatrix::zero(25)));
    EXPECT_TRUE(commutator(h, g.kzero(2)).exactly_equals(OperatorMatrix::zero(25)));
}

TEST(HLadderAudit, PrintedRelationFlaggedDerivedRelationPasses) {
    const Generator2DSet g = build_2d_generators({6, 1.5}, {6, 2.2});
    for (const IdentityReport& r : h_ladder_commutator_audit(g, 0.5)) {
        if (r.assertion_class == AssertionClass::Proven) {
            EXPECT_TRUE(r.passed()) << r.name;
            EXPECT_LE(r.residual_norm, 1e-10 * (1.0 + r.lhs_norm));
        } else {
            EXPECT_EQ(r.verdict, Verdict::Flagged) << r.name;
            EXPECT_GT(r.residual_norm, 1.0);
        }
    }
}

TEST(HLadderAudit, ZeroScaleTriviallyPasses) {
    const Generator2DSet g = build_2d_generators({5, 1.5}, {5, 1.5});
    for (const IdentityReport& r : h_ladder_commutator_audit(g, 0.0)) {
        EXPECT_TRUE(r.passed()) << r.name;
        EXPECT_EQ(r.lhs_norm, 0.0);
        EXPECT_EQ(r.rhs_norm, 0.0);
    }
}

TEST(Casimir2D, InteriorValueAndCentrality) {
    const double q1 = 1.5;
    const Generator2DSet g = build_2d_generators({6, q1}, {5, 3.0});
    const Basis2D& b = g.basis();
    const OperatorMatrix c1 = casimir_2d(g, 1);
    EXPECT_TRUE(identity_check_2d("", c1, q1 * (q1 - 1.0) * OperatorMatrix::identity(b.total()), b, 1,
                                  AssertionClass::Proven)
                    .passed());
    for (const OperatorMatrix* k : g.slot_generators(2)) {
        EXPECT_TRUE(commutator(c1, *k).exactly_equals(OperatorMatrix::zero(b.total())));
    }
    const OperatorMatrix zero = OperatorMatrix::zero(b.total());
    EXPECT_TRUE(identity_check_2d("", commutator(c1, g.kminus(1)), zero, b, 1, AssertionClass::Proven).passed());
    EXPECT_TRUE(identity_check_2d("", commutator(c1, g.kplus(1)), zero, b, 1, AssertionClass::Proven).passed());
}
