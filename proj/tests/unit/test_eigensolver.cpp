#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "slotbrillouin/eigensolver.hpp"
#include "slotbrillouin/errors.hpp"

using namespace slotbrillouin;

namespace {

// 1D Dirichlet second difference; eigenvalues (2 - 2 cos(k pi / (n + 1))) / h^2.
SparseMatrix laplacian_1d(int n) {
    std::vector<Eigen::Triplet<double>> t;
    for (int i = 0; i < n; ++i) {
        t.emplace_back(i, i, 2.0);
        if (i > 0) t.emplace_back(i, i - 1, -1.0);
        if (i + 1 < n) t.emplace_back(i, i + 1, -1.0);
    }
    SparseMatrix a(n, n);
    a.setFromTriplets(t.begin(), t.end());
    return a;
}

double exact(int k, int n) { return 2.0 - 2.0 * std::cos(k * std::numbers::pi / (n + 1)); }

}  // namespace

TEST(ShiftInvert, FindsEigenvaluesNearestShift) {
    const int n = 400;
    const auto a = laplacian_1d(n);
    const auto pairs = shift_invert_eigs(a, 0.0, 3);
    ASSERT_EQ(pairs.size(), 3u);
    for (int k = 0; k < 3; ++k) {
        EXPECT_NEAR(pairs[k].value, exact(k + 1, n), 1e-12);
        EXPECT_LT(pairs[k].residual, 1e-11);
        EXPECT_NEAR(pairs[k].vector.norm(), 1.0, 1e-12);
    }
}

TEST(ShiftInvert, InteriorShift) {
    const int n = 200;
    const auto a = laplacian_1d(n);
    const double shift = exact(50, n) + 1e-4;
    const auto pairs = shift_invert_eigs(a, shift, 1);
    ASSERT_EQ(pairs.size(), 1u);
    EXPECT_NEAR(pairs[0].value, exact(50, n), 1e-11);
}

TEST(ShiftInvert, NonSymmetricRealSpectrum) {
    // Similarity transform D A D^-1 keeps the spectrum but breaks symmetry.
    const int n = 150;
    SparseMatrix a = laplacian_1d(n);
    std::vector<Eigen::Triplet<double>> t;
    for (int k = 0; k < a.outerSize(); ++k) {
        for (SparseMatrix::InnerIterator it(a, k); it; ++it) {
            const double scale = std::pow(1.01, it.row() - it.col());
            t.emplace_back(it.row(), it.col(), it.value() * scale);
        }
    }
    SparseMatrix b(n, n);
    b.setFromTriplets(t.begin(), t.end());
    const auto pairs = shift_invert_eigs(b, 0.0, 2);
    EXPECT_NEAR(pairs[0].value, exact(1, n), 1e-11);
    EXPECT_NEAR(pairs[1].value, exact(2, n), 1e-11);
}

TEST(ShiftInvert, BitIdenticalAcrossCalls) {
    const auto a = laplacian_1d(300);
    const auto p = shift_invert_eigs(a, 0.01, 2);
    const auto q = shift_invert_eigs(a, 0.01, 2);
    for (std::size_t k = 0; k < p.size(); ++k) {
        EXPECT_EQ(p[k].value, q[k].value);
        EXPECT_TRUE((p[k].vector.array() == q[k].vector.array()).all());
    }
}

TEST(ShiftInvert, SingularShiftIsDomainError) {
    SparseMatrix a(3, 3);
    a.insert(0, 0) = 1.0;
    a.insert(1, 1) = 2.0;
    a.insert(2, 2) = 3.0;
    EXPECT_THROW(shift_invert_eigs(a, 2.0, 1), DomainError);
}

TEST(ShiftInvert, ConvergenceErrorCarriesResiduals) {
    ShiftInvertOptions opts;
    opts.max_restarts = 0;
    opts.subspace_size = 4;
    opts.tolerance = 1e-300;
    try {
        shift_invert_eigs(laplacian_1d(500), 0.0, 1, opts);
        FAIL() << "expected ConvergenceError";
    } catch (const ConvergenceError& e) {
        EXPECT_FALSE(e.residuals().empty());
    }
}

TEST(ShiftInvert, Norm1) {
    EXPECT_DOUBLE_EQ(norm1(laplacian_1d(5)), 4.0);
}
