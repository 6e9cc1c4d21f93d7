#include "slotbrillouin/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SparseLU>

#include "slotbrillouin/errors.hpp"

namespace slotbrillouin {

namespace {

Eigen::VectorXd start_vector(Eigen::Index n, std::uint64_t seed) {
    // Raw engine output keeps the sequence identical across standard libraries.
    std::mt19937_64 engine(seed);
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        v[i] = static_cast<double>(engine() >> 11) * 0x1.0p-53 - 0.5;
    }
    return v.normalized();
}

struct Ritz {
    double theta;
    Eigen::VectorXd y;
    double theta_imag = 0.0;
    Eigen::VectorXd y_imag;  // set for the first member of a complex pair
};

}  // namespace

double norm1(const SparseMatrix& a) {
    double best = 0.0;
    for (int k = 0; k < a.outerSize(); ++k) {
        double col = 0.0;
        for (SparseMatrix::InnerIterator it(a, k); it; ++it) col += std::abs(it.value());
        best = std::max(best, col);
    }
    return best;
}

std::vector<EigenPair> shift_invert_eigs(const SparseMatrix& a, double shift, int count,
                                         const ShiftInvertOptions& options) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n) throw DomainError("shift_invert_eigs: matrix must be square");
    if (count < 1 || count > n) throw DomainError("shift_invert_eigs: count out of range");

    SparseMatrix shifted = a;
    {
        SparseMatrix id(n, n);
        id.setIdentity();
        shifted -= shift * id;
    }
    shifted.makeCompressed();
    Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>> lu;
    lu.analyzePattern(shifted);
    lu.factorize(shifted);
    if (lu.info() != Eigen::Success) {
        throw DomainError("shift_invert_eigs: shifted matrix is singular: " + lu.lastErrorMessage());
    }

    const double anorm = std::max(norm1(a), std::numeric_limits<double>::min());
    const auto m = std::min<Eigen::Index>(std::max<Eigen::Index>(options.subspace_size, 3 * count + 4), n);
    const auto keep_target = std::min<Eigen::Index>(std::max<Eigen::Index>(count + 6, m / 3), m - 2);

    // Thick-restarted Arnoldi with explicit Rayleigh-Ritz: basis V (orthonormal)
    // and images W = OP V. On restart the wanted Ritz vectors are kept together
    // with the next Krylov direction, which preserves the Krylov-Schur structure.
    Eigen::MatrixXd basis(n, m + 1);
    Eigen::MatrixXd images(n, m);
    basis.col(0) = start_vector(n, options.seed);
    Eigen::Index have_images = 0;
    std::uint64_t refill_seed = options.seed;

    auto orthogonalize = [&](Eigen::VectorXd& w, Eigen::Index columns) {
        for (int pass = 0; pass < 2; ++pass) {
            w -= basis.leftCols(columns) * (basis.leftCols(columns).transpose() * w);
        }
    };

    std::vector<double> residuals;
    for (int restart = 0; restart <= options.max_restarts; ++restart) {
        for (Eigen::Index j = have_images; j < m; ++j) {
            images.col(j) = lu.solve(basis.col(j));
            Eigen::VectorXd w = images.col(j);
            const double scale = w.norm();
            orthogonalize(w, j + 1);
            if (w.norm() <= 1e-12 * scale) {
                // Invariant subspace: continue with a fresh direction.
                w = start_vector(n, ++refill_seed);
                orthogonalize(w, j + 1);
            }
            const double wn = w.norm();
            basis.col(j + 1) = wn > 0.0 ? Eigen::VectorXd(w / wn) : Eigen::VectorXd::Zero(n);
        }
        have_images = m;

        const Eigen::MatrixXd h = basis.leftCols(m).transpose() * images;
        std::vector<Ritz> ritz;
        if (options.symmetric) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (h + h.transpose()));
            for (Eigen::Index k = 0; k < m; ++k) ritz.push_back({es.eigenvalues()[k], es.eigenvectors().col(k), 0.0, {}});
        } else {
            Eigen::EigenSolver<Eigen::MatrixXd> es(h);
            for (Eigen::Index k = 0; k < m; ++k) {
                const auto theta = es.eigenvalues()[k];
                const Eigen::VectorXcd y = es.eigenvectors().col(k);
                ritz.push_back({theta.real(), y.real(), theta.imag(), {}});
                if (theta.imag() > 0.0) ritz.back().y_imag = y.imag();
            }
        }
        std::stable_sort(ritz.begin(), ritz.end(), [](const Ritz& l, const Ritz& r) {
            return std::hypot(l.theta, l.theta_imag) > std::hypot(r.theta, r.theta_imag);
        });

        std::vector<EigenPair> found;
        residuals.clear();
        for (const auto& r : ritz) {
            if (static_cast<int>(found.size()) == count) break;
            if (std::abs(r.theta_imag) > 1e-8 * std::abs(r.theta)) continue;  // complex pair, not reported
            EigenPair pair;
            pair.vector = (basis.leftCols(m) * r.y).normalized();
            pair.value = shift + 1.0 / r.theta;
            pair.residual = (a * pair.vector - pair.value * pair.vector).norm() / anorm;
            residuals.push_back(pair.residual);
            found.push_back(std::move(pair));
        }
        const bool converged =
            static_cast<int>(found.size()) == count &&
            std::all_of(found.begin(), found.end(), [&](const EigenPair& p) { return p.residual < options.tolerance; });
        if (converged) {
            std::stable_sort(found.begin(), found.end(), [shift](const EigenPair& l, const EigenPair& r) {
                return std::abs(l.value - shift) < std::abs(r.value - shift);
            });
            return found;
        }
        if (restart == options.max_restarts) break;

        // Real basis of the kept Ritz space (real and imaginary parts of complex pairs).
        Eigen::MatrixXd kept(m, keep_target + 1);
        Eigen::Index k = 0;
        for (const auto& r : ritz) {
            if (k >= keep_target) break;
            kept.col(k++) = r.y;
            if (r.y_imag.size() > 0 && k < keep_target) kept.col(k++) = r.y_imag;
        }
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(kept.leftCols(k));
        const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(m, k);
        const Eigen::VectorXd next = basis.col(m);
        basis.leftCols(k) = basis.leftCols(m) * q;
        images.leftCols(k) = images * q;
        basis.col(k) = next;
        have_images = k;
    }

    std::ostringstream msg;
    msg << "shift_invert_eigs: no convergence after " << options.max_restarts << " restarts; residuals:";
    for (double r : residuals) msg << ' ' << r;
    throw ConvergenceError(msg.str(), residuals);
}

}  // namespace slotbrillouin
