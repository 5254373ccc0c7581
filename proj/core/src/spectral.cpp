#include "magicsq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "magicsq/charpoly.hpp"

namespace magicsq {

namespace {

using Complex = std::complex<double>;

// |det| via Gaussian elimination with partial pivoting, plus the Hadamard
// row-norm bound. An eigenvector matrix counts as invertible when its
// determinant is within twelve orders of magnitude of that bound.
bool plausibly_invertible(const ComplexMatrix& s) {
    const int n = s.rows();
    if (n != s.cols()) return false;

    ComplexMatrix lu = s;
    double log_abs_det = 0.0;
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        double best = std::abs(lu(k, k));
        for (int i = k + 1; i < n; ++i)
            if (std::abs(lu(i, k)) > best) {
                best = std::abs(lu(i, k));
                pivot = i;
            }
        if (best == 0.0) return false;
        if (pivot != k)
            for (int j = 0; j < n; ++j) std::swap(lu(k, j), lu(pivot, j));
        log_abs_det += std::log(best);
        for (int i = k + 1; i < n; ++i) {
            const Complex f = lu(i, k) / lu(k, k);
            for (int j = k; j < n; ++j) lu(i, j) -= f * lu(k, j);
        }
    }

    double log_hadamard = 0.0;
    for (int i = 0; i < n; ++i) {
        double row_sq = 0.0;
        for (int j = 0; j < n; ++j) row_sq += std::norm(s(i, j));
        if (row_sq == 0.0) return false;
        log_hadamard += 0.5 * std::log(row_sq);
    }
    return log_abs_det >= log_hadamard + std::log(1e-12);
}

void require_square_system(const IntSquare& m, const EigenSystem& e) {
    const int n = m.order();
    if (e.s.rows() != n || e.s.cols() != n || e.j.rows() != n || e.j.cols() != n)
        throw ShapeError("eigen system shape does not match the square");
}

// E_k S = S D_Ek: the seed's eigenvector matrix must also diagonalize the
// ones matrix, which is what makes the compounding formulas valid.
bool shares_ones_eigenvectors(int order, const ComplexMatrix& s, double tol) {
    const ComplexMatrix e = to_complex(ones_matrix(order));
    const ComplexMatrix lhs = multiply(e, s);
    const ComplexMatrix rhs = multiply(s, ones_eigen_diagonal(order));
    return frobenius_norm(subtract(lhs, rhs)) <= tol * std::max(1.0, frobenius_norm(e));
}

bool shares_ones_singular_frame(int order, const RealMatrix& u, const RealMatrix& v, double tol) {
    const RealMatrix e = to_real(ones_matrix(order));
    const RealMatrix recon =
        multiply(multiply(u, diagonal_matrix(ones_svd_diagonal(order))), transpose(v));
    return frobenius_norm(subtract(e, recon)) <= tol * std::max(1.0, frobenius_norm(e));
}

} // namespace

ComplexMatrix ones_eigen_diagonal(int n) {
    if (n < 1) throw PreconditionError("ones_eigen_diagonal: n must be >= 1");
    ComplexMatrix d(n, n);
    d(0, 0) = {static_cast<double>(n), 0.0};
    return d;
}

std::vector<double> ones_svd_diagonal(int n) {
    if (n < 1) throw PreconditionError("ones_svd_diagonal: n must be >= 1");
    std::vector<double> d(static_cast<std::size_t>(n), 0.0);
    d[0] = static_cast<double>(n);
    return d;
}

EigenVerdict verify_eigen(const IntSquare& m, const EigenSystem& e, double tol) {
    if (tol <= 0) throw PreconditionError("verify_eigen: tol must be positive");
    require_square_system(m, e);
    const ComplexMatrix mc = to_complex(m);
    const double residual = frobenius_norm(subtract(multiply(mc, e.s), multiply(e.s, e.j)));
    const bool pass = residual <= tol * std::max(1.0, frobenius_norm(m));
    return {pass, residual};
}

SvdVerdict verify_svd(const IntSquare& m, const SvdSystem& s, double tol) {
    if (tol <= 0) throw PreconditionError("verify_svd: tol must be positive");
    const int n = m.order();
    if (s.u.rows() != n || s.u.cols() != n || s.v.rows() != n || s.v.cols() != n ||
        static_cast<int>(s.sigma.size()) != n)
        throw ShapeError("svd system shape does not match the square");

    SvdVerdict verdict;
    const RealMatrix id = identity<double>(n);
    verdict.u_orthogonality = frobenius_norm(subtract(multiply(transpose(s.u), s.u), id));
    verdict.v_orthogonality = frobenius_norm(subtract(multiply(transpose(s.v), s.v), id));
    const RealMatrix recon =
        multiply(multiply(s.u, diagonal_matrix(s.sigma)), transpose(s.v));
    verdict.reconstruction = frobenius_norm(subtract(to_real(m), recon));
    verdict.sigma_nonnegative =
        std::all_of(s.sigma.begin(), s.sigma.end(), [](double x) { return x >= 0.0; });

    verdict.pass = verdict.sigma_nonnegative && verdict.u_orthogonality <= tol &&
                   verdict.v_orthogonality <= tol &&
                   verdict.reconstruction <= tol * std::max(1.0, frobenius_norm(m));
    return verdict;
}

CompoundEigen compound_eigen(const IntSquare& seed_m, const EigenSystem& eig_m,
                             const IntSquare& seed_n, const EigenSystem& eig_n, double tol) {
    if (!verify_eigen(seed_m, eig_m, tol).pass || !verify_eigen(seed_n, eig_n, tol).pass)
        throw PreconditionError("compound_eigen: seed system fails MS = SJ");
    if (!shares_ones_eigenvectors(seed_m.order(), eig_m.s, tol) ||
        !shares_ones_eigenvectors(seed_n.order(), eig_n.s, tol))
        throw PreconditionError("compound_eigen: seed S does not diagonalize the ones matrix");
    if (!plausibly_invertible(eig_m.s) || !plausibly_invertible(eig_n.s))
        throw PreconditionError("compound_eigen: seed S is numerically singular");

    const int m = seed_m.order();
    const int n = seed_n.order();
    return {kron(eig_m.s, eig_n.s), kron(ones_eigen_diagonal(m), eig_n.j),
            kron(eig_m.j, ones_eigen_diagonal(n)), m, n};
}

std::pair<ComplexMatrix, ComplexMatrix> compose_eigen_m(const ComplexMatrix& j_a,
                                                        const ComplexMatrix& j_b, int m, int n) {
    if (j_a.rows() != j_b.rows() || j_a.cols() != j_b.cols())
        throw ShapeError("compose_eigen_m: shape mismatch");
    const Complex n2{static_cast<double>(n) * n, 0.0};
    const Complex m2{static_cast<double>(m) * m, 0.0};
    return {add(j_a, scale(n2, j_b)), add(j_b, scale(m2, j_a))};
}

CompoundSvd compound_svd(const IntSquare& seed_m, const SvdSystem& svd_m,
                         const IntSquare& seed_n, const SvdSystem& svd_n, double tol) {
    if (!verify_svd(seed_m, svd_m, tol).pass || !verify_svd(seed_n, svd_n, tol).pass)
        throw PreconditionError("compound_svd: seed SVD fails verification");
    if (!shares_ones_singular_frame(seed_m.order(), svd_m.u, svd_m.v, tol) ||
        !shares_ones_singular_frame(seed_n.order(), svd_n.u, svd_n.v, tol))
        throw PreconditionError("compound_svd: seed U,V do not decompose the ones matrix");

    const int m = seed_m.order();
    const int n = seed_n.order();
    return {kron(svd_m.u, svd_n.u), kron(svd_m.v, svd_n.v),
            kron_diagonal(ones_svd_diagonal(m), svd_n.sigma),
            kron_diagonal(svd_m.sigma, ones_svd_diagonal(n)), m, n};
}

std::pair<std::vector<double>, std::vector<double>> compose_svd_m(
    const std::vector<double>& sigma_a, const std::vector<double>& sigma_b, int m, int n) {
    if (sigma_a.size() != sigma_b.size()) throw ShapeError("compose_svd_m: length mismatch");
    const double n2 = static_cast<double>(n) * n;
    const double m2 = static_cast<double>(m) * m;
    std::vector<double> ma(sigma_a.size()), mb(sigma_a.size());
    for (std::size_t i = 0; i < sigma_a.size(); ++i) {
        ma[i] = sigma_a[i] + n2 * sigma_b[i];
        mb[i] = sigma_b[i] + m2 * sigma_a[i];
    }
    return {std::move(ma), std::move(mb)};
}

std::vector<double> jacobi_singular_values(const IntSquare& m) {
    const int n = m.order();
    const IntSquare gram = multiply(m, transpose(m)); // exact, PSD

    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i) * n + j] = static_cast<double>(gram(i, j));
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    double norm_sq = 0.0;
    for (double v : a) norm_sq += v * v;
    const double threshold = 1e-24 * norm_sq;

    auto off_mass = [&] {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += 2.0 * at(p, q) * at(p, q);
        return off;
    };

    constexpr int kMaxSweeps = 100;
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_mass() <= threshold) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                at(p, p) -= t * apq;
                at(q, q) += t * apq;
                at(p, q) = at(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = at(p, k) = c * akp - s * akq;
                    at(k, q) = at(q, k) = s * akp + c * akq;
                }
            }
    }
    if (!converged && off_mass() > threshold)
        throw ConvergenceError("jacobi_singular_values: no convergence within 100 sweeps");

    // Eigenvalues below the numerical-rank floor are roundoff debris of an
    // exactly rank-deficient Gram matrix; the square root would otherwise
    // amplify them into spurious small singular values.
    double lambda_max = 0.0;
    for (int i = 0; i < n; ++i) lambda_max = std::max(lambda_max, at(i, i));
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * lambda_max * n;

    std::vector<double> singular(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double lambda = std::max(at(i, i), 0.0);
        singular[static_cast<std::size_t>(i)] = lambda <= floor ? 0.0 : std::sqrt(lambda);
    }
    std::sort(singular.begin(), singular.end(), std::greater<>());
    return singular;
}

bool spectrum_claim_check(const IntSquare& m, const std::vector<BigPoly>& claim) {
    return exact_factor_check(charpoly_exact(m), claim);
}

std::vector<double> kron_diagonal(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out;
    out.reserve(a.size() * b.size());
    for (double x : a)
        for (double y : b) out.push_back(x * y);
    return out;
}

} // namespace magicsq
