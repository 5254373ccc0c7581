#pragma once

#include <utility>
#include <vector>

#include "magicsq/big_poly.hpp"
#include "magicsq/dense_matrix.hpp"
#include "magicsq/int_square.hpp"

namespace magicsq {

/// Default relative Frobenius tolerance for decomposition checks. Seed
/// constants involve sqrt(3), sqrt(5), sqrt(6) in double precision and
/// entries are O(10^2), so this leaves ample headroom.
inline constexpr double kDefaultTol = 1e-9;

/// Eigenvector matrix S and eigenvalue matrix J with M S = S J. J is upper
/// triangular; compounded systems may carry Jordan-block structure away
/// from the canonical superdiagonal layout, so MS = SJ is the whole
/// verification contract.
struct EigenSystem {
    ComplexMatrix s;
    ComplexMatrix j;
};

/// Orthogonal U, V and the diagonal sigma (stored unsorted, in the layout
/// the decomposition produced) with M = U diag(sigma) V^T.
struct SvdSystem {
    RealMatrix u;
    std::vector<double> sigma;
    RealMatrix v;
};

/// D_En = diag[n, 0, ..., 0]: the eigenvalue matrix of E_n in the shared
/// eigenvector basis of any magic square's S.
ComplexMatrix ones_eigen_diagonal(int n);

/// Sigma_En = diag[n, 0, ..., 0]: E_n's singular values (same U, V as the
/// magic square's).
std::vector<double> ones_svd_diagonal(int n);

struct EigenVerdict {
    bool pass = false;
    double residual = 0.0; // ||M s - s j||_F
};

/// Passes iff ||M s - s j||_F <= tol * max(1, ||M||_F).
EigenVerdict verify_eigen(const IntSquare& m, const EigenSystem& e, double tol = kDefaultTol);

struct SvdVerdict {
    bool pass = false;
    double u_orthogonality = 0.0;  // ||U^T U - I||_F
    double v_orthogonality = 0.0;  // ||V^T V - I||_F
    double reconstruction = 0.0;   // ||M - U diag(sigma) V^T||_F
    bool sigma_nonnegative = true;
};

/// Passes iff U and V are orthogonal to tol, M reconstructs to
/// tol * max(1, ||M||_F), and every singular value is >= 0.
SvdVerdict verify_svd(const IntSquare& m, const SvdSystem& s, double tol = kDefaultTol);

/// Compounded Jordan data for A = E_m (x) M_n and B = M_m (x) E_n:
/// s = S_m (x) S_n, j_a = D_Em (x) J_Mn, j_b = J_Mm (x) D_En, so that
/// A s = s j_a and B s = s j_b.
struct CompoundEigen {
    ComplexMatrix s;
    ComplexMatrix j_a;
    ComplexMatrix j_b;
    int m;
    int n;
};

/// Verifies both seed systems (MS = SJ, the shared-eigenvector property
/// E S = S D_E, and invertibility of S) before compounding; throws
/// PreconditionError on unverifiable input.
CompoundEigen compound_eigen(const IntSquare& seed_m, const EigenSystem& eig_m,
                             const IntSquare& seed_n, const EigenSystem& eig_n,
                             double tol = kDefaultTol);

/// (J_MA, J_MB) = (J_A + n^2 J_B, J_B + m^2 J_A): the eigenvalue matrices
/// of the Euler-composed squares in the shared S basis.
std::pair<ComplexMatrix, ComplexMatrix> compose_eigen_m(const ComplexMatrix& j_a,
                                                        const ComplexMatrix& j_b, int m, int n);

/// Compounded SVD data: u = U_m (x) U_n, v = V_m (x) V_n,
/// sigma_a = Sigma_Em (x) Sigma_Mn, sigma_b = Sigma_Mm (x) Sigma_En.
struct CompoundSvd {
    RealMatrix u;
    RealMatrix v;
    std::vector<double> sigma_a;
    std::vector<double> sigma_b;
    int m;
    int n;
};

/// Verifies both seed SVDs and the shared-U,V property for the ones matrix
/// before compounding; throws PreconditionError on unverifiable input.
CompoundSvd compound_svd(const IntSquare& seed_m, const SvdSystem& svd_m,
                         const IntSquare& seed_n, const SvdSystem& svd_n,
                         double tol = kDefaultTol);

/// (Sigma_MA, Sigma_MB) = (sigma_a + n^2 sigma_b, sigma_b + m^2 sigma_a),
/// elementwise; coefficients match the Euler composition MA = A + n^2 B.
std::pair<std::vector<double>, std::vector<double>> compose_svd_m(
    const std::vector<double>& sigma_a, const std::vector<double>& sigma_b, int m, int n);

/// Singular values of M by cyclic Jacobi diagonalization of M M^T (formed
/// exactly in integers first). Sweeps until the off-diagonal squared mass
/// is <= 1e-24 * ||M M^T||_F^2, at most 100 sweeps, then returns the
/// square roots of the eigenvalues sorted descending. Negative roundoff
/// eigenvalues clamp to zero, as do values below the numerical-rank floor.
std::vector<double> jacobi_singular_values(const IntSquare& m);

/// True iff the product of the claimed factors equals the exact
/// characteristic polynomial of M.
bool spectrum_claim_check(const IntSquare& m, const std::vector<BigPoly>& claim);

/// Kronecker product of two diagonals, as vectors.
std::vector<double> kron_diagonal(const std::vector<double>& a, const std::vector<double>& b);

} // namespace magicsq
