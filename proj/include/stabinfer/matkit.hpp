#pragma once

#include "stabinfer/types.hpp"

namespace stabinfer {

/// Relative cutoff under which singular values count as zero.
inline constexpr double kDefaultRankTol = 1e-10;

/// Half-width of the rejection band around the stability boundary used by
/// spectral_split.
inline constexpr double kDefaultSplitTol = 1e-8;

/// Thin SVD, M = U * diag(s) * W^T with U, W column-orthonormal and s
/// nonincreasing.
struct SvdResult {
  Matrix left_vectors;
  Vector singular_values;
  Matrix right_vectors;
};

/// Ordered Schur-style decomposition with the boundary-violating block
/// leading: M = [unstable_basis stable_basis] * transformed_A * [...]^T.
struct SpectralSplit {
  Matrix unstable_basis;
  Matrix stable_basis;
  Matrix transformed_A;
  Index n_unstable = 0;
};

SvdResult svd(const Matrix& m);

/// Moore-Penrose pseudoinverse; singular values below rank_tol * sigma_max
/// are truncated.
Matrix pinv(const Matrix& m, double rank_tol = kDefaultRankTol);

/// Numerical rank of m at the given relative tolerance.
Index numerical_rank(const Matrix& m, double rank_tol = kDefaultRankTol);

ComplexVector eigenvalues(const Matrix& m);

/// Distance of the spectrum from the stability boundary: 1 - max|lambda|
/// (discrete) or -max Re(lambda) (continuous). Positive iff asymptotically
/// stable. An empty matrix has no spectrum and reports +infinity.
double spectral_margin(const Matrix& m, TimeDomain domain);

/// Splits the spectrum into boundary-violating and stable parts via a
/// reordered real Schur form. Throws BoundaryEigenvalueError if any
/// eigenvalue lies within split_tol of the boundary.
SpectralSplit spectral_split(const Matrix& m, TimeDomain domain,
                             double split_tol = kDefaultSplitTol);

/// Solves A X + X A^T + Q = 0 (continuous) or A X A^T - X + Q = 0
/// (discrete) by Bartels-Stewart back-substitution over the real Schur
/// form of A.
Matrix solve_lyapunov(const Matrix& a, const Matrix& q, TimeDomain domain);

namespace detail {
void require_finite(const Matrix& m, const char* what);
}

}  // namespace stabinfer
