#include "stabinfer/matkit.hpp"

#include "stabinfer/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <vector>

namespace stabinfer {

namespace detail {

void require_finite(const Matrix& m, const char* what) {
  if (!m.allFinite()) {
    throw NonFiniteError(std::string(what) + ": non-finite entries");
  }
}

}  // namespace detail

SvdResult svd(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw ShapeError("svd: empty matrix");
  }
  detail::require_finite(m, "svd");
  Eigen::BDCSVD<Matrix> dec(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return SvdResult{dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

Matrix pinv(const Matrix& m, double rank_tol) {
  if (rank_tol < 0.0) {
    throw Error("pinv: rank_tol must be nonnegative");
  }
  if (m.rows() == 0 || m.cols() == 0) {
    return Matrix::Zero(m.cols(), m.rows());
  }
  const SvdResult dec = svd(m);
  const double cutoff = rank_tol * dec.singular_values(0);
  Vector inv = Vector::Zero(dec.singular_values.size());
  for (Index i = 0; i < inv.size(); ++i) {
    const double s = dec.singular_values(i);
    if (s > cutoff && s > 0.0) inv(i) = 1.0 / s;
  }
  return dec.right_vectors * inv.asDiagonal() * dec.left_vectors.transpose();
}

Index numerical_rank(const Matrix& m, double rank_tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const Vector s = svd(m).singular_values;
  if (s(0) <= 0.0) return 0;
  const double cutoff = rank_tol * s(0);
  Index rank = 0;
  while (rank < s.size() && s(rank) > cutoff) ++rank;
  return rank;
}

ComplexVector eigenvalues(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw ShapeError("eigenvalues: matrix must be square");
  }
  if (m.rows() == 0) return ComplexVector(0);
  detail::require_finite(m, "eigenvalues");
  Eigen::EigenSolver<Matrix> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw NoConvergenceError("eigenvalues: QR iteration did not converge");
  }
  return solver.eigenvalues();
}

double spectral_margin(const Matrix& m, TimeDomain domain) {
  if (m.rows() == 0 && m.cols() == 0) {
    return std::numeric_limits<double>::infinity();
  }
  const ComplexVector lambda = eigenvalues(m);
  if (domain == TimeDomain::Discrete) {
    double radius = 0.0;
    for (Index i = 0; i < lambda.size(); ++i) {
      radius = std::max(radius, std::abs(lambda(i)));
    }
    return 1.0 - radius;
  }
  double abscissa = -std::numeric_limits<double>::infinity();
  for (Index i = 0; i < lambda.size(); ++i) {
    abscissa = std::max(abscissa, lambda(i).real());
  }
  return -abscissa;
}

namespace {

struct SchurBlock {
  Index start;
  Index size;
  bool unstable;
};

bool is_unstable(const Complex& lambda, TimeDomain domain, double split_tol,
                 const char* what) {
  if (domain == TimeDomain::Discrete) {
    const double r = std::abs(lambda);
    if (r >= 1.0 - split_tol && r <= 1.0 + split_tol) {
      throw BoundaryEigenvalueError(std::string(what) +
                                    ": eigenvalue on the unit circle band");
    }
    return r > 1.0;
  }
  const double re = lambda.real();
  if (std::abs(re) <= split_tol) {
    throw BoundaryEigenvalueError(std::string(what) +
                                  ": eigenvalue on the imaginary-axis band");
  }
  return re > 0.0;
}

// Eigenvalues of a 1x1 or standardized 2x2 Schur diagonal block.
Complex block_eigenvalue(const Matrix& t, Index p, Index size) {
  if (size == 1) return Complex(t(p, p), 0.0);
  const double a = t(p, p), b = t(p, p + 1);
  const double c = t(p + 1, p), d = t(p + 1, p + 1);
  const double tr = a + d;
  const double det = a * d - b * c;
  const double disc = 0.25 * tr * tr - det;
  if (disc >= 0.0) {
    // Degenerate real pair; report the root further from the origin.
    const double r1 = 0.5 * tr + std::sqrt(disc);
    const double r2 = 0.5 * tr - std::sqrt(disc);
    return Complex(std::abs(r1) > std::abs(r2) ? r1 : r2, 0.0);
  }
  return Complex(0.5 * tr, std::sqrt(-disc));
}

std::vector<SchurBlock> scan_blocks(const Matrix& t) {
  std::vector<SchurBlock> blocks;
  const Index n = t.rows();
  Index i = 0;
  while (i < n) {
    const Index size = (i + 1 < n && t(i + 1, i) != 0.0) ? 2 : 1;
    blocks.push_back({i, size, false});
    i += size;
  }
  return blocks;
}

// Solve t11*Y - Y*t22 = rhs for blocks of size <= 2 via the Kronecker form.
Matrix solve_small_sylvester(const Matrix& t11, const Matrix& t22,
                             const Matrix& rhs) {
  const Index b1 = t11.rows();
  const Index b2 = t22.rows();
  Matrix sys = Matrix::Zero(b1 * b2, b1 * b2);
  for (Index j = 0; j < b2; ++j) {
    sys.block(j * b1, j * b1, b1, b1) = t11;
    for (Index l = 0; l < b2; ++l) {
      for (Index i = 0; i < b1; ++i) {
        sys(j * b1 + i, l * b1 + i) -= t22(l, j);
      }
    }
  }
  Eigen::FullPivLU<Matrix> lu(sys);
  if (!lu.isInvertible()) {
    throw SingularSylvesterError("spectral_split: block spectra overlap");
  }
  Vector vec_rhs(b1 * b2);
  for (Index j = 0; j < b2; ++j) vec_rhs.segment(j * b1, b1) = rhs.col(j);
  const Vector y = lu.solve(vec_rhs);
  Matrix out(b1, b2);
  for (Index j = 0; j < b2; ++j) out.col(j) = y.segment(j * b1, b1);
  return out;
}

// Swap the adjacent diagonal blocks k and k+1 (Bai-Demmel direct swap),
// updating t, u and the block list in place.
void swap_adjacent_blocks(Matrix& t, Matrix& u,
                          std::vector<SchurBlock>& blocks, std::size_t k) {
  const Index p = blocks[k].start;
  const Index b1 = blocks[k].size;
  const Index b2 = blocks[k + 1].size;
  const Index m = b1 + b2;
  const Index n = t.rows();

  const Matrix t11 = t.block(p, p, b1, b1);
  const Matrix t22 = t.block(p + b1, p + b1, b2, b2);
  const Matrix t12 = t.block(p, p + b1, b1, b2);

  // Columns of [Y; I] span the invariant subspace of the trailing block.
  const Matrix y = solve_small_sylvester(t11, t22, -t12);
  Matrix z(m, b2);
  z.topRows(b1) = y;
  z.bottomRows(b2) = Matrix::Identity(b2, b2);
  Eigen::HouseholderQR<Matrix> qr(z);
  const Matrix q = qr.householderQ() * Matrix::Identity(m, m);

  t.block(p, 0, m, n) = q.transpose() * t.block(p, 0, m, n);
  t.block(0, p, n, m) = t.block(0, p, n, m) * q;
  u.block(0, p, n, m) = u.block(0, p, n, m) * q;
  t.block(p + b2, p, b1, b2).setZero();

  std::swap(blocks[k].size, blocks[k + 1].size);
  std::swap(blocks[k].unstable, blocks[k + 1].unstable);
  blocks[k + 1].start = p + blocks[k].size;
}

}  // namespace

SpectralSplit spectral_split(const Matrix& m, TimeDomain domain,
                             double split_tol) {
  if (m.rows() != m.cols()) {
    throw ShapeError("spectral_split: matrix must be square");
  }
  detail::require_finite(m, "spectral_split");
  const Index n = m.rows();
  if (n == 0) {
    return SpectralSplit{Matrix(0, 0), Matrix(0, 0), Matrix(0, 0), 0};
  }

  Eigen::RealSchur<Matrix> schur(m);
  if (schur.info() != Eigen::Success) {
    throw NoConvergenceError("spectral_split: Schur iteration failed");
  }
  Matrix t = schur.matrixT();
  Matrix u = schur.matrixU();

  std::vector<SchurBlock> blocks = scan_blocks(t);
  for (auto& block : blocks) {
    block.unstable = is_unstable(block_eigenvalue(t, block.start, block.size),
                                 domain, split_tol, "spectral_split");
  }

  // Bubble every unstable block above the stable ones.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < blocks.size(); ++k) {
      if (!blocks[k].unstable && blocks[k + 1].unstable) {
        swap_adjacent_blocks(t, u, blocks, k);
        changed = true;
      }
    }
  }

  Index n_unstable = 0;
  for (const auto& block : blocks) {
    if (block.unstable) n_unstable += block.size;
  }
  return SpectralSplit{u.leftCols(n_unstable), u.rightCols(n - n_unstable), t,
                       n_unstable};
}

namespace {

// One diagonal-block step of Bartels-Stewart. Solves
//   t_ii * Y_ij + Y_ij * t_jj^T = rhs          (continuous)
//   t_ii * Y_ij * t_jj^T - Y_ij = rhs          (discrete)
Matrix solve_block_equation(const Matrix& tii, const Matrix& tjj,
                            const Matrix& rhs, TimeDomain domain) {
  const Index p = tii.rows();
  const Index q = tjj.rows();
  Matrix sys = Matrix::Zero(p * q, p * q);
  if (domain == TimeDomain::Continuous) {
    for (Index j = 0; j < q; ++j) {
      sys.block(j * p, j * p, p, p) += tii;
      for (Index l = 0; l < q; ++l) {
        for (Index i = 0; i < p; ++i) sys(j * p + i, l * p + i) += tjj(j, l);
      }
    }
  } else {
    // vec(tii * Y * tjj^T) = (tjj kron tii) vec(Y)
    for (Index j = 0; j < q; ++j) {
      for (Index l = 0; l < q; ++l) {
        sys.block(j * p, l * p, p, p) += tjj(j, l) * tii;
      }
    }
    sys -= Matrix::Identity(p * q, p * q);
  }
  Eigen::FullPivLU<Matrix> lu(sys);
  if (!lu.isInvertible()) {
    throw SingularSylvesterError(
        "solve_lyapunov: spectrum violates the solvability condition");
  }
  Vector vec_rhs(p * q);
  for (Index j = 0; j < q; ++j) vec_rhs.segment(j * p, p) = rhs.col(j);
  const Vector y = lu.solve(vec_rhs);
  Matrix out(p, q);
  for (Index j = 0; j < q; ++j) out.col(j) = y.segment(j * p, p);
  return out;
}

}  // namespace

Matrix solve_lyapunov(const Matrix& a, const Matrix& q, TimeDomain domain) {
  if (a.rows() != a.cols()) {
    throw ShapeError("solve_lyapunov: A must be square");
  }
  if (q.rows() != a.rows() || q.cols() != a.cols()) {
    throw ShapeError("solve_lyapunov: Q must match A");
  }
  detail::require_finite(a, "solve_lyapunov");
  detail::require_finite(q, "solve_lyapunov");
  const Index n = a.rows();
  if (n == 0) return Matrix(0, 0);
  const double q_scale = q.norm();
  if ((q - q.transpose()).norm() > 1e-8 * std::max(1.0, q_scale)) {
    throw ShapeError("solve_lyapunov: Q must be symmetric");
  }

  Eigen::RealSchur<Matrix> schur(a);
  if (schur.info() != Eigen::Success) {
    throw NoConvergenceError("solve_lyapunov: Schur iteration failed");
  }
  const Matrix t = schur.matrixT();
  const Matrix u = schur.matrixU();
  const std::vector<SchurBlock> blocks = scan_blocks(t);
  const Index nb = static_cast<Index>(blocks.size());

  // Transformed equation: T Y + Y T^T = C  or  T Y T^T - Y = C.
  const Matrix c = -u.transpose() * ((q + q.transpose()) * 0.5) * u;
  Matrix y = Matrix::Zero(n, n);

  for (Index jb = nb - 1; jb >= 0; --jb) {
    const auto& bj = blocks[jb];
    // h = sum over later column blocks of Y(:, l) * T(j, l)^T; for the
    // discrete case the full equation block is
    //   T_ii Y_ij T_jj^T - Y_ij = C_ij - (T h)_i - (sum_{k>i} T_ik Y_kj) T_jj^T.
    Matrix h = Matrix::Zero(n, bj.size);
    for (Index lb = jb + 1; lb < nb; ++lb) {
      const auto& bl = blocks[lb];
      h += y.block(0, bl.start, n, bl.size) *
           t.block(bj.start, bl.start, bj.size, bl.size).transpose();
    }
    const Matrix th =
        domain == TimeDomain::Discrete ? Matrix(t * h) : Matrix(0, 0);
    const Matrix tjj = t.block(bj.start, bj.start, bj.size, bj.size);
    for (Index ib = nb - 1; ib >= 0; --ib) {
      const auto& bi = blocks[ib];
      Matrix rhs = c.block(bi.start, bj.start, bi.size, bj.size);
      Matrix below = Matrix::Zero(bi.size, bj.size);
      for (Index kb = ib + 1; kb < nb; ++kb) {
        const auto& bk = blocks[kb];
        below += t.block(bi.start, bk.start, bi.size, bk.size) *
                 y.block(bk.start, bj.start, bk.size, bj.size);
      }
      if (domain == TimeDomain::Continuous) {
        rhs -= below;
        rhs -= h.block(bi.start, 0, bi.size, bj.size);
      } else {
        rhs -= th.block(bi.start, 0, bi.size, bj.size);
        rhs -= below * tjj.transpose();
      }
      y.block(bi.start, bj.start, bi.size, bj.size) =
          solve_block_equation(t.block(bi.start, bi.start, bi.size, bi.size),
                               tjj, rhs, domain);
    }
  }

  Matrix x = u * y * u.transpose();
  return 0.5 * (x + x.transpose());
}

}  // namespace stabinfer
