#include "stabinfer/subspace.hpp"

#include "stabinfer/errors.hpp"
#include "stabinfer/matio.hpp"
#include "stabinfer/matkit.hpp"

#include <algorithm>
#include <fstream>

namespace stabinfer {

Basis::Basis(Matrix v, Vector retained, Vector discarded)
    : v_(std::move(v)),
      retained_(std::move(retained)),
      discarded_(std::move(discarded)) {
  const Index r = v_.cols();
  if ((v_.transpose() * v_ - Matrix::Identity(r, r)).norm() > 1e-10) {
    throw ShapeError("Basis: columns are not orthonormal");
  }
  if (retained_.size() > 0 && discarded_.size() > 0 &&
      retained_.minCoeff() < discarded_.maxCoeff()) {
    throw ShapeError("Basis: a discarded singular value exceeds a retained one");
  }
}

Basis Basis::identity(Index n) {
  return Basis(Matrix::Identity(n, n), Vector::Ones(n), Vector());
}

Basis basis_from_data(const Matrix& x_minus, const Matrix& x_plus,
                      const BasisRule& rule) {
  if (x_minus.rows() != x_plus.rows()) {
    throw ShapeError("basis_from_data: row counts differ");
  }
  if (x_minus.rows() == 0 || x_minus.cols() + x_plus.cols() == 0) {
    throw Error("basis_from_data: empty data");
  }
  Matrix snapshots(x_minus.rows(), x_minus.cols() + x_plus.cols());
  snapshots << x_minus, x_plus;
  const SvdResult dec = svd(snapshots);
  const Vector& sigma = dec.singular_values;

  Index r = 0;
  if (const auto* fixed = std::get_if<FixedDim>(&rule)) {
    if (fixed->r < 0 || fixed->r > sigma.size()) {
      throw ShapeError("basis_from_data: requested dimension out of range");
    }
    r = fixed->r;
  } else {
    const double eps = std::get<EnergyTol>(rule).eps;
    const double total = sigma.squaredNorm();
    if (total == 0.0) {
      r = 0;
    } else {
      double tail = total;
      r = 0;
      while (r < sigma.size() && tail > eps * total) {
        tail -= sigma(r) * sigma(r);
        ++r;
      }
    }
  }

  return Basis(dec.left_vectors.leftCols(r), sigma.head(r),
               sigma.tail(sigma.size() - r));
}

double truncation_residual(const Matrix& x, const Basis& basis) {
  if (x.rows() != basis.ambient_dim()) {
    throw ShapeError("truncation_residual: row count does not match basis");
  }
  const Matrix residual = x - basis.v() * (basis.v().transpose() * x);
  return residual.norm() / std::max(1.0, x.norm());
}

void write_basis(const std::filesystem::path& path, const Basis& basis) {
  write_matrix(path, basis.v());
  std::ofstream sidecar(path.string() + ".sigma");
  if (!sidecar) {
    throw FormatError("cannot open for writing: " + path.string() + ".sigma");
  }
  sidecar << "retained " << basis.singular_values_retained().size() << '\n';
  for (Index i = 0; i < basis.singular_values_retained().size(); ++i) {
    sidecar << format_scalar(basis.singular_values_retained()(i)) << '\n';
  }
  sidecar << "discarded " << basis.singular_values_discarded().size() << '\n';
  for (Index i = 0; i < basis.singular_values_discarded().size(); ++i) {
    sidecar << format_scalar(basis.singular_values_discarded()(i)) << '\n';
  }
}

Basis read_basis(const std::filesystem::path& path) {
  const Matrix v = read_matrix(path);
  std::ifstream sidecar(path.string() + ".sigma");
  if (!sidecar) {
    return Basis(v);
  }
  auto read_section = [&](const char* tag) {
    std::string label;
    Index count = 0;
    if (!(sidecar >> label >> count) || label != tag || count < 0) {
      throw FormatError("basis sidecar: expected '" + std::string(tag) +
                        " <count>'");
    }
    Vector values(count);
    for (Index i = 0; i < count; ++i) {
      if (!(sidecar >> values(i))) {
        throw FormatError("basis sidecar: truncated value list");
      }
    }
    return values;
  };
  Vector retained = read_section("retained");
  Vector discarded = read_section("discarded");
  return Basis(v, std::move(retained), std::move(discarded));
}

}  // namespace stabinfer
