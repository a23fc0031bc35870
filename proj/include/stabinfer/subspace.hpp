#pragma once

#include "stabinfer/types.hpp"

#include <filesystem>
#include <variant>

namespace stabinfer {

/// Column-orthonormal basis V of an (approximate) reachability subspace,
/// together with the singular values that were kept and dropped when it
/// was built from data.
class Basis {
 public:
  Basis() = default;
  explicit Basis(Matrix v, Vector retained = Vector(),
                 Vector discarded = Vector());

  static Basis identity(Index n);

  const Matrix& v() const { return v_; }
  Index dim() const { return v_.cols(); }
  Index ambient_dim() const { return v_.rows(); }
  const Vector& singular_values_retained() const { return retained_; }
  const Vector& singular_values_discarded() const { return discarded_; }

 private:
  Matrix v_;
  Vector retained_;
  Vector discarded_;
};

struct FixedDim {
  Index r = 0;
};

/// Keeps the smallest r whose discarded tail energy (sum of squared
/// singular values) stays within the given fraction of the total.
struct EnergyTol {
  double eps = 0.0;
};

using BasisRule = std::variant<FixedDim, EnergyTol>;

/// Leading left singular vectors of the column concatenation [X- X+].
Basis basis_from_data(const Matrix& x_minus, const Matrix& x_plus,
                      const BasisRule& rule);

/// Relative energy outside the subspace: |X - V V^T X|_F / max(1, |X|_F).
double truncation_residual(const Matrix& x, const Basis& basis);

/// Basis persistence: the matrix in matkit format plus a sidecar
/// "<path>.sigma" listing retained then discarded singular values.
void write_basis(const std::filesystem::path& path, const Basis& basis);
Basis read_basis(const std::filesystem::path& path);

}  // namespace stabinfer
