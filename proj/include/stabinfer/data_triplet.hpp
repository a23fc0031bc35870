#pragma once

#include "stabinfer/types.hpp"

namespace stabinfer {

/// Sampled data (U-, X-, X+): inputs, states, and successor states
/// (discrete) or state derivatives (continuous), column k belonging to
/// sample k.
struct DataTriplet {
  Matrix u_minus;  // p x T
  Matrix x_minus;  // N x T
  Matrix x_plus;   // N x T
  TimeDomain domain = TimeDomain::Discrete;

  Index samples() const { return x_minus.cols(); }
  Index state_dim() const { return x_minus.rows(); }
  Index input_dim() const { return u_minus.rows(); }
};

/// Throws ShapeError unless all three matrices share the column count and
/// the state matrices share the row count.
void validate_triplet(const DataTriplet& triplet);

}  // namespace stabinfer
