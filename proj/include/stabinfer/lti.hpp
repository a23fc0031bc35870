#pragma once

#include "stabinfer/data_triplet.hpp"
#include "stabinfer/matkit.hpp"
#include "stabinfer/subspace.hpp"
#include "stabinfer/types.hpp"

#include <filesystem>
#include <vector>

namespace stabinfer {

/// State-space model x(t+1) = A x(t) + B u(t) (discrete) or
/// x'(t) = A x(t) + B u(t) (continuous). X0 is a full-column-rank basis of
/// the feasible initial-condition subspace; zero columns means {0}.
class LtiModel {
 public:
  LtiModel(Matrix a, Matrix b, TimeDomain domain, Matrix x0 = Matrix());

  const Matrix& a() const { return a_; }
  const Matrix& b() const { return b_; }
  const Matrix& x0() const { return x0_; }
  TimeDomain domain() const { return domain_; }
  Index order() const { return a_.rows(); }
  Index inputs() const { return b_.cols(); }

 private:
  Matrix a_;
  Matrix b_;
  Matrix x0_;
  TimeDomain domain_ = TimeDomain::Discrete;
};

/// Orthogonal staircase coordinates separating input-controllable,
/// initial-condition-excited, and inert state components:
///   S^T A S = [A11 A12 A13; 0 A22 A23; 0 0 A33],
///   S^T B   = [B1; 0; 0],   S^T X0 = [X10; X20; 0],
/// with block sizes (n_controllable, n_excited, n_rest) and n_rest maximal.
struct StaircaseForm {
  Matrix s;
  Index n_controllable = 0;
  Index n_excited = 0;
  Index n_rest = 0;
  Matrix transformed_a;
  Matrix transformed_b;
  Matrix transformed_x0;
};

struct ContinuousTrajectory {
  Matrix states;       // column i is x(t_i)
  Matrix derivatives;  // column i is A x(t_i) + B u(t_i)
};

/// Exact recursion; returns [x(0) ... x(T)] for inputs u(0..T-1).
Matrix simulate_discrete(const LtiModel& model, const Vector& x0,
                         const Matrix& inputs);

/// RK4 with fixed sub-steps (at most h_int; defaults to 1e-3 of the
/// horizon) between grid points; inputs are held constant per interval.
/// Derivative columns come from the model equation, not differencing.
ContinuousTrajectory simulate_continuous(const LtiModel& model,
                                         const Vector& x0,
                                         const Matrix& inputs,
                                         const std::vector<double>& t_grid,
                                         double h_int = 0.0);

StaircaseForm staircase_form(const LtiModel& model,
                             double rank_tol = kDefaultRankTol);

/// Smallest state dimension realizing the model's trajectories:
/// n_controllable + n_excited of the staircase form.
Index minimal_dimension(const LtiModel& model,
                        double rank_tol = kDefaultRankTol);

Matrix closed_loop(const LtiModel& model, const Matrix& k);

/// One member of the solution family of X+ = A X- + B U-:
/// [A B] = X+ W^+ + G (I - W W^+) with W = [X-; U-]. G = 0 yields the
/// minimum-norm explaining model.
LtiModel sample_explaining_model(const DataTriplet& triplet, const Matrix& g);

/// N-dimensional explaining model that evolves in span(V) and is stable on
/// the complement: A = [V Vp] [[Ahat, A_couple],[0, A_perp]] [V Vp]^T,
/// B = [V Vp] [Bhat; 0], where (Ahat, Bhat) explains the reduced triplet.
LtiModel sample_lowdim_explaining_model(const DataTriplet& reduced_triplet,
                                        const Basis& basis,
                                        const Matrix& g_hat,
                                        const Matrix& a_perp,
                                        const Matrix& a_couple);

/// Model persistence: directory with A.txt, B.txt, X0.txt and a
/// "model.txt" holding the line "domain: discrete|continuous".
void write_model(const std::filesystem::path& dir, const LtiModel& model);
LtiModel read_model(const std::filesystem::path& dir);

/// Orthonormal basis of the orthogonal complement of span(basis).
Matrix orthogonal_complement(const Matrix& basis, Index ambient_dim);

}  // namespace stabinfer
