#ifndef SPR_SKOROKHOD_HPP
#define SPR_SKOROKHOD_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "spr/grid.hpp"

namespace spr {

// Two-sided reflection problem: find (X, K+, K-) with X = Y + K+ - K-
// confined to [L, U], K+/- increasing, null at 0, and charging only the
// barrier-contact sets.
struct SprProblem {
  GridPath driver;  // Y
  GridPath lower;   // L
  GridPath upper;   // U
  double tol = 1e-12;

  SprProblem(GridPath y, GridPath l, GridPath u, double tolerance = 1e-12);
};

struct VerifyReport {
  double residual_eq1 = 0.0;        // sup |X - (Y + K+ - K-)|
  double residual_eq2 = 0.0;        // max barrier violation
  double residual_eq3_plus = 0.0;   // sum (X - L) dK+
  double residual_eq3_minus = 0.0;  // sum (U - X) dK-
  bool kplus_monotone = false;
  bool kminus_monotone = false;
  bool pass = false;
};

struct SprSolution {
  GridPath x;
  BoundedVariationPath k;
  VerifyReport residuals;
};

// Record of the alternating construction: hitting indices of the lower and
// upper barriers, the per-phase compensators (already frozen at their
// crossing index), and the full-crossing count.
struct AlternatingTrace {
  std::size_t beyond = 0;  // sentinel index meaning "beyond the horizon"
  bool started_at_upper = false;
  std::vector<std::size_t> lower_hits;   // T_1, T_2, ...
  std::vector<std::size_t> upper_hits;   // S_1, S_2, ...
  std::vector<GridPath> lower_pushes;    // frozen phase compensators toward L
  std::vector<GridPath> upper_pushes;    // frozen phase compensators away from U
  std::size_t crossings = 0;             // completed lower-to-upper crossings
};

// One-sided reflection at a lower barrier: phi_k = max(0, max_{j<=k}(L_j - Y_j)),
// X = Y + phi.
std::pair<GridPath, GridPath> one_sided_reflect_lower(const GridPath& y, const GridPath& lower);

// Mirror image: psi_k = max(0, max_{j<=k}(Y_j - U_j)), X = Y - psi.
std::pair<GridPath, GridPath> one_sided_reflect_upper(const GridPath& y, const GridPath& upper);

// Alternating one-sided-reflection construction; requires a positive
// pointwise gap min_k (U_k - L_k) > 0.
std::pair<SprSolution, AlternatingTrace> solve_spr_alternating(const SprProblem& problem);

// Independent reference: forward recursion clamping the driver increment into
// [L_k, U_k] one step at a time.
SprSolution solve_spr_discrete_oracle(const SprProblem& problem);

// Residuals of the three defining conditions. Constraint and decomposition
// residuals are compared against eq_tol, the complementarity sums against
// complementarity_tol (they accumulate roundoff proportional to the
// compensator mass).
VerifyReport verify_solution(const SprProblem& problem, const GridPath& x,
                             const BoundedVariationPath& k, double eq_tol,
                             double complementarity_tol);
VerifyReport verify_solution(const SprProblem& problem, const SprSolution& sol);

// Pointwise stability bound for solutions with perturbed upper barriers:
// lhs_k = (X_k - X~_k)^2,
// rhs_k = 2 sum_{j<=k} (U~_j - U_j) dK-_j + 2 sum_{j<=k} (U_j - U~_j) dK~-_j.
struct GapBound {
  GridPath lhs;
  GridPath rhs;
  bool holds(double tol) const;
};

GapBound upper_barrier_gap_bound(const SprSolution& sol_u, const SprSolution& sol_u_tilde,
                                 const GridPath& upper, const GridPath& upper_tilde);

// Mirrored bound for perturbed lower barriers, with K+ integrals.
GapBound lower_barrier_gap_bound(const SprSolution& sol_l, const SprSolution& sol_l_tilde,
                                 const GridPath& lower, const GridPath& lower_tilde);

}  // namespace spr

#endif
