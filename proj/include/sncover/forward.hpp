#pragma once

#include <vector>

#include "sncover/set_system.hpp"
#include "sncover/snc.hpp"
#include "sncover/trace.hpp"

namespace sncover {

/// Dual variables and residual weights evolving through the forward phase.
/// At every round boundary w_res(S) = w(S) - sum_{e in S} y(e) for unpicked
/// sets (and from pick time on for picked ones).
struct DualState {
  std::vector<double> y;       // per element, >= 0
  std::vector<double> w_res;   // per set
  std::vector<char> frozen;    // per element: covered, dual variable fixed
  std::vector<char> picked;    // per set

  static DualState init(const WeightedSetSystem& sys);

  double dual_objective() const;
};

/// Outcome of one epoch (one layer of the outer loop).
struct EpochResult {
  int k = 0;                // 1-based layer index
  SubCollection picked;     // C_k
  ElementSet f_k;           // uncovered layer-k elements at epoch start
  int rounds = 0;           // T_k
};

struct ForwardOptions {
  double epsilon = 0.1;
  /// Recompute residuals canonically each round and assert dual feasibility
  /// and pick-time nonnegativity. Cheap at bench scale.
  bool strict_checks =
#ifdef NDEBUG
      false;
#else
      true;
#endif
};

struct ForwardResult {
  SubCollection cover;               // A = union of all C_k
  std::vector<EpochResult> epochs;   // k = 1..L
  DualState state;
};

/// min over surviving sets with a nonempty intersection with `targets` of
/// w_res(S)/|S ∩ targets|. Sets already nearly tight contribute no dual
/// pressure and are skipped, so the result is strictly positive; 0.0 is
/// returned when only nearly-tight sets intersect the targets (degenerate
/// zero-weight inputs). Throws InfeasibleError if no set intersects a
/// nonempty target set.
double compute_q(const WeightedSetSystem& sys, const DualState& state, const ElementSet& targets,
                 double epsilon);

/// Runs rounds until every element of Z_k is covered by picked sets: raise
/// y on the active elements by the geometric step, recompute residuals, pick
/// every nearly tight survivor, freeze newly covered elements.
EpochResult run_epoch(const WeightedSetSystem& sys, const LayerDecomposition& layers, int k,
                      const ForwardOptions& opts, DualState& state, RoundTrace& trace);

/// All epochs k = 1..L. On return the picked collection covers every layer
/// element and `state` carries the final duals.
ForwardResult forward_phase(const WeightedSetSystem& sys, const LayerDecomposition& layers,
                            const ForwardOptions& opts, RoundTrace& trace);

/// Lemma-style per-epoch round cap: log_{1+eps}(n*w_max/(eps*w_min)) + 1,
/// computed over sets with positive weight. Used as a 10x safety valve inside
/// run_epoch and re-asserted by tests.
double forward_round_bound(const WeightedSetSystem& sys, double epsilon, int n_live);

}  // namespace sncover
