#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sncover/deletion.hpp"
#include "sncover/forward.hpp"
#include "sncover/instances.hpp"
#include "sncover/set_system.hpp"
#include "sncover/snc.hpp"
#include "sncover/trace.hpp"

#include "json.hpp"

namespace sncover {

/// Weight-bucket split around beta = max over elements of the cheapest
/// covering weight.
struct Partition {
  double beta = 0.0;
  SubCollection cheap;     // w in [0, beta*eps/n)
  SubCollection core;      // w in [beta*eps/n, n*beta]
  SubCollection dropped;   // w > n*beta; unusable in any optimal solution
};

double compute_beta(const WeightedSetSystem& sys);
Partition partition_sets(const WeightedSetSystem& sys, double epsilon);

/// One covering cheap set (lowest handle) per element covered by the cheap
/// bucket. Total weight at most beta*eps.
SubCollection cheap_cover(const WeightedSetSystem& sys, const SubCollection& cheap);

/// The core pipeline's instance: original element ids, core-bucket sets
/// restricted to the elements the cheap cover leaves over.
struct ReducedInstance {
  WeightedSetSystem sys;
  std::vector<SetHandle> orig_handle;        // reduced handle -> original
  ElementSet elements;                       // X^(2)
  std::optional<IntervalGeometry> geometry;  // remapped, when available
  int n_live = 0;                            // coverable elements of `sys`
};

struct SolveOptions {
  int tau = 1;
  double epsilon = 0.1;
  uint64_t seed = 0;
  /// exact / interval / external strategy; when unset, interval is chosen
  /// automatically for tau = 1 with consistent geometry, exact otherwise.
  std::optional<SncOracle> oracle;
  bool full_budget = false;
  bool strict_checks = true;
  int frequency_cap = 20;
};

struct Solution {
  SubCollection cover;   // b1 ∪ b2, original handles
  double weight = 0.0;
  SubCollection b1;      // cheap part
  SubCollection b2;      // core part
  DualState duals;       // y indexed by original element id
  RoundTrace trace;
  uint64_t seed = 0;
  double epsilon = 0.0;
  int tau = 0;

  // Per-run artifacts kept for verification and reporting.
  ReducedInstance reduced;
  LayerDecomposition layers;            // of the reduced instance
  std::vector<EpochResult> epochs;      // picked handles in reduced space
  ElementSet forward_targets;           // union of all F^k (original ids)
  int max_multiplicity_over_targets = 0;
};

/// Full solver: bucket weights, cover the cheap bucket directly, decompose
/// the reduced instance, run the forward and deletion phases, assemble.
Solution solve(const Instance& inst, const SolveOptions& opts);

/// { "cover": [...], "weight": w, "trace": {...},
///   "params": {"tau","epsilon","seed"} }
nlohmann::json solution_to_json(const Solution& sol);

}  // namespace sncover
