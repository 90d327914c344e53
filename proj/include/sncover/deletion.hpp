#pragma once

#include <unordered_map>
#include <vector>

#include "sncover/forward.hpp"
#include "sncover/rng.hpp"
#include "sncover/set_system.hpp"
#include "sncover/snc.hpp"
#include "sncover/trace.hpp"

namespace sncover {

/// Auxiliary graph over a subset of elements; two vertices are adjacent iff
/// they are neighboring elements in the reference collection (share a set).
/// No self-loops.
struct AuxGraph {
  std::vector<ElementId> vertices;            // ascending element ids
  std::vector<std::vector<int>> adjacency;    // indices into `vertices`
};

AuxGraph build_aux_graph(const WeightedSetSystem& sys, const SubCollection& reference,
                         const ElementSet& vertices);

/// Keying context for the deletion phase's random draws: every draw hashes
/// (seed, purpose, layer, round, item), so draws are independent across
/// items and invariant under scheduling.
struct DeletionRng {
  CounterRng rng;
  int layer = 0;

  DeletionRng(uint64_t seed, int layer_k) : rng(seed), layer(layer_k) {}

  bool coin(int round, ElementId e) const {
    return rng.coin(rng_purpose::kShrinkCoin, static_cast<uint64_t>(layer),
                    static_cast<uint64_t>(round), static_cast<uint64_t>(e));
  }
  uint64_t pick(int round, ElementId e, uint64_t bound) const {
    return rng.below(bound, rng_purpose::kShrinkPick, static_cast<uint64_t>(layer),
                     (static_cast<uint64_t>(round) << 32) ^ static_cast<uint64_t>(e));
  }
  uint64_t luby_priority(int stage, int round, ElementId v) const {
    return rng.bits(rng_purpose::kLubyPriority, static_cast<uint64_t>(layer),
                    (static_cast<uint64_t>(stage) << 32) ^ static_cast<uint64_t>(round),
                    static_cast<uint64_t>(v));
  }
};

/// Luby MIS: per round, every live vertex draws a priority; strict local
/// maxima join the set and their closed neighborhoods leave. One synchronous
/// round per iteration. `stage` keys the priority stream.
std::pair<ElementSet, int> luby_mis(const AuxGraph& graph, const DeletionRng& rng, int stage = 0);

/// Mutable state of one layer's shrink loop.
struct DeletionRoundState {
  SubCollection b_k;          // current collection
  ElementSet independent;     // I
  int rounds_done = 0;
  int budget = 0;             // remaining shrink rounds
  int last_deleted = 0;       // sets removed by the most recent round
};

/// For j = k..L: build the auxiliary graph over eligible layer-j vertices
/// (covered by b_k, not a b_k-neighbor of any earlier pick) and accumulate a
/// maximal independent set. Returns (I, total Luby rounds).
std::pair<ElementSet, int> select_independent(const WeightedSetSystem& sys,
                                              const SubCollection& b_k,
                                              const LayerDecomposition& layers, int k,
                                              const DeletionRng& rng);

/// Union over e in I of a base group for e restricted to (layers L(e)..L,
/// covering sets of e in b_k). Guaranteed to exist for a valid decomposition;
/// throws NotSncError otherwise.
SubCollection assemble_base_groups(const WeightedSetSystem& sys, const SubCollection& b_k,
                                   const ElementSet& independent, const LayerDecomposition& layers,
                                   int k, int tau);

/// One randomized shrink round: per independent element flip a fair coin;
/// heads keeps all but one uniformly random covering set, tails keeps all.
/// Every unkept set whose coverage within layers k..L is contained in the
/// kept union is deleted. Coverage of the protected elements is preserved by
/// the guard.
DeletionRoundState shrink_round(const WeightedSetSystem& sys, DeletionRoundState state,
                                const LayerDecomposition& layers, int k, int tau,
                                const DeletionRng& rng);

struct DeleteOptions {
  uint64_t seed = 0;
  /// Run the full shrink budget instead of stopping once the max multiplicity
  /// over F^k reaches tau.
  bool full_budget = false;
  bool strict_checks =
#ifdef NDEBUG
      false;
#else
      true;
#endif
};

/// Shrink budget per layer: ceil(4 tau^3 2^tau log2(n_live)).
int shrink_budget(int tau, int n_live);

/// Q_k: the elements whose coverage must be preserved while processing
/// layer k (union over j >= k of U(C_j) ∩ (layers j..L)).
ElementSet protected_elements(const WeightedSetSystem& sys,
                              const std::vector<EpochResult>& epochs,
                              const LayerDecomposition& layers, int k);

/// Full deletion phase: layers L down to 1; per layer select independent
/// elements, rebuild from base groups, then run the randomized shrink loop.
/// Returns the final cover A'.
SubCollection delete_phase(const WeightedSetSystem& sys, const std::vector<EpochResult>& epochs,
                           const LayerDecomposition& layers, int tau, const DeleteOptions& opts,
                           RoundTrace& trace);

}  // namespace sncover
