#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "sncover/set_system.hpp"
#include "sncover/trace.hpp"

namespace sncover {

/// Interval geometry attached to an instance: one line coordinate per element
/// and one [left,right] pair per set. Enables the fast 1-SNC oracle.
struct IntervalGeometry {
  std::vector<double> point_coord;                    // per element id
  std::vector<std::pair<double, double>> intervals;   // per set handle

  bool shape_matches(const WeightedSetSystem& sys) const {
    return static_cast<int>(point_coord.size()) == sys.n_elements() &&
           static_cast<int>(intervals.size()) == sys.n_sets();
  }

  /// Membership must equal geometric containment, restricted to `live`
  /// elements (pass the full set for a standalone instance).
  bool consistent_with(const WeightedSetSystem& sys, const ElementSet& live) const;
  bool consistent_with(const WeightedSetSystem& sys) const {
    return consistent_with(sys, ElementSet::full(sys.n_elements()));
  }

  /// No interval strictly contains another.
  bool containment_free() const;
};

/// Strategy for deciding tau-SNC membership.
struct SncOracle {
  enum class Kind { exact, interval, external };

  Kind kind = Kind::exact;
  /// Exact strategy enumerates 2^deg subcollections; degrees above the cap
  /// raise CapacityError telling the caller to supply a domain oracle.
  int frequency_cap = 20;
  std::optional<IntervalGeometry> geometry;  // interval strategy only
  /// External hook: (sys, e, x') -> is e tau-SNC in x'.
  std::function<bool(const WeightedSetSystem&, ElementId, const ElementSet&)> external_test;

  static SncOracle exact(int cap = 20) {
    SncOracle o;
    o.kind = Kind::exact;
    o.frequency_cap = cap;
    return o;
  }
  static SncOracle interval(IntervalGeometry geom) {
    SncOracle o;
    o.kind = Kind::interval;
    o.geometry = std::move(geom);
    return o;
  }
};

/// Partition of the coverable elements into layers Z_1..Z_L: Z_k is the set of
/// all tau-SNC elements of what remains after stripping Z_1..Z_{k-1}.
struct LayerDecomposition {
  std::vector<ElementSet> layers;  // Z_1..Z_L
  std::vector<int> level;          // per element: 1..L, or 0 if in no layer

  int depth() const { return static_cast<int>(layers.size()); }
  /// Z_k for 1-based k.
  const ElementSet& layer(int k) const { return layers[static_cast<size_t>(k) - 1]; }
  /// Union of layers k..L (1-based k).
  ElementSet tail_union(int k) const;
  /// Count of elements across all layers.
  int live_elements() const;
};

/// A witness that e's restricted neighborhood collapses onto at most tau sets.
struct BaseGroup {
  ElementId owner = -1;
  SubCollection sets;
};

/// RN(e, x', c): union of the sets of c containing e, intersected with x'.
/// Requires e in x'; c need not be limited to sets containing e.
ElementSet restricted_neighborhood(const WeightedSetSystem& sys, ElementId e, const ElementSet& x,
                                   const SubCollection& c);

/// Smallest collection of at most tau sets from covering_sets(c, e) whose
/// union contains restricted_neighborhood(e, x, c); ties broken by
/// lexicographically smallest handle tuple. nullopt if no witness exists.
std::optional<BaseGroup> find_base_group(const WeightedSetSystem& sys, ElementId e,
                                         const ElementSet& x, const SubCollection& c, int tau);

/// Is RN(e, x', S') tau-collapsible for every subcollection S' of the sets
/// containing e?
bool is_tau_snc_element(const WeightedSetSystem& sys, ElementId e, const ElementSet& x, int tau,
                        const SncOracle& oracle);

/// Strips the full set of tau-SNC elements iteratively; one round per
/// iteration is added to `trace` when given. Throws NotSncError (with the
/// residual as witness) if some iteration finds no member.
LayerDecomposition layer_decomposition(const WeightedSetSystem& sys, int tau,
                                       const SncOracle& oracle, RoundTrace* trace = nullptr);

/// Test helper: the hereditary implication "tau-SNC in x1 implies tau-SNC in
/// x2" for e in x2, x2 a subset of x1. Uses the exact strategy.
bool hereditary_check(const WeightedSetSystem& sys, ElementId e, const ElementSet& x1,
                      const ElementSet& x2, int tau);

}  // namespace sncover
