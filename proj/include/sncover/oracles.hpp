#pragma once

#include <cstdint>
#include <vector>

#include "sncover/element_set.hpp"
#include "sncover/set_system.hpp"

namespace sncover {

struct BnbLimits {
  uint64_t max_nodes = 10'000'000;
  double time_limit_s = 60.0;
};

struct ExactResult {
  double opt_weight = 0.0;
  SubCollection witness;
  uint64_t nodes_explored = 0;
};

/// Exact minimum-weight cover by branch and bound. Branches on the uncovered
/// element with the fewest remaining covering sets; the lower bound is dual
/// feasible (sum of cheapest covering weights divided by the largest residual
/// set size). Throws CapacityError past the limits, InfeasibleError if some
/// element is uncoverable.
ExactResult exact_opt(const WeightedSetSystem& sys, const BnbLimits& limits = {});

/// Chvatal greedy: repeatedly pick the set minimizing weight per newly
/// covered element; ties broken by lowest handle.
SubCollection greedy_hdelta(const WeightedSetSystem& sys);

/// Bar-Yehuda/Even style sequential primal-dual: raise one uncovered
/// element's dual until some containing set goes tight, pick the tight sets,
/// repeat. Weight at most f times optimal; duals stay feasible.
SubCollection sequential_primal_dual(const WeightedSetSystem& sys);

/// Does c cover every element that lies in at least one set? (Elements with
/// empty incidence are ignored; an empty ground set is covered trivially.)
bool verify_cover(const WeightedSetSystem& sys, const SubCollection& c);

/// Max over elems of |covering_sets(c, e)|.
int max_multiplicity(const WeightedSetSystem& sys, const SubCollection& c,
                     const ElementSet& elems);

/// Σ 1/i for i = 1..d.
double harmonic(int d);

}  // namespace sncover
