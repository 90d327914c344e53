#include "sncover/snc.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "sncover/errors.hpp"

namespace sncover {

namespace {

bool in_interval(double coord, const std::pair<double, double>& iv) {
  return coord >= iv.first && coord <= iv.second;
}

void require_member(const WeightedSetSystem& sys, ElementId e, const ElementSet& x,
                    const char* what) {
  sys.check_element(e);
  if (!x.contains(e))
    throw StructuralError(std::string(what) + ": element " + std::to_string(e) +
                          " is not in the restriction set");
}

/// Lexicographic next combination of `idx` over [0, d). Returns false when
/// exhausted.
bool next_combination(std::vector<int>& idx, int d) {
  int s = static_cast<int>(idx.size());
  for (int i = s - 1; i >= 0; --i) {
    if (idx[i] < d - (s - i)) {
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// Exact membership test: enumerate every subcollection of the sets
/// containing e and check tau-collapsibility of each. Collapsibility checks
/// use precomputed "which restricted sets a candidate union dominates"
/// bitmasks, so the inner loop is O(1) per candidate.
bool exact_snc_test(const WeightedSetSystem& sys, ElementId e, const ElementSet& x, int tau,
                    int frequency_cap) {
  auto inc = sys.incidence(e);
  const int d = static_cast<int>(inc.size());
  if (d <= tau) return true;  // any subcollection is its own base group
  if (d > frequency_cap)
    throw CapacityError("element " + std::to_string(e) + " lies in " + std::to_string(d) +
                        " sets, above the exact-test frequency cap of " +
                        std::to_string(frequency_cap) +
                        "; supply a domain oracle for this instance");
  if (d >= 63) throw CapacityError("exact SNC test limited to frequency < 63");

  std::vector<ElementSet> restricted;
  restricted.reserve(static_cast<size_t>(d));
  for (SetHandle s : inc) restricted.push_back(sys.set_mask(s) & x);

  // Candidates: subsets T of the covering sets with 1 <= |T| <= tau.
  // dominated[T] has bit i set iff restricted[i] is covered by T's union.
  std::vector<uint64_t> cand_mask;
  std::vector<uint64_t> cand_dominated;
  std::vector<int> idx;
  for (int s = 1; s <= std::min(tau, d); ++s) {
    idx.assign(static_cast<size_t>(s), 0);
    for (int j = 0; j < s; ++j) idx[static_cast<size_t>(j)] = j;
    do {
      ElementSet u(sys.n_elements());
      uint64_t tmask = 0;
      for (int j : idx) {
        u |= restricted[static_cast<size_t>(j)];
        tmask |= uint64_t{1} << j;
      }
      uint64_t dom = 0;
      for (int i = 0; i < d; ++i)
        if (restricted[static_cast<size_t>(i)].is_subset_of(u)) dom |= uint64_t{1} << i;
      cand_mask.push_back(tmask);
      cand_dominated.push_back(dom);
    } while (next_combination(idx, d));
  }

  // Subcollections with at most tau members are trivially collapsible.
  const uint64_t all = (uint64_t{1} << d) - 1;
  for (uint64_t mask = 1; mask <= all; ++mask) {
    if (std::popcount(mask) <= tau) continue;
    bool collapsible = false;
    for (size_t t = 0; t < cand_mask.size(); ++t) {
      if ((cand_mask[t] & mask) != cand_mask[t]) continue;  // T not within S'
      if ((mask & ~cand_dominated[t]) == 0) {
        collapsible = true;
        break;
      }
    }
    if (!collapsible) return false;
  }
  return true;
}

/// Fast 1-SNC test for interval instances. A point fails iff two covering
/// intervals cross and x' has a witness point on each flank: one left of e
/// missed by the right interval, one right of e missed by the left interval.
/// For intervals sharing the point e this pairwise check is exhaustive: any
/// failing subcollection fails already at its extremal pair.
bool interval_snc_test(const WeightedSetSystem& sys, ElementId e, const ElementSet& x,
                       const IntervalGeometry& geom) {
  auto inc = sys.incidence(e);
  if (inc.size() <= 1) return true;

  std::vector<double> coords;
  coords.reserve(x.count());
  x.for_each([&](int p) { coords.push_back(geom.point_coord[static_cast<size_t>(p)]); });
  std::sort(coords.begin(), coords.end());
  auto has_point_in = [&](double lo, double hi, bool lo_open, bool hi_open) {
    auto it = lo_open ? std::upper_bound(coords.begin(), coords.end(), lo)
                      : std::lower_bound(coords.begin(), coords.end(), lo);
    if (it == coords.end()) return false;
    return hi_open ? *it < hi : *it <= hi;
  };

  for (size_t a = 0; a < inc.size(); ++a) {
    const auto& ia = geom.intervals[static_cast<size_t>(inc[a])];
    for (size_t b = a + 1; b < inc.size(); ++b) {
      const auto& ib = geom.intervals[static_cast<size_t>(inc[b])];
      const auto& lo = ia.first <= ib.first ? ia : ib;
      const auto& hi = ia.first <= ib.first ? ib : ia;
      if (hi.second <= lo.second) continue;  // nested: the outer one covers
      // Crossing pair: fails iff a point in [lo.l, hi.l) and one in
      // (lo.r, hi.r].
      if (has_point_in(lo.first, hi.first, false, true) &&
          has_point_in(lo.second, hi.second, true, false))
        return false;
    }
  }
  return true;
}

}  // namespace

bool IntervalGeometry::consistent_with(const WeightedSetSystem& sys, const ElementSet& live) const {
  if (!shape_matches(sys)) return false;
  for (SetHandle s = 0; s < sys.n_sets(); ++s) {
    const ElementSet& mask = sys.set_mask(s);
    for (ElementId e = 0; e < sys.n_elements(); ++e) {
      bool member = mask.contains(e);
      bool geometric =
          live.contains(e) && in_interval(point_coord[static_cast<size_t>(e)],
                                          intervals[static_cast<size_t>(s)]);
      if (member != geometric) return false;
    }
  }
  return true;
}

bool IntervalGeometry::containment_free() const {
  for (size_t i = 0; i < intervals.size(); ++i)
    for (size_t j = 0; j < intervals.size(); ++j) {
      if (i == j) continue;
      const auto& a = intervals[i];
      const auto& b = intervals[j];
      bool contains = a.first <= b.first && b.second <= a.second;
      bool equal = a.first == b.first && a.second == b.second;
      if (contains && !equal) return false;
    }
  return true;
}

ElementSet LayerDecomposition::tail_union(int k) const {
  ElementSet out = layers.empty() ? ElementSet(0) : ElementSet(layers[0].universe());
  for (int j = k; j <= depth(); ++j) out |= layer(j);
  return out;
}

int LayerDecomposition::live_elements() const {
  int c = 0;
  for (const auto& z : layers) c += static_cast<int>(z.count());
  return c;
}

ElementSet restricted_neighborhood(const WeightedSetSystem& sys, ElementId e, const ElementSet& x,
                                   const SubCollection& c) {
  require_member(sys, e, x, "restricted_neighborhood");
  ElementSet out(sys.n_elements());
  for (SetHandle s : covering_sets(sys, c, e)) out |= sys.set_mask(s);
  out &= x;
  return out;
}

std::optional<BaseGroup> find_base_group(const WeightedSetSystem& sys, ElementId e,
                                         const ElementSet& x, const SubCollection& c, int tau) {
  require_member(sys, e, x, "find_base_group");
  if (tau < 0) throw ConfigError("tau must be >= 0");
  SubCollection covering = covering_sets(sys, c, e);
  ElementSet rn = ElementSet(sys.n_elements());
  for (SetHandle s : covering) rn |= sys.set_mask(s);
  rn &= x;
  if (rn.empty()) return BaseGroup{e, {}};

  const auto& handles = covering.handles();
  const int d = static_cast<int>(handles.size());
  std::vector<int> idx;
  for (int s = 1; s <= std::min(tau, d); ++s) {
    idx.resize(static_cast<size_t>(s));
    for (int j = 0; j < s; ++j) idx[static_cast<size_t>(j)] = j;
    do {
      ElementSet u(sys.n_elements());
      for (int j : idx) u |= sys.set_mask(handles[static_cast<size_t>(j)]);
      if (rn.is_subset_of(u)) {
        std::vector<SetHandle> witness;
        witness.reserve(idx.size());
        for (int j : idx) witness.push_back(handles[static_cast<size_t>(j)]);
        return BaseGroup{e, SubCollection::from_vector(std::move(witness))};
      }
    } while (next_combination(idx, d));
  }
  return std::nullopt;
}

bool is_tau_snc_element(const WeightedSetSystem& sys, ElementId e, const ElementSet& x, int tau,
                        const SncOracle& oracle) {
  require_member(sys, e, x, "is_tau_snc_element");
  if (tau < 1) throw ConfigError("tau must be >= 1");
  switch (oracle.kind) {
    case SncOracle::Kind::exact:
      return exact_snc_test(sys, e, x, tau, oracle.frequency_cap);
    case SncOracle::Kind::interval:
      if (tau != 1) throw ConfigError("the interval oracle answers 1-SNC queries only");
      if (!oracle.geometry || !oracle.geometry->shape_matches(sys))
        throw ConfigError("interval oracle requires geometry matching the instance");
      return interval_snc_test(sys, e, x, *oracle.geometry);
    case SncOracle::Kind::external:
      if (!oracle.external_test) throw ConfigError("external oracle has no test function");
      return oracle.external_test(sys, e, x);
  }
  throw InternalError("unreachable oracle kind");
}

LayerDecomposition layer_decomposition(const WeightedSetSystem& sys, int tau,
                                       const SncOracle& oracle, RoundTrace* trace) {
  if (tau < 1) throw ConfigError("tau must be >= 1");
  LayerDecomposition out;
  out.level.assign(static_cast<size_t>(sys.n_elements()), 0);
  ElementSet residual = sys.coverable_elements();

  while (!residual.empty()) {
    ElementSet layer(sys.n_elements());
    residual.for_each([&](int e) {
      if (is_tau_snc_element(sys, e, residual, tau, oracle)) layer.insert(e);
    });
    if (trace) ++trace->decomposition_rounds;
    if (layer.empty())
      throw NotSncError("no tau-SNC element in a residual of " +
                            std::to_string(residual.count()) + " elements (tau=" +
                            std::to_string(tau) + ")",
                        residual.to_vector());
    layer.for_each([&](int e) { out.level[static_cast<size_t>(e)] = out.depth() + 1; });
    residual -= layer;
    out.layers.push_back(std::move(layer));
  }
  return out;
}

bool hereditary_check(const WeightedSetSystem& sys, ElementId e, const ElementSet& x1,
                      const ElementSet& x2, int tau) {
  require_member(sys, e, x2, "hereditary_check");
  if (!x2.is_subset_of(x1)) throw StructuralError("hereditary_check: x2 must be a subset of x1");
  SncOracle exact = SncOracle::exact();
  if (!is_tau_snc_element(sys, e, x1, tau, exact)) return true;
  return is_tau_snc_element(sys, e, x2, tau, exact);
}

}  // namespace sncover
