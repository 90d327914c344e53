#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sncover/element_set.hpp"
#include "sncover/errors.hpp"

namespace sncover {

using ElementId = int;
using SetHandle = int;

/// Absolute comparison slack for a weight of magnitude |w|. All weight
/// comparisons in the solver use this policy (relative 1e-9, floored at
/// 1e-9 absolute for small weights).
inline double weight_slack(double w) { return 1e-9 * std::max(1.0, std::abs(w)); }

/// An order-free collection of set handles; canonical form is a sorted,
/// duplicate-free ascending vector.
class SubCollection {
 public:
  SubCollection() = default;

  static SubCollection of(std::initializer_list<SetHandle> hs) {
    return from_vector(std::vector<SetHandle>(hs));
  }
  static SubCollection from_vector(std::vector<SetHandle> hs) {
    std::sort(hs.begin(), hs.end());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
    SubCollection c;
    c.handles_ = std::move(hs);
    return c;
  }

  bool contains(SetHandle h) const {
    return std::binary_search(handles_.begin(), handles_.end(), h);
  }
  void insert(SetHandle h) {
    auto it = std::lower_bound(handles_.begin(), handles_.end(), h);
    if (it == handles_.end() || *it != h) handles_.insert(it, h);
  }
  void erase(SetHandle h) {
    auto it = std::lower_bound(handles_.begin(), handles_.end(), h);
    if (it != handles_.end() && *it == h) handles_.erase(it);
  }

  size_t size() const { return handles_.size(); }
  bool empty() const { return handles_.empty(); }
  const std::vector<SetHandle>& handles() const { return handles_; }

  auto begin() const { return handles_.begin(); }
  auto end() const { return handles_.end(); }

  bool operator==(const SubCollection& o) const { return handles_ == o.handles_; }

  SubCollection& operator|=(const SubCollection& o) {
    std::vector<SetHandle> merged;
    merged.reserve(handles_.size() + o.handles_.size());
    std::set_union(handles_.begin(), handles_.end(), o.handles_.begin(), o.handles_.end(),
                   std::back_inserter(merged));
    handles_ = std::move(merged);
    return *this;
  }
  SubCollection& operator-=(const SubCollection& o) {
    std::vector<SetHandle> diff;
    diff.reserve(handles_.size());
    std::set_difference(handles_.begin(), handles_.end(), o.handles_.begin(), o.handles_.end(),
                        std::back_inserter(diff));
    handles_ = std::move(diff);
    return *this;
  }
  friend SubCollection operator|(SubCollection a, const SubCollection& b) { return a |= b; }
  friend SubCollection operator-(SubCollection a, const SubCollection& b) { return a -= b; }
  friend SubCollection intersect(const SubCollection& a, const SubCollection& b) {
    SubCollection out;
    std::set_intersection(a.handles_.begin(), a.handles_.end(), b.handles_.begin(),
                          b.handles_.end(), std::back_inserter(out.handles_));
    return out;
  }

 private:
  std::vector<SetHandle> handles_;
};

/// Immutable weighted set system: ground set {0..n-1}, an indexed family of
/// subsets, a non-negative weight per set, and the element -> sets incidence
/// index (always rebuilt from the family, never user-supplied). Safe to share
/// across threads once constructed.
class WeightedSetSystem {
 public:
  static WeightedSetSystem create(int n_elements, std::vector<std::vector<ElementId>> sets,
                                  std::vector<double> weights);

  int n_elements() const { return n_; }
  int n_sets() const { return static_cast<int>(members_.size()); }

  /// Sorted member list of one set.
  const std::vector<ElementId>& set_members(SetHandle s) const {
    check_handle(s);
    return members_[s];
  }
  /// Same set as a bitmask over the ground set.
  const ElementSet& set_mask(SetHandle s) const {
    check_handle(s);
    return masks_[s];
  }
  double weight(SetHandle s) const {
    check_handle(s);
    return weights_[s];
  }
  const std::vector<double>& weights() const { return weights_; }

  /// Sorted handles of all sets containing e.
  std::span<const SetHandle> incidence(ElementId e) const {
    check_element(e);
    return incidence_[e];
  }

  int max_frequency() const { return max_frequency_; }
  int max_set_size() const { return max_set_size_; }

  /// Elements contained in at least one set.
  const ElementSet& coverable_elements() const { return coverable_; }

  void check_element(ElementId e) const {
    if (e < 0 || e >= n_)
      throw StructuralError("element id " + std::to_string(e) + " out of range [0," +
                            std::to_string(n_) + ")");
  }
  void check_handle(SetHandle s) const {
    if (s < 0 || s >= n_sets())
      throw StructuralError("set handle " + std::to_string(s) + " out of range [0," +
                            std::to_string(n_sets()) + ")");
  }

 private:
  WeightedSetSystem() = default;

  int n_ = 0;
  std::vector<std::vector<ElementId>> members_;
  std::vector<ElementSet> masks_;
  std::vector<double> weights_;
  std::vector<std::vector<SetHandle>> incidence_;
  ElementSet coverable_;
  int max_frequency_ = 0;
  int max_set_size_ = 0;
};

/// U(c): union of the member sets of c. Empty collection yields the empty set.
ElementSet covered_elements(const WeightedSetSystem& sys, const SubCollection& c);

/// N_c(e): handles in c whose set contains e.
SubCollection covering_sets(const WeightedSetSystem& sys, const SubCollection& c, ElementId e);

/// R_c(e,e'): handles in c containing both elements.
SubCollection common_sets(const WeightedSetSystem& sys, const SubCollection& c, ElementId e,
                          ElementId e2);

/// True iff e and e' share at least one set of c. An element is a neighbor of
/// itself whenever some set of c contains it.
bool are_neighbors(const WeightedSetSystem& sys, const SubCollection& c, ElementId e,
                   ElementId e2);

/// Diagnostic report for an instance. Negative weights and duplicates are
/// reported but do not make the instance infeasible; an uncoverable element
/// does.
struct Diagnostics {
  bool feasible = true;
  std::vector<SetHandle> negative_weight_sets;
  std::vector<ElementId> uncoverable_elements;
  std::vector<std::pair<SetHandle, SetHandle>> duplicate_sets;  // (first, dup)
  int max_frequency = 0;
  int max_set_size = 0;

  /// Clean enough to solve: coverable and no negative weights.
  bool ok() const { return feasible && negative_weight_sets.empty(); }
  std::string summary() const;
};

Diagnostics validate(const WeightedSetSystem& sys);

/// Same ground set and weights, every set intersected with `keep`. Elements
/// outside `keep` end up with empty incidence and drop out of decompositions.
WeightedSetSystem restrict_elements(const WeightedSetSystem& sys, const ElementSet& keep);

}  // namespace sncover
