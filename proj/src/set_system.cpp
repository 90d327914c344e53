#include "sncover/set_system.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sncover {

WeightedSetSystem WeightedSetSystem::create(int n_elements,
                                            std::vector<std::vector<ElementId>> sets,
                                            std::vector<double> weights) {
  if (n_elements < 0) throw StructuralError("n_elements must be >= 0");
  if (sets.size() != weights.size())
    throw StructuralError("sets/weights size mismatch: " + std::to_string(sets.size()) + " vs " +
                          std::to_string(weights.size()));

  WeightedSetSystem sys;
  sys.n_ = n_elements;
  sys.members_ = std::move(sets);
  sys.weights_ = std::move(weights);
  sys.coverable_ = ElementSet(n_elements);
  sys.masks_.reserve(sys.members_.size());
  sys.incidence_.assign(static_cast<size_t>(n_elements), {});

  for (size_t s = 0; s < sys.members_.size(); ++s) {
    auto& members = sys.members_[s];
    std::sort(members.begin(), members.end());
    for (size_t i = 0; i < members.size(); ++i) {
      ElementId e = members[i];
      if (e < 0 || e >= n_elements)
        throw StructuralError("set " + std::to_string(s) + " contains out-of-range element " +
                              std::to_string(e));
      if (i > 0 && members[i - 1] == e)
        throw StructuralError("set " + std::to_string(s) + " contains duplicate element " +
                              std::to_string(e));
    }
    ElementSet mask(n_elements);
    for (ElementId e : members) {
      mask.insert(e);
      sys.incidence_[e].push_back(static_cast<SetHandle>(s));
      sys.coverable_.insert(e);
    }
    sys.masks_.push_back(std::move(mask));
    sys.max_set_size_ = std::max(sys.max_set_size_, static_cast<int>(members.size()));
  }
  for (const auto& inc : sys.incidence_)
    sys.max_frequency_ = std::max(sys.max_frequency_, static_cast<int>(inc.size()));
  return sys;
}

ElementSet covered_elements(const WeightedSetSystem& sys, const SubCollection& c) {
  ElementSet out(sys.n_elements());
  for (SetHandle s : c) out |= sys.set_mask(s);
  return out;
}

SubCollection covering_sets(const WeightedSetSystem& sys, const SubCollection& c, ElementId e) {
  sys.check_element(e);
  auto inc = sys.incidence(e);
  SubCollection out;
  // Both sides sorted; linear merge.
  auto it = c.begin();
  for (SetHandle s : inc) {
    while (it != c.end() && *it < s) ++it;
    if (it == c.end()) break;
    if (*it == s) out.insert(s);
  }
  return out;
}

SubCollection common_sets(const WeightedSetSystem& sys, const SubCollection& c, ElementId e,
                          ElementId e2) {
  return intersect(covering_sets(sys, c, e), covering_sets(sys, c, e2));
}

bool are_neighbors(const WeightedSetSystem& sys, const SubCollection& c, ElementId e,
                   ElementId e2) {
  if (e == e2) return !covering_sets(sys, c, e).empty();
  return !common_sets(sys, c, e, e2).empty();
}

Diagnostics validate(const WeightedSetSystem& sys) {
  Diagnostics d;
  d.max_frequency = sys.max_frequency();
  d.max_set_size = sys.max_set_size();
  for (SetHandle s = 0; s < sys.n_sets(); ++s)
    if (sys.weight(s) < 0) d.negative_weight_sets.push_back(s);
  for (ElementId e = 0; e < sys.n_elements(); ++e)
    if (sys.incidence(e).empty()) d.uncoverable_elements.push_back(e);
  d.feasible = d.uncoverable_elements.empty();

  std::map<std::vector<ElementId>, SetHandle> seen;
  for (SetHandle s = 0; s < sys.n_sets(); ++s) {
    auto [it, inserted] = seen.try_emplace(sys.set_members(s), s);
    if (!inserted) d.duplicate_sets.emplace_back(it->second, s);
  }
  return d;
}

std::string Diagnostics::summary() const {
  std::ostringstream os;
  os << (feasible ? "feasible" : "infeasible") << ", f=" << max_frequency
     << ", delta=" << max_set_size;
  if (!uncoverable_elements.empty())
    os << ", " << uncoverable_elements.size() << " uncoverable element(s)";
  if (!negative_weight_sets.empty())
    os << ", " << negative_weight_sets.size() << " negative weight(s)";
  if (!duplicate_sets.empty()) os << ", " << duplicate_sets.size() << " duplicate set(s)";
  return os.str();
}

WeightedSetSystem restrict_elements(const WeightedSetSystem& sys, const ElementSet& keep) {
  std::vector<std::vector<ElementId>> sets(static_cast<size_t>(sys.n_sets()));
  for (SetHandle s = 0; s < sys.n_sets(); ++s)
    for (ElementId e : sys.set_members(s))
      if (keep.contains(e)) sets[s].push_back(e);
  return WeightedSetSystem::create(sys.n_elements(), std::move(sets), sys.weights());
}

}  // namespace sncover
