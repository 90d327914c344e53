#include "sncover/deletion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sncover/errors.hpp"
#include "sncover/oracles.hpp"

namespace sncover {

AuxGraph build_aux_graph(const WeightedSetSystem& sys, const SubCollection& reference,
                         const ElementSet& vertices) {
  AuxGraph g;
  g.vertices = vertices.to_vector();
  g.adjacency.assign(g.vertices.size(), {});
  std::vector<int> index(static_cast<size_t>(sys.n_elements()), -1);
  for (size_t i = 0; i < g.vertices.size(); ++i)
    index[static_cast<size_t>(g.vertices[i])] = static_cast<int>(i);

  // Every set of the reference collection induces a clique on its vertices.
  std::vector<ElementSet> rows(g.vertices.size(), ElementSet(static_cast<int>(g.vertices.size())));
  std::vector<int> in_set;
  for (SetHandle s : reference) {
    in_set.clear();
    for (ElementId e : sys.set_members(s))
      if (index[static_cast<size_t>(e)] >= 0) in_set.push_back(index[static_cast<size_t>(e)]);
    for (size_t a = 0; a < in_set.size(); ++a)
      for (size_t b = a + 1; b < in_set.size(); ++b) {
        rows[static_cast<size_t>(in_set[a])].insert(in_set[b]);
        rows[static_cast<size_t>(in_set[b])].insert(in_set[a]);
      }
  }
  for (size_t i = 0; i < g.vertices.size(); ++i) g.adjacency[i] = rows[i].to_vector();
  return g;
}

std::pair<ElementSet, int> luby_mis(const AuxGraph& graph, const DeletionRng& rng, int stage) {
  const int nv = static_cast<int>(graph.vertices.size());
  ElementSet chosen(nv == 0 ? 0 : graph.vertices.empty() ? 0 : 0);
  // chosen is expressed over element ids of the host system; track live
  // vertices locally by index.
  std::vector<char> live(static_cast<size_t>(nv), 1);
  std::vector<uint64_t> priority(static_cast<size_t>(nv), 0);
  std::vector<int> winners;
  std::vector<int> picked_indices;
  int rounds = 0;
  int remaining = nv;

  while (remaining > 0) {
    ++rounds;
    for (int v = 0; v < nv; ++v)
      if (live[static_cast<size_t>(v)])
        priority[static_cast<size_t>(v)] = rng.luby_priority(stage, rounds, graph.vertices[static_cast<size_t>(v)]);

    winners.clear();
    for (int v = 0; v < nv; ++v) {
      if (!live[static_cast<size_t>(v)]) continue;
      bool local_max = true;
      for (int u : graph.adjacency[static_cast<size_t>(v)]) {
        if (!live[static_cast<size_t>(u)]) continue;
        auto pv = std::pair(priority[static_cast<size_t>(v)], v);
        auto pu = std::pair(priority[static_cast<size_t>(u)], u);
        if (pu > pv) {
          local_max = false;
          break;
        }
      }
      if (local_max) winners.push_back(v);
    }
    for (int v : winners) {
      picked_indices.push_back(v);
      live[static_cast<size_t>(v)] = 0;
      --remaining;
      for (int u : graph.adjacency[static_cast<size_t>(v)])
        if (live[static_cast<size_t>(u)]) {
          live[static_cast<size_t>(u)] = 0;
          --remaining;
        }
    }
  }

  // Translate winner indices back to element ids. The universe size of the
  // result matches the host system, which callers recover from context; when
  // the graph is empty we cannot know it, so report over max id + 1.
  int universe = 0;
  for (ElementId e : graph.vertices) universe = std::max(universe, e + 1);
  ElementSet mis(universe);
  for (int v : picked_indices) mis.insert(graph.vertices[static_cast<size_t>(v)]);
  return {mis, rounds};
}

std::pair<ElementSet, int> select_independent(const WeightedSetSystem& sys,
                                              const SubCollection& b_k,
                                              const LayerDecomposition& layers, int k,
                                              const DeletionRng& rng) {
  const int n = sys.n_elements();
  ElementSet covered = covered_elements(sys, b_k);
  ElementSet independent(n);
  ElementSet blocked(n);  // neighbors (in b_k) of picks from earlier stages
  int rounds = 0;

  for (int j = k; j <= layers.depth(); ++j) {
    ElementSet eligible = layers.layer(j) & covered;
    eligible -= blocked;
    eligible -= independent;
    if (eligible.empty()) continue;
    AuxGraph g = build_aux_graph(sys, b_k, eligible);
    auto [mis, luby_rounds] = luby_mis(g, rng, j);
    rounds += luby_rounds;
    mis.for_each([&](int e) {
      independent.insert(e);
      for (SetHandle s : covering_sets(sys, b_k, e)) blocked |= sys.set_mask(s);
    });
  }
  return {independent, rounds};
}

SubCollection assemble_base_groups(const WeightedSetSystem& sys, const SubCollection& b_k,
                                   const ElementSet& independent, const LayerDecomposition& layers,
                                   int k, int tau) {
  SubCollection assembled;
  std::optional<NotSncError> failure;
  independent.for_each([&](int e) {
    if (failure) return;
    // Restrict to the element's own level and deeper: that is where its
    // membership test ran, and any protected neighbor it must cover lies
    // at its level or deeper.
    int level = layers.level[static_cast<size_t>(e)];
    ElementSet x = layers.tail_union(std::max(level, k));
    SubCollection covering = covering_sets(sys, b_k, e);
    auto bg = find_base_group(sys, e, x, covering, tau);
    if (!bg) {
      failure = NotSncError("no base group of size <= " + std::to_string(tau) +
                                " for element " + std::to_string(e) +
                                "; the layer decomposition is inconsistent",
                            {e});
      return;
    }
    assembled |= bg->sets;
  });
  if (failure) throw *failure;
  return assembled;
}

DeletionRoundState shrink_round(const WeightedSetSystem& sys, DeletionRoundState state,
                                const LayerDecomposition& layers, int k, int tau,
                                const DeletionRng& rng) {
  (void)tau;
  const int round = state.rounds_done + 1;
  SubCollection kept_union;
  state.independent.for_each([&](int e) {
    SubCollection covering = covering_sets(sys, state.b_k, e);
    if (covering.empty()) return;
    SubCollection q = covering;
    if (rng.coin(round, e)) {
      size_t victim = rng.pick(round, e, covering.size());
      q.erase(covering.handles()[victim]);
    }
    kept_union |= q;
  });

  ElementSet kept_coverage = covered_elements(sys, kept_union);
  ElementSet tail = layers.tail_union(k);
  SubCollection removable;
  for (SetHandle s : state.b_k - kept_union) {
    ElementSet relevant = sys.set_mask(s) & tail;
    if (relevant.is_subset_of(kept_coverage)) removable.insert(s);
  }
  state.b_k -= removable;
  state.last_deleted = static_cast<int>(removable.size());
  state.rounds_done = round;
  --state.budget;
  return state;
}

int shrink_budget(int tau, int n_live) {
  if (n_live < 2) return 0;
  double t = tau;
  return static_cast<int>(std::ceil(4.0 * t * t * t * std::pow(2.0, t) * std::log2(n_live)));
}

ElementSet protected_elements(const WeightedSetSystem& sys,
                              const std::vector<EpochResult>& epochs,
                              const LayerDecomposition& layers, int k) {
  ElementSet q(sys.n_elements());
  for (int j = k; j <= layers.depth(); ++j) {
    ElementSet part = covered_elements(sys, epochs[static_cast<size_t>(j - 1)].picked);
    part &= layers.tail_union(j);
    q |= part;
  }
  return q;
}

namespace {

void strict_layer_checks(const WeightedSetSystem& sys, const SubCollection& b_k,
                         const ElementSet& independent, const ElementSet& q_k, int tau) {
  // Disjointness of the covering collections of independent elements.
  SubCollection seen;
  bool disjoint = true;
  independent.for_each([&](int e) {
    SubCollection c = covering_sets(sys, b_k, e);
    if (!intersect(c, seen).empty()) disjoint = false;
    seen |= c;
    if (static_cast<int>(c.size()) > tau) disjoint = disjoint && false;
  });
  if (!disjoint)
    throw InternalError("independent elements share covering sets after assembly");
  ElementSet uncovered = q_k - covered_elements(sys, b_k);
  if (!uncovered.empty())
    throw InternalError("base-group assembly lost coverage of " +
                        std::to_string(uncovered.count()) + " protected elements");
}

}  // namespace

SubCollection delete_phase(const WeightedSetSystem& sys, const std::vector<EpochResult>& epochs,
                           const LayerDecomposition& layers, int tau, const DeleteOptions& opts,
                           RoundTrace& trace) {
  const int depth = layers.depth();
  if (static_cast<int>(epochs.size()) != depth)
    throw StructuralError("delete_phase: epochs/layers size mismatch");

  trace.mis_rounds.assign(static_cast<size_t>(depth), 0);
  trace.shrink_rounds.assign(static_cast<size_t>(depth), 0);
  trace.post_assembly_max_mult.assign(static_cast<size_t>(depth), 0);

  const int n_live = layers.live_elements();
  const int budget = shrink_budget(tau, n_live);

  SubCollection result;
  for (int k = depth; k >= 1; --k) {
    DeletionRng rng(opts.seed, k);
    SubCollection b_k = result | epochs[static_cast<size_t>(k - 1)].picked;

    auto [independent, mis_rounds] = select_independent(sys, b_k, layers, k, rng);
    trace.mis_rounds[static_cast<size_t>(k - 1)] = mis_rounds;
    for (int r = 1; r <= mis_rounds; ++r)
      trace.add_row(TraceRow{.phase = "delete",
                             .epoch = k,
                             .round_type = "mis",
                             .round = r,
                             .deleted_count = 0,
                             .max_multiplicity_fk = -1});

    b_k = assemble_base_groups(sys, b_k, independent, layers, k, tau);

    const ElementSet& f_k = epochs[static_cast<size_t>(k - 1)].f_k;
    int mult = max_multiplicity(sys, b_k, f_k);
    trace.post_assembly_max_mult[static_cast<size_t>(k - 1)] = mult;
    if (opts.strict_checks)
      strict_layer_checks(sys, b_k, independent, protected_elements(sys, epochs, layers, k), tau);

    DeletionRoundState state;
    state.b_k = std::move(b_k);
    state.independent = independent;
    state.budget = budget;
    ElementSet q_k =
        opts.strict_checks ? protected_elements(sys, epochs, layers, k) : ElementSet(0);

    while (state.budget > 0) {
      if (!opts.full_budget && max_multiplicity(sys, state.b_k, f_k) <= tau) break;
      state = shrink_round(sys, state, layers, k, tau, rng);
      trace.shrink_rounds[static_cast<size_t>(k - 1)] = state.rounds_done;
      trace.add_row(TraceRow{.phase = "delete",
                             .epoch = k,
                             .round_type = "shrink",
                             .round = state.rounds_done,
                             .deleted_count = state.last_deleted,
                             .max_multiplicity_fk = max_multiplicity(sys, state.b_k, f_k)});
      if (opts.strict_checks) {
        ElementSet lost = q_k - covered_elements(sys, state.b_k);
        if (!lost.empty())
          throw InternalError("shrink round deleted coverage of a protected element");
      }
    }
    result = std::move(state.b_k);
  }
  return result;
}

}  // namespace sncover
