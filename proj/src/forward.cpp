#include "sncover/forward.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sncover/errors.hpp"

namespace sncover {

namespace {

/// w_res(S) <= eps*w(S), with absolute slack so float drift cannot skip a
/// pick exact arithmetic would make.
bool nearly_tight(double w_res, double w, double epsilon) {
  return w_res <= epsilon * w + weight_slack(w);
}

double recomputed_residual(const WeightedSetSystem& sys, const DualState& state, SetHandle s) {
  double sum = 0.0;
  for (ElementId e : sys.set_members(s)) sum += state.y[static_cast<size_t>(e)];
  return sys.weight(s) - sum;
}

void cross_check_residuals(const WeightedSetSystem& sys, const DualState& state) {
  for (SetHandle s = 0; s < sys.n_sets(); ++s) {
    if (state.picked[static_cast<size_t>(s)]) continue;
    double exact = recomputed_residual(sys, state, s);
    if (std::abs(exact - state.w_res[static_cast<size_t>(s)]) >
        weight_slack(sys.weight(s)) + 1e-9 * std::abs(exact))
      throw InternalError("incremental residual drifted from recomputation for set " +
                          std::to_string(s));
  }
}

void check_dual_feasibility(const WeightedSetSystem& sys, const DualState& state) {
  for (SetHandle s = 0; s < sys.n_sets(); ++s) {
    double sum = 0.0;
    for (ElementId e : sys.set_members(s)) sum += state.y[static_cast<size_t>(e)];
    if (sum > sys.weight(s) + weight_slack(sys.weight(s)))
      throw InternalError("dual constraint violated for set " + std::to_string(s));
  }
}

}  // namespace

DualState DualState::init(const WeightedSetSystem& sys) {
  DualState st;
  st.y.assign(static_cast<size_t>(sys.n_elements()), 0.0);
  st.w_res = sys.weights();
  st.frozen.assign(static_cast<size_t>(sys.n_elements()), 0);
  st.picked.assign(static_cast<size_t>(sys.n_sets()), 0);
  return st;
}

double DualState::dual_objective() const {
  double sum = 0.0;
  for (double v : y) sum += v;
  return sum;
}

double compute_q(const WeightedSetSystem& sys, const DualState& state, const ElementSet& targets,
                 double epsilon) {
  if (targets.empty()) throw StructuralError("compute_q: empty target set");
  double q = std::numeric_limits<double>::infinity();
  bool any_intersecting = false;
  for (SetHandle s = 0; s < sys.n_sets(); ++s) {
    if (state.picked[static_cast<size_t>(s)]) continue;
    size_t cnt = sys.set_mask(s).intersection_count(targets);
    if (cnt == 0) continue;  // no dual pressure from this epoch
    any_intersecting = true;
    double w_res = state.w_res[static_cast<size_t>(s)];
    if (nearly_tight(w_res, sys.weight(s), epsilon)) continue;  // picked this round anyway
    q = std::min(q, w_res / static_cast<double>(cnt));
  }
  if (!any_intersecting)
    throw InfeasibleError("no surviving set intersects the active layer elements");
  return std::isfinite(q) ? q : 0.0;
}

double forward_round_bound(const WeightedSetSystem& sys, double epsilon, int n_live) {
  double w_max = 0.0;
  double w_min = std::numeric_limits<double>::infinity();
  for (SetHandle s = 0; s < sys.n_sets(); ++s) {
    double w = sys.weight(s);
    if (w <= 0) continue;
    w_max = std::max(w_max, w);
    w_min = std::min(w_min, w);
  }
  if (!std::isfinite(w_min) || w_max <= 0) return 1.0;
  double n = std::max(1, n_live);
  return std::log(n * w_max / (epsilon * w_min)) / std::log1p(epsilon) + 1.0;
}

EpochResult run_epoch(const WeightedSetSystem& sys, const LayerDecomposition& layers, int k,
                      const ForwardOptions& opts, DualState& state, RoundTrace& trace) {
  if (!(opts.epsilon > 0.0 && opts.epsilon < 0.5))
    throw ConfigError("epsilon must lie in (0, 1/2)");

  EpochResult result;
  result.k = k;
  const ElementSet& z_k = layers.layer(k);

  ElementSet active(sys.n_elements());
  z_k.for_each([&](int e) {
    if (!state.frozen[static_cast<size_t>(e)]) active.insert(e);
  });
  result.f_k = active;
  if (active.empty()) return result;

  double q = compute_q(sys, state, active, opts.epsilon);
  const int round_cap =
      10 * static_cast<int>(std::ceil(forward_round_bound(sys, opts.epsilon, sys.n_elements()))) +
      16;

  int total_covered = 0;
  for (char f : state.frozen) total_covered += f;

  double alpha = q;
  int t = 1;
  while (!active.empty()) {
    if (result.rounds >= round_cap)
      throw InternalError("epoch " + std::to_string(k) +
                          " exceeded the round safety valve; schedule bug");
    ++result.rounds;

    // Raise duals on the round-start active snapshot, then update residuals
    // incrementally: each active element subtracts alpha from every
    // surviving set containing it.
    active.for_each([&](int e) {
      state.y[static_cast<size_t>(e)] += alpha;
      for (SetHandle s : sys.incidence(e))
        if (!state.picked[static_cast<size_t>(s)]) state.w_res[static_cast<size_t>(s)] -= alpha;
    });
    if (opts.strict_checks) cross_check_residuals(sys, state);

    // Pick every nearly tight survivor, then apply freezes atomically.
    SubCollection picks;
    for (SetHandle s = 0; s < sys.n_sets(); ++s) {
      if (state.picked[static_cast<size_t>(s)]) continue;
      double w_res = state.w_res[static_cast<size_t>(s)];
      if (nearly_tight(w_res, sys.weight(s), opts.epsilon)) {
        if (w_res < -weight_slack(sys.weight(s)))
          throw InternalError("residual overshot below zero at pick time for set " +
                              std::to_string(s));
        picks.insert(s);
      }
    }
    for (SetHandle s : picks) {
      state.picked[static_cast<size_t>(s)] = 1;
      for (ElementId e : sys.set_members(s)) {
        if (!state.frozen[static_cast<size_t>(e)]) {
          state.frozen[static_cast<size_t>(e)] = 1;
          ++total_covered;
          active.erase(e);
        }
      }
    }
    result.picked |= picks;
    if (opts.strict_checks) check_dual_feasibility(sys, state);

    trace.add_row(TraceRow{.phase = "forward",
                           .epoch = k,
                           .round_type = "dual",
                           .round = result.rounds,
                           .alpha = alpha,
                           .picked_count = static_cast<int>(picks.size()),
                           .covered_count = total_covered,
                           .active_count = static_cast<int>(active.count())});

    if (q == 0.0 && !active.empty()) {
      // Degenerate zero-weight sets were all picked by the free round above;
      // restart the geometric schedule from the true minimum.
      q = compute_q(sys, state, active, opts.epsilon);
      alpha = q;
      t = 1;
      continue;
    }
    alpha = (t == 1) ? q * opts.epsilon : alpha * (1.0 + opts.epsilon);
    ++t;
  }
  return result;
}

ForwardResult forward_phase(const WeightedSetSystem& sys, const LayerDecomposition& layers,
                            const ForwardOptions& opts, RoundTrace& trace) {
  ForwardResult out;
  out.state = DualState::init(sys);
  trace.forward_rounds.assign(static_cast<size_t>(layers.depth()), 0);
  for (int k = 1; k <= layers.depth(); ++k) {
    EpochResult epoch = run_epoch(sys, layers, k, opts, out.state, trace);
    trace.forward_rounds[static_cast<size_t>(k - 1)] = epoch.rounds;
    out.cover |= epoch.picked;
    out.epochs.push_back(std::move(epoch));
  }
  if (opts.strict_checks) {
    ElementSet uncovered = sys.coverable_elements() - covered_elements(sys, out.cover);
    if (!uncovered.empty())
      throw InternalError("forward phase left " + std::to_string(uncovered.count()) +
                          " coverable elements uncovered");
  }
  return out;
}

}  // namespace sncover
