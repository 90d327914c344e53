#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sncover {

/// One synchronous-round record. Forward-phase rows fill alpha/picked/covered/
/// active; deletion rows fill deleted/max_mult_fk; unused fields stay at -1
/// (printed empty in the CSV).
struct TraceRow {
  std::string phase;       // "forward" | "delete"
  int epoch = -1;          // epoch k (forward) or layer k (delete)
  std::string round_type;  // "dual" | "mis" | "shrink"
  int round = -1;          // 1-based round index within the phase stage
  double alpha = -1.0;
  int picked_count = -1;
  int covered_count = -1;
  int active_count = -1;
  int deleted_count = -1;
  int max_multiplicity_fk = -1;
};

/// Round accounting for one solve, under the synchronous-round model: one
/// round per decomposition iteration, per dual-raise step, per Luby MIS
/// iteration, and per shrink loop iteration.
struct RoundTrace {
  int decomposition_rounds = 0;
  std::vector<int> forward_rounds;              // per epoch, k = 1..L
  std::vector<int> mis_rounds;                  // per processed layer, k = 1..L
  std::vector<int> shrink_rounds;               // per processed layer, k = 1..L
  std::vector<int> post_assembly_max_mult;      // per layer: max |N_Bk(e)|, e in F^k
  uint64_t machine_estimate = 0;                // n * m^tau, saturating
  std::vector<TraceRow> rows;

  int total_forward_rounds() const;
  int total_mis_rounds() const;
  int total_shrink_rounds() const;
  /// decomposition + forward + mis + shrink.
  int total_rounds() const;

  void add_row(TraceRow row) { rows.push_back(std::move(row)); }
};

uint64_t saturating_machine_estimate(int n, int m, int tau);

/// Writes all rows as one CSV (header + one line per round).
void write_trace_csv(std::ostream& os, const RoundTrace& trace);
std::string trace_csv(const RoundTrace& trace);

}  // namespace sncover
