#include "sncover/trace.hpp"

#include <cstdio>
#include <numeric>
#include <ostream>
#include <sstream>

namespace sncover {

namespace {
int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

void put_int(std::ostream& os, int v) {
  if (v >= 0) os << v;
}
}  // namespace

int RoundTrace::total_forward_rounds() const { return sum(forward_rounds); }
int RoundTrace::total_mis_rounds() const { return sum(mis_rounds); }
int RoundTrace::total_shrink_rounds() const { return sum(shrink_rounds); }
int RoundTrace::total_rounds() const {
  return decomposition_rounds + total_forward_rounds() + total_mis_rounds() +
         total_shrink_rounds();
}

uint64_t saturating_machine_estimate(int n, int m, int tau) {
  uint64_t est = static_cast<uint64_t>(n < 0 ? 0 : n);
  for (int i = 0; i < tau; ++i) {
    uint64_t factor = static_cast<uint64_t>(m < 0 ? 0 : m);
    if (factor != 0 && est > UINT64_MAX / factor) return UINT64_MAX;
    est *= factor;
  }
  return est;
}

void write_trace_csv(std::ostream& os, const RoundTrace& trace) {
  os << "phase,epoch,round_type,round,alpha,picked_count,covered_count,active_count,"
        "deleted_count,max_multiplicity_Fk\n";
  for (const auto& r : trace.rows) {
    os << r.phase << ',';
    put_int(os, r.epoch);
    os << ',' << r.round_type << ',';
    put_int(os, r.round);
    os << ',';
    if (r.alpha >= 0.0) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", r.alpha);
      os << buf;
    }
    os << ',';
    put_int(os, r.picked_count);
    os << ',';
    put_int(os, r.covered_count);
    os << ',';
    put_int(os, r.active_count);
    os << ',';
    put_int(os, r.deleted_count);
    os << ',';
    put_int(os, r.max_multiplicity_fk);
    os << '\n';
  }
}

std::string trace_csv(const RoundTrace& trace) {
  std::ostringstream os;
  write_trace_csv(os, trace);
  return os.str();
}

}  // namespace sncover
