#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sncover/set_system.hpp"
#include "sncover/snc.hpp"

#include "json.hpp"

namespace sncover {

/// A set system plus optional labels and geometry metadata. The metadata
/// round-trips through the file format unchanged; `geometry` is the parsed
/// view of meta.points/meta.intervals when both are present.
struct Instance {
  WeightedSetSystem sys;
  std::optional<IntervalGeometry> geometry;
  std::vector<std::string> element_names;  // empty or size n
  std::vector<std::string> set_names;      // empty or size m
  nlohmann::json meta;                     // preserved verbatim; null if absent

  std::string element_label(ElementId e) const;
  std::string set_label(SetHandle s) const;
};

enum class WeightLaw { unit, uniform, power };
WeightLaw weight_law_from_name(const std::string& name);

/// The canonical 10-point / 16-interval line-cover fixture, unit weights,
/// with interval endpoints recorded in the metadata.
Instance fig1_fixture();

/// Random interval-cover instance: `n_points` distinct sorted coordinates and
/// `n_intervals` intervals, each containing at least one point, regenerated
/// until every point is covered. With `normalize` no interval contains
/// another (the fast 1-SNC oracle applies). Reproducible from the seed.
Instance gen_interval(int n_points, int n_intervals, WeightLaw law, uint64_t seed,
                      bool normalize = true, int max_span = 0);

/// Vertex-cover instance of a G(n,p) graph: elements are edges, set v holds
/// the edges incident to v. Every element has frequency exactly 2.
Instance gen_vertex_cover(int n_vertices, double edge_prob, WeightLaw law, uint64_t seed);

/// Random set system with every element assigned to at least one set and
/// set sizes at most max_set_size. Frequencies stay small so the exact SNC
/// checker remains cheap.
Instance gen_random(int n_elements, int n_sets, int max_set_size, WeightLaw law, uint64_t seed);

/// JSON instance files: { "n": int, "sets": [[int,...],...],
/// "weights": [number,...], "names": {...}?, "meta": {...}? }.
/// Unknown top-level fields are rejected by name. Zero-weight empty sets are
/// dropped at load.
Instance load_instance(const std::string& path);
Instance parse_instance(const nlohmann::json& doc, const std::string& origin = "<memory>");
nlohmann::json instance_to_json(const Instance& inst);
void save_instance(const std::string& path, const Instance& inst);

}  // namespace sncover
