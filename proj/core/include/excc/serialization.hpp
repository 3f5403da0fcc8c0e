#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "excc/body.hpp"
#include "excc/extremal_lab.hpp"
#include "excc/measures.hpp"
#include "excc/planar.hpp"

namespace excc {

using Json = nlohmann::json;

Json to_json(const Body& body);
Body body_from_json(const Json& j);

Json to_json(const PlanarCompactum& set);
PlanarCompactum compactum_from_json(const Json& j);

/// Discrete measures are written inline ("nodes" / "weights").
Json to_json(const MeasureModel& measure);
/// Relative nodes_file paths resolve against base_dir.
MeasureModel measure_from_json(const Json& j, const std::filesystem::path& base_dir = {});

/// {"kind":"product","factors":[...]} | {"kind":"polydisk","d":2} | {"kind":"ball","d":2}
Json to_json(const CompactSet& set);
CompactSet compact_set_from_json(const Json& j);

/// {"moduli":[[...],...], "phases":[...], "phase_count":k} or
/// {"uniform":{"d":2,"r_min":1.25,"r_max":2,"count":3}}.
Json to_json(const GridSpec& grid);
GridSpec grid_from_json(const Json& j);

struct NodeTable {
  std::vector<Point> nodes;
  std::vector<double> weights;
};

/// Columns re_1,im_1,...,re_d,im_d,weight with a header row.
NodeTable read_nodes_csv(const std::filesystem::path& path);

/// Shortest round-trip form with 17 significant digits.
std::string format_double(double value);

}  // namespace excc
