#include "excc/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "excc/error.hpp"

namespace excc {
namespace {

std::string kind_of(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw DomainError("expected an object with a string \"kind\"");
  return j.at("kind").get<std::string>();
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw DomainError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw DomainError(std::string("field \"") + key + "\" has the wrong type");
  }
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream stream(line);
  std::string cell;
  while (std::getline(stream, cell, ',')) out.push_back(cell);
  return out;
}

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw DomainError("bad number in nodes file: '" + text + "'");
  }
  if (text.find_first_not_of(" \t\r", used) != std::string::npos) throw DomainError("bad number in nodes file: '" + text + "'");
  return value;
}

}  // namespace

Json to_json(const Body& body) {
  switch (body.kind()) {
    case Body::Kind::LpBall:
      return {{"kind", "lp"}, {"p", body.p()}, {"d", body.dim()}};
    case Body::Kind::Simplex:
      return {{"kind", "simplex"}, {"d", body.dim()}};
    case Body::Kind::AxisCross:
      return {{"kind", "cross"}, {"d", body.dim()}};
    case Body::Kind::Triangle:
      return {{"kind", "triangle"}, {"alpha", body.alpha()}, {"beta", body.beta()}};
  }
  throw DomainError("unknown body kind");
}

Body body_from_json(const Json& j) {
  const auto kind = kind_of(j);
  if (kind == "lp") return Body::lp_ball(field<double>(j, "p"), field<int>(j, "d"));
  if (kind == "simplex") return Body::simplex(field<int>(j, "d"));
  if (kind == "cross") return Body::axis_cross(field<int>(j, "d"));
  if (kind == "triangle") return Body::triangle(field<double>(j, "alpha"), field<double>(j, "beta"));
  if (kind == "tangent-triangle") return Body::tangent_triangle(field<double>(j, "p"), field<double>(j, "alpha"));
  throw DomainError("unknown body kind '" + kind + "'");
}

Json to_json(const PlanarCompactum& set) {
  if (set.kind == PlanarCompactum::Kind::Disk)
    return {{"kind", "disk"}, {"center", {set.center.real(), set.center.imag()}}, {"radius", set.radius}};
  return {{"kind", "segment"}, {"a", set.a}, {"b", set.b}};
}

PlanarCompactum compactum_from_json(const Json& j) {
  const auto kind = kind_of(j);
  if (kind == "disk") {
    const auto center = j.contains("center") ? field<std::vector<double>>(j, "center") : std::vector<double>{0.0, 0.0};
    if (center.size() != 2) throw DomainError("disk center must be [re, im]");
    return PlanarCompactum::disk({center[0], center[1]}, field<double>(j, "radius"));
  }
  if (kind == "segment") return PlanarCompactum::segment(field<double>(j, "a"), field<double>(j, "b"));
  throw DomainError("unknown compactum kind '" + kind + "'");
}

Json to_json(const MeasureModel& measure) {
  switch (measure.kind) {
    case MeasureModel::Kind::TorusHaar:
      return {{"kind", "torus"}, {"d", measure.dim}};
    case MeasureModel::Kind::CircleHaar:
      return {{"kind", "circle"}, {"radii", measure.radii}};
    case MeasureModel::Kind::Arcsine:
      return {{"kind", "arcsine"}, {"a", measure.a}, {"b", measure.b}};
    case MeasureModel::Kind::SphereSurface:
      return {{"kind", "sphere"}, {"d", measure.dim}};
    case MeasureModel::Kind::Product: {
      Json factors = Json::array();
      for (const auto& f : measure.factors) factors.push_back(to_json(f));
      return {{"kind", "product"}, {"factors", factors}};
    }
    case MeasureModel::Kind::DiscreteQuadrature: {
      Json nodes = Json::array();
      for (const auto& p : measure.nodes) {
        Json row = Json::array();
        for (const auto& c : p) {
          row.push_back(c.real());
          row.push_back(c.imag());
        }
        nodes.push_back(row);
      }
      return {{"kind", "discrete"}, {"nodes", nodes}, {"weights", measure.weights}};
    }
  }
  throw DomainError("unknown measure kind");
}

MeasureModel measure_from_json(const Json& j, const std::filesystem::path& base_dir) {
  const auto kind = kind_of(j);
  if (kind == "torus") return MeasureModel::torus(field<int>(j, "d"));
  if (kind == "circle") return MeasureModel::circle(field<std::vector<double>>(j, "radii"));
  if (kind == "sphere") return MeasureModel::sphere(field<int>(j, "d"));
  if (kind == "arcsine") return MeasureModel::arcsine(field<double>(j, "a"), field<double>(j, "b"));
  if (kind == "product") {
    std::vector<MeasureModel> factors;
    for (const auto& f : field<Json>(j, "factors")) factors.push_back(measure_from_json(f, base_dir));
    return MeasureModel::product(std::move(factors));
  }
  if (kind == "discrete") {
    if (j.contains("nodes_file")) {
      std::filesystem::path path = field<std::string>(j, "nodes_file");
      if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
      auto table = read_nodes_csv(path);
      return MeasureModel::discrete(std::move(table.nodes), std::move(table.weights));
    }
    std::vector<Point> nodes;
    for (const auto& row : field<Json>(j, "nodes")) {
      const auto flat = row.get<std::vector<double>>();
      if (flat.empty() || flat.size() % 2 != 0) throw DomainError("node rows must hold re/im pairs");
      Point p;
      for (std::size_t i = 0; i < flat.size(); i += 2) p.emplace_back(flat[i], flat[i + 1]);
      nodes.push_back(std::move(p));
    }
    return MeasureModel::discrete(std::move(nodes), field<std::vector<double>>(j, "weights"));
  }
  throw DomainError("unknown measure kind '" + kind + "'");
}

Json to_json(const CompactSet& set) {
  if (set.kind == CompactSet::Kind::Ball) return {{"kind", "ball"}, {"d", set.ball_dim}};
  Json factors = Json::array();
  for (const auto& f : set.factors.factors) factors.push_back(to_json(f));
  return {{"kind", "product"}, {"factors", factors}};
}

CompactSet compact_set_from_json(const Json& j) {
  const auto kind = kind_of(j);
  if (kind == "ball") return CompactSet::ball(field<int>(j, "d"));
  if (kind == "polydisk") return CompactSet::product(ProductSet::unit_polydisk(field<int>(j, "d")));
  if (kind == "product") {
    ProductSet set;
    for (const auto& f : field<Json>(j, "factors")) set.factors.push_back(compactum_from_json(f));
    if (set.factors.empty()) throw DomainError("product set needs at least one factor");
    return CompactSet::product(std::move(set));
  }
  throw DomainError("unknown compact set kind '" + kind + "'");
}

Json to_json(const GridSpec& grid) {
  return {{"moduli", grid.moduli}, {"phases", grid.phase_angles}, {"phase_count", grid.phase_count}};
}

GridSpec grid_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("grid must be an object");
  GridSpec grid;
  if (j.contains("uniform")) {
    const auto& u = j.at("uniform");
    grid = GridSpec::uniform(field<int>(u, "d"), field<double>(u, "r_min"), field<double>(u, "r_max"),
                             field<int>(u, "count"));
  } else {
    grid = GridSpec::from_moduli(field<std::vector<std::vector<double>>>(j, "moduli"));
  }
  if (j.contains("phases")) grid.phase_angles = field<std::vector<double>>(j, "phases");
  if (j.contains("phase_count")) grid.phase_count = field<int>(j, "phase_count");
  grid.validate();
  return grid;
}

NodeTable read_nodes_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open nodes file " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw DomainError("nodes file is empty: " + path.string());
  const auto header = split_csv(line);
  if (header.size() < 3 || header.size() % 2 != 1 || header.back() != "weight")
    throw DomainError("nodes header must be re_1,im_1,...,re_d,im_d,weight");
  const std::size_t d = (header.size() - 1) / 2;
  for (std::size_t i = 0; i < d; ++i) {
    if (header[2 * i] != "re_" + std::to_string(i + 1) || header[2 * i + 1] != "im_" + std::to_string(i + 1))
      throw DomainError("nodes header must be re_1,im_1,...,re_d,im_d,weight");
  }
  NodeTable table;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto cells = split_csv(line);
    if (cells.size() != header.size()) throw DomainError("nodes row has the wrong number of columns");
    Point p(d);
    for (std::size_t i = 0; i < d; ++i) p[i] = {parse_number(cells[2 * i]), parse_number(cells[2 * i + 1])};
    table.nodes.push_back(std::move(p));
    table.weights.push_back(parse_number(cells.back()));
  }
  if (table.nodes.empty()) throw DomainError("nodes file has no rows");
  return table;
}

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

}  // namespace excc
