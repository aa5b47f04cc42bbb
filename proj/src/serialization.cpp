#include "hwave/serialization.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

namespace hwave {

using nlohmann::json;

json to_json(const PiecewiseExpFunction& f) {
  json arr = json::array();
  for (const auto& s : f.segments())
    arr.push_back({s.t0, s.t1, s.c.real(), s.c.imag(), s.omega});
  return arr;
}

PiecewiseExpFunction piecewise_from_json(const json& j) {
  std::vector<ExpSegment> segs;
  for (const auto& rec : j) {
    if (!rec.is_array() || rec.size() != 5)
      throw std::invalid_argument("segment record must be [t0,t1,re,im,omega]");
    segs.push_back({rec[0].get<double>(), rec[1].get<double>(),
                    Complex(rec[2].get<double>(), rec[3].get<double>()),
                    rec[4].get<double>()});
  }
  return PiecewiseExpFunction(std::move(segs));
}

json to_json(const RankOneField& f) {
  json nodes = json::array();
  for (std::size_t i = 0; i < f.size(); ++i)
    nodes.push_back({{"lambda", f.grid.nodes[i]},
                     {"weight", f.grid.weights[i]},
                     {"u", to_json(f.ops[i].u)},
                     {"v", to_json(f.ops[i].v)}});
  return json{{"set", format(f.set)}, {"rule", f.grid.rule}, {"nodes", nodes}};
}

RankOneField field_from_json(const json& j) {
  RankOneField f;
  f.set = parse_interval_union(j.at("set").get<std::string>());
  f.grid.rule = j.at("rule").get<std::string>();
  for (const auto& node : j.at("nodes")) {
    f.grid.nodes.push_back(node.at("lambda").get<double>());
    f.grid.weights.push_back(node.at("weight").get<double>());
    f.ops.push_back({piecewise_from_json(node.at("u")),
                     piecewise_from_json(node.at("v"))});
  }
  return f;
}

void save_field(const RankOneField& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << to_json(f).dump(2) << "\n";
}

RankOneField load_field(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  json j;
  in >> j;
  return field_from_json(j);
}

}  // namespace hwave
