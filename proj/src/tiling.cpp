#include "tileprove/tiling.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace tileprove {

using nlohmann::json;

std::string tiling_to_json(const Tiling& t) {
  json j;
  j["field_d"] = t.field_d.str();
  j["gram"] = {t.gram[0].encode(), t.gram[1].encode(), t.gram[2].encode()};
  json pts = json::array();
  for (const auto& p : t.points) pts.push_back({p[0].encode(), p[1].encode()});
  j["points"] = std::move(pts);
  j["outer"] = {t.outer[0], t.outer[1], t.outer[2]};
  json tiles = json::array();
  for (const auto& tri : t.tiles) tiles.push_back({tri[0], tri[1], tri[2]});
  j["tiles"] = std::move(tiles);
  j["tile_sq_lengths"] = {t.tile_sq_lengths[0].encode(),
                          t.tile_sq_lengths[1].encode(),
                          t.tile_sq_lengths[2].encode()};
  return j.dump(1);
}

Tiling tiling_from_json(const std::string& text) {
  json j = json::parse(text);
  Tiling t;
  if (j.at("field_d").is_string())
    t.field_d = BigInt(j.at("field_d").get<std::string>());
  else
    t.field_d = j.at("field_d").get<long long>();
  for (int i = 0; i < 3; ++i) {
    t.gram[i] = QuadExt::parse(j.at("gram").at(i).get<std::string>());
    t.tile_sq_lengths[i] =
        QuadExt::parse(j.at("tile_sq_lengths").at(i).get<std::string>());
    t.outer[i] = j.at("outer").at(i).get<int>();
  }
  for (const auto& p : j.at("points"))
    t.points.push_back(
        {QuadExt::parse(p.at(0).get<std::string>()),
         QuadExt::parse(p.at(1).get<std::string>())});
  for (const auto& tri : j.at("tiles"))
    t.tiles.push_back({tri.at(0).get<int>(), tri.at(1).get<int>(),
                       tri.at(2).get<int>()});
  return t;
}

Tiling load_tiling(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return tiling_from_json(text);
}

void save_tiling(const Tiling& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << tiling_to_json(t) << "\n";
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace tileprove
