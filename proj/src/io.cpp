#include "taunak/io.hpp"

#include <fstream>
#include <regex>

namespace taunak {

void to_json(json& j, const AlgebraSpec& s) { j = json{{"n", s.n}, {"kupisch", s.kupisch}}; }

void from_json(const json& j, AlgebraSpec& s) {
  s = validate_spec(j.at("n").get<int>(), j.at("kupisch").get<std::vector<int>>());
}

void to_json(json& j, const Indec& x) { j = format_indec(x); }
void from_json(const json& j, Indec& x) { x = parse_indec(j.get<std::string>()); }
void to_json(json& j, const SignedIndec& x) { j = format_signed(x); }
void from_json(const json& j, SignedIndec& x) { x = parse_signed(j.get<std::string>()); }

void to_json(json& j, const ArcPattern& p) {
  j = json{{"green", json::array()}, {"red", json::array()}};
  for (auto a : p.green) j["green"].push_back(module_of(a));
  for (auto a : p.red) j["red"].push_back(module_of(a));
}

void from_json(const json& j, ArcPattern& p) {
  p = {};
  for (const auto& x : j.at("green")) p.green.push_back(arc_of(x.get<Indec>()));
  for (const auto& x : j.at("red")) p.red.push_back(arc_of(x.get<Indec>()));
  p = canonical(std::move(p));
}

void to_json(json& j, const SemibrickPair& p) { j = json{{"positive", p.positive}, {"negative", p.negative}}; }

void from_json(const json& j, SemibrickPair& p) {
  p.positive = j.at("positive").get<std::vector<Indec>>();
  p.negative = j.at("negative").get<std::vector<Indec>>();
  p = canonical(std::move(p));
}

void to_json(json& j, const TauRigidPair& p) { j = json{{"modules", p.modules}, {"shifted", p.shifted}}; }

void from_json(const json& j, TauRigidPair& p) {
  p.modules = j.at("modules").get<std::vector<Indec>>();
  p.shifted = j.at("shifted").get<std::vector<Indec>>();
  p = canonical(std::move(p));
}

void to_json(json& j, const Letter& l) {
  std::string s = l.coset >= 0 ? "g[" + std::to_string(l.coset) + "]" : "X[" + format_indec(l.brick) + "]";
  if (l.exponent < 0) s += "^-1";
  j = s;
}

void from_json(const json& j, Letter& l) {
  static const std::regex re(R"(^(?:X\[(M\(\s*\d+\s*,\s*\d+\s*\))\]|g\[(\d+)\])(\^-1)?$)");
  std::smatch m;
  const auto s = j.get<std::string>();
  if (!std::regex_match(s, m, re)) throw std::invalid_argument("bad word token '" + s + "'");
  l = {};
  if (m[1].matched) l.brick = parse_indec(m[1]);
  else l.coset = std::stoi(m[2]);
  l.exponent = m[3].matched ? -1 : 1;
}

void to_json(json& j, const Presentation& p) {
  j = json{{"style", to_string(p.style)}, {"generators", json::array()}, {"relations", json::array()}};
  for (auto g : p.generators) j["generators"].push_back(Letter{g, 1, -1});
  for (int c = 0; c < p.cosets; ++c) j["generators"].push_back(Letter{Indec{}, 1, c});
  for (const auto& r : p.relations) j["relations"].push_back(json::array({r.lhs, r.rhs}));
}

void from_json(const json& j, Presentation& p) {
  p = {};
  p.style = parse_style(j.at("style").get<std::string>());
  for (const auto& g : j.at("generators")) {
    auto l = g.get<Letter>();
    if (l.coset >= 0) ++p.cosets;
    else p.generators.push_back(l.brick);
  }
  for (const auto& r : j.at("relations"))
    p.relations.push_back({r.at(0).get<GroupWord>(), r.at(1).get<GroupWord>()});
}

json polygons_json(const TorsLattice& lat) {
  json out = json::array();
  for (const auto& p : polygons(lat))
    out.push_back({{"top", lat.vertices[p.top]}, {"bottom", lat.vertices[p.bottom]}, {"sides", {p.side1, p.side2}}});
  return out;
}

json complex_json(const CubeComplex& c) {
  bool flag = c.flag();
  json bad = json::array();
  for (const auto& l : c.links)
    if (!l.ok()) bad.push_back({{"vertex", l.vertex}, {"detail", l.detail}});
  json j{{"cubes_by_rank", c.cubes_by_rank}, {"cells_by_rank", c.cells_by_rank}, {"flag", flag}};
  if (!flag) j["failures"] = bad;
  return j;
}

AlgebraSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw SpecError(path + ": " + e.what());
  }
  return j.get<AlgebraSpec>();
}

}  // namespace taunak
