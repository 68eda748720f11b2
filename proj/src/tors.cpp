#include "taunak/tors.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace taunak {

int TorsLattice::index_of(const TauRigidPair& p) const {
  auto it = std::find(vertices.begin(), vertices.end(), p);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

int TorsLattice::index_of_torsion(const IndecSet& t) const {
  auto it = std::find(torsion.begin(), torsion.end(), t);
  return it == torsion.end() ? -1 : static_cast<int>(it - torsion.begin());
}

bool TorsLattice::leq(int a, int b) const {
  return std::includes(torsion[b].begin(), torsion[b].end(), torsion[a].begin(), torsion[a].end());
}

int TorsLattice::meet(int a, int b) const {
  IndecSet s;
  std::set_intersection(torsion[a].begin(), torsion[a].end(), torsion[b].begin(), torsion[b].end(),
                        std::back_inserter(s));
  int m = index_of_torsion(s);
  if (m < 0) throw std::logic_error("intersection of torsion classes is not a vertex");
  return m;
}

int TorsLattice::join(int a, int b) const {
  int best = -1;
  for (int v = 0; v < size(); ++v)
    if (leq(a, v) && leq(b, v) && (best < 0 || torsion[v].size() < torsion[best].size())) best = v;
  for (int v = 0; v < size(); ++v)
    if (leq(a, v) && leq(b, v) && !leq(best, v)) throw std::logic_error("no least upper bound");
  return best;
}

TorsLattice build_lattice(const Nakayama& alg) {
  const auto& g = all_stt_cached(alg);
  TorsLattice lat;
  lat.alg = alg;
  lat.vertices = g.vertices;
  for (const auto& v : lat.vertices) lat.torsion.push_back(fac(alg, v.modules));
  lat.out.resize(lat.size());
  lat.in.resize(lat.size());
  for (const auto& e : g.edges) {
    if (!e.left || e.at.shifted) continue;
    const Indec x = e.at.base;
    int t = 0;
    for (auto m : lat.vertices[e.from].modules) t = std::max(t, alg.max_radical_window(m, x));
    HasseArrow a{e.from, e.to, Indec{x.top, x.len - t}, e.at};
    lat.out[a.from].push_back(static_cast<int>(lat.arrows.size()));
    lat.in[a.to].push_back(static_cast<int>(lat.arrows.size()));
    lat.arrows.push_back(a);
  }
  for (int v = 0; v < lat.size(); ++v) {
    if (lat.torsion[v].size() == alg.indecomposables().size()) lat.top = v;
    if (lat.torsion[v].empty()) lat.bottom = v;
  }
  return lat;
}

const TorsLattice& build_lattice_cached(const Nakayama& alg) {
  static std::mutex mu;
  static std::map<Nakayama, std::unique_ptr<TorsLattice>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(alg); it != cache.end()) return *it->second;
  }
  auto lat = std::make_unique<TorsLattice>(build_lattice(alg));
  std::lock_guard<std::mutex> lock(mu);
  return *cache.emplace(alg, std::move(lat)).first->second;
}

std::optional<Indec> label_by_torsion_pair(const TorsLattice& lat, const HasseArrow& a) {
  std::optional<Indec> found;
  for (auto b : lat.torsion[a.from]) {
    if (!lat.alg.is_brick(b)) continue;
    bool perp = true;
    for (auto m : lat.vertices[a.to].modules)
      if (lat.alg.hom_dim(m, b) != 0) perp = false;
    if (!perp) continue;
    if (found) return std::nullopt;
    found = b;
  }
  return found;
}

SemibrickPair x_of(const TorsLattice& lat, int v) {
  SemibrickPair p;
  for (int a : lat.out[v]) p.positive.push_back(lat.arrows[a].label);
  for (int a : lat.in[v]) p.negative.push_back(lat.arrows[a].label);
  return canonical(std::move(p));
}

namespace {

// Labels of the unique descent from `from` to `to` after the first arrow.
std::vector<Indec> descend(const TorsLattice& lat, int arrow, int to) {
  std::vector<Indec> labels{lat.arrows[arrow].label};
  int cur = lat.arrows[arrow].to;
  while (cur != to) {
    int next = -1;
    for (int a : lat.out[cur])
      if (lat.leq(to, lat.arrows[a].to)) {
        if (next >= 0) throw std::logic_error("interval is not a polygon");
        next = a;
      }
    if (next < 0) throw std::logic_error("interval is not a polygon");
    labels.push_back(lat.arrows[next].label);
    cur = lat.arrows[next].to;
  }
  return labels;
}

std::vector<Indec> ascend(const TorsLattice& lat, int arrow, int to) {
  std::vector<Indec> labels{lat.arrows[arrow].label};
  int cur = lat.arrows[arrow].from;
  while (cur != to) {
    int next = -1;
    for (int a : lat.in[cur])
      if (lat.leq(lat.arrows[a].from, to)) {
        if (next >= 0) throw std::logic_error("interval is not a polygon");
        next = a;
      }
    if (next < 0) throw std::logic_error("interval is not a polygon");
    labels.push_back(lat.arrows[next].label);
    cur = lat.arrows[next].from;
  }
  std::reverse(labels.begin(), labels.end());
  return labels;
}

}  // namespace

std::vector<Polygon> polygons(const TorsLattice& lat) {
  std::map<std::pair<Indec, Indec>, Polygon> by_pair;
  auto add = [&](Polygon p) {
    if (std::make_pair(p.side1.size(), p.side1) > std::make_pair(p.side2.size(), p.side2))
      std::swap(p.side1, p.side2);
    auto key = std::minmax(p.side1.front(), p.side2.front());
    by_pair.emplace(std::make_pair(key.first, key.second), std::move(p));
  };
  for (int v = 0; v < lat.size(); ++v) {
    const auto& down = lat.out[v];
    for (size_t i = 0; i < down.size(); ++i)
      for (size_t j = i + 1; j < down.size(); ++j) {
        int m = lat.meet(lat.arrows[down[i]].to, lat.arrows[down[j]].to);
        add({v, m, descend(lat, down[i], m), descend(lat, down[j], m)});
      }
    const auto& up = lat.in[v];
    for (size_t i = 0; i < up.size(); ++i)
      for (size_t j = i + 1; j < up.size(); ++j) {
        int t = lat.join(lat.arrows[up[i]].from, lat.arrows[up[j]].from);
        add({t, v, ascend(lat, up[i], t), ascend(lat, up[j], t)});
      }
  }
  std::vector<Polygon> out;
  for (auto& [k, p] : by_pair) out.push_back(std::move(p));
  return out;
}

std::vector<std::vector<int>> maximal_paths(const TorsLattice& lat) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto dfs = [&](auto&& self, int v) -> void {
    if (lat.out[v].empty()) {
      out.push_back(cur);
      return;
    }
    for (int a : lat.out[v]) {
      cur.push_back(a);
      self(self, lat.arrows[a].to);
      cur.pop_back();
    }
  };
  dfs(dfs, lat.top);
  return out;
}

std::vector<Indec> labels_of(const TorsLattice& lat, const std::vector<int>& path) {
  std::vector<Indec> out;
  for (int a : path) out.push_back(lat.arrows[a].label);
  return out;
}

std::vector<std::vector<Indec>> maximal_green_sequences(const TorsLattice& lat) {
  std::vector<std::vector<Indec>> out;
  for (const auto& p : maximal_paths(lat)) out.push_back(labels_of(lat, p));
  return out;
}

IntervalIso interval_iso(const TorsLattice& lat, const TauRigidPair& u) {
  const Nakayama& alg = lat.alg;
  if (auto c = is_tau_rigid(alg, u); !c) throw std::invalid_argument("not τ-rigid: " + format_pair(u));
  IntervalIso iso;
  iso.lower = lat.index_of_torsion(fac(alg, u.modules));
  iso.upper = lat.index_of_torsion(perpendicular_category(alg, u));
  if (iso.lower < 0 || iso.upper < 0) throw std::logic_error("interval ends are not torsion classes");
  iso.j = jasso(alg, whole_category(alg), u);
  const TorsLattice& jl = build_lattice_cached(iso.j.local);
  IndecSet jm = members(alg, iso.j);
  std::vector<int> inside;
  for (int t = 0; t < lat.size(); ++t) {
    if (!lat.leq(iso.lower, t) || !lat.leq(t, iso.upper)) continue;
    inside.push_back(t);
    IndecSet f;
    for (auto x : lat.torsion[t])
      if (std::binary_search(jm.begin(), jm.end(), x)) f.push_back(*localize(alg, iso.j, x));
    std::sort(f.begin(), f.end());
    iso.to_j[t] = jl.index_of_torsion(f);
  }
  std::set<int> image;
  for (auto [t, v] : iso.to_j)
    if (v >= 0) image.insert(v);
  iso.bijective = image.size() == inside.size() && static_cast<int>(image.size()) == jl.size();
  iso.order_preserving = iso.bijective;
  for (int a : inside)
    for (int b : inside)
      if (iso.bijective && lat.leq(a, b) != jl.leq(iso.to_j[a], iso.to_j[b])) iso.order_preserving = false;
  iso.label_preserving = iso.bijective;
  int arrows_inside = 0;
  for (const auto& a : lat.arrows) {
    if (!iso.bijective || !iso.to_j.count(a.from) || !iso.to_j.count(a.to)) continue;
    ++arrows_inside;
    bool found = false;
    for (int b : jl.out[iso.to_j[a.from]]) {
      const auto& jb = jl.arrows[b];
      if (jb.to == iso.to_j[a.to] && realize(alg, iso.j, jb.label) == a.label) found = true;
    }
    if (!found) iso.label_preserving = false;
  }
  if (iso.bijective && arrows_inside != static_cast<int>(jl.arrows.size())) iso.label_preserving = false;
  return iso;
}

std::string lattice_dot(const TorsLattice& lat) {
  std::ostringstream os;
  os << "digraph tors {\n  rankdir=TB;\n";
  for (int v = 0; v < lat.size(); ++v)
    os << "  v" << v << " [label=\"" << format_pair(lat.vertices[v]) << "\"];\n";
  for (const auto& a : lat.arrows)
    os << "  v" << a.from << " -> v" << a.to << " [label=\"" << format_indec(a.label) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace taunak
