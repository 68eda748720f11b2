#include "taunak/category.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>
#include <stdexcept>

namespace taunak {

std::string format_morphism(const MorphW& f) {
  std::string s = "[" + format_pair(f.payload) + "] from Filt(";
  for (size_t i = 0; i < f.source.size(); ++i) s += (i ? ", " : "") + format_indec(f.source[i]);
  return s + ")";
}

ClusterCategory::ClusterCategory(const AlgebraSpec& spec) : spec_(spec), alg_(spec) {
  std::set<std::vector<Indec>> seen;
  for (const auto& p : all_smc(spec)) {
    auto w = wide_as_algebra(alg_, p.positive);
    if (seen.insert(w.simples).second) objects_.push_back(std::move(w));
  }
  std::sort(objects_.begin(), objects_.end());
  for (size_t i = 0; i < objects_.size(); ++i) index_[objects_[i].simples] = static_cast<int>(i);
}

bool ClusterCategory::has_object(const std::vector<Indec>& simples) const { return index_.count(simples) > 0; }

const WideSub& ClusterCategory::object(const std::vector<Indec>& simples) const {
  auto it = index_.find(simples);
  if (it == index_.end()) throw std::invalid_argument("not a wide subcategory of " + spec_.name());
  return objects_[it->second];
}

std::vector<Indec> ClusterCategory::target(const MorphW& f) const {
  auto it = target_cache_.find(f);
  if (it != target_cache_.end()) return it->second;
  auto t = jasso(alg_, object(f.source), f.payload).simples;
  target_cache_[f] = t;
  return t;
}

std::vector<MorphW> ClusterCategory::morphisms_from(const WideSub& w) const {
  auto it = from_cache_.find(w.simples);
  if (it != from_cache_.end()) return it->second;
  std::vector<MorphW> out;
  for (const auto& u : all_tau_rigid(w.local)) out.push_back({w.simples, realize(alg_, w, u)});
  std::sort(out.begin(), out.end());
  from_cache_[w.simples] = out;
  return out;
}

std::vector<MorphW> ClusterCategory::all_morphisms() const {
  std::vector<MorphW> out;
  for (const auto& w : objects_) {
    auto m = morphisms_from(w);
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

std::vector<MorphW> ClusterCategory::morphisms_of_rank(int k) const {
  std::vector<MorphW> out;
  for (const auto& f : all_morphisms())
    if (f.rank() == k) out.push_back(f);
  return out;
}

SignedIndec ClusterCategory::e_map(const std::vector<Indec>& source, const std::vector<SignedIndec>& u,
                                   const SignedIndec& x) const {
  return e_bijection(alg_, object(source), u, x);
}

MorphW ClusterCategory::compose(const MorphW& f, const MorphW& g) const {
  if (target(f) != g.source) throw std::invalid_argument("morphisms are not composable");
  const WideSub& w = object(f.source);
  auto members = f.payload.members();
  for (const auto& v : g.payload.members()) {
    auto x = e_inverse(alg_, w, f.payload, v);
    if (!x) throw std::logic_error("no preimage of " + format_signed(v) + " under E");
    members.push_back(*x);
  }
  return {f.source, pair_from(members)};
}

FactorizationCube ClusterCategory::factorization_cube(const MorphW& f) const {
  FactorizationCube c;
  c.base = f;
  c.order = f.payload.members();
  const WideSub& w = object(f.source);
  const unsigned full = 1u << c.k();
  std::set<std::vector<Indec>> distinct;
  for (unsigned s = 0; s < full; ++s) {
    std::vector<SignedIndec> u;
    for (int i = 0; i < c.k(); ++i)
      if (s >> i & 1u) u.push_back(c.order[i]);
    c.vertex.push_back(jasso(alg_, w, pair_from(u)).simples);
    distinct.insert(c.vertex.back());
  }
  c.injective = distinct.size() == full;
  return c;
}

MorphW ClusterCategory::cube_edge(const FactorizationCube& c, unsigned s, unsigned t) const {
  if ((s & t) != s) throw std::invalid_argument("cube vertices are not nested");
  std::vector<SignedIndec> u, image;
  for (int i = 0; i < c.k(); ++i)
    if (s >> i & 1u) u.push_back(c.order[i]);
  for (int i = 0; i < c.k(); ++i)
    if ((t & ~s) >> i & 1u) image.push_back(e_map(c.base.source, u, c.order[i]));
  return {c.vertex[s], pair_from(image)};
}

std::vector<MorphW> ClusterCategory::first_factors(const MorphW& f) const {
  auto c = factorization_cube(f);
  std::vector<MorphW> out;
  for (int i = 0; i < c.k(); ++i) out.push_back(cube_edge(c, 0, 1u << i));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MorphW> ClusterCategory::last_factors(const MorphW& f) const {
  auto c = factorization_cube(f);
  const unsigned full = (1u << c.k()) - 1;
  std::vector<MorphW> out;
  for (int i = 0; i < c.k(); ++i) out.push_back(cube_edge(c, full & ~(1u << i), full));
  std::sort(out.begin(), out.end());
  return out;
}

SignedIndec ClusterCategory::br_inverse(const MorphW& last) const {
  const WideSub& w = object(last.source);
  if (w.rank() != 1 || last.rank() != 1 || !target(last).empty())
    throw std::invalid_argument("br^{-1} needs a rank-1 morphism into 0");
  auto x = last.payload.members().front();
  auto local = localize(alg_, w, x);
  if (!local || !w.local.is_projective(local->base)) throw std::logic_error("payload is not P_S or P_S[1]");
  return {w.simples.front(), x.shifted};
}

int ClusterCategory::count_factorizations(const MorphW& f) const {
  const auto t = target(f);
  int count = 0;
  for (const auto& h : morphisms_from(object(f.source))) {
    if (h.rank() > f.rank()) continue;
    for (const auto& g : morphisms_from(object(target(h)))) {
      if (g.rank() + h.rank() != f.rank() || target(g) != t) continue;
      if (compose(h, g) == f) ++count;
    }
  }
  return count;
}

int ClusterCategory::count_maximal_chains(const MorphW& f) const {
  if (f.rank() == 0) return 1;
  const auto t = target(f);
  int count = 0;
  for (const auto& h : morphisms_from(object(f.source))) {
    if (h.rank() != 1) continue;
    for (const auto& g : morphisms_from(object(target(h)))) {
      if (g.rank() != f.rank() - 1 || target(g) != t) continue;
      if (compose(h, g) == f) count += count_maximal_chains(g);
    }
  }
  return count;
}

CubicalReport check_cubical(const ClusterCategory& cat, bool exhaustive) {
  CubicalReport r;
  auto fail = [&](bool& flag, const std::string& why, const MorphW& f) {
    if (flag) r.violation += why + ": " + format_morphism(f) + "\n";
    flag = false;
  };
  const auto all = cat.all_morphisms();
  std::map<std::pair<std::vector<Indec>, std::vector<MorphW>>, MorphW> by_first;
  std::map<std::vector<MorphW>, MorphW> by_last;
  for (const auto& f : all) {
    auto c = cat.factorization_cube(f);
    if (!c.injective) fail(r.embedding, "cube vertices not distinct", f);
    const unsigned full = (1u << c.k()) - 1;
    for (unsigned s = 0; s <= full; ++s) {
      auto lower = cat.cube_edge(c, 0, s), upper = cat.cube_edge(c, s, full);
      if (cat.target(lower) != c.vertex[s] || cat.target(upper) != cat.target(f) ||
          cat.compose(lower, upper) != f)
        fail(r.cube_shape, "cube edges do not compose to the base", f);
    }
    if (exhaustive && cat.count_factorizations(f) != static_cast<int>(full + 1))
      fail(r.cube_shape, "factorization count is not 2^k", f);
    if (f.rank() == 0) continue;
    auto first = cat.first_factors(f);
    if (static_cast<int>(first.size()) != f.rank()) fail(r.first_factors, "wrong number of first factors", f);
    std::vector<SignedIndec> joint;
    for (const auto& h : first) {
      auto m = h.payload.members();
      joint.insert(joint.end(), m.begin(), m.end());
    }
    if (pair_from(joint) != f.payload) fail(r.first_factors, "first factors do not recover the payload", f);
    if (!by_first.emplace(std::make_pair(f.source, first), f).second)
      fail(r.first_factors, "first factors shared", f);
    auto last = cat.last_factors(f);
    if (!by_last.emplace(last, f).second) fail(r.last_factors, "last factors shared", f);
  }
  for (const auto& f : all) {
    for (const auto& g : cat.morphisms_from(cat.object(cat.target(f)))) {
      auto h = cat.compose(f, g);
      ++r.composable_pairs;
      if (h.rank() != f.rank() + g.rank() || h.source != f.source || cat.target(h) != cat.target(g))
        fail(r.rank_additive, "rank or endpoints not additive", h);
      if (!exhaustive || f.rank() == 0 || g.rank() == 0) continue;
      for (const auto& k : cat.morphisms_from(cat.object(cat.target(g)))) {
        if (k.rank() == 0) continue;
        if (cat.compose(h, k) != cat.compose(f, cat.compose(g, k))) fail(r.associative, "not associative", f);
      }
    }
  }
  return r;
}

bool CubeComplex::flag() const {
  return std::all_of(links.begin(), links.end(), [](const LinkReport& l) { return l.ok(); });
}

namespace {

struct VertexLink {
  std::vector<Indec> vertex;
  int rank = 0;
  std::set<std::vector<int>> simplices;
  std::vector<std::vector<int>> forward_max;
  int ids = 0;
  bool degenerate = false, duplicate = false;
};

LinkReport check_link(const VertexLink& vl) {
  LinkReport r;
  r.vertex = vl.vertex;
  r.link_vertices = vl.ids;
  r.simplices = static_cast<int>(vl.simplices.size());
  if (vl.degenerate || vl.duplicate) {
    r.simplicial = false;
    r.detail += vl.degenerate ? "degenerate simplex; " : "repeated simplex; ";
  }
  for (const auto& s : vl.simplices) {
    if (s.size() < 2) continue;
    for (size_t i = 0; i < s.size(); ++i) {
      auto face = s;
      face.erase(face.begin() + static_cast<long>(i));
      if (!vl.simplices.count(face)) {
        r.simplicial = false;
        r.detail += "face missing; ";
        break;
      }
    }
  }
  std::vector<std::set<int>> adj(vl.ids);
  for (const auto& s : vl.simplices)
    if (s.size() == 2) {
      adj[s[0]].insert(s[1]);
      adj[s[1]].insert(s[0]);
    }
  std::vector<int> clique;
  auto grow = [&](auto&& self, int from) -> void {
    if (!clique.empty() && !vl.simplices.count(clique)) {
      r.flag = false;
      return;
    }
    for (int v = from; v < vl.ids && r.flag; ++v) {
      bool ok = std::all_of(clique.begin(), clique.end(), [&](int c) { return adj[c].count(v) > 0; });
      if (!ok) continue;
      clique.push_back(v);
      self(self, v + 1);
      clique.pop_back();
    }
  };
  grow(grow, 0);
  if (!r.flag) r.detail += "pairwise adjacent set spans no simplex; ";
  std::map<std::vector<int>, int> ridge;
  for (const auto& m : vl.forward_max) {
    if (static_cast<int>(m.size()) != vl.rank) r.forward_sphere = false;
    for (size_t i = 0; i < m.size(); ++i) {
      auto face = m;
      face.erase(face.begin() + static_cast<long>(i));
      ++ridge[face];
    }
  }
  for (const auto& [face, count] : ridge)
    if (count != 2) r.forward_sphere = false;
  if (vl.rank > 0 && vl.forward_max.empty()) r.forward_sphere = false;
  if (!r.forward_sphere) r.detail += "forward link is not a sphere; ";
  return r;
}

}  // namespace

CubeComplex build_cube_complex(const ClusterCategory& cat, int workers) {
  CubeComplex cx;
  const auto& objs = cat.objects();
  const int n = cat.algebra().size();
  cx.cubes_by_rank.assign(n + 1, 0);
  cx.cells_by_rank.assign(n + 1, 0);
  std::map<std::vector<Indec>, VertexLink> links;
  std::map<std::vector<Indec>, std::map<std::pair<MorphW, bool>, int>> ids;
  for (const auto& w : objs) {
    ++cx.cells_by_rank[w.rank()];
    links[w.simples].vertex = w.simples;
    links[w.simples].rank = w.rank();
  }
  for (const auto& f : cat.all_morphisms()) {
    ++cx.cubes_by_rank[f.rank()];
    if (f.rank() == 0) continue;
    auto c = cat.factorization_cube(f);
    const unsigned full = (1u << c.k()) - 1;
    for (unsigned s = 0; s <= full; ++s) {
      auto& vl = links[c.vertex[s]];
      auto& id = ids[c.vertex[s]];
      std::set<int> simplex;
      for (int i = 0; i < c.k(); ++i) {
        const unsigned bit = 1u << i;
        bool incoming = s & bit;
        MorphW e = incoming ? cat.cube_edge(c, s & ~bit, s) : cat.cube_edge(c, s, s | bit);
        auto key = std::make_pair(e, !incoming);
        auto it = id.find(key);
        if (it == id.end()) it = id.emplace(key, vl.ids++).first;
        simplex.insert(it->second);
      }
      if (static_cast<int>(simplex.size()) != c.k()) vl.degenerate = true;
      std::vector<int> sv(simplex.begin(), simplex.end());
      if (!vl.simplices.insert(sv).second) vl.duplicate = true;
      if (s == 0 && f.rank() == vl.rank) vl.forward_max.push_back(sv);
    }
  }
  std::vector<const VertexLink*> todo;
  for (const auto& w : objs) todo.push_back(&links[w.simples]);
  cx.links.resize(todo.size());
  if (workers <= 1) {
    for (size_t i = 0; i < todo.size(); ++i) cx.links[i] = check_link(*todo[i]);
  } else {
    std::vector<std::future<void>> futs;
    for (int t = 0; t < workers; ++t)
      futs.push_back(std::async(std::launch::async, [&, t] {
        for (size_t i = t; i < todo.size(); i += workers) cx.links[i] = check_link(*todo[i]);
      }));
    for (auto& f : futs) f.get();
  }
  return cx;
}

std::string complex_dot(const ClusterCategory& cat) {
  std::ostringstream os;
  std::map<std::vector<Indec>, int> id;
  os << "digraph complex {\n";
  for (const auto& w : cat.objects()) {
    int k = static_cast<int>(id.size());
    id[w.simples] = k;
    std::string label = "Filt(";
    for (size_t i = 0; i < w.simples.size(); ++i) label += (i ? "," : "") + format_indec(w.simples[i]);
    os << "  w" << k << " [label=\"" << label << ")\"];\n";
  }
  int sq = 0;
  for (const auto& f : cat.all_morphisms()) {
    if (f.rank() == 1) {
      os << "  w" << id[f.source] << " -> w" << id[cat.target(f)] << " [label=\"" << format_pair(f.payload)
         << "\"];\n";
    } else if (f.rank() == 2) {
      auto c = cat.factorization_cube(f);
      os << "  sq" << sq << " [shape=point, style=filled, fillcolor=gray80, color=gray80];\n";
      for (const auto& v : c.vertex)
        os << "  sq" << sq << " -> w" << id[v] << " [style=dotted, arrowhead=none, color=gray70];\n";
      ++sq;
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace taunak
