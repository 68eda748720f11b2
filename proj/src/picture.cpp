#include "taunak/picture.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>
#include <stdexcept>

namespace taunak {

GroupWord word_of(const std::vector<Indec>& labels) {
  GroupWord w;
  for (auto s : labels) w.push_back({s, 1, -1});
  return w;
}

GroupWord inverse(const GroupWord& w) {
  GroupWord out(w.rbegin(), w.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return out;
}

std::string format_word(const GroupWord& w) {
  if (w.empty()) return "e";
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += " ";
    s += l.coset >= 0 ? "g[" + std::to_string(l.coset) + "]" : "X[" + format_indec(l.brick) + "]";
    if (l.exponent < 0) s += "^-1";
  }
  return s;
}

const char* to_string(Style s) {
  switch (s) {
    case Style::polygon: return "polygon";
    case Style::path: return "path";
    case Style::mgs: return "mgs";
    case Style::coset: return "coset";
  }
  return "?";
}

Style parse_style(const std::string& s) {
  for (Style st : {Style::polygon, Style::path, Style::mgs, Style::coset})
    if (s == to_string(st)) return st;
  throw std::invalid_argument("unknown presentation style '" + s + "'");
}

Presentation presentation(const TorsLattice& lat, Style style) {
  Presentation p;
  p.style = style;
  p.generators = lat.alg.bricks();
  std::set<Relation> rels;
  auto add = [&](GroupWord a, GroupWord b) {
    if (a == b) return;
    if (a.size() < b.size()) std::swap(a, b);
    rels.insert({std::move(a), std::move(b)});
  };
  switch (style) {
    case Style::polygon:
      for (const auto& poly : polygons(lat)) add(word_of(poly.side1), word_of(poly.side2));
      break;
    case Style::mgs: {
      auto paths = maximal_paths(lat);
      for (const auto& path : paths) add(word_of(labels_of(lat, path)), word_of(labels_of(lat, paths.front())));
      break;
    }
    case Style::path:
      for (int u = 0; u < lat.size(); ++u) {
        std::map<int, GroupWord> ref;
        std::vector<Indec> cur;
        auto dfs = [&](auto&& self, int v) -> void {
          if (v != u) {
            auto w = word_of(cur);
            auto [it, inserted] = ref.emplace(v, w);
            if (!inserted) add(w, it->second);
          }
          for (int a : lat.out[v]) {
            cur.push_back(lat.arrows[a].label);
            self(self, lat.arrows[a].to);
            cur.pop_back();
          }
        };
        dfs(dfs, u);
      }
      break;
    case Style::coset:
      p.cosets = lat.size();
      for (const auto& a : lat.arrows)
        rels.insert({GroupWord{{Indec{}, 1, a.from}}, GroupWord{{a.label, 1, -1}, {Indec{}, 1, a.to}}});
      rels.insert({GroupWord{{Indec{}, 1, lat.bottom}}, GroupWord{}});
      break;
  }
  p.relations.assign(rels.begin(), rels.end());
  return p;
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "style " << to_string(p.style) << "\ngenerators";
  for (auto g : p.generators) os << " X[" << format_indec(g) << "]";
  for (int c = 0; c < p.cosets; ++c) os << " g[" << c << "]";
  os << "\nrelations " << p.relations.size() << "\n";
  for (const auto& r : p.relations) os << "  " << format_word(r.lhs) << " = " << format_word(r.rhs) << "\n";
  return os.str();
}

BrickElement brick_one() { return BrickElement{1, {}}; }

BrickElement brick_basis(Indec s) { return BrickElement{0, {{s, 1}}}; }

static void prune(BrickElement& x) {
  for (auto it = x.coef.begin(); it != x.coef.end();) it = it->second == 0 ? x.coef.erase(it) : std::next(it);
}

BrickElement operator+(BrickElement a, const BrickElement& b) {
  a.unit += b.unit;
  for (auto [k, v] : b.coef) a.coef[k] += v;
  prune(a);
  return a;
}

BrickElement operator-(BrickElement a, const BrickElement& b) {
  a.unit -= b.unit;
  for (auto [k, v] : b.coef) a.coef[k] -= v;
  prune(a);
  return a;
}

std::string format_element(const BrickElement& x) {
  std::string s;
  auto term = [&](long c, const std::string& name) {
    if (c == 0) return;
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    long m = c < 0 ? -c : c;
    if (name.empty()) s += std::to_string(m);
    else s += (m == 1 ? "" : std::to_string(m) + "*") + name;
  };
  term(x.unit, "");
  for (auto [k, v] : x.coef) term(v, format_indec(k));
  return s.empty() ? "0" : s;
}

std::optional<Indec> brick_product(const AlgebraSpec& spec, Indec s, Indec t) {
  if (target(spec, arc_of(s)) != t.top) return std::nullopt;
  if (s.len + t.len > std::min(spec.l(s.top), spec.n)) return std::nullopt;
  return Indec{s.top, s.len + t.len};
}

std::optional<Indec> brick_product_by_modules(const Nakayama& alg, Indec s, Indec t) {
  if (s == t || !is_semibrick(alg, {s, t})) return std::nullopt;
  for (auto b : alg.bricks()) {
    if (b.len != s.len + t.len || b.top != s.top) continue;
    if (Indec{alg.shift(b.top, s.len), t.len} == t) return b;
  }
  return std::nullopt;
}

BrickElement brick_mul(const AlgebraSpec& spec, const BrickElement& x, const BrickElement& y) {
  BrickElement r;
  r.unit = x.unit * y.unit;
  for (auto [k, v] : y.coef) r.coef[k] += x.unit * v;
  for (auto [k, v] : x.coef) r.coef[k] += v * y.unit;
  for (auto [a, va] : x.coef)
    for (auto [b, vb] : y.coef)
      if (auto p = brick_product(spec, a, b)) r.coef[*p] += va * vb;
  prune(r);
  return r;
}

BrickElement phi(const AlgebraSpec& spec, const GroupWord& w, const std::vector<BrickElement>* cosets) {
  BrickElement r = brick_one();
  for (const auto& l : w) {
    BrickElement f;
    if (l.coset >= 0) {
      if (!cosets || l.exponent != 1) throw std::invalid_argument("coset letter without a value");
      f = (*cosets)[l.coset];
    } else {
      f = l.exponent > 0 ? brick_one() + brick_basis(l.brick) : brick_one() - brick_basis(l.brick);
    }
    r = brick_mul(spec, r, f);
  }
  return r;
}

PictureReport verify_presentation(const AlgebraSpec& spec, int workers) {
  PictureReport rep;
  const Nakayama alg(spec);
  const TorsLattice& lat = build_lattice_cached(alg);

  // g_T through one descent T -> 0.
  std::vector<BrickElement> cv(lat.size());
  for (int t = 0; t < lat.size(); ++t) {
    std::vector<Indec> labels;
    for (int v = t; !lat.out[v].empty(); v = lat.arrows[lat.out[v].front()].to)
      labels.push_back(lat.arrows[lat.out[v].front()].label);
    cv[t] = phi(spec, word_of(labels));
  }

  auto check_style = [&](Style st) {
    PictureReport r;
    auto p = presentation(lat, st);
    for (const auto& rel : p.relations) {
      ++r.relations_checked;
      if (phi(spec, rel.lhs, &cv) != phi(spec, rel.rhs, &cv)) {
        r.relations = false;
        r.failures.push_back(std::string(to_string(st)) + ": " + format_word(rel.lhs) + " = " + format_word(rel.rhs));
      }
    }
    return r;
  };
  std::vector<PictureReport> parts;
  const std::vector<Style> styles{Style::polygon, Style::path, Style::mgs, Style::coset};
  if (workers > 1) {
    std::vector<std::future<PictureReport>> futs;
    for (auto st : styles) futs.push_back(std::async(std::launch::async, check_style, st));
    for (auto& f : futs) parts.push_back(f.get());
  } else {
    for (auto st : styles) parts.push_back(check_style(st));
  }
  for (const auto& r : parts) {
    rep.relations = rep.relations && r.relations;
    rep.relations_checked += r.relations_checked;
    rep.failures.insert(rep.failures.end(), r.failures.begin(), r.failures.end());
  }

  const auto bricks = alg.bricks();
  std::vector<BrickElement> gens;
  for (auto s : bricks) {
    auto x = phi(spec, word_of({s}));
    if (x == brick_one()) {
      rep.generators = false;
      rep.failures.push_back("phi(X[" + format_indec(s) + "]) = 1");
    }
    for (size_t i = 0; i < gens.size(); ++i)
      if (gens[i] == x) {
        rep.generators = false;
        rep.failures.push_back("phi(X[" + format_indec(s) + "]) = phi(X[" + format_indec(bricks[i]) + "])");
      }
    gens.push_back(x);
  }

  std::vector<int> order(lat.size());
  for (int i = 0; i < lat.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return lat.torsion[a].size() > lat.torsion[b].size(); });
  for (int u = 0; u < lat.size(); ++u) {
    std::vector<std::optional<BrickElement>> val(lat.size());
    val[u] = brick_one();
    for (int v : order) {
      if (!val[v]) continue;
      for (int a : lat.out[v]) {
        auto x = brick_mul(spec, *val[v], phi(spec, word_of({lat.arrows[a].label})));
        int w = lat.arrows[a].to;
        if (!val[w]) {
          val[w] = x;
        } else if (*val[w] != x) {
          rep.path_invariant = false;
          rep.failures.push_back("paths " + format_pair(lat.vertices[u]) + " -> " + format_pair(lat.vertices[w]) +
                                 " differ under phi");
        }
      }
    }
  }

  for (int a = 0; a < lat.size(); ++a)
    for (int b = a + 1; b < lat.size(); ++b)
      if (cv[a] == cv[b]) {
        rep.cosets_distinct = false;
        rep.failures.push_back("g_T equal for " + format_pair(lat.vertices[a]) + " and " + format_pair(lat.vertices[b]));
      }
  return rep;
}

GroupWord group_functor(const ClusterCategory& cat, const MorphW& f) {
  const WideSub& w = cat.object(f.source);
  const TorsLattice& lat = build_lattice_cached(w.local);
  auto ul = localize(cat.algebra(), w, f.payload);
  int v = lat.index_of_torsion(fac(w.local, ul.modules));
  if (v < 0) throw std::logic_error("Fac of the payload is not a torsion class");
  std::vector<Indec> labels;
  for (; !lat.out[v].empty(); v = lat.arrows[lat.out[v].front()].to)
    labels.push_back(realize(cat.algebra(), w, lat.arrows[lat.out[v].front()].label));
  return word_of(labels);
}

}  // namespace taunak
