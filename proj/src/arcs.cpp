#include "taunak/arcs.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <set>
#include <sstream>

namespace taunak {

std::vector<ColoredArc> ArcPattern::colored() const {
  std::vector<ColoredArc> out;
  for (auto a : green) out.push_back({a, Color::green});
  for (auto a : red) out.push_back({a, Color::red});
  std::sort(out.begin(), out.end());
  return out;
}

ArcPattern canonical(ArcPattern p) {
  std::sort(p.green.begin(), p.green.end());
  std::sort(p.red.begin(), p.red.end());
  p.green.erase(std::unique(p.green.begin(), p.green.end()), p.green.end());
  p.red.erase(std::unique(p.red.begin(), p.red.end()), p.red.end());
  return p;
}

ArcPattern pattern_of(const std::vector<ColoredArc>& arcs) {
  ArcPattern p;
  for (const auto& c : arcs) (c.color == Color::green ? p.green : p.red).push_back(c.arc);
  return canonical(std::move(p));
}

int target(const AlgebraSpec& spec, Arc a) { return cyc(a.source + a.length, spec.n); }
bool is_loop(const AlgebraSpec& spec, Arc a) { return a.length == spec.n; }

bool is_arc(const AlgebraSpec& spec, Arc a) {
  return a.source >= 1 && a.source <= spec.n && a.length >= 1 &&
         a.length <= std::min(spec.l(a.source), spec.n);
}

std::vector<Arc> arcs(const AlgebraSpec& spec) {
  std::vector<Arc> out;
  for (int s = 1; s <= spec.n; ++s)
    for (int l = 1; l <= std::min(spec.l(s), spec.n); ++l) out.push_back({s, l});
  return out;
}

const char* to_string(CaseTag t) {
  static const char* names[] = {"L-a", "L-b", "L-c", "L-d", "S-a", "S-b",
                                "S-c", "S-d", "S-e", "S-f", "S-g"};
  return names[static_cast<int>(t)];
}

// Each arc hugs its boundary interval [s, s+l] on the circle R/nZ. On every
// overlap component of the two intervals the arcs cross once exactly when the
// component's two ends are free endpoints of different arcs.
int interior_crossings(const AlgebraSpec& spec, Arc a, Arc b) {
  const int n = spec.n;
  const int a1 = a.source - 1, a2 = a1 + a.length;
  int count = 0;
  for (int k = -2; k <= 2; ++k) {
    const int b1 = b.source - 1 + k * n, b2 = b1 + b.length;
    const int lo = std::max(a1, b1), hi = std::min(a2, b2);
    if (hi - lo <= 0) continue;
    auto type = [&](int e) { return (e == a1 || e == a2 ? 1 : 0) | (e == b1 || e == b2 ? 2 : 0); };
    const int tl = type(lo), th = type(hi);
    if ((tl == 1 && th == 2) || (tl == 2 && th == 1)) ++count;
  }
  return count;
}

static void set_orthogonal(Intersection& r) {
  r.hom12 = r.hom21 = HomExpect::zero;
  r.ext12 = r.ext21 = false;
}

Intersection classify_intersection(const AlgebraSpec& spec, Arc a1, Arc a2) {
  const int n = spec.n;
  Intersection r;
  r.first = a1;
  r.second = a2;
  r.interior_crossings = interior_crossings(spec, a1, a2);
  const bool long1 = is_loop(spec, a1), long2 = is_loop(spec, a2);

  if (long1 || long2) {
    if (!long1) std::swap(r.first, r.second);
    const Arc f = r.first, s = r.second;
    if (r.interior_crossings == 2) {
      r.tag = CaseTag::La;
      r.hom12 = r.hom21 = HomExpect::nonzero;
    } else if (f.source == s.source) {
      r.tag = CaseTag::Lb;
      r.counterclockwise = f;
      r.hom12 = HomExpect::has_epi;
      r.hom21 = HomExpect::zero;
      r.ext21 = false;
    } else if (f.source == target(spec, s)) {
      r.tag = CaseTag::Lc;
      r.counterclockwise = s;
      r.hom21 = HomExpect::has_mono;
      r.hom12 = HomExpect::zero;
      r.ext12 = false;
    } else {
      r.tag = CaseTag::Ld;
      set_orthogonal(r);
    }
    if (r.interior_crossings == 1) throw std::logic_error("loop with a single interior crossing");
    return r;
  }

  const bool ss = a1.source == a2.source;
  const bool tt = target(spec, a1) == target(spec, a2);
  const bool ts = target(spec, a1) == a2.source;
  const bool st = target(spec, a2) == a1.source;
  if (r.interior_crossings == 2) {
    r.tag = CaseTag::Sg;
    r.hom12 = r.hom21 = HomExpect::nonzero;
  } else if (r.interior_crossings == 1) {
    r.tag = CaseTag::Sf;
    r.one_sided_proper = true;
  } else if (ss) {
    r.tag = CaseTag::Sd;
    if (a1.length < a2.length) std::swap(r.first, r.second);
    r.counterclockwise = r.first;
    r.hom12 = HomExpect::has_epi;
    r.hom21 = HomExpect::zero;
    r.ext21 = false;
  } else if (tt) {
    r.tag = CaseTag::Se;
    if (a1.length > a2.length) std::swap(r.first, r.second);
    r.counterclockwise = r.first;
    r.hom12 = HomExpect::has_mono;
    r.hom21 = HomExpect::zero;
    r.ext21 = false;
  } else if (ts && st) {
    r.tag = CaseTag::Sc;
    r.hom12 = r.hom21 = HomExpect::zero;
    r.ext12 = a1.length + a2.length <= spec.l(a1.source);
    r.ext21 = a1.length + a2.length <= spec.l(a2.source);
  } else if (ts || st) {
    r.tag = CaseTag::Sb;
    if (st) std::swap(r.first, r.second);
    r.hom12 = r.hom21 = HomExpect::zero;
    r.ext21 = false;
    r.ext12 = r.first.length + r.second.length <= spec.l(r.first.source);
  } else {
    r.tag = CaseTag::Sa;
    set_orthogonal(r);
  }
  (void)n;
  return r;
}

namespace {

Admissibility pair_admissible(const AlgebraSpec& spec, const ColoredArc& x, const ColoredArc& y) {
  Admissibility res;
  res.x = x;
  res.y = y;
  if (x.arc == y.arc) {
    res.ok = false;
    res.condition = 'x';
    res.detail = "arc used twice";
    return res;
  }
  auto in = classify_intersection(spec, x.arc, y.arc);
  if (in.interior_crossings > 0) {
    res.ok = false;
    res.condition = 'a';
    res.detail = std::string("interior crossing (") + to_string(in.tag) + ")";
    return res;
  }
  if (in.counterclockwise) {
    const ColoredArc& ccw = in.counterclockwise == x.arc ? x : y;
    const ColoredArc& cw = in.counterclockwise == x.arc ? y : x;
    if (ccw.color != Color::red || cw.color != Color::green) {
      res.ok = false;
      res.condition = 'b';
      res.detail = std::string("shared endpoint (") + to_string(in.tag) +
                   ") needs the counterclockwise arc red and the other green";
      return res;
    }
  }
  for (int pass = 0; pass < 2; ++pass) {
    const ColoredArc& u = pass ? y : x;
    const ColoredArc& v = pass ? x : y;
    if (target(spec, u.arc) != v.arc.source) continue;
    if (u.color == Color::red || v.color == Color::green) continue;
    if (u.arc.length + v.arc.length > spec.l(u.arc.source)) continue;
    res.ok = false;
    res.condition = 'c';
    res.detail = "green arc followed by red arc with a realizable concatenation";
    res.x = u;
    res.y = v;
    return res;
  }
  return res;
}

struct Graph {
  std::vector<ColoredArc> verts;
  std::vector<std::vector<char>> adj;
};

Graph compatibility_graph(const AlgebraSpec& spec) {
  Graph g;
  for (auto a : arcs(spec)) {
    g.verts.push_back({a, Color::green});
    g.verts.push_back({a, Color::red});
  }
  const size_t m = g.verts.size();
  g.adj.assign(m, std::vector<char>(m, 0));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      g.adj[i][j] = g.adj[j][i] = pair_admissible(spec, g.verts[i], g.verts[j]).ok;
  return g;
}

using Set = std::vector<int>;

Set restrict(const Graph& g, const Set& s, int v) {
  Set out;
  for (int u : s)
    if (g.adj[v][u]) out.push_back(u);
  return out;
}

void bron_kerbosch(const Graph& g, Set& r, Set p, Set x, std::vector<Set>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int pivot = -1;
  size_t best = 0;
  for (const Set* s : {&p, &x})
    for (int u : *s) {
      size_t c = restrict(g, p, u).size();
      if (pivot < 0 || c > best) pivot = u, best = c;
    }
  Set cand;
  for (int v : p)
    if (!g.adj[pivot][v]) cand.push_back(v);
  for (int v : cand) {
    r.push_back(v);
    bron_kerbosch(g, r, restrict(g, p, v), restrict(g, x, v), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

ArcPattern to_pattern(const Graph& g, const Set& s) {
  std::vector<ColoredArc> cs;
  for (int v : s) cs.push_back(g.verts[v]);
  return pattern_of(cs);
}

}  // namespace

Admissibility is_admissible(const AlgebraSpec& spec, const ArcPattern& p) {
  auto cs = p.colored();
  for (const auto& c : cs)
    if (!is_arc(spec, c.arc)) {
      Admissibility r;
      r.ok = false;
      r.condition = 'x';
      r.x = r.y = c;
      r.detail = "not an arc of the spec";
      return r;
    }
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t j = i + 1; j < cs.size(); ++j) {
      auto r = pair_admissible(spec, cs[i], cs[j]);
      if (!r.ok) return r;
    }
  return {};
}

bool compatible(const AlgebraSpec& spec, const ColoredArc& x, const ColoredArc& y) {
  return pair_admissible(spec, x, y).ok;
}

std::vector<ArcPattern> enumerate_maximal_patterns(const AlgebraSpec& spec, int workers) {
  const Graph g = compatibility_graph(spec);
  Set p(g.verts.size());
  for (size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);

  // Top-level branches are independent once their (P, X) are fixed.
  struct Branch {
    int v;
    Set p, x;
  };
  std::vector<Branch> branches;
  {
    Set pp = p, xx;
    for (int v : p) {
      branches.push_back({v, restrict(g, pp, v), restrict(g, xx, v)});
      pp.erase(std::find(pp.begin(), pp.end(), v));
      xx.push_back(v);
    }
  }
  auto run = [&](size_t lo, size_t hi) {
    std::vector<Set> found;
    for (size_t b = lo; b < hi; ++b) {
      Set r{branches[b].v};
      bron_kerbosch(g, r, branches[b].p, branches[b].x, found);
    }
    return found;
  };
  std::vector<Set> all;
  if (workers <= 1 || branches.size() < 2) {
    all = run(0, branches.size());
  } else {
    std::vector<std::future<std::vector<Set>>> futs;
    size_t w = std::min<size_t>(workers, branches.size());
    for (size_t i = 0; i < w; ++i) {
      size_t lo = branches.size() * i / w, hi = branches.size() * (i + 1) / w;
      futs.push_back(std::async(std::launch::async, run, lo, hi));
    }
    for (auto& f : futs) {
      auto part = f.get();
      all.insert(all.end(), part.begin(), part.end());
    }
  }
  std::set<ArcPattern> uniq;
  for (const auto& s : all) uniq.insert(to_pattern(g, s));
  if (uniq.empty()) uniq.insert(ArcPattern{});
  return {uniq.begin(), uniq.end()};
}

bool is_maximal(const AlgebraSpec& spec, const ArcPattern& p) {
  if (!is_admissible(spec, p).ok) return false;
  auto cs = p.colored();
  for (auto a : arcs(spec))
    for (Color c : {Color::green, Color::red}) {
      ColoredArc ca{a, c};
      bool ok = true;
      for (const auto& x : cs)
        if (!compatible(spec, ca, x)) {
          ok = false;
          break;
        }
      if (ok) return false;
    }
  return true;
}

std::optional<ArcPattern> extend_to_maximal(const AlgebraSpec& spec, const ArcPattern& p) {
  if (!is_admissible(spec, p).ok) return std::nullopt;
  auto cs = p.colored();
  for (auto a : arcs(spec))
    for (Color c : {Color::green, Color::red}) {
      ColoredArc ca{a, c};
      bool ok = true;
      for (const auto& x : cs)
        if (!compatible(spec, ca, x)) {
          ok = false;
          break;
        }
      if (ok) cs.push_back(ca);
    }
  return pattern_of(cs);
}

bool rotation_invariant(const AlgebraSpec& spec, int k) {
  for (int i = 1; i <= spec.n; ++i)
    if (spec.l(i) != spec.l(cyc(i + k, spec.n))) return false;
  return true;
}

ArcPattern rotate(const AlgebraSpec& spec, const ArcPattern& p, int k) {
  ArcPattern q;
  for (auto a : p.green) q.green.push_back({cyc(a.source + k, spec.n), a.length});
  for (auto a : p.red) q.red.push_back({cyc(a.source + k, spec.n), a.length});
  return canonical(std::move(q));
}

PathResult compose_path(const AlgebraSpec& spec, const std::vector<PathStep>& steps) {
  PathResult r;
  if (steps.empty()) {
    r.failure = "endpoint mismatch";
    return r;
  }
  const int n = spec.n;
  const int start = steps[0].reverse ? target(spec, steps[0].arc) : steps[0].arc.source;
  int pos = start;
  for (const auto& st : steps) {
    if (!is_arc(spec, st.arc)) {
      r.failure = "endpoint mismatch";
      return r;
    }
    const int from = st.reverse ? target(spec, st.arc) : st.arc.source;
    if (cyc(pos, n) != from) {
      r.failure = "endpoint mismatch";
      return r;
    }
    pos += st.reverse ? -st.arc.length : st.arc.length;
  }
  r.signed_length = pos - start;
  if (r.signed_length < 1 || r.signed_length > std::min(spec.l(start), n)) {
    r.failure = "not a brick length";
    return r;
  }
  r.module = Indec{start, r.signed_length};
  return r;
}

bool is_proper_path(const AlgebraSpec& spec, const std::vector<PathStep>& steps) {
  for (size_t i = 0; i < steps.size(); ++i)
    for (size_t j = i + 1; j <= steps.size(); ++j) {
      std::vector<PathStep> sub(steps.begin() + i, steps.begin() + j);
      auto fwd = compose_path(spec, sub);
      if (fwd.module) continue;
      if (fwd.failure == "endpoint mismatch") return false;
      std::vector<PathStep> rev(sub.rbegin(), sub.rend());
      for (auto& s : rev) s.reverse = !s.reverse;
      if (!compose_path(spec, rev).module) return false;
    }
  return true;
}

namespace {

struct Pt {
  double x, y;
};

// Points along an arc hugging the boundary from s counterclockwise.
std::vector<Pt> arc_points(const AlgebraSpec& spec, Arc a, double radius, double scale) {
  const double pi = std::acos(-1.0);
  const int n = spec.n;
  const double th0 = pi / 2 + 2 * pi * (a.source - 1) / n;
  const double sweep = 2 * pi * a.length / n;
  const double depth = radius * (0.25 + 0.45 * static_cast<double>(a.length) / n);
  std::vector<Pt> pts;
  const int steps = 24 + 8 * a.length;
  for (int k = 0; k <= steps; ++k) {
    double u = static_cast<double>(k) / steps;
    double r = radius - depth * std::sin(pi * u);
    double th = th0 + sweep * u;
    pts.push_back({scale * r * std::cos(th), scale * r * std::sin(th)});
  }
  return pts;
}

}  // namespace

std::string pattern_tikz(const AlgebraSpec& spec, const ArcPattern& p) {
  const double pi = std::acos(-1.0);
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << "\\begin{tikzpicture}[scale=1]\n";
  os << "  \\draw (0,0) circle (1);\n";
  os << "  \\node at (0,0) {$\\times$};\n";
  for (int i = 1; i <= spec.n; ++i) {
    double th = pi / 2 + 2 * pi * (i - 1) / spec.n;
    os << "  \\filldraw (" << std::cos(th) << "," << std::sin(th) << ") circle (0.03);\n";
    os << "  \\node at (" << 1.2 * std::cos(th) << "," << 1.2 * std::sin(th) << ") {$" << i << "$};\n";
  }
  auto emit = [&](Arc a, const char* color) {
    auto pts = arc_points(spec, a, 1.0, 1.0);
    os << "  \\draw[" << color << ", thick] plot[smooth] coordinates {";
    for (const auto& q : pts) os << " (" << q.x << "," << q.y << ")";
    os << "};\n";
  };
  for (auto a : p.green) emit(a, "green!60!black");
  for (auto a : p.red) emit(a, "red");
  os << "\\end{tikzpicture}\n";
  return os.str();
}

std::string pattern_svg(const AlgebraSpec& spec, const ArcPattern& p) {
  const double pi = std::acos(-1.0);
  const double s = 100.0;
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-130 -130 260 260\" width=\"260\" height=\"260\">\n";
  os << "  <g transform=\"scale(1,-1)\">\n";
  os << "  <circle cx=\"0\" cy=\"0\" r=\"" << s << "\" fill=\"none\" stroke=\"black\"/>\n";
  os << "  <path d=\"M -5 -5 L 5 5 M -5 5 L 5 -5\" stroke=\"black\"/>\n";
  for (int i = 1; i <= spec.n; ++i) {
    double th = pi / 2 + 2 * pi * (i - 1) / spec.n;
    os << "  <circle cx=\"" << s * std::cos(th) << "\" cy=\"" << s * std::sin(th) << "\" r=\"3\"/>\n";
  }
  auto emit = [&](Arc a, const char* color) {
    auto pts = arc_points(spec, a, 1.0, s);
    os << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (const auto& q : pts) os << q.x << "," << q.y << " ";
    os << "\"/>\n";
  };
  for (auto a : p.green) emit(a, "green");
  for (auto a : p.red) emit(a, "red");
  os << "  </g>\n";
  for (int i = 1; i <= spec.n; ++i) {
    double th = pi / 2 + 2 * pi * (i - 1) / spec.n;
    os << "  <text x=\"" << 1.18 * s * std::cos(th) << "\" y=\"" << -1.18 * s * std::sin(th)
       << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << i << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace taunak
