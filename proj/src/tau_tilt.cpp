#include "taunak/tau_tilt.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

namespace taunak {

std::vector<SignedIndec> TauRigidPair::members() const {
  std::vector<SignedIndec> out;
  for (auto x : modules) out.push_back({x, false});
  for (auto x : shifted) out.push_back({x, true});
  std::sort(out.begin(), out.end());
  return out;
}

bool TauRigidPair::contains(const SignedIndec& x) const {
  const auto& v = x.shifted ? shifted : modules;
  return std::find(v.begin(), v.end(), x.base) != v.end();
}

TauRigidPair canonical(TauRigidPair p) {
  std::sort(p.modules.begin(), p.modules.end());
  std::sort(p.shifted.begin(), p.shifted.end());
  p.modules.erase(std::unique(p.modules.begin(), p.modules.end()), p.modules.end());
  p.shifted.erase(std::unique(p.shifted.begin(), p.shifted.end()), p.shifted.end());
  return p;
}

TauRigidPair pair_from(const std::vector<SignedIndec>& xs) {
  TauRigidPair p;
  for (const auto& x : xs) (x.shifted ? p.shifted : p.modules).push_back(x.base);
  return canonical(std::move(p));
}

std::string format_pair(const TauRigidPair& p) {
  std::string s;
  for (const auto& x : p.members()) s += (s.empty() ? "" : " + ") + format_signed(x);
  return s.empty() ? "0" : s;
}

bool self_rigid(const Nakayama& alg, const SignedIndec& x) {
  if (x.shifted) return alg.is_projective(x.base);
  auto t = alg.tau(x.base);
  return !t || alg.hom_dim(x.base, *t) == 0;
}

bool compatible(const Nakayama& alg, const SignedIndec& x, const SignedIndec& y) {
  if (x == y) return false;
  if (!x.shifted && !y.shifted) {
    auto tx = alg.tau(x.base), ty = alg.tau(y.base);
    if (ty && alg.hom_dim(x.base, *ty) != 0) return false;
    if (tx && alg.hom_dim(y.base, *tx) != 0) return false;
    return true;
  }
  if (x.shifted && y.shifted) return true;
  const auto& p = x.shifted ? x.base : y.base;
  const auto& m = x.shifted ? y.base : x.base;
  return alg.hom_dim(p, m) == 0;
}

Check is_tau_rigid(const Nakayama& alg, const TauRigidPair& u) {
  for (auto p : u.shifted)
    if (!alg.valid(p) || !alg.is_projective(p))
      throw std::invalid_argument(format_indec(p) + " is shifted but not projective");
  for (auto m : u.modules)
    if (!alg.valid(m)) throw std::invalid_argument(format_indec(m) + " is not a module");
  auto xs = u.members();
  for (size_t i = 0; i < xs.size(); ++i) {
    if (!self_rigid(alg, xs[i])) return {false, "Hom(M, τM) != 0", xs[i].base, xs[i].base};
    for (size_t j = i + 1; j < xs.size(); ++j)
      if (!compatible(alg, xs[i], xs[j]))
        return {false, "summands not compatible", xs[i].base, xs[j].base};
  }
  return {};
}

bool is_stt(const Nakayama& alg, const TauRigidPair& u) {
  return u.rank() == alg.size() && is_tau_rigid(alg, u).ok;
}

std::vector<SignedIndec> rigid_objects(const Nakayama& alg) {
  std::vector<SignedIndec> out;
  for (const auto& x : alg.signed_indecomposables())
    if (self_rigid(alg, x)) out.push_back(x);
  return out;
}

IndecSet fac(const Nakayama& alg, const std::vector<Indec>& modules) {
  std::set<Indec> s;
  for (auto m : modules)
    for (int j = 1; j <= m.len; ++j) s.insert({m.top, j});
  (void)alg;
  return {s.begin(), s.end()};
}

IndecSet perpendicular_category(const Nakayama& alg, const TauRigidPair& u) {
  IndecSet out;
  for (auto y : alg.indecomposables()) {
    bool ok = true;
    for (auto m : u.modules)
      if (auto t = alg.tau(m); t && alg.hom_dim(y, *t) != 0) ok = false;
    for (auto p : u.shifted)
      if (alg.hom_dim(p, y) != 0) ok = false;
    if (ok) out.push_back(y);
  }
  return out;
}

std::vector<Indec> bongartz_complement(const Nakayama& alg, const TauRigidPair& u) {
  auto c = perpendicular_category(alg, u);
  std::vector<Indec> b;
  for (auto x : c) {
    bool proj = true;
    for (auto y : c)
      if (alg.ext_dim(x, y) != 0) {
        proj = false;
        break;
      }
    if (proj && std::find(u.modules.begin(), u.modules.end(), x) == u.modules.end()) b.push_back(x);
  }
  if (u.rank() + static_cast<int>(b.size()) != alg.size())
    throw std::logic_error("Bongartz completion of " + format_pair(u) + " has wrong rank");
  return b;
}

Mutation mutate_stt(const Nakayama& alg, const TauRigidPair& t, const SignedIndec& at) {
  if (!t.contains(at)) throw std::invalid_argument(format_signed(at) + " is not a summand");
  std::vector<SignedIndec> rest;
  for (const auto& x : t.members())
    if (x != at) rest.push_back(x);
  std::vector<SignedIndec> found;
  for (const auto& y : rigid_objects(alg)) {
    if (y == at || t.contains(y)) continue;
    bool ok = true;
    for (const auto& r : rest)
      if (!compatible(alg, y, r)) {
        ok = false;
        break;
      }
    if (ok) found.push_back(y);
  }
  if (found.size() != 1)
    throw std::logic_error("almost complete pair has " + std::to_string(found.size() + 1) + " completions");
  Mutation m;
  m.replaced = at;
  m.replacement = found[0];
  auto all = rest;
  all.push_back(found[0]);
  m.result = pair_from(all);
  if (found[0].shifted) {
    m.left = true;
  } else {
    std::vector<Indec> rm;
    for (const auto& r : rest)
      if (!r.shifted) rm.push_back(r.base);
    auto f = fac(alg, rm);
    m.left = std::binary_search(f.begin(), f.end(), found[0].base);
  }
  return m;
}

int ExchangeGraph::index_of(const TauRigidPair& p) const {
  auto it = std::find(vertices.begin(), vertices.end(), p);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

ExchangeGraph all_stt(const Nakayama& alg) {
  ExchangeGraph g;
  std::map<TauRigidPair, int> idx;
  TauRigidPair top = canonical(TauRigidPair{alg.projectives(), {}});
  std::deque<int> queue;
  idx[top] = 0;
  g.vertices.push_back(top);
  queue.push_back(0);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    const TauRigidPair cur = g.vertices[v];
    for (const auto& x : cur.members()) {
      auto m = mutate_stt(alg, cur, x);
      auto it = idx.find(m.result);
      int w;
      if (it == idx.end()) {
        w = static_cast<int>(g.vertices.size());
        idx[m.result] = w;
        g.vertices.push_back(m.result);
        queue.push_back(w);
      } else {
        w = it->second;
      }
      g.edges.push_back({v, w, x, m.replacement, m.left});
    }
  }
  return g;
}

const ExchangeGraph& all_stt_cached(const Nakayama& alg) {
  static std::mutex mu;
  static std::map<Nakayama, std::unique_ptr<ExchangeGraph>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(alg);
    if (it != cache.end()) return *it->second;
  }
  auto g = std::make_unique<ExchangeGraph>(all_stt(alg));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(alg, std::move(g));
  return *it->second;
}

std::vector<TauRigidPair> all_tau_rigid(const Nakayama& alg) {
  auto objs = rigid_objects(alg);
  std::vector<TauRigidPair> out;
  std::vector<SignedIndec> cur;
  auto rec = [&](auto&& self, size_t start) -> void {
    out.push_back(pair_from(cur));
    for (size_t i = start; i < objs.size(); ++i) {
      bool ok = true;
      for (const auto& c : cur)
        if (!compatible(alg, c, objs[i])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(objs[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// ---- wide subcategories ----

WideSub wide_as_algebra(const Nakayama& alg, std::vector<Indec> semibrick) {
  std::sort(semibrick.begin(), semibrick.end());
  if (auto c = is_semibrick(alg, semibrick); !c)
    throw std::invalid_argument("not a semibrick: " + c.reason);
  const int m = static_cast<int>(semibrick.size());
  std::vector<int> next(m, -1), prev(m, -1);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const Indec x = semibrick[a], y = semibrick[b];
      if (alg.same_component(x, y) && y.top == alg.shift(x.top, x.len) &&
          x.len + y.len <= alg.loewy(x.top)) {
        if (next[a] != -1 || prev[b] != -1) throw std::logic_error("Ext-quiver of simples is not uniserial");
        next[a] = b;
        prev[b] = a;
      }
    }
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(m, 0);
  for (int a = 0; a < m; ++a) {
    if (seen[a]) continue;
    int start = a;
    // walk back to a chain start, or stop when the walk closes a cycle
    while (prev[start] != -1 && prev[start] != a) start = prev[start];
    if (prev[start] != -1) start = a;
    std::vector<int> comp;
    int cur = start;
    do {
      comp.push_back(cur);
      seen[cur] = 1;
      cur = next[cur];
    } while (cur != -1 && cur != start);
    comps.push_back(comp);
  }
  WideSub w;
  w.simples = semibrick;
  std::vector<AlgebraSpec> specs;
  for (const auto& comp : comps) {
    AlgebraSpec s;
    s.n = static_cast<int>(comp.size());
    for (int v : comp) {
      const Indec b = semibrick[v];
      int total = b.len, len = 1, cur = v;
      while (next[cur] != -1 && total + semibrick[next[cur]].len <= alg.loewy(b.top)) {
        cur = next[cur];
        total += semibrick[cur].len;
        ++len;
      }
      s.kupisch.push_back(len);
      w.dict.push_back(b);
    }
    specs.push_back(s);
  }
  w.local = Nakayama(specs);
  return w;
}

WideSub whole_category(const Nakayama& alg) {
  std::vector<Indec> simples;
  for (int v = 1; v <= alg.size(); ++v) simples.push_back({v, 1});
  return wide_as_algebra(alg, simples);
}

Indec realize(const Nakayama& alg, const WideSub& w, Indec local) {
  (void)alg;
  const Indec b = w.dict[local.top - 1];
  int total = 0;
  for (int k = 0; k < local.len; ++k) total += w.dict[w.local.shift(local.top, k) - 1].len;
  return {b.top, total};
}

std::optional<Indec> localize(const Nakayama& alg, const WideSub& w, Indec x) {
  for (int v = 1; v <= w.local.size(); ++v) {
    if (w.dict[v - 1].top != x.top) continue;
    for (int l = 1; l <= w.local.loewy(v); ++l)
      if (realize(alg, w, Indec{v, l}) == x) return Indec{v, l};
  }
  return std::nullopt;
}

SignedIndec realize(const Nakayama& alg, const WideSub& w, const SignedIndec& local) {
  return {realize(alg, w, local.base), local.shifted};
}

std::optional<SignedIndec> localize(const Nakayama& alg, const WideSub& w, const SignedIndec& x) {
  auto l = localize(alg, w, x.base);
  if (!l) return std::nullopt;
  if (x.shifted && !w.local.is_projective(*l)) return std::nullopt;
  return SignedIndec{*l, x.shifted};
}

TauRigidPair localize(const Nakayama& alg, const WideSub& w, const TauRigidPair& u) {
  std::vector<SignedIndec> xs;
  for (const auto& x : u.members()) {
    auto l = localize(alg, w, x);
    if (!l) throw std::invalid_argument(format_signed(x) + " is not an object of the wide subcategory");
    xs.push_back(*l);
  }
  return pair_from(xs);
}

TauRigidPair realize(const Nakayama& alg, const WideSub& w, const TauRigidPair& u) {
  std::vector<SignedIndec> xs;
  for (const auto& x : u.members()) xs.push_back(realize(alg, w, x));
  return pair_from(xs);
}

IndecSet members(const Nakayama& alg, const WideSub& w) {
  IndecSet out;
  for (auto x : w.local.indecomposables()) out.push_back(realize(alg, w, x));
  std::sort(out.begin(), out.end());
  return out;
}

IndecSet filt_closure(const Nakayama& alg, const std::vector<Indec>& semibrick) {
  IndecSet out;
  for (auto x : alg.indecomposables()) {
    int pos = x.top, remaining = x.len;
    bool ok = true;
    while (remaining > 0) {
      auto it = std::find_if(semibrick.begin(), semibrick.end(), [&](Indec b) { return b.top == pos; });
      if (it == semibrick.end() || it->len > remaining) {
        ok = false;
        break;
      }
      remaining -= it->len;
      pos = alg.shift(pos, it->len);
    }
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<Indec> jasso_simples(const Nakayama& alg, const TauRigidPair& u) {
  IndecSet mem;
  for (auto y : alg.indecomposables()) {
    bool ok = true;
    for (auto m : u.modules) {
      if (alg.hom_dim(m, y) != 0) ok = false;
      if (auto t = alg.tau(m); t && alg.hom_dim(y, *t) != 0) ok = false;
    }
    for (auto p : u.shifted)
      if (alg.hom_dim(p, y) != 0) ok = false;
    if (ok) mem.push_back(y);
  }
  std::vector<Indec> simples;
  for (auto y : mem) {
    bool simple = true;
    for (auto z : mem)
      if (z != y && alg.hom_kind(z, y) == HomKind::mono) {
        simple = false;
        break;
      }
    if (simple) simples.push_back(y);
  }
  return simples;
}

WideSub jasso(const Nakayama& alg, const WideSub& w, const TauRigidPair& u) {
  auto ul = localize(alg, w, u);
  if (auto c = is_tau_rigid(w.local, ul); !c)
    throw std::invalid_argument("not τ-rigid in the wide subcategory: " + format_pair(u));
  std::vector<Indec> simples;
  for (auto s : jasso_simples(w.local, ul)) simples.push_back(realize(alg, w, s));
  return wide_as_algebra(alg, simples);
}

// ---- E-bijections ----

namespace {

// Quotient of y by the largest image of a radical map from x.
Indec radical_quotient(const Nakayama& a, Indec x, Indec y) {
  int t = a.max_radical_window(x, y);
  return {y.top, y.len - t};
}

// Single indecomposable u, everything in the local coordinates of one algebra.
SignedIndec e_single(const Nakayama& a, const SignedIndec& u, const SignedIndec& x) {
  if (u.shifted) {
    if (!x.shifted) return x;
    return {radical_quotient(a, u.base, x.base), true};
  }
  const Indec m = u.base;
  if (!x.shifted) {
    auto f = fac(a, {m});
    if (!std::binary_search(f.begin(), f.end(), x.base)) return {radical_quotient(a, m, x.base), false};
  }
  // x in Fac M or x shifted: the image is B/rad(M,B)[1] for the summand B of
  // the Bongartz complement of M whose quotient is the J-projective at the one
  // J-simple outside ⊥τ(M ⊔ x) ∩ Q^⊥.
  auto js = jasso_simples(a, TauRigidPair{{m}, {}});
  auto c = perpendicular_category(a, pair_from({u, x}));
  std::vector<Indec> missing;
  for (auto s : js)
    if (!std::binary_search(c.begin(), c.end(), s)) missing.push_back(s);
  if (missing.size() != 1)
    throw std::logic_error("Bongartz completion of " + format_indec(m) + " + " + format_signed(x) +
                           " misses " + std::to_string(missing.size()) + " simples of J");
  WideSub jw = wide_as_algebra(a, js);
  auto v = localize(a, jw, missing[0]);
  const Indec proj = realize(a, jw, jw.local.projective(v->top));
  for (auto b : bongartz_complement(a, TauRigidPair{{m}, {}}))
    if (radical_quotient(a, m, b) == proj) return {proj, true};
  throw std::logic_error("no Bongartz summand of " + format_indec(m) + " maps onto " + format_indec(proj));
}

}  // namespace

SignedIndec e_bijection(const Nakayama& alg, const WideSub& w, const std::vector<SignedIndec>& u,
                        const SignedIndec& x) {
  if (u.empty()) return x;
  std::vector<SignedIndec> all = u;
  all.push_back(x);
  auto local = localize(alg, w, pair_from(all));
  if (local.rank() != static_cast<int>(all.size()) || !is_tau_rigid(w.local, local).ok)
    throw std::invalid_argument("not a support τ-rigid combination");
  auto step = [&](const SignedIndec& y) {
    auto ul = *localize(alg, w, u[0]);
    auto yl = *localize(alg, w, y);
    return realize(alg, w, e_single(w.local, ul, yl));
  };
  WideSub j = jasso(alg, w, pair_from({u[0]}));
  std::vector<SignedIndec> rest;
  for (size_t i = 1; i < u.size(); ++i) rest.push_back(step(u[i]));
  return e_bijection(alg, j, rest, step(x));
}

TauRigidPair e_bijection(const Nakayama& alg, const WideSub& w, const std::vector<SignedIndec>& u,
                         const TauRigidPair& x) {
  std::vector<SignedIndec> out;
  for (const auto& y : x.members()) out.push_back(e_bijection(alg, w, u, y));
  return pair_from(out);
}

SignedIndec e_bijection_by_lattice(const Nakayama& alg, const WideSub& w, const TauRigidPair& u,
                                   const SignedIndec& x) {
  const Nakayama& a = w.local;
  auto ul = localize(alg, w, u);
  auto xl = localize(alg, w, x);
  if (!xl) throw std::invalid_argument(format_signed(x) + " is not in the wide subcategory");
  std::vector<Indec> js = jasso_simples(a, ul);
  WideSub jw = wide_as_algebra(a, js);
  IndecSet jmem = members(a, jw);
  auto restrict_to_j = [&](const IndecSet& s) {
    IndecSet out;
    std::set_intersection(s.begin(), s.end(), jmem.begin(), jmem.end(), std::back_inserter(out));
    return out;
  };
  const auto& jg = all_stt_cached(jw.local);
  std::vector<std::pair<IndecSet, std::vector<SignedIndec>>> jtors;
  for (const auto& q : jg.vertices) {
    auto rq = realize(a, jw, q);
    jtors.push_back({restrict_to_j(fac(a, rq.modules)), rq.members()});
  }
  const auto& g = all_stt_cached(a);
  std::optional<std::vector<SignedIndec>> common;
  for (const auto& t : g.vertices) {
    bool contains = t.contains(*xl);
    for (const auto& y : ul.members()) contains = contains && t.contains(y);
    if (!contains) continue;
    auto f = restrict_to_j(fac(a, t.modules));
    const std::vector<SignedIndec>* red = nullptr;
    for (const auto& [tors, mem] : jtors)
      if (tors == f) red = &mem;
    if (!red) throw std::logic_error("torsion class of the reduction not found");
    if (!common) {
      common = *red;
    } else {
      std::vector<SignedIndec> keep;
      std::set_intersection(common->begin(), common->end(), red->begin(), red->end(), std::back_inserter(keep));
      common = keep;
    }
  }
  if (!common || common->size() != 1) throw std::logic_error("lattice characterization is not a single object");
  return realize(alg, w, common->front());
}

std::optional<SignedIndec> e_inverse(const Nakayama& alg, const WideSub& w, const TauRigidPair& u,
                                     const SignedIndec& y) {
  auto ul = localize(alg, w, u);
  auto order = u.members();
  for (const auto& xl : rigid_objects(w.local)) {
    if (ul.contains(xl)) continue;
    bool ok = true;
    for (const auto& z : ul.members()) ok = ok && compatible(w.local, z, xl);
    if (!ok) continue;
    auto x = realize(alg, w, xl);
    if (e_bijection(alg, w, order, x) == y) return x;
  }
  return std::nullopt;
}

ExceptionalSequence psi(const Nakayama& alg, const WideSub& w, const std::vector<SignedIndec>& ordered) {
  if (ordered.empty()) return {};
  auto local = localize(alg, w, pair_from(ordered));
  if (local.rank() != static_cast<int>(ordered.size()) || !is_tau_rigid(w.local, local).ok)
    throw std::invalid_argument("entries do not sum to a support τ-rigid object");
  const SignedIndec last = ordered.back();
  WideSub j = jasso(alg, w, pair_from({last}));
  std::vector<SignedIndec> prefix;
  for (size_t i = 0; i + 1 < ordered.size(); ++i) prefix.push_back(e_bijection(alg, w, {last}, ordered[i]));
  auto seq = psi(alg, j, prefix);
  seq.push_back({last, w});
  return seq;
}

std::optional<std::vector<SignedIndec>> psi_inverse(const Nakayama& alg, const WideSub& w,
                                                    const ExceptionalSequence& seq) {
  for (const auto& u : all_tau_rigid(w.local)) {
    if (u.rank() != static_cast<int>(seq.size())) continue;
    auto order = realize(alg, w, u).members();
    do {
      auto s = psi(alg, w, order);
      bool same = s.size() == seq.size();
      for (size_t i = 0; same && i < s.size(); ++i)
        same = s[i].object == seq[i].object && s[i].ambient == seq[i].ambient;
      if (same) return order;
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return std::nullopt;
}

}  // namespace taunak
