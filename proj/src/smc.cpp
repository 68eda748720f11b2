#include "taunak/smc.hpp"

#include <algorithm>
#include <stdexcept>

namespace taunak {

std::vector<SignedIndec> SemibrickPair::signed_members() const {
  std::vector<SignedIndec> out;
  for (auto x : positive) out.push_back({x, false});
  for (auto x : negative) out.push_back({x, true});
  std::sort(out.begin(), out.end());
  return out;
}

SemibrickPair canonical(SemibrickPair p) {
  std::sort(p.positive.begin(), p.positive.end());
  std::sort(p.negative.begin(), p.negative.end());
  return p;
}

SemibrickPair pair_of(const ArcPattern& p) {
  SemibrickPair s;
  for (auto a : p.green) s.positive.push_back(module_of(a));
  for (auto a : p.red) s.negative.push_back(module_of(a));
  return canonical(std::move(s));
}

ArcPattern pattern_of(const SemibrickPair& p) {
  ArcPattern a;
  for (auto x : p.positive) a.green.push_back(arc_of(x));
  for (auto x : p.negative) a.red.push_back(arc_of(x));
  return canonical(std::move(a));
}

std::string format_pair(const SemibrickPair& p) {
  std::string s;
  for (auto x : p.positive) s += (s.empty() ? "" : " + ") + format_indec(x);
  for (auto x : p.negative) s += (s.empty() ? "" : " + ") + format_indec(x) + "[1]";
  return s.empty() ? "0" : s;
}

static Check fail(std::string why, Indec x, Indec y) { return {false, std::move(why), x, y}; }

Check is_semibrick(const Nakayama& alg, const std::vector<Indec>& s) {
  for (auto x : s) {
    if (!alg.valid(x)) return fail("not a module", x, x);
    if (!alg.is_brick(x)) return fail("not a brick", x, x);
  }
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = 0; j < s.size(); ++j)
      if (i != j && alg.hom_dim(s[i], s[j]) != 0) return fail("Hom within a semibrick", s[i], s[j]);
  return {};
}

Check is_semibrick_pair(const Nakayama& alg, const SemibrickPair& p) {
  if (auto c = is_semibrick(alg, p.positive); !c) return c;
  if (auto c = is_semibrick(alg, p.negative); !c) return c;
  for (auto x : p.positive)
    for (auto y : p.negative) {
      if (alg.hom_dim(x, y) != 0) return fail("Hom(S_p, S_n) != 0", x, y);
      if (alg.ext_dim(x, y) != 0) return fail("Ext(S_p, S_n) != 0", x, y);
    }
  return {};
}

Check is_mutation_compatible(const Nakayama& alg, const SemibrickPair& p) {
  for (auto sn : p.negative)
    for (auto sp : p.positive)
      if (alg.hom_kind(sn, sp) == HomKind::proper)
        return fail("map from S_n to S_p neither mono nor epi", sn, sp);
  return {};
}

Completion is_completable(const AlgebraSpec& spec, const SemibrickPair& p) {
  Completion c;
  Nakayama alg(spec);
  auto adm = is_admissible(spec, pattern_of(p));
  if (!adm.ok) {
    c.obstruction = fail("arc pattern not admissible: " + adm.detail, module_of(adm.x.arc),
                         module_of(adm.y.arc));
    return c;
  }
  auto ext = extend_to_maximal(spec, pattern_of(p));
  c.completable = ext.has_value();
  if (ext) c.completion = pair_of(*ext);
  return c;
}

bool completable_by_containment(const std::vector<ArcPattern>& maximal, const SemibrickPair& p) {
  auto q = pattern_of(p);
  for (const auto& m : maximal) {
    bool g = std::includes(m.green.begin(), m.green.end(), q.green.begin(), q.green.end());
    bool r = std::includes(m.red.begin(), m.red.end(), q.red.begin(), q.red.end());
    if (g && r) return true;
  }
  return false;
}

SmcVerdict is_2smc(const AlgebraSpec& spec, const SemibrickPair& p) {
  Nakayama alg(spec);
  SmcVerdict v;
  v.by_maximality = is_maximal(spec, pattern_of(p));
  v.by_rank = static_cast<int>(p.size()) == spec.n && is_semibrick_pair(alg, p).ok &&
              is_mutation_compatible(alg, p).ok;
  return v;
}

std::vector<SemibrickPair> all_smc(const AlgebraSpec& spec, int workers) {
  std::vector<SemibrickPair> out;
  for (const auto& m : enumerate_maximal_patterns(spec, workers)) out.push_back(pair_of(m));
  std::sort(out.begin(), out.end());
  return out;
}

SemibrickPair mutate_smc(const AlgebraSpec& spec, const SemibrickPair& x, Indec s) {
  if (std::find(x.positive.begin(), x.positive.end(), s) == x.positive.end())
    throw std::invalid_argument(format_indec(s) + " is not in the positive part");
  Nakayama alg(spec);
  SemibrickPair y;
  y.negative.push_back(s);
  for (auto sp : x.positive) {
    if (sp == s) continue;
    if (alg.ext_dim(sp, s) == 0) {
      y.positive.push_back(sp);
      continue;
    }
    // Extension of S' by as many stacked copies of s as the projective allows.
    if (target(spec, arc_of(sp)) != s.top || sp.len + s.len > spec.l(sp.top))
      throw std::logic_error("extension of " + format_indec(sp) + " by " + format_indec(s) +
                             " is not a concatenation");
    int len = sp.len + s.len;
    while (target(spec, arc_of(s)) == s.top && len + s.len <= spec.l(sp.top)) len += s.len;
    y.positive.push_back({sp.top, len});
  }
  for (auto sn : x.negative) {
    switch (alg.hom_kind(sn, s)) {
      case HomKind::none: y.negative.push_back(sn); break;
      case HomKind::mono: y.positive.push_back({s.top, s.len - sn.len}); break;
      case HomKind::epi: y.negative.push_back({alg.shift(sn.top, s.len), sn.len - s.len}); break;
      default:
        throw std::logic_error("approximation of " + format_indec(sn) + " by " + format_indec(s) +
                               " is neither mono nor epi");
    }
  }
  y = canonical(std::move(y));
  if (!is_2smc(spec, y).value())
    throw std::logic_error("mutation result " + format_pair(y) + " is not a 2-smc");
  return y;
}

std::optional<SemibrickPair> right_mutate_smc(const AlgebraSpec& spec, const SemibrickPair& x, Indec s,
                                              const std::vector<SemibrickPair>& all) {
  for (const auto& z : all) {
    if (std::find(z.positive.begin(), z.positive.end(), s) == z.positive.end()) continue;
    if (mutate_smc(spec, z, s) == x) return z;
  }
  return std::nullopt;
}

}  // namespace taunak
