#include "taunak/serial.hpp"

#include <algorithm>
#include <regex>

namespace taunak {

std::string AlgebraSpec::name() const {
  std::string s = "(" + std::to_string(n) + ",[";
  for (size_t i = 0; i < kupisch.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(kupisch[i]);
  }
  return s + "])";
}

AlgebraSpec validate_spec(int n, const std::vector<int>& kupisch) {
  if (n < 1) throw SpecError("n must be positive");
  if (static_cast<int>(kupisch.size()) != n)
    throw SpecError("kupisch series has " + std::to_string(kupisch.size()) + " entries, expected " +
                    std::to_string(n));
  for (int i = 1; i <= n; ++i)
    if (kupisch[i - 1] < 1) throw SpecError("l(" + std::to_string(i) + ") must be positive");
  for (int i = 1; i <= n; ++i) {
    int prev = kupisch[cyc(i - 1, n) - 1];
    if (kupisch[i - 1] < prev - 1)
      throw SpecError("l(" + std::to_string(i) + ") = " + std::to_string(kupisch[i - 1]) + " < l(" +
                      std::to_string(cyc(i - 1, n)) + ") - 1");
  }
  for (int i = 1; i < n; ++i)
    if (kupisch[i - 1] <= 1)
      throw SpecError("l(" + std::to_string(i) + ") = 1 with " + std::to_string(i) + " < n");
  return AlgebraSpec{n, kupisch};
}

bool in_cyclic_interval(int x, int i, int j, int n) {
  int d = cyc(x - i + 1, n) - 1;
  int w = cyc(j - i + 1, n) - 1;
  return d <= w;
}

const char* to_string(HomKind k) {
  switch (k) {
    case HomKind::none: return "none";
    case HomKind::iso: return "iso";
    case HomKind::mono: return "mono";
    case HomKind::epi: return "epi";
    case HomKind::proper: return "proper";
  }
  return "?";
}

Nakayama::Nakayama(AlgebraSpec spec) : Nakayama(std::vector<AlgebraSpec>{std::move(spec)}) {}

Nakayama::Nakayama(std::vector<AlgebraSpec> components) : comps_(std::move(components)) {
  int off = 0;
  for (size_t c = 0; c < comps_.size(); ++c) {
    const auto& s = comps_[c];
    validate_spec(s.n, s.kupisch);
    for (int i = 1; i <= s.n; ++i) {
      comp_of_.push_back(static_cast<int>(c));
      loewy_.push_back(s.l(i));
    }
    offset_.push_back(off);
    off += s.n;
  }
}

const AlgebraSpec& Nakayama::spec() const {
  if (!connected()) throw SpecError("algebra is not connected");
  return comps_.front();
}

int Nakayama::shift(int v, int k) const {
  int c = component(v);
  int o = offset_[c];
  return o + cyc(v - o + k, comps_[c].n);
}

bool Nakayama::valid(Indec x) const {
  return x.top >= 1 && x.top <= size() && x.len >= 1 && x.len <= loewy(x.top);
}

std::vector<int> Nakayama::factors(Indec x) const {
  std::vector<int> f;
  for (int t = 0; t < x.len; ++t) f.push_back(shift(x.top, t));
  return f;
}

std::vector<Indec> Nakayama::indecomposables() const {
  std::vector<Indec> out;
  for (int v = 1; v <= size(); ++v)
    for (int j = 1; j <= loewy(v); ++j) out.push_back({v, j});
  return out;
}

std::vector<Indec> Nakayama::bricks() const {
  std::vector<Indec> out;
  for (auto x : indecomposables())
    if (is_brick(x)) out.push_back(x);
  return out;
}

std::vector<Indec> Nakayama::projectives() const {
  std::vector<Indec> out;
  for (int v = 1; v <= size(); ++v) out.push_back(projective(v));
  return out;
}

std::vector<SignedIndec> Nakayama::signed_indecomposables() const {
  std::vector<SignedIndec> out;
  for (auto x : indecomposables()) out.push_back({x, false});
  for (auto p : projectives()) out.push_back({p, true});
  std::sort(out.begin(), out.end());
  return out;
}

bool Nakayama::is_injective(Indec x) const {
  int p = shift(x.top, -1);
  return x.len + 1 > loewy(p);
}

std::optional<Indec> Nakayama::tau(Indec x) const {
  if (is_projective(x)) return std::nullopt;
  return Indec{shift(x.top, 1), x.len};
}

std::optional<Indec> Nakayama::tau_inverse(Indec x) const {
  if (is_injective(x)) return std::nullopt;
  return Indec{shift(x.top, -1), x.len};
}

std::optional<Indec> Nakayama::syzygy(Indec x) const {
  if (is_projective(x)) return std::nullopt;
  return Indec{shift(x.top, x.len), loewy(x.top) - x.len};
}

std::vector<int> Nakayama::windows(Indec x, Indec y) const {
  std::vector<int> out;
  if (!same_component(x, y)) return out;
  int m = std::min(x.len, y.len);
  for (int t = 1; t <= m; ++t)
    if (shift(y.top, y.len - t) == x.top) out.push_back(t);
  return out;
}

int Nakayama::hom_dim(Indec x, Indec y) const { return static_cast<int>(windows(x, y).size()); }

HomKind Nakayama::hom_kind(Indec x, Indec y) const {
  auto w = windows(x, y);
  if (w.empty()) return HomKind::none;
  bool mono = false, epi = false;
  for (int t : w) {
    if (t == x.len) mono = true;
    if (t == y.len) epi = true;
  }
  if (mono && epi) return HomKind::iso;
  if (mono) return HomKind::mono;
  if (epi) return HomKind::epi;
  return HomKind::proper;
}

int Nakayama::ext_dim(Indec x, Indec y) const {
  auto om = syzygy(x);
  if (!om) return 0;
  int a = om->len > 0 ? hom_dim(*om, y) : 0;
  return a - hom_dim(projective(x.top), y) + hom_dim(x, y);
}

int Nakayama::max_radical_window(Indec x, Indec y) const {
  int best = 0;
  for (int t : windows(x, y)) {
    if (x == y && t == x.len) continue;
    best = std::max(best, t);
  }
  return best;
}

std::string format_indec(Indec x) {
  return "M(" + std::to_string(x.top) + "," + std::to_string(x.len) + ")";
}

std::string format_signed(const SignedIndec& x) {
  return format_indec(x.base) + (x.shifted ? "[1]" : "");
}

SignedIndec parse_signed(const std::string& s) {
  static const std::regex re(R"(\s*M\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*(\[1\])?\s*)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw SpecError("cannot parse module token '" + s + "'");
  return {{std::stoi(m[1]), std::stoi(m[2])}, m[3].matched};
}

Indec parse_indec(const std::string& s) {
  auto x = parse_signed(s);
  if (x.shifted) throw SpecError("unexpected shift in '" + s + "'");
  return x.base;
}

}  // namespace taunak
